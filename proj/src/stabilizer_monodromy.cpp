#include "kspin/stabilizer_monodromy.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kspin {

IntVector s_n(long n) { return mukai_vector(1, IntVector(6), -n); }

IntMatrix sn_perp_basis(long n) {
  IntMatrix b(8, 7);
  for (std::size_t k = 0; k < 6; ++k) b(1 + k, k) = 1;
  b(0, 6) = 1;
  b(7, 6) = n;
  return b;
}

LatticePtr sn_perp_lattice(long n) {
  static std::mutex mu;
  static std::map<long, LatticePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const IntMatrix b = sn_perp_basis(n);
  auto l = std::make_shared<const IntLattice>(-(b.transpose() * gram_S_plus() * b), "s_" + std::to_string(n) + "_perp");
  cache.emplace(n, l);
  return l;
}

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::sl4: return "sl4";
    case GeneratorKind::pair_reflection: return "pair_reflection";
    case GeneratorKind::tilde_tau: return "tilde_tau";
    case GeneratorKind::tilde_alpha: return "tilde_alpha";
    case GeneratorKind::minus_one: return "minus_one";
    case GeneratorKind::word: return "word";
  }
  return "?";
}

LatticeIsometry induced_on_sn_perp(const AXAutomorphism& g, long n) {
  const IntMatrix g8 = to_int(g.block(kSplus, kSplus));
  const IntVector sn = s_n(n);
  const IntVector img = g8.apply(sn);
  IntVector neg(8);
  for (std::size_t k = 0; k < 8; ++k) neg[k] = -sn[k];
  if (img != sn && img != neg) throw std::domain_error("element does not stabilize ±s_n");
  const int ort = ort_character(*lattice_S_plus(), LatticeIsometry(g8, lattice_S_plus()));

  const IntMatrix b = sn_perp_basis(n);
  IntMatrix m(7, 7);
  for (std::size_t j = 0; j < 7; ++j) {
    const IntVector y = g8.apply(b.col(j));
    if (y[7] != n * y[0]) throw std::logic_error("image left s_n^perp");
    for (std::size_t k = 0; k < 6; ++k) m(k, j) = ort * y[1 + k];
    m(6, j) = ort * y[0];
  }
  return LatticeIsometry(m, sn_perp_lattice(n));
}

namespace {

Int pf(const IntVector& a) { return a.at(0) * a.at(5) - a.at(1) * a.at(4) + a.at(2) * a.at(3); }

std::string vec_label(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k].get_str();
  os << ")";
  return os.str();
}

std::string mat_label(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? ";" : "") << vec_label(m.row(i)).substr(1, std::string::npos);
  os << "]";
  std::string s = os.str();
  // drop the trailing ')' left by vec_label on each row
  std::string out;
  for (char c : s)
    if (c != ')') out += c;
  return out;
}

StabilizerGenerator make_gen(GeneratorKind kind, std::string label, AXAutomorphism a, long n) {
  LatticeIsometry ind = induced_on_sn_perp(a, n);
  bool spin = kind == GeneratorKind::sl4 || kind == GeneratorKind::pair_reflection || kind == GeneratorKind::minus_one;
  return StabilizerGenerator{kind, std::move(label), std::move(a), std::move(ind), n, spin};
}

SpinorElement degree_one(const IntVector& col4) {
  SpinorElement s;
  for (unsigned b = 0; b < 4; ++b) s += col4[b] * SpinorElement::basis(1u << b);
  return s;
}

}  // namespace

StabilizerGenerator sl4_embed(const IntMatrix& m, long n) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("sl4_embed needs a 4x4 matrix");
  if (determinant(m) != 1) throw std::invalid_argument("sl4_embed: det M must be 1");
  IntMatrix g(kSpinDim, kSpinDim);
  for (unsigned k = 0; k < kSpinDim; ++k) {
    SpinorElement img = SpinorElement::basis(0);
    for (unsigned b = 0; b < 4; ++b)
      if (k & (1u << b)) img = wedge(img, degree_one(m.col(b)));
    for (unsigned j = 0; j < kSpinDim; ++j) g(j, k) = img[j];
  }
  AXAutomorphism a = mu_tilde(CliffordElement(g));
  // Check the V action is M ⊕ M^{−T}.
  const RatMatrix mi = *inverse(to_rat(m));
  RatMatrix expect(8, 8);
  expect.set_block(0, 0, to_rat(m));
  expect.set_block(4, 4, mi.transpose());
  if (!(a.block(kV, kV) == expect)) throw std::logic_error("sl4_embed: unexpected action on V");
  return make_gen(GeneratorKind::sl4, "sl4" + mat_label(m), std::move(a), n);
}

StabilizerGenerator pair_reflection_gen(const IntVector& a1, const IntVector& a2, long n) {
  for (const IntVector* a : {&a1, &a2}) {
    if (a->size() != 6) throw std::invalid_argument("A needs 6 coordinates");
    if (pf(*a) != n - 1) throw std::invalid_argument("pair_reflection: need ∫A² = 2n−2");
    if (gcd_of(*a) != 1) throw std::invalid_argument("pair_reflection: A must be primitive");
  }
  const IntVector t1 = mukai_vector(1, a1, n), t2 = mukai_vector(1, a2, n);
  return make_gen(GeneratorKind::pair_reflection, "pair" + vec_label(a1) + vec_label(a2), m_tilde_pair(t1, t2), n);
}

StabilizerGenerator tilde_tau_gen(long n) { return make_gen(GeneratorKind::tilde_tau, "tilde_tau", tau_tilde(), n); }
StabilizerGenerator tilde_alpha_gen(long n) {
  return make_gen(GeneratorKind::tilde_alpha, "tilde_alpha", alpha_tilde(), n);
}
StabilizerGenerator minus_one_gen(long n) { return make_gen(GeneratorKind::minus_one, "minus_one", mu_minus_one(), n); }

StabilizerGenerator compose(const StabilizerGenerator& a, const StabilizerGenerator& b) {
  if (a.n != b.n) throw std::invalid_argument("compose: different n");
  StabilizerGenerator g = make_gen(GeneratorKind::word, a.label + "*" + b.label, a.realization * b.realization, a.n);
  g.in_spin = a.in_spin && b.in_spin;
  return g;
}

IntVector random_line_bundle_class(Rng& rng, long n, bool orthogonal_to_h, long bound) {
  IntVector a(6);
  if (orthogonal_to_h) {
    // a34 = −a12 makes ∫A∧(e12+e34) = a12 + a34 vanish; pf = −a12² − a13a24 + a14a23.
    a[0] = rng.uniform(-bound, bound);
    a[5] = -a[0];
    a[2] = rng.uniform(-bound, bound);
    a[3] = rng.uniform(-bound, bound);
    a[1] = rng.sign();
    // −a12² − a13·a24 + a14·a23 = n − 1, with a13 = ±1.
    a[4] = (-a[0] * a[0] + a[2] * a[3] - Int(n - 1)) * a[1];
    return a;
  }
  // One of the three hyperbolic pairs (12,34), (13,24), (14,23) carries the solve.
  for (auto& x : a) x = rng.uniform(-bound, bound);
  const int p = int(rng.uniform(0, 2));
  const std::size_t i = std::size_t(p), j = std::size_t(5 - p);
  const int sign = p == 1 ? -1 : 1;
  a[i] = rng.sign();
  Int rest = pf(a) - sign * a[i] * a[j];
  // sign·a_i·a_j + rest = n − 1
  a[j] = (Int(n - 1) - rest) * a[i] * sign;
  return a;
}

IntMatrix random_elementary(Rng& rng) {
  IntMatrix m = IntMatrix::identity(4);
  const std::size_t i = std::size_t(rng.uniform(0, 3));
  std::size_t j = std::size_t(rng.uniform(0, 2));
  if (j >= i) ++j;
  m(i, j) = rng.sign() * rng.uniform(1, 2);
  return m;
}

IntVector standard_h() { return IntVector{1, 0, 0, 0, 0, 1}; }

IntMatrix skew_matrix(const IntVector& a6) {
  if (a6.size() != 6) throw std::invalid_argument("2-form needs 6 coordinates");
  IntMatrix p(4, 4);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      p(i, j) = a6[k];
      p(j, i) = -a6[k];
      ++k;
    }
  return p;
}

IntMatrix wedge2(const IntMatrix& m) {
  static const std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  IntMatrix w(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      const auto [i, j] = pairs[r];
      const auto [k, l] = pairs[c];
      w(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  return w;
}

IntMatrix symplectic_frame(const IntVector& a6) {
  if (pf(a6) != 1) throw std::invalid_argument("symplectic_frame: need ∫A² = 2");
  const IntMatrix p = skew_matrix(a6);
  // e = e₁; f with ω(e,f) = 1 from the Smith form of the row eᵀP.
  IntVector e{1, 0, 0, 0};
  const IntMatrix row = p.block(0, 0, 1, 4);
  const SmithForm s1 = smith_normal_form(row);
  IntVector f = s1.right.col(0);
  for (auto& x : f) x *= s1.left(0, 0);
  // Complement: common kernel of ω(e,·) and ω(f,·).
  IntMatrix two(2, 4);
  two.set_block(0, 0, row);
  two.set_block(1, 0, IntMatrix::column(f).transpose() * p);
  const SmithForm s2 = smith_normal_form(two);
  IntVector u = s2.right.col(2), v = s2.right.col(3);
  const Int uv = (IntMatrix::column(u).transpose() * p * IntMatrix::column(v))(0, 0);
  if (uv == -1) std::swap(u, v);
  IntMatrix c(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    c(i, 0) = e[i];
    c(i, 1) = f[i];
    c(i, 2) = u[i];
    c(i, 3) = v[i];
  }
  if (c.transpose() * p * c != skew_matrix(standard_h())) throw std::logic_error("symplectic_frame failed");
  const IntMatrix m = to_int(inverse(to_rat(c))->transpose());
  if (wedge2(m).apply(standard_h()) != a6) throw std::logic_error("symplectic_frame: wrong image");
  return m;
}

IntMatrix random_symplectic_transvection(Rng& rng, const IntMatrix& p, long bound) {
  const IntMatrix pinv = to_int(*inverse(to_rat(p)));
  IntVector v;
  do {
    v = random_vector(rng, 4, bound);
  } while (gcd_of(v) == 0);
  const IntMatrix vc = IntMatrix::column(v);
  return IntMatrix::identity(4) + Int(rng.sign()) * (vc * vc.transpose() * pinv);
}

std::vector<StabilizerGenerator> stabilizer_generators(long n, std::size_t count, Rng& rng, StabilizerMode mode,
                                                      const IntVector& h) {
  std::vector<StabilizerGenerator> out;
  const bool wh = mode == StabilizerMode::w_and_h;
  // Classes orthogonal to h are transported from those orthogonal to e12+e34.
  const IntMatrix frame = wh ? wedge2(symplectic_frame(h)) : IntMatrix::identity(6);
  const IntMatrix p = skew_matrix(h);
  for (std::size_t k = 0; k < count; ++k) {
    if (k % 2 == 0) {
      out.push_back(sl4_embed(wh ? random_symplectic_transvection(rng, p) : random_elementary(rng), n));
    } else {
      IntVector a1 = frame.apply(random_line_bundle_class(rng, n, wh)), a2;
      do {
        a2 = frame.apply(random_line_bundle_class(rng, n, wh));
      } while (a2 == a1);
      out.push_back(pair_reflection_gen(a1, a2, n));
    }
  }
  return out;
}

ModNMatrix reduce_mod(const IntMatrix& m, long n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  IntMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      Int x = r(i, j) % n;
      if (x < 0) x += n;
      r(i, j) = x;
    }
  return {n, r};
}

ModNMatrix ModNMatrix::operator*(const ModNMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("moduli differ");
  return reduce_mod(m * o.m, n);
}

ModNMatrix mod_n_rep(const IntMatrix& v, long n) {
  // H¹(ℤ/n)* = span(e_i*) must map into itself: the (e-rows, e*-columns) block vanishes mod n.
  const ModNMatrix corner = reduce_mod(v.block(0, 4, 4, 4), n);
  if (!corner.m.is_zero()) throw std::domain_error("H^1(X,Z/n)* is not invariant");
  return reduce_mod(v.block(0, 0, 4, 4), n);
}

ModNMatrix mod_n_rep(const StabilizerGenerator& g) { return mod_n_rep(g.v_action(), g.n); }

GammaCokernel gamma_w_cokernel(const IntVector& w) {
  if (w.size() != 8) throw std::invalid_argument("w needs 8 coordinates");
  if (gcd_of(w) != 1) throw std::invalid_argument("w must be primitive");
  const Int sq = pairing(*lattice_S_plus(), w, w);
  if (sq >= 0 || sq % 2 != 0) throw std::invalid_argument("w must have square -2n with n >= 1");
  const Int n = -sq / 2;
  const IntMatrix mw = clifford_V_to_Sminus(w);
  GammaCokernel g;
  g.invariant_factors = smith_normal_form(mw).invariant_factors;
  g.adjoint_identity = product_Sminus_to_V(w) * mw == Int(-n) * IntMatrix::identity(8);
  return g;
}

namespace {

std::string ratio(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

// u ∈ s_n^⊥ (basis coordinates) with BBF square 2·sigma.
IntVector random_bbf_root(Rng& rng, long n, int sigma) {
  IntVector u = random_vector(rng, 7, 2);
  u[0] = 1;
  // pf(H) = n r² + sigma
  const Int r = u[6];
  u[5] = Int(n) * r * r + sigma + u[1] * u[4] - u[2] * u[3];
  return u;
}

}  // namespace

std::vector<CheckResult> det_chi_suite(long n, std::size_t samples, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("det_chi_suite needs n >= 3");
  const std::string ref = "thm-Mon-2";
  const std::string tag = "n=" + std::to_string(n);
  std::vector<CheckResult> out;
  Rng rng = Rng::split(seed, "detchi/" + std::to_string(n));

  // Pairing convention self-test.
  const Int snsq = pairing(*lattice_S_plus(), s_n(n), s_n(n));
  IntVector a = random_line_bundle_class(rng, n, false);
  const Int tsq = pairing(*lattice_S_plus(), mukai_vector(1, a, n), mukai_vector(1, a, n));
  out.push_back(make_check("pairing_convention", "lemma-generators-for-stabilizer-in-SO", snsq == -2 * n && tsq == 2,
                           tag + " (s_n,s_n)=" + snsq.get_str() + " (t,t)=" + tsq.get_str() + " for pf(A)=n-1"));

  const LatticePtr perp = sn_perp_lattice(n);
  const auto sig = signature(*perp);
  out.push_back(make_check("sn_perp_signature", "thm-Mon-2", sig.first == 3 && sig.second == 4,
                           tag + " signature (" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")"));

  const DiscriminantGroup dg = discriminant_group(*perp);
  const Int order = dg.order();
  const bool cyclic = dg.invariant_factors.size() == 1;
  out.push_back(make_check("discriminant_order", "eq-residue-character", cyclic && order == 2 * n,
                           tag + " order=" + order.get_str() + (cyclic ? " cyclic" : " non-cyclic") +
                               "; 2n=" + std::to_string(2 * n) + (order == 2 * n ? " matches" : " does not match") + ", 2*dim+2=4n-2=" +
                               std::to_string(4 * n - 2) + (order == 4 * n - 2 ? " matches" : " does not match")));

  // Generated stabilizer elements.
  std::vector<StabilizerGenerator> gens = stabilizer_generators(n, 8, rng, StabilizerMode::w_only);
  gens.push_back(tilde_tau_gen(n));
  gens.push_back(tilde_alpha_gen(n));
  gens.push_back(minus_one_gen(n));
  std::vector<StabilizerGenerator> elems = gens;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto& g1 = gens[std::size_t(rng.uniform(0, long(gens.size()) - 1))];
    const auto& g2 = gens[std::size_t(rng.uniform(0, long(gens.size()) - 1))];
    elems.push_back(compose(g1, g2));
  }
  std::size_t fix = 0, dc = 0, ort_ok = 0, spin_total = 0, auto_ok = 0, auto_total = 0;
  for (const auto& g : elems) {
    const IntVector img = to_int(g.realization.block(kSplus, kSplus)).apply(s_n(n));
    const bool fixes = img == s_n(n);
    const bool flips = g.label.find("minus_one") != std::string::npos;
    if (fixes || flips) ++fix;
    if (det_character(g.induced) * chi_character(*perp, g.induced) == 1) ++dc;
    // τ̃ negates the form on V⊕S⁻, so only τ̃-free words are algebra automorphisms.
    if (g.label.find("tilde_tau") == std::string::npos) {
      ++auto_total;
      if (g.realization.flags.is_algebra_automorphism) ++auto_ok;
    }
    if (g.in_spin && fixes) {
      ++spin_total;
      if (ort_character(*perp, g.induced) == 1) ++ort_ok;
    }
  }
  out.push_back(make_check("generators_fix_s_n", "lemma-generators-for-stabilizer-in-G-V", fix == elems.size(),
                           tag + " " + ratio(fix, elems.size()) + " elements fix s_n (minus_one words up to sign)"));
  out.push_back(make_check("det_chi_trivial", ref, dc == elems.size(), tag + " " + ratio(dc, elems.size())));
  out.push_back(make_check("spin_lands_in_SO_plus", "lemma-spin-surjects", ort_ok == spin_total,
                           tag + " " + ratio(ort_ok, spin_total) + " Spin elements fixing s_n"));
  out.push_back(make_check("generators_are_automorphisms", "thm-triality-principle", auto_ok == auto_total,
                           tag + " " + ratio(auto_ok, auto_total) + " tilde_tau-free elements"));

  // τ̃ scales the form by +1 on S⁺ and −1 on V⊕S⁻.
  {
    const RatMatrix& t = tilde_tau_gen(n).realization.mat;
    RatMatrix sg = to_rat(ax_gram());
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j) sg(i, j) = -sg(i, j);
    out.push_back(make_check("tilde_tau_form_scaling", "lemma-generators-for-stabilizer-in-G-V",
                             t.transpose() * to_rat(ax_gram()) * t == sg,
                             tag + " -1 on V+S^-, +1 on S^+"));
  }

  // τ̃ fixes H² and negates (1,0,n) on s_n^⊥.
  const LatticeIsometry tt = tilde_tau_gen(n).induced;
  IntMatrix expect = IntMatrix::identity(7);
  expect(6, 6) = -1;
  const bool tt_ok = tt.matrix() == expect && det_character(tt) == -1 &&
                     det_character(tt) * chi_character(*perp, tt) == 1;
  out.push_back(make_check("tilde_tau_involution", ref, tt_ok, tag + " identity on H^2, (1,0,n) -> -(1,0,n)"));

  // Raw reflections.
  std::size_t refl_ok = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const int sigma = rng.sign();
    const IntVector u = random_bbf_root(rng, n, sigma);
    const LatticeIsometry r = signed_reflection(perp, u);
    const Int uu = pairing(*perp, u, u);
    const int half = int(uu.get_si() / 2);
    if (det_character(r) == half && chi_character(*perp, r) == -half && det_character(r) * chi_character(*perp, r) == -1)
      ++refl_ok;
  }
  out.push_back(make_check("reflection_characters", "eq-residue-character", refl_ok == samples,
                           tag + " det(r_u)=(u,u)/2, chi(r_u)=-(u,u)/2 on " + ratio(refl_ok, samples)));
  return out;
}

std::vector<CheckResult> modn_suite(long n, std::size_t samples, std::uint64_t seed) {
  const std::string ref = "lemma-stabilizer-in-Spin-V-maps-to-GL-4";
  const std::string tag = "n=" + std::to_string(n);
  std::vector<CheckResult> out;
  Rng rng = Rng::split(seed, "modn/" + std::to_string(n));

  std::vector<StabilizerGenerator> gens = stabilizer_generators(n, 8, rng, StabilizerMode::w_only);
  gens.push_back(tilde_tau_gen(n));
  gens.push_back(tilde_alpha_gen(n));

  std::size_t hom = 0, inv = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto& g1 = gens[std::size_t(rng.uniform(0, long(gens.size()) - 1))];
    const auto& g2 = gens[std::size_t(rng.uniform(0, long(gens.size()) - 1))];
    const IntMatrix v = g1.v_action() * g2.v_action();
    try {
      const ModNMatrix r = mod_n_rep(v, n);
      ++inv;
      if (r == mod_n_rep(g1) * mod_n_rep(g2)) ++hom;
    } catch (const std::domain_error&) {
    }
  }
  out.push_back(make_check("modn_invariant_summand", ref, inv == samples, tag + " " + ratio(inv, samples)));
  out.push_back(make_check("modn_homomorphism", ref, hom == samples, tag + " " + ratio(hom, samples)));

  bool literal = true;
  for (int k = 0; k < 10; ++k) {
    const IntMatrix m = random_elementary(rng) * random_elementary(rng);
    if (!(mod_n_rep(sl4_embed(m, n)) == reduce_mod(m, n))) literal = false;
  }
  out.push_back(make_check("modn_sl4_literal", ref, literal, tag + " 10 products of elementary matrices"));

  const bool alpha_ok = mod_n_rep(tilde_alpha_gen(n)) == reduce_mod(Int(-1) * IntMatrix::identity(4), n);
  out.push_back(make_check("modn_tilde_alpha", ref, alpha_ok, tag + " tilde_alpha -> -id"));
  return out;
}

std::vector<CheckResult> gamma_suite(long n) {
  const std::string ref = "rem-Z-w";
  const std::string tag = "n=" + std::to_string(n);
  std::vector<CheckResult> out;
  std::vector<Int> expect(8, Int(1));
  for (std::size_t k = 4; k < 8; ++k) expect[k] = n;

  const GammaCokernel g = gamma_w_cokernel(s_n(n));
  out.push_back(make_check("gamma_w_snf", ref, g.invariant_factors == expect, tag + " w=s_n"));
  out.push_back(make_check("gamma_w_adjoint", "rem-Z-w", g.adjoint_identity, tag + " m_w^dagger m_w = -n id"));

  // The same for a translate of s_n by an isometry of S⁺.
  IntVector w = s_n(n);
  const IntVector u1 = mukai_vector(1, IntVector{1, 0, 0, 0, 0, 1}, 2);  // square 2
  const IntVector u2 = mukai_vector(0, IntVector{1, 1, 0, 0, 1, 0}, 0);  // square -2
  w = reflection(lattice_S_plus(), u1).matrix().apply(w);
  w = reflection(lattice_S_plus(), u2).matrix().apply(w);
  const GammaCokernel h = gamma_w_cokernel(w);
  out.push_back(make_check("gamma_w_snf_translate", ref, h.invariant_factors == expect && h.adjoint_identity,
                           tag + " w=" + vec_label(w)));
  return out;
}

}  // namespace kspin
