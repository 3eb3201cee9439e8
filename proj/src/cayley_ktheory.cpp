#include "kspin/cayley_ktheory.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace kspin {

int ext_sign(unsigned i, unsigned j) {
  if (i & j) return 0;
  int inversions = 0;
  for (unsigned b = 0; b < 8; ++b)
    if (i & (1u << b)) inversions += std::popcount(j & ((1u << b) - 1));
  return inversions % 2 ? -1 : 1;
}

ExtRingElement ExtRingElement::scalar(const Rat& x) { return monomial(0, x); }

ExtRingElement ExtRingElement::monomial(unsigned mask, const Rat& x) {
  ExtRingElement e;
  e[mask] = x;
  return e;
}

ExtRingElement ExtRingElement::degree_part(int k) const {
  ExtRingElement e;
  for (unsigned m = 0; m < kSize; ++m)
    if (std::popcount(m) == k) e.c_[m] = c_[m];
  return e;
}

ExtRingElement ExtRingElement::bidegree_part(int x_deg, int xhat_deg) const {
  ExtRingElement e;
  for (unsigned m = 0; m < kSize; ++m)
    if (std::popcount(m & 0xFu) == x_deg && std::popcount(m & 0xF0u) == xhat_deg) e.c_[m] = c_[m];
  return e;
}

bool ExtRingElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

ExtRingElement& ExtRingElement::operator+=(const ExtRingElement& o) {
  for (unsigned m = 0; m < kSize; ++m) c_[m] += o.c_[m];
  return *this;
}

ExtRingElement& ExtRingElement::operator-=(const ExtRingElement& o) {
  for (unsigned m = 0; m < kSize; ++m) c_[m] -= o.c_[m];
  return *this;
}

ExtRingElement operator-(const ExtRingElement& a) { return Rat(-1) * a; }

ExtRingElement operator*(const Rat& s, const ExtRingElement& a) {
  ExtRingElement e = a;
  for (auto& x : e.c_) x *= s;
  return e;
}

ExtRingElement operator*(const ExtRingElement& a, const ExtRingElement& b) {
  ExtRingElement e;
  for (unsigned i = 0; i < ExtRingElement::kSize; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < ExtRingElement::kSize; ++j) {
      if (b.c_[j] == 0) continue;
      const int s = ext_sign(i, j);
      if (s == 0) continue;
      if (s > 0)
        e.c_[i | j] += a.c_[i] * b.c_[j];
      else
        e.c_[i | j] -= a.c_[i] * b.c_[j];
    }
  }
  return e;
}

ExtRingElement ext_exp(const ExtRingElement& x) {
  if (x[0] != 0) throw std::invalid_argument("ext_exp needs zero constant term");
  ExtRingElement sum = ExtRingElement::scalar(1), term = ExtRingElement::scalar(1);
  for (int k = 1; k <= 8; ++k) {
    term = Rat(1, k) * (term * x);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

ExtRingElement c1_poincare() {
  ExtRingElement c;
  for (unsigned i = 0; i < 4; ++i) c += ExtRingElement::monomial((1u << i) | (1u << (4 + i)));
  return c;
}

ExtRingElement pt_X() { return ExtRingElement::monomial(0x0Fu); }
ExtRingElement pt_Xhat() { return ExtRingElement::monomial(0xF0u); }

ChClass ChClass::dual() const {
  ChClass d;
  d.rank = rank;
  for (unsigned m = 0; m < ExtRingElement::kSize; ++m) d.ch[m] = (std::popcount(m) / 2) % 2 ? -ch[m] : ch[m];
  return d;
}

ChClass operator+(const ChClass& a, const ChClass& b) { return {a.rank + b.rank, a.ch + b.ch}; }
ChClass operator-(const ChClass& a) { return {-a.rank, -a.ch}; }
ChClass operator*(const Int& m, const ChClass& a) { return {m * a.rank, Rat(m) * a.ch}; }
ChClass operator*(const ChClass& a, const ChClass& b) { return {a.rank * b.rank, a.ch * b.ch}; }

ChClass structure_sheaf_class() { return {1, ExtRingElement::scalar(1)}; }
ChClass poincare_class() { return {1, ext_exp(c1_poincare())}; }
ChClass pt_X_class() { return {0, pt_X()}; }
ChClass pt_Xhat_class() { return {0, pt_Xhat()}; }

ChClass fm_class(long n) {
  if (n < 1) throw std::invalid_argument("fm_class needs n >= 1");
  const Int nn = n;
  return Int(-nn) * structure_sheaf_class() + pt_Xhat_class() + Int(-nn) * poincare_class() +
         Int(nn * nn) * pt_X_class();
}

ExtRingElement kappa2(const ChClass& b) {
  if (b.rank == 0) throw std::invalid_argument("kappa2 needs nonzero rank");
  const ExtRingElement e = ext_exp(Rat(-1, 1) / Rat(b.rank) * b.c1());
  return (b.ch * e).degree_part(4);
}

ExtRingElement c2_end(const ChClass& b) {
  if (b.rank == 0) throw std::invalid_argument("c2_end needs nonzero rank");
  const ChClass e = b * b.dual();
  // c₁(b⊗b*) = 0, so c₂ = c₁²/2 − ch₂ = −ch₂.
  if (!e.c1().is_zero()) throw std::logic_error("c1 of an endomorphism class must vanish");
  return -e.ch_k(2);
}

ExtRingElement c2_end_via_kappa(const ChClass& b) { return Rat(-2 * b.rank) * kappa2(b); }

const std::vector<unsigned>& Wedge4VElement::basis_masks() {
  static const std::vector<unsigned> masks = [] {
    std::vector<unsigned> v;
    for (unsigned a = 0; a < 8; ++a)
      for (unsigned b = a + 1; b < 8; ++b)
        for (unsigned c = b + 1; c < 8; ++c)
          for (unsigned d = c + 1; d < 8; ++d) v.push_back((1u << a) | (1u << b) | (1u << c) | (1u << d));
    return v;
  }();
  return masks;
}

std::size_t Wedge4VElement::index_of(unsigned mask) {
  static const std::array<int, 256> idx = [] {
    std::array<int, 256> t;
    t.fill(-1);
    const auto& m = basis_masks();
    for (std::size_t k = 0; k < m.size(); ++k) t[m[k]] = int(k);
    return t;
  }();
  if (mask >= 256 || idx[mask] < 0) throw std::invalid_argument("not a 4-subset of V");
  return std::size_t(idx[mask]);
}

Wedge4VElement Wedge4VElement::from_vector(const RatVector& v) {
  if (v.size() != kDim) throw std::invalid_argument("wedge4 vector needs 70 coordinates");
  Wedge4VElement w;
  for (std::size_t k = 0; k < kDim; ++k) w.c_[k] = v[k];
  return w;
}

bool Wedge4VElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Wedge4VElement Wedge4VElement::primitive() const {
  if (is_zero()) return *this;
  Int l = 1;
  for (const auto& x : c_) l = lcm(l, Int(x.get_den()));
  IntVector iv(kDim);
  for (std::size_t k = 0; k < kDim; ++k) {
    Rat y = c_[k] * l;
    iv[k] = y.get_num();
  }
  Int g = gcd_of(iv);
  for (const auto& x : iv)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  Wedge4VElement w;
  for (std::size_t k = 0; k < kDim; ++k) w.c_[k] = Rat(Int(iv[k] / g));
  return w;
}

Wedge4VElement to_wedge4(const ExtRingElement& x) {
  Wedge4VElement w;
  for (unsigned m : Wedge4VElement::basis_masks()) w[Wedge4VElement::index_of(m)] = x[m];
  return w;
}

ExtRingElement alpha_class() {
  ExtRingElement a;
  for (unsigned i = 0; i < 4; ++i)
    a += ExtRingElement::monomial((1u << i) | (1u << (4 + i)));
  return a;
}

ExtRingElement beta_class() { return pt_X(); }
ExtRingElement gamma_class() { return pt_Xhat(); }

Wedge4VElement cayley_class(long n) {
  if (n < 2) throw std::invalid_argument("cayley_class needs N >= 2");
  const Rat nn = n;
  const ExtRingElement a = alpha_class();
  return to_wedge4(Rat(-nn * nn) * (a * a) + Rat(4 * nn * nn * nn) * beta_class() + Rat(4 * nn) * gamma_class());
}

namespace {

RatMatrix columns(const std::vector<Wedge4VElement>& v) {
  RatMatrix m(Wedge4VElement::kDim, v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < Wedge4VElement::kDim; ++i) m(i, j) = v[j][i];
  return m;
}

Rat det4(const RatMatrix& m, const std::array<std::size_t, 4>& r, const std::array<std::size_t, 4>& c) {
  Rat a[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m(r[i], c[j]);
  auto d2 = [&](int r0, int r1, int c0, int c1) -> Rat { return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]; };
  // Laplace expansion along the first two rows.
  return d2(0, 1, 0, 1) * d2(2, 3, 2, 3) - d2(0, 1, 0, 2) * d2(2, 3, 1, 3) + d2(0, 1, 0, 3) * d2(2, 3, 1, 2) +
         d2(0, 1, 1, 2) * d2(2, 3, 0, 3) - d2(0, 1, 1, 3) * d2(2, 3, 0, 2) + d2(0, 1, 2, 3) * d2(2, 3, 0, 1);
}

std::array<std::size_t, 4> bits(unsigned mask) {
  std::array<std::size_t, 4> out{};
  std::size_t k = 0;
  for (unsigned b = 0; b < 8; ++b)
    if (mask & (1u << b)) out[k++] = b;
  return out;
}

std::string kernel_json(const std::vector<Wedge4VElement>& ker) {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < ker.size(); ++j) {
    os << (j ? "," : "") << "[";
    for (std::size_t k = 0; k < Wedge4VElement::kDim; ++k) os << (k ? "," : "") << ker[j][k].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

bool proportional(const Wedge4VElement& a, const Wedge4VElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive() == b.primitive() || a.primitive() == Wedge4VElement::from_vector([&] {
           RatVector v = b.primitive().vector();
           for (auto& x : v) x = -x;
           return v;
         }());
}

bool in_span(const Wedge4VElement& x, const std::vector<Wedge4VElement>& basis) {
  if (basis.empty()) return x.is_zero();
  std::vector<Wedge4VElement> all = basis;
  all.push_back(x);
  return rank(columns(all)) == rank(columns(basis));
}

RatMatrix wedge4(const RatMatrix& m) {
  if (m.rows() != 8 || m.cols() != 8) throw std::invalid_argument("wedge4 needs an 8x8 matrix");
  const auto& masks = Wedge4VElement::basis_masks();
  RatMatrix w(70, 70);
  for (std::size_t i = 0; i < 70; ++i)
    for (std::size_t j = 0; j < 70; ++j) w(i, j) = det4(m, bits(masks[i]), bits(masks[j]));
  return w;
}

InvariantResult invariant_rank(const std::vector<RatMatrix>& v_actions) {
  // Intersect kernels incrementally: K spans the common fixed space so far.
  std::vector<Wedge4VElement> k;
  for (std::size_t i = 0; i < 70; ++i) {
    Wedge4VElement e;
    e[i] = 1;
    k.push_back(e);
  }
  const RatMatrix id = RatMatrix::identity(70);
  for (const auto& g : v_actions) {
    if (k.empty()) break;
    const RatMatrix km = columns(k);
    const auto ker = kernel_matrix((wedge4(g) - id) * km);
    if (!ker) {
      k.clear();
      break;
    }
    const RatMatrix next = km * *ker;
    k.clear();
    for (std::size_t j = 0; j < next.cols(); ++j) k.push_back(Wedge4VElement::from_vector(next.col(j)).primitive());
  }
  InvariantResult r;
  r.rank = k.size();
  r.kernel = std::move(k);
  return r;
}

InvariantResult invariant_rank(const std::vector<StabilizerGenerator>& gens, StabilizerMode mode, const IntVector& h) {
  std::vector<RatMatrix> acts;
  const IntVector hv = mukai_vector(0, h, 0);
  for (const auto& g : gens) {
    if (to_int(g.realization.block(kSplus, kSplus)).apply(s_n(g.n)) != s_n(g.n))
      throw std::invalid_argument("generator does not fix s_n: " + g.label);
    if (mode == StabilizerMode::w_and_h && to_int(g.realization.block(kSplus, kSplus)).apply(hv) != hv)
      throw std::invalid_argument("generator does not fix h: " + g.label);
    acts.push_back(g.realization.block(kV, kV));
  }
  return invariant_rank(acts);
}

std::vector<StabilizerGenerator> cayley_generators(long n, std::size_t count, std::uint64_t seed, StabilizerMode mode,
                                                  const IntVector& h) {
  Rng rng = Rng::split(seed, "cayley/" + std::to_string(n) + (mode == StabilizerMode::w_and_h ? "/h" : ""));
  std::vector<StabilizerGenerator> gens = stabilizer_generators(n, count, rng, mode, h);
  if (mode == StabilizerMode::w_only) gens.push_back(tilde_tau_gen(n));
  return gens;
}

std::vector<CheckResult> cayley_suite(long n, std::uint64_t seed, const std::optional<IntVector>& h) {
  if (n < 2) throw std::invalid_argument("cayley suite needs n >= 2");
  const std::string ref = "prop-equation-for-Cayley-class";
  const std::string tag = "n=" + std::to_string(n);
  const Rat nn = n;
  std::vector<CheckResult> out;

  const ChClass b = -fm_class(n);
  const ExtRingElement c1 = c1_poincare();
  const ExtRingElement c1sq = c1 * c1;
  {
    ExtRingElement low;
    for (int k = 0; k <= 4; ++k) low += b.ch.degree_part(k);
    const ExtRingElement expect = ExtRingElement::scalar(2 * nn) + nn * c1 + (nn / 2) * c1sq -
                                  (nn * nn) * pt_X() - pt_Xhat();
    out.push_back(make_check("fm_class_chern_character", ref, low == expect && b.rank == 2 * n,
                             tag + " -ch through degree 4, rank " + b.rank.get_str()));
  }
  out.push_back(make_check("kappa2_formula", ref,
                           kappa2(b) == (nn / 4) * c1sq - (nn * nn) * pt_X() - pt_Xhat(),
                           tag + " (n/4)c1(P)^2 - n^2 pt_X - pt_Xhat"));
  const ExtRingElement c2 = c2_end(b);
  out.push_back(make_check("c2_end_formula", ref,
                           c2 == (-nn * nn) * c1sq + (4 * nn * nn * nn) * pt_X() + (4 * nn) * pt_Xhat(),
                           tag + " -n^2 c1(P)^2 + 4n^3 pt_X + 4n pt_Xhat"));
  out.push_back(make_check("c2_end_two_routes", ref, c2 == c2_end_via_kappa(b), tag + " direct vs -2r kappa2"));

  const Wedge4VElement cw = cayley_class(n);
  out.push_back(make_check("cayley_equals_c2end", ref, to_wedge4(c2) == cw, tag + " f_i <-> e_i*"));

  {
    ExtRingElement pairs;
    const ExtRingElement a = alpha_class();
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = i + 1; j < 4; ++j) {
        const unsigned mi = (1u << i) | (1u << (4 + i)), mj = (1u << j) | (1u << (4 + j));
        pairs += ExtRingElement::monomial(mi | mj, ext_sign(mi, mj));
      }
    out.push_back(make_check("alpha_squared_expansion", ref, a * a == Rat(2) * pairs, "alpha^2 = 2 sum e_i e_i* e_j e_j*"));
  }

  {
    Rng rng = Rng::split(seed, "ch-mult/" + std::to_string(n));
    std::size_t ok = 0;
    for (int t = 0; t < 10; ++t) {
      ExtRingElement x, y;
      for (unsigned m = 0; m < 256; ++m)
        if (std::popcount(m) == 2) {
          x[m] = rng.uniform(-3, 3);
          y[m] = rng.uniform(-3, 3);
        }
      const ChClass lx{1, ext_exp(x)}, ly{1, ext_exp(y)};
      if ((lx * ly).ch == ext_exp(x + y) && c2_end(lx).is_zero()) ++ok;
    }
    out.push_back(make_check("ch_multiplicativity", ref, ok == 10,
                             std::to_string(ok) + "/10 random line-bundle classes; c2(End L) = 0"));
  }

  const std::vector<StabilizerGenerator> gens = cayley_generators(n, 24, seed, StabilizerMode::w_only);
  {
    Rng rng = Rng::split(seed, "cayley-sample/" + std::to_string(n));
    std::size_t ok = 0;
    const std::size_t samples = 50;
    const RatVector cv = cw.vector();
    for (std::size_t s = 0; s < samples; ++s) {
      RatMatrix g = RatMatrix::identity(8);
      for (int w = 0; w < 3; ++w) g = g * gens[std::size_t(rng.uniform(0, long(gens.size()) - 1))].realization.block(kV, kV);
      if (wedge4(g).apply(cv) == cv) ++ok;
    }
    out.push_back(make_check("cayley_invariant_sampled", ref, ok == samples,
                             tag + " " + std::to_string(ok) + "/" + std::to_string(samples) + " words of length 3"));
  }

  const InvariantResult inv = invariant_rank(gens, StabilizerMode::w_only);
  out.push_back(make_check("invariant_rank", "thm-kappa-class-is-non-zero-and-spin-7-invariant", inv.rank == 1,
                           tag + " rank=" + std::to_string(inv.rank) + " over " + std::to_string(gens.size()) +
                               " generators; kernel=" + kernel_json(inv.kernel)));
  {
    const bool prop_n = inv.rank == 1 && proportional(inv.kernel[0], cw);
    const bool prop_n1 = inv.rank == 1 && proportional(inv.kernel[0], cayley_class(n + 1));
    out.push_back(make_check("invariant_kernel_is_cayley", ref, prop_n && !prop_n1,
                             tag + " kernel ∝ cayley_class(N) with N=-(w,w)/2=" + std::to_string(n) +
                                 (prop_n1 ? "; also ∝ N+1" : "; not ∝ cayley_class(N+1)")));
  }

  {
    const IntVector hv = h ? *h : standard_h();
    const std::vector<StabilizerGenerator> hg = cayley_generators(n, 24, seed, StabilizerMode::w_and_h, hv);
    const InvariantResult ih = invariant_rank(hg, StabilizerMode::w_and_h, hv);
    out.push_back(make_check("invariant_rank_with_h", "thm-hodge-classes-of-weil-type-are-algebraic",
                             ih.rank == 3 && in_span(cw, ih.kernel),
                             tag + " h=(0," + [&] {
                               std::string s;
                               for (std::size_t k = 0; k < 6; ++k) s += (k ? "," : "") + hv[k].get_str();
                               return s;
                             }() + ",0) rank=" + std::to_string(ih.rank) + " cayley in span; kernel=" +
                                 kernel_json(ih.kernel)));
  }

  out.push_back(CheckResult{"sheaf_theoretic_content", "thm-kappa-class-is-non-zero-and-spin-7-invariant",
                            Status::skipped,
                            "reflexivity and local freeness of E_F are not computed; only the Chern-class shadow"});
  return out;
}

}  // namespace kspin
