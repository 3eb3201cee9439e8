#include "kspin/reports.hpp"

#include <bit>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

#include "kspin/cayley_ktheory.hpp"
#include "kspin/fm_actions.hpp"
#include "kspin/sampling.hpp"
#include "kspin/stabilizer_monodromy.hpp"
#include "kspin/weil_periods.hpp"

namespace kspin {

namespace {

std::string ratio(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

// Product of 1..4 random vectors with Q = ±1.
CliffordElement random_group_element(Rng& rng) {
  CliffordElement x = CliffordElement::identity();
  const long len = rng.uniform(1, 4);
  for (long i = 0; i < len; ++i) x = x * CliffordElement::vector(random_unit_V(rng, rng.sign(), 2));
  return x;
}

// Merge rows with the same name, keeping the first failing detail.
std::vector<CheckResult> merge_rows(const std::vector<std::vector<CheckResult>>& batches) {
  std::vector<CheckResult> out;
  std::vector<std::size_t> passed, total;
  for (const auto& batch : batches)
    for (const auto& r : batch) {
      std::size_t k = 0;
      while (k < out.size() && out[k].name != r.name) ++k;
      if (k == out.size()) {
        out.push_back(r);
        passed.push_back(0);
        total.push_back(0);
      } else if (r.status == Status::fail && out[k].status != Status::fail) {
        out[k].status = Status::fail;
        out[k].detail = r.detail;
      }
      ++total[k];
      if (r.status == Status::pass) ++passed[k];
    }
  for (std::size_t k = 0; k < out.size(); ++k)
    if (total[k] > 1 && out[k].status == Status::pass) out[k].detail = ratio(passed[k], total[k]) + " samples";
  return out;
}

}  // namespace

std::vector<CheckResult> clifford_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const IntMatrix g = gram_V();
  const IntMatrix id16 = IntMatrix::identity(16);

  bool basis_ok = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const IntMatrix a = clifford_embed(unit(8, i)), b = clifford_embed(unit(8, j));
      basis_ok = basis_ok && a * b + b * a == g(i, j) * id16;
    }
  out.push_back(make_check("clifford_relation_basis", "eq-defining-relation-of-Clifford-algebra", basis_ok, "vw + wv = (v,w) on 64 pairs"));

  Rng rng = Rng::split(seed, "clifford");
  std::size_t rel_ok = 0;
  for (int s = 0; s < 1000; ++s) {
    const IntVector v = random_vector(rng, 8, 5), w = random_vector(rng, 8, 5);
    const IntMatrix a = clifford_embed(v), b = clifford_embed(w);
    if (a * b + b * a == pairing(*lattice_V(), v, w) * id16) ++rel_ok;
  }
  out.push_back(make_check("clifford_relation_random", "eq-defining-relation-of-Clifford-algebra", rel_ok == 1000, ratio(rel_ok, 1000)));

  const std::size_t r = rank(monomial_basis_matrix());
  out.push_back(make_check("monomials_independent", "eq-m-from-C-V", r == kMonomials,
                           "rank " + std::to_string(r) + " of 256"));

  std::size_t rt_ok = 0;
  for (int s = 0; s < 100; ++s) {
    std::array<Int, kMonomials> c;
    for (auto& x : c) x = rng.coin() ? rng.uniform(-9, 9) : 0;
    if (monomial_decompose(monomial_reassemble(c)) == c) ++rt_ok;
  }
  out.push_back(make_check("monomial_round_trip", "eq-m-from-C-V", rt_ok == 100, ratio(rt_ok, 100)));

  std::size_t anti_ok = 0;
  for (int s = 0; s < 100; ++s) {
    std::array<Int, kMonomials> c1, c2;
    for (std::size_t k = 0; k < kMonomials; ++k) {
      c1[k] = rng.uniform(0, 5) == 0 ? rng.uniform(-3, 3) : 0;
      c2[k] = rng.uniform(0, 5) == 0 ? rng.uniform(-3, 3) : 0;
    }
    const IntMatrix x = monomial_reassemble(c1), y = monomial_reassemble(c2);
    if (tau(x * y) == tau(y) * tau(x)) ++anti_ok;
  }
  out.push_back(make_check("tau_anti_multiplicative", "eq-tau", anti_ok == 100, ratio(anti_ok, 100)));

  bool tau_v = true;
  for (std::size_t i = 0; i < 8; ++i) tau_v = tau_v && tau(clifford_embed(unit(8, i))) == clifford_embed(unit(8, i));
  out.push_back(make_check("tau_identity_on_V", "eq-tau", tau_v, "8 basis vectors"));

  // τ reverses every monomial; on products of pairwise orthogonal generators
  // (no e_i together with e_i*) that is the sign (−1)^{i(i−1)/2}.
  bool tau_rev = true, tau_deg = true;
  std::size_t orth = 0;
  for (unsigned a = 0; a < kMonomials; ++a) {
    IntMatrix rev = id16;
    for (int k = 0; k < 8; ++k)
      if (a >> k & 1u) rev = clifford_embed(unit(8, k)) * rev;
    const IntMatrix t = tau(monomial_matrix(a));
    tau_rev = tau_rev && t == rev;
    if ((a & (a >> 4) & 0xFu) != 0) continue;
    ++orth;
    const int d = std::popcount(a);
    const Int sgn = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    tau_deg = tau_deg && t == sgn * monomial_matrix(a);
  }
  out.push_back(make_check("tau_reverses_monomials", "eq-tau", tau_rev, "all 256 monomials"));
  bool tau_forms_ok = true;
  for (unsigned m = 0; m < kSpinDim; ++m) {
    const int d = degree(m);
    const Int sgn = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    tau_forms_ok = tau_forms_ok && tau_forms(SpinorElement::basis(m)) == sgn * SpinorElement::basis(m);
  }
  out.push_back(make_check("tau_degree_sign", "eq-tau", tau_deg && tau_forms_ok,
                           "(-1)^{i(i-1)/2} on " + std::to_string(orth) + " orthogonal monomials and 16 spinor basis forms"));

  std::vector<CliffordElement> elems;
  std::vector<GroupFlags> flags;
  for (int s = 0; s < 200; ++s) {
    elems.push_back(random_group_element(rng));
    flags.push_back(group_flags(elems.back()));
  }
  std::size_t in_g = 0, n_ok = 0, o_ok = 0;
  for (int s = 0; s < 200; ++s) {
    if (flags[s].in_G && flags[s].norm != 0 && flags[s].orientation != 0) ++in_g;
    const std::size_t t = (s + 1) % 200;
    const GroupFlags p = group_flags(elems[s] * elems[t]);
    if (p.norm == flags[s].norm * flags[t].norm) ++n_ok;
    if (p.orientation == flags[s].orientation * flags[t].orientation) ++o_ok;
  }
  out.push_back(make_check("sampled_group_elements", "eq-Spin-Pin-and-G", in_g == 200, ratio(in_g, 200)));
  out.push_back(make_check("norm_character_multiplicative", "eq-norm", n_ok == 200, ratio(n_ok, 200)));
  out.push_back(make_check("ort_character_multiplicative", "eq-ort", o_ok == 200, ratio(o_ok, 200)));

  std::size_t ort_match = 0;
  for (int s = 0; s < 200; ++s) {
    const LatticeIsometry iso(to_int(*flags[s].rho), lattice_V());
    if (ort_character(*lattice_V(), iso) == flags[s].orientation) ++ort_match;
  }
  out.push_back(make_check("orientation_equals_lattice_ort", "eq-orientation-character", ort_match == 200,
                           ratio(ort_match, 200) + " x x^* vs positive-cone orientation of rho(x)"));

  std::size_t refl_ok = 0;
  for (int s = 0; s < 100; ++s) {
    const IntVector v = random_unit_V(rng, s % 2 == 0 ? 1 : -1, 3);
    const GroupFlags f = group_flags(CliffordElement::vector(v));
    if (f.rho && -*f.rho == to_rat(reflection(lattice_V(), v).matrix())) ++refl_ok;
  }
  out.push_back(make_check("minus_rho_is_reflection", "eq-Pin-acts-by-reflections", refl_ok == 100,
                           ratio(refl_ok, 100) + " vectors with Q(v) = +-1"));
  return out;
}

std::vector<CheckResult> triality_suite() {
  std::vector<CheckResult> out;
  const std::string ref = "thm-triality-principle";
  const AXAutomorphism& J = build_J();
  const AXAutomorphism& Ji = build_J_inverse();

  out.push_back(make_check("J3_identity", ref, (J * J * J).mat.is_identity(), "J^3 = id on A_X"));
  out.push_back(make_check("J_inverse", ref, (J * Ji).mat.is_identity(), "J J^-1 = id"));
  out.push_back(make_check("J_isometry", ref, J.flags.is_isometry, "J^T G J = G"));

  bool mult = true;
  for (std::size_t a = 0; a < kAXDim && mult; ++a)
    for (std::size_t b = 0; b < kAXDim && mult; ++b) {
      const RatVector lhs = J.apply(to_rat(ax_product(unit(kAXDim, a), unit(kAXDim, b))));
      const RatVector ja = J.apply(to_rat(unit(kAXDim, a))), jb = J.apply(to_rat(unit(kAXDim, b)));
      mult = lhs == mult_operator(ja).apply(jb);
    }
  out.push_back(make_check("J_multiplicative", ref, mult, "J(ab) = J(a)J(b) on all 24x24 basis pairs"));

  const auto& bp = J.flags.block_permutation;
  const bool perm = bp[kV] == kSplus && bp[kSplus] == kSminus && bp[kSminus] == kV;
  out.push_back(make_check("J_block_permutation", ref, perm, "V -> S+ -> S- -> V"));

  bool conj = true;
  for (std::size_t x = 0; x < kAXDim; ++x) {
    const RatVector jx = J.apply(to_rat(unit(kAXDim, x)));
    conj = conj && mult_operator(jx) == J.mat * to_rat(mult_operator(unit(kAXDim, x))) * Ji.mat;
  }
  out.push_back(make_check("J_conjugates_multiplication", ref, conj, "m_{J(x)} = J m_x J^-1 on 24 basis x"));

  const AXAutomorphism mm = m_tilde_minus_one();
  out.push_back(make_check("m_tilde_minus_one", "lemma-generators-for-stabilizer-in-G-V",
                           mm.flags.is_algebra_automorphism && (mm * mm).mat.is_identity() && !mm.mat.is_identity(),
                           "J mu(-1) J^-1 is a non-trivial involutive automorphism"));
  const AXAutomorphism at = alpha_tilde();
  out.push_back(make_check("alpha_tilde_automorphism", "lemma-generators-for-stabilizer-in-G-V",
                           at.flags.is_algebra_automorphism && (at * at).mat.is_identity(), "involutive automorphism"));
  return out;
}

std::vector<CheckResult> fm_suite(std::uint64_t seed) {
  std::vector<CheckResult> out = verify_two_poincare_dualities();
  for (auto& r : verify_derivative_conjugation()) out.push_back(r);
  for (auto& r : verify_phi_P_equivariance()) out.push_back(r);

  Rng rng = Rng::split(seed, "fm");
  std::vector<std::vector<CheckResult>> tens, lifts;
  for (int s = 0; s < 20; ++s) {
    const LineBundleClass f1{random_vector(rng, 6, 3)}, f2{random_vector(rng, 6, 3)};
    tens.push_back(verify_tensorization_formulas(f1));
    lifts.push_back(verify_reflection_lifts(f1, f2));
  }
  for (auto& r : merge_rows(tens)) out.push_back(r);
  for (auto& r : merge_rows(lifts)) out.push_back(r);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "triality", "fm",     "stabilizer",
                                              "cayley",   "gamma",    "weil",   "discriminant"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  const bool needs_n = name != "clifford" && name != "triality" && name != "fm";
  if (needs_n && opt.n < 2) throw std::invalid_argument("--n must be at least 2");
  SuiteReport rep;
  rep.suite = name;
  rep.seed = opt.seed;
  const auto t0 = std::chrono::steady_clock::now();
  if (name == "clifford") {
    rep.checks = clifford_suite(opt.seed);
  } else if (name == "triality") {
    rep.checks = triality_suite();
  } else if (name == "fm") {
    rep.checks = fm_suite(opt.seed);
  } else if (name == "stabilizer") {
    rep.checks = det_chi_suite(opt.n, opt.samples, opt.seed);
    for (auto& r : modn_suite(opt.n, std::max<std::size_t>(opt.samples, 100), opt.seed)) rep.checks.push_back(r);
  } else if (name == "cayley") {
    std::optional<IntVector> h;
    if (opt.h) h = h_from_coeffs(*opt.h);
    rep.checks = cayley_suite(opt.n, opt.seed, h);
  } else if (name == "gamma") {
    rep.checks = gamma_suite(opt.n);
  } else if (name == "weil") {
    rep.checks = weil_suite(opt.n, h_from_coeffs(opt.h ? *opt.h : standard_h()), opt.seed);
  } else if (name == "discriminant") {
    rep.checks = discriminant_suite(opt.n, opt.seed);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt) {
  if (name != "all") return {run_suite(name, opt)};
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& s : suite_names()) jobs.push_back(std::async(std::launch::async, run_suite, s, opt));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

IntVector parse_coeffs(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  IntVector v;
  std::string tok;
  while (in >> tok) {
    try {
      v.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad coefficient: " + tok);
    }
  }
  if (v.size() != 6 && v.size() != 8) throw std::invalid_argument("expected 6 or 8 coefficients");
  return v;
}

nlohmann::json report_json(const std::vector<SuiteReport>& reports, bool with_timing) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"ref", c.ref}, {"status", to_string(c.status)}, {"detail", c.detail}});
    nlohmann::json s = {{"suite", r.suite}, {"seed", r.seed}, {"ok", r.ok()}, {"checks", checks}};
    if (with_timing) s["elapsed_ms"] = r.elapsed_ms;
    suites.push_back(s);
  }
  return {{"schema", 1}, {"ok", all_ok(reports)}, {"suites", suites}};
}

std::string render_json(const std::vector<SuiteReport>& reports, bool with_timing) {
  return report_json(reports, with_timing).dump(2) + "\n";
}

std::string render_text(const std::vector<SuiteReport>& reports, bool with_timing) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "suite " << r.suite << " (seed " << r.seed << ")";
    if (with_timing) out << " " << r.elapsed_ms << " ms";
    out << "\n";
    for (const auto& c : r.checks) {
      out << "  [" << to_string(c.status) << "] " << c.name << " <" << c.ref << ">";
      if (!c.detail.empty()) out << " " << c.detail;
      out << "\n";
    }
  }
  out << (all_ok(reports) ? "OK" : "FAILED") << "\n";
  return out.str();
}

bool all_ok(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

}  // namespace kspin
