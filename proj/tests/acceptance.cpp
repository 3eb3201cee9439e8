// Runs every acceptance criterion and prints one pass/fail line per criterion.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "kspin/cayley_ktheory.hpp"
#include "kspin/fm_actions.hpp"
#include "kspin/reports.hpp"
#include "kspin/stabilizer_monodromy.hpp"
#include "kspin/weil_periods.hpp"

using namespace kspin;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string failed_names(const std::vector<CheckResult>& rows) {
  std::string s;
  for (const auto& r : rows)
    if (!r.ok()) s += " " + r.name;
  return s;
}

Outcome from_rows(const std::vector<CheckResult>& rows, const std::string& what) {
  const bool ok = all_ok(rows);
  return {ok, std::to_string(rows.size()) + " checks" + (what.empty() ? "" : ", " + what) +
                  (ok ? "" : "; failed:" + failed_names(rows))};
}

const CheckResult* row(const std::vector<CheckResult>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return &r;
  return nullptr;
}

Outcome crit_clifford() { return from_rows(clifford_suite(0), "64 basis pairs, 1000 random pairs, 100 round trips"); }

Outcome crit_characters() {
  // τ rows and the character rows of the Clifford suite, with 200 sampled elements and 100 reflections.
  std::vector<CheckResult> rows;
  for (const auto& r : clifford_suite(1))
    if (r.name.rfind("tau", 0) == 0 || r.name.find("character") != std::string::npos ||
        r.name == "sampled_group_elements" || r.name == "minus_rho_is_reflection" ||
        r.name == "orientation_equals_lattice_ort")
      rows.push_back(r);
  return from_rows(rows, "");
}

Outcome crit_triality() { return from_rows(triality_suite(), "24x24 basis pairs"); }

Outcome crit_fm() { return from_rows(fm_suite(0), "20 seeded line bundles"); }

Outcome crit_stabilizer() {
  std::vector<CheckResult> rows;
  std::string orders;
  for (long n = 3; n <= 5; ++n) {
    for (auto& r : det_chi_suite(n, 50, 0)) rows.push_back(r);
    const Int order = discriminant_group(*sn_perp_lattice(n)).order();
    orders += " n=" + std::to_string(n) + ": |disc|=" + order.get_str() + " (2n=" + std::to_string(2 * n) +
              ", 4n-2=" + std::to_string(4 * n - 2) + ")";
  }
  Outcome o = from_rows(rows, "n in {3,4,5}, 50 sampled u;" + orders);
  return o;
}

Outcome crit_modn() {
  std::vector<CheckResult> rows;
  for (long n = 3; n <= 5; ++n)
    for (auto& r : modn_suite(n, 100, 0)) rows.push_back(r);
  return from_rows(rows, "100 sampled pairs per n");
}

Outcome crit_gamma() {
  std::vector<CheckResult> rows;
  for (long n = 2; n <= 8; ++n)
    for (auto& r : gamma_suite(n)) rows.push_back(r);
  return from_rows(rows, "n = 2..8");
}

Outcome crit_cayley() {
  bool ok = true;
  std::string d;
  for (long n = 2; n <= 8; ++n) {
    const bool eq = to_wedge4(c2_end(-fm_class(n))) == cayley_class(n);
    ok = ok && eq;
    if (!eq) d += " c2_end mismatch at n=" + std::to_string(n);
  }
  const long n = 3;
  const auto gens = cayley_generators(n, 24, 0, StabilizerMode::w_only);
  const InvariantResult inv = invariant_rank(gens, StabilizerMode::w_only);
  const bool r1 = inv.rank == 1 && inv.kernel.size() == 1 && proportional(inv.kernel[0], cayley_class(n));
  const auto gh = cayley_generators(n, 24, 0, StabilizerMode::w_and_h);
  const InvariantResult invh = invariant_rank(gh, StabilizerMode::w_and_h);
  const bool r3 = invh.rank == 3 && in_span(cayley_class(n), invh.kernel);
  ok = ok && r1 && r3;
  return {ok, "c2_end = cayley_class for n = 2..8; rank " + std::to_string(inv.rank) + " with " +
                  std::to_string(gens.size()) + " w-generators; rank " + std::to_string(invh.rank) + " with " +
                  std::to_string(gh.size()) + " (w,h)-generators" + d};
}

Outcome crit_weil() {
  std::vector<CheckResult> rows;
  // theta_square_random covers 50 sampled h per n; weil_multiplication 13 λ per structure.
  for (long n = 2; n <= 3; ++n)
    for (auto& r : weil_suite(n, h_from_coeffs(standard_h()), 0)) rows.push_back(r);
  // Kähler definiteness on 10 admissible triples (w, h, ℓ).
  std::size_t kahler = 0, admissible = 0;
  for (long n = 1; n <= 5; ++n)
    for (long k = 1; k <= 2; ++k) {
      const WeilStructure ws = weil_structure(s_n(n), h_from_coeffs(IntVector{1, 0, 0, 0, 0, k}));
      const DiscriminantWitness wit = hermitian_and_discriminant(ws);
      if (!wit.found) continue;
      ++admissible;
      const KahlerMetric km = kahler_metric(ws, j_ell(to_rat(wit.f1), to_rat(wit.f2)));
      if (km.symmetric && km.sign != 0) ++kahler;
    }
  rows.push_back(make_check("kahler_triples", "prop-Theta-h-is-a-Kahler-form", kahler == admissible && admissible >= 10,
                            std::to_string(kahler) + "/" + std::to_string(admissible)));
  // λ*Θ = Nm(λ)Θ for 20 sampled λ.
  Rng rng = Rng::split(0, "acceptance/weil");
  const WeilStructure ws = weil_structure(s_n(3), h_from_coeffs(standard_h()));
  std::size_t lam = 0;
  for (int t = 0; t < 20; ++t)
    if (weil_multiplication_check(ws, rng.uniform(-6, 6), rng.uniform(-6, 6))) ++lam;
  rows.push_back(make_check("norm_scaling", "cor-weil-type", lam == 20, std::to_string(lam) + "/20"));
  // J_ℓJ_ℓ′ = −J_ℓ′J_ℓ for 10 orthogonal pairs: signed permutations of the twistor triple.
  const IntVector t1 = mukai_vector(0, IntVector{1, 0, 0, 0, 0, 1}, 0);
  const IntVector t2 = mukai_vector(0, IntVector{0, 1, 0, 0, -1, 0}, 0);
  const IntVector t3 = mukai_vector(0, IntVector{0, 0, 1, 1, 0, 0}, 0);
  const std::array<std::array<IntVector, 3>, 3> perms{{{t1, t2, t3}, {t2, t3, t1}, {t3, t1, t2}}};
  std::size_t anti = 0, total = 0;
  for (long n = 2; n <= 5 && total < 10; ++n)
    for (const auto& p : perms) {
      if (total == 10) break;
      ++total;
      const AnticommuteResult ar = anticommute_check(s_n(n), p[0], p[1], p[2]);
      if (ar.anticommute && ar.metrics_equal) ++anti;
    }
  rows.push_back(make_check("anticommuting_pairs", "prop-Theta-h-is-a-Kahler-form", anti == 10,
                            std::to_string(anti) + "/" + std::to_string(total) + " pairs, metrics coincide"));
  return from_rows(rows, "");
}

Outcome crit_discriminant() {
  std::size_t found = 0, certified = 0;
  for (long n = 1; n <= 6; ++n)
    for (long k : {1, 3, 5}) {
      const WeilStructure ws = weil_structure(s_n(n), h_from_coeffs(IntVector{1, 0, 0, 0, 0, k}));
      const DiscriminantWitness wit = hermitian_and_discriminant(ws);
      if (!wit.found) continue;
      ++found;
      const auto* orth = row(wit.checks, "h_orthogonal_k_basis");
      const bool sq = is_rational_square(wit.det_psi).is_square;
      if (all_ok(wit.checks) && orth && orth->status == Status::pass && sq) ++certified;
    }
  return {found >= 10 && certified == found,
          std::to_string(certified) + "/" + std::to_string(found) + " (w,h) with n,k <= 6 certified"};
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(KSPIN_CLI_PATH) + " " + args;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Outcome crit_determinism() {
  const auto a = run_cli("verify all --n 4 --seed 7 --format json");
  const auto b = run_cli("verify all --n 4 --seed 7 --format json");
  const bool same = a.second == b.second && !a.second.empty();
  return {same && a.first == 0 && b.first == 0,
          "exit codes " + std::to_string(a.first) + "," + std::to_string(b.first) + "; " +
              std::to_string(a.second.size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "clifford foundation", 5, crit_clifford},
      {2, "tau/alpha/characters", 5, crit_characters},
      {3, "triality", 5, crit_triality},
      {4, "FM identities", 10, crit_fm},
      {5, "stabilizer characters", 10, crit_stabilizer},
      {6, "mod-n representation", 5, crit_modn},
      {7, "Gamma_w", 2, crit_gamma},
      {8, "Cayley class", 30, crit_cayley},
      {9, "Weil", 10, crit_weil},
      {10, "discriminant", 30, crit_discriminant},
      {11, "CLI determinism", 0, crit_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || s < c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << s << "s";
    if (c.limit_s > 0) line << " < " << c.limit_s << "s";
    if (!in_time) line << " [over time limit]";
    line << ": " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
