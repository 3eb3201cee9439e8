#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "kspin/reports.hpp"

using namespace kspin;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for Spin(8) actions on abelian fourfolds and generalized Kummers"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string format = "text", out_path;
  bool timing = false;
  SuiteOptions opt;
  std::string h_coeffs;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  verify->add_option("--seed", seed, "Seed for sampled checks")->envname("KUMMER_SPIN_SEED");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write the report to a file instead of stdout");
  verify->add_flag("--timing", timing, "Include elapsed milliseconds per suite");

  std::string suite;
  auto add = [&](const std::string& name, const std::string& desc) {
    auto* s = verify->add_subcommand(name, desc);
    s->fallthrough();
    s->callback([&suite, name] { suite = name; });
    return s;
  };
  add("clifford", "Clifford algebra, tau/alpha, characters");
  add("triality", "Triality automorphism J of A_X");
  add("fm", "Fourier-Mukai identities");
  auto* stab = add("stabilizer", "Stabilizer of s_n: det*chi, mod-n representation");
  stab->add_option("--n", opt.n, "n >= 2")->required();
  stab->add_option("--samples", opt.samples, "Sample count");
  auto* cay = add("cayley", "Cayley class and invariant ranks on wedge^4 V");
  cay->add_option("--n", opt.n, "n >= 2")->required();
  cay->add_option("--with-h", h_coeffs, "Also check the (w,h)-invariants; 6 or 8 comma-separated coefficients");
  auto* gam = add("gamma", "Cokernel of m_w");
  gam->add_option("--n", opt.n, "n >= 2")->required();
  auto* weil = add("weil", "Weil-type complex multiplication and Kahler metrics");
  weil->set_help_flag("--help", "Print this help message and exit");
  weil->add_option("--n", opt.n, "n >= 2")->required();
  weil->add_option("--h", h_coeffs, "6 or 8 comma-separated coefficients")->required();
  auto* disc = add("discriminant", "Trivial discriminant of the Hermitian form");
  disc->add_option("--n", opt.n, "n >= 2")->required();
  auto* all = add("all", "Every suite");
  all->add_option("--n", opt.n, "n >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::vector<SuiteReport> reports;
  try {
    opt.seed = seed;
    if (!h_coeffs.empty()) opt.h = parse_coeffs(h_coeffs);
    reports = run_suites(suite, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string body = format == "json" ? render_json(reports, timing) : render_text(reports, timing);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << body;
  }
  return all_ok(reports) ? 0 : 1;
}
