#include <doctest.h>

#include "kspin/stabilizer_monodromy.hpp"

using namespace kspin;

namespace {

void require_all(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok());
  }
}

// ∫A∧B for 2-forms in coordinates e12,e13,e14,e23,e24,e34.
Int wedge_pair(const IntVector& a, const IntVector& b) {
  return a[0] * b[5] + a[5] * b[0] - a[1] * b[4] - a[4] * b[1] + a[2] * b[3] + a[3] * b[2];
}

}  // namespace

TEST_CASE("s_n and its orthogonal complement") {
  CHECK(s_n(3) == IntVector{1, 0, 0, 0, 0, 0, 0, -3});
  for (long n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(pairing(*lattice_S_plus(), s_n(n), s_n(n)) == -2 * n);
    const IntMatrix b = sn_perp_basis(n);
    CHECK((b.transpose() * gram_S_plus() * to_int(to_rat(IntMatrix::column(s_n(n))))).is_zero());
    const auto l = sn_perp_lattice(n);
    CHECK(signature(*l) == std::pair<std::size_t, std::size_t>{3, 4});
    const auto d = discriminant_group(*l);
    CHECK(d.invariant_factors == std::vector<Int>{2 * n});
  }
}

TEST_CASE("Gamma_w is (Z/n)^4") {
  for (long n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const GammaCokernel g = gamma_w_cokernel(s_n(n));
    CHECK(g.invariant_factors == std::vector<Int>{1, 1, 1, 1, n, n, n, n});
    CHECK(g.adjoint_identity);
  }
}

TEST_CASE("wedge2 is a homomorphism preserving the wedge pairing") {
  Rng rng = Rng::split(41, "wedge2");
  for (int s = 0; s < 20; ++s) {
    const IntMatrix m = random_elementary(rng) * random_elementary(rng), k = random_elementary(rng);
    CHECK(determinant(m) == 1);
    CHECK(wedge2(m * k) == wedge2(m) * wedge2(k));
    const IntVector a = random_vector(rng, 6, 3), b = random_vector(rng, 6, 3);
    CHECK(wedge_pair(wedge2(m).apply(a), wedge2(m).apply(b)) == wedge_pair(a, b));
  }
  CHECK(wedge2(IntMatrix::identity(4)).is_identity());
}

TEST_CASE("symplectic frames and transvections") {
  Rng rng = Rng::split(42, "frame");
  CHECK(skew_matrix(standard_h()) == IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  for (int s = 0; s < 20; ++s) {
    const IntVector a = random_line_bundle_class(rng, 2, false);
    REQUIRE(wedge_pair(a, a) == 2);
    const IntMatrix m = symplectic_frame(a);
    CHECK(determinant(m) == 1);
    CHECK(wedge2(m).apply(standard_h()) == a);
    const IntMatrix p = skew_matrix(a);
    const IntMatrix t = random_symplectic_transvection(rng, p);
    CHECK(t * p * t.transpose() == p);
    CHECK(wedge2(t).apply(a) == a);
  }
  CHECK_THROWS(symplectic_frame(IntVector{1, 0, 0, 0, 0, 2}));
}

TEST_CASE("random line bundle classes") {
  Rng rng = Rng::split(43, "lb");
  for (long n = 2; n <= 6; ++n)
    for (int s = 0; s < 5; ++s) {
      const IntVector a = random_line_bundle_class(rng, n, true);
      CHECK(wedge_pair(a, a) == 2 * n - 2);
      CHECK(wedge_pair(a, standard_h()) == 0);
      CHECK(gcd_of(a) == 1);
    }
}

TEST_CASE("generators fix s_n and reduce mod n homomorphically") {
  Rng rng = Rng::split(44, "gens");
  const long n = 4;
  const auto gens = stabilizer_generators(n, 12, rng, StabilizerMode::w_only);
  REQUIRE(gens.size() >= 12);
  const RatVector sn = to_rat(s_n(n));
  for (const auto& g : gens) {
    CAPTURE(g.label);
    CHECK(g.realization.block(kSplus, kSplus).apply(sn) == sn);
    const int dc = det_character(g.induced) * chi_character(*sn_perp_lattice(n), g.induced);
    CHECK(dc == 1);
  }
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    const auto ab = compose(gens[i], gens[i + 1]);
    CHECK(mod_n_rep(ab) == mod_n_rep(gens[i]) * mod_n_rep(gens[i + 1]));
  }
}

TEST_CASE("w_and_h generators also fix h") {
  Rng rng = Rng::split(45, "gens-h");
  const IntVector h = mukai_vector(0, standard_h(), 0);
  for (const auto& g : stabilizer_generators(3, 10, rng, StabilizerMode::w_and_h)) {
    CAPTURE(g.label);
    CHECK(g.realization.block(kSplus, kSplus).apply(to_rat(h)) == to_rat(h));
  }
}

TEST_CASE("sl4 generators reduce to their literal matrices") {
  const IntMatrix e{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const auto g = sl4_embed(e, 5);
  CHECK(mod_n_rep(g) == reduce_mod(e, 5));
  CHECK(mod_n_rep(tilde_alpha_gen(5)) == reduce_mod(Int(-1) * IntMatrix::identity(4), 5));
  CHECK_THROWS(sl4_embed(IntMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 5));
}

TEST_CASE("reflection characters on s_n^perp") {
  Rng rng = Rng::split(46, "refl");
  for (long n = 3; n <= 5; ++n) {
    const auto l = sn_perp_lattice(n);
    for (int s = 0; s < 10; ++s) {
      // roots ±2 of s_n^⊥ from H² classes with ∫A² = ±2
      const int sq = s % 2 == 0 ? 2 : -2;
      IntVector u(7);
      const IntVector a = random_line_bundle_class(rng, sq == 2 ? 2 : 0, false);
      REQUIRE(wedge_pair(a, a) == sq);
      for (std::size_t k = 0; k < 6; ++k) u[k] = a[k];
      REQUIRE(pairing(*l, u, u) == sq);
      const auto r = signed_reflection(l, u);
      CHECK(det_character(r) == sq / 2);
      CHECK(chi_character(*l, r) == -sq / 2);
    }
  }
}

TEST_CASE("suites pass for n = 3, 4, 5") {
  for (long n = 3; n <= 5; ++n) {
    CAPTURE(n);
    require_all(det_chi_suite(n, 30, 1));
    require_all(modn_suite(n, 50, 1));
    require_all(gamma_suite(n));
  }
}
