#include <doctest.h>

#include "kspin/weil_periods.hpp"

using namespace kspin;

namespace {

RatVector rat(const IntVector& v) { return to_rat(v); }

void require_all(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok());
  }
}

// h = (0, A, 0) with (h,h) = −2k, A = e12 + k·e34.
IntVector h_k(long k) { return h_from_coeffs(IntVector{1, 0, 0, 0, 0, k}); }

}  // namespace

TEST_CASE("definiteness oracle") {
  CHECK(definiteness(to_rat(IntMatrix{{1, 0}, {0, 2}})) == 1);
  CHECK(definiteness(to_rat(IntMatrix{{-1, 0}, {0, -3}})) == -1);
  CHECK(definiteness(to_rat(IntMatrix{{1, 0}, {0, -1}})) == 0);
  CHECK(definiteness(to_rat(IntMatrix{{0, 1}, {1, 0}})) == 0);
  std::vector<Rat> minors;
  CHECK(definiteness(to_rat(IntMatrix{{2, 1}, {1, 2}}), &minors) == 1);
  CHECK(minors == std::vector<Rat>{2, 3});
}

TEST_CASE("h coefficients") {
  CHECK(h_from_coeffs(IntVector{1, 0, 0, 0, 0, 1}) == IntVector{0, 1, 0, 0, 0, 0, 1, 0});
  CHECK(h_from_coeffs(IntVector{1, 2, 3, 4, 5, 6, 7, 8}) == IntVector{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_THROWS(h_from_coeffs(IntVector{1, 2}));
}

TEST_CASE("Weil structure oracle for n = 2, k = 1") {
  const WeilStructure ws = weil_structure(s_n(2), h_k(1));
  CHECK(ws.n == 2);
  CHECK(ws.k == 1);
  CHECK(ws.d == 2);
  CHECK(ws.theta_prime * ws.theta_prime == Int(-2) * IntMatrix::identity(8));
  CHECK(ws.theta_form.transpose() == -ws.theta_form);
  CHECK(ws.theta_form == ws.theta_prime.transpose() * gram_V());
  CHECK_THROWS_AS(weil_structure(s_n(2), mukai_vector(1, IntVector(6), 0)), std::invalid_argument);
}

TEST_CASE("Theta' squares to -d over a grid of (n, k)") {
  for (long n = 1; n <= 6; ++n)
    for (long k = 1; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const WeilStructure ws = weil_structure(s_n(n), h_k(k));
      CHECK(ws.d == n * k);
      CHECK(ws.theta_prime * ws.theta_prime == Int(-n * k) * IntMatrix::identity(8));
      CHECK(compose_on_V(rat(s_n(n)), rat(h_k(k))) == to_rat(ws.theta_prime));
    }
}

TEST_CASE("Weil multiplication scales Theta by the norm") {
  const WeilStructure ws = weil_structure(s_n(3), h_k(2));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(weil_multiplication_check(ws, a, b));
}

TEST_CASE("Hermitian form") {
  const WeilStructure ws = weil_structure(s_n(2), h_k(3));
  Rng rng = Rng::split(61, "herm");
  for (int s = 0; s < 20; ++s) {
    const RatVector x = rat(random_vector(rng, 8, 3)), y = rat(random_vector(rng, 8, 3));
    const KValue a = hermitian(ws, x, y), b = hermitian(ws, y, x);
    CHECK(a.re == b.re);
    CHECK(a.im == -b.im);
    const KValue xx = hermitian(ws, x, x);
    CHECK(xx.im == 0);
  }
}

TEST_CASE("complex structures and Kahler metrics") {
  const IntVector w = s_n(2), h = h_k(1);
  const WeilStructure ws = weil_structure(w, h);
  const DiscriminantWitness wit = hermitian_and_discriminant(ws);
  REQUIRE(wit.found);
  const ComplexStructureJ j = j_ell(rat(wit.f1), rat(wit.f2));
  CHECK(j.j * j.j == -RatMatrix::identity(8));
  CHECK(j.j * to_rat(ws.theta_prime) == to_rat(ws.theta_prime) * j.j);
  const KahlerMetric km = kahler_metric(ws, j);
  CHECK(km.symmetric);
  CHECK(km.sign != 0);
  CHECK_THROWS(j_ell(rat(mukai_vector(1, IntVector(6), 1)), rat(wit.f2)));

  const IntVector t1 = mukai_vector(0, IntVector{1, 0, 0, 0, 0, 1}, 0);
  const IntVector t2 = mukai_vector(0, IntVector{0, 1, 0, 0, -1, 0}, 0);
  const IntVector t3 = mukai_vector(0, IntVector{0, 0, 1, 1, 0, 0}, 0);
  const AnticommuteResult ar = anticommute_check(w, t1, t2, t3);
  CHECK(ar.anticommute);
  CHECK(ar.metrics_equal);
}

TEST_CASE("trivial discriminant for (n, k) up to 6") {
  std::size_t found = 0;
  for (long n = 1; n <= 6; ++n)
    for (long k = 1; k <= 6; k += 2) {
      CAPTURE(n);
      CAPTURE(k);
      const WeilStructure ws = weil_structure(s_n(n), h_k(k));
      const DiscriminantWitness wit = hermitian_and_discriminant(ws);
      if (!wit.found) continue;
      ++found;
      require_all(wit.checks);
      const Rat expect = Rat(ws.d * ws.d * ws.d * ws.d) * wit.x1_sq * wit.x1_sq * wit.x3_sq * wit.x3_sq;
      CHECK(wit.det_psi == expect);
      CHECK(is_rational_square(wit.det_psi).is_square);
      // H-orthogonality of the basis
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) CHECK(hermitian(ws, wit.x[a], wit.x[b]) == KValue{0, 0});
    }
  CHECK(found >= 10);
}

TEST_CASE("Spin_{w,h} preserves H") {
  const WeilStructure ws = weil_structure(s_n(3), h_k(1));
  Rng rng = Rng::split(62, "spin-wh");
  std::vector<RatMatrix> acts;
  for (const auto& g : stabilizer_generators(3, 6, rng, StabilizerMode::w_and_h))
    acts.push_back(g.realization.block(kV, kV));
  CHECK(spin_wh_commutant_check(ws, acts));
  std::vector<RatMatrix> w_only;
  for (const auto& g : stabilizer_generators(3, 6, rng, StabilizerMode::w_only)) w_only.push_back(g.realization.block(kV, kV));
  CHECK_FALSE(spin_wh_commutant_check(ws, w_only));
}

TEST_CASE("weil and discriminant suites") {
  require_all(weil_suite(3, h_from_coeffs(standard_h()), 0));
  require_all(weil_suite(2, h_k(3), 1));
  require_all(discriminant_suite(4, 0));
}
