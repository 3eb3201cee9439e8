#include <doctest.h>

#include <bit>

#include "kspin/cayley_ktheory.hpp"

using namespace kspin;

namespace {

// Line bundle class with c₁ = ℓ: rank 1, ch = exp(ℓ).
ChClass line_bundle(const ExtRingElement& l) { return {1, ext_exp(l)}; }

ExtRingElement random_degree2(Rng& rng) {
  ExtRingElement x;
  for (unsigned m = 0; m < 256; ++m)
    if (std::popcount(m) == 2 && rng.uniform(0, 3) == 0) x[m] = rng.uniform(-2, 2);
  return x;
}

RatMatrix random_sl(Rng& rng) {
  RatMatrix m = RatMatrix::identity(8);
  for (int k = 0; k < 6; ++k) {
    const std::size_t i = rng.uniform(0, 7), j = rng.uniform(0, 7);
    if (i == j) continue;
    RatMatrix e = RatMatrix::identity(8);
    e(i, j) = rng.uniform(-2, 2);
    m = m * e;
  }
  return m;
}

}  // namespace

TEST_CASE("exterior ring signs and products") {
  CHECK(ext_sign(0x01, 0x10) == 1);
  CHECK(ext_sign(0x10, 0x01) == -1);
  CHECK(ext_sign(0x03, 0x01) == 0);
  const ExtRingElement e1 = ExtRingElement::monomial(0x01), f1 = ExtRingElement::monomial(0x10);
  CHECK(e1 * f1 == -(f1 * e1));
  CHECK((e1 * e1).is_zero());
  // c₁(P)⁴ = 4!·e1f1e2f2e3f3e4f4 and c₁(P)⁵ = 0.
  const ExtRingElement c = c1_poincare();
  const ExtRingElement c4 = c * c * c * c;
  const ExtRingElement top = ExtRingElement::monomial(0x11) * ExtRingElement::monomial(0x22) *
                             ExtRingElement::monomial(0x44) * ExtRingElement::monomial(0x88);
  CHECK(c4 == Rat(24) * top);
  CHECK((c4 * c).is_zero());
  CHECK(pt_X() == ExtRingElement::monomial(0x0F));
  CHECK(pt_X() * pt_Xhat() == ExtRingElement::monomial(0xFF));
  // exp is a homomorphism from (even degree, +) to (·).
  Rng rng = Rng::split(51, "ext");
  for (int s = 0; s < 10; ++s) {
    const ExtRingElement a = random_degree2(rng), b = random_degree2(rng);
    CHECK(ext_exp(a + b) == ext_exp(a) * ext_exp(b));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("fm_class oracle") {
  for (long n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const ChClass b = fm_class(n);
    CHECK(b.rank == -2 * n);
    CHECK(b.ch[0] == -2 * n);
    // c₁ = −n·c₁(P)
    CHECK(b.c1() == Rat(-n) * c1_poincare());
  }
  CHECK_THROWS(fm_class(0));
}

TEST_CASE("Cayley class equals c2 of the endomorphism class for n = 2..8") {
  for (long n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const ChClass b = -fm_class(n);
    const ExtRingElement c2 = c2_end(b);
    CHECK(c2 == c2_end_via_kappa(b));
    CHECK(c2 == Rat(-2) * Rat(b.rank) * kappa2(b));
    CHECK(to_wedge4(c2) == cayley_class(n));
    CHECK(to_wedge4(c2_end(fm_class(n))) == cayley_class(n));
  }
  // −N²α² + 4N³β + 4Nγ at N = 2 on three coordinates.
  const Wedge4VElement c = cayley_class(2);
  CHECK(c[Wedge4VElement::index_of(0x0F)] == 32);
  CHECK(c[Wedge4VElement::index_of(0xF0)] == 8);
  CHECK(c[Wedge4VElement::index_of(0x33)] == 8);  // α² has −2 on e1e2e1*e2* (one transposition)
}

TEST_CASE("kappa2 is invariant under twisting; c2_end scales quadratically") {
  Rng rng = Rng::split(52, "kappa");
  for (int s = 0; s < 10; ++s) {
    const ChClass b = -fm_class(3);
    const ChClass l = line_bundle(random_degree2(rng));
    CHECK(kappa2(b * l) == kappa2(b));
    CHECK(c2_end(b * l) == c2_end(b));
    CHECK(c2_end(Int(2) * b) == Rat(4) * c2_end(b));
    CHECK((b * l).ch == b.ch * l.ch);
    CHECK(b.dual().dual().ch == b.ch);
  }
  CHECK_THROWS(kappa2(ChClass{}));
}

TEST_CASE("wedge4 is a homomorphism") {
  CHECK(wedge4(RatMatrix::identity(8)).is_identity());
  Rng rng = Rng::split(53, "wedge4");
  for (int s = 0; s < 5; ++s) {
    const RatMatrix a = random_sl(rng), b = random_sl(rng);
    CHECK(wedge4(a * b) == wedge4(a) * wedge4(b));
  }
  CHECK(Wedge4VElement::basis_masks().size() == 70);
  CHECK_THROWS(Wedge4VElement::index_of(0x07));
}

TEST_CASE("primitive and proportional") {
  Wedge4VElement a;
  a[0] = Rat(2, 3);
  a[5] = Rat(-4, 3);
  const Wedge4VElement p = a.primitive();
  CHECK(p[0] == 1);
  CHECK(p[5] == -2);
  CHECK(proportional(a, p));
  CHECK(in_span(a, {p}));
  Wedge4VElement b;
  b[1] = 1;
  CHECK_FALSE(proportional(a, b));
  CHECK_FALSE(in_span(b, {p}));
}

TEST_CASE("invariant ranks") {
  const auto ident = invariant_rank(std::vector<RatMatrix>{RatMatrix::identity(8)});
  CHECK(ident.rank == 70);
  const auto minus = invariant_rank(std::vector<RatMatrix>{-RatMatrix::identity(8)});
  CHECK(minus.rank == 70);  // even degree

  for (long n : {2, 3}) {
    CAPTURE(n);
    const auto gens = cayley_generators(n, 24, 5, StabilizerMode::w_only);
    const auto inv = invariant_rank(gens, StabilizerMode::w_only);
    CHECK(inv.rank == 1);
    REQUIRE(inv.kernel.size() == 1);
    CHECK(proportional(inv.kernel[0], cayley_class(n)));
    CHECK_FALSE(proportional(inv.kernel[0], cayley_class(n + 1)));
    for (const auto& g : gens) CHECK(wedge4(g.realization.block(kV, kV)).apply(cayley_class(n).vector()) == cayley_class(n).vector());
  }
  const auto gh = cayley_generators(3, 24, 5, StabilizerMode::w_and_h);
  const auto invh = invariant_rank(gh, StabilizerMode::w_and_h);
  CHECK(invh.rank == 3);
  CHECK(in_span(cayley_class(3), invh.kernel));
  // generators for n = 3 do not fix s_4
  auto wrong = cayley_generators(3, 4, 5, StabilizerMode::w_only);
  for (auto& g : wrong) g.n = 4;
  CHECK_THROWS_AS(invariant_rank(wrong, StabilizerMode::w_only), std::invalid_argument);
}

TEST_CASE("cayley suite") {
  for (const auto& r : cayley_suite(3, 0)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok());
    if (r.name == "invariant_rank") CHECK(r.detail.find("rank=1") != std::string::npos);
  }
}
