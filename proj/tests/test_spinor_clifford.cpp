#include <doctest.h>

#include <bit>

#include "kspin/sampling.hpp"
#include "kspin/spinor_clifford.hpp"

using namespace kspin;

namespace {

IntVector unit8(std::size_t i) {
  IntVector v(8);
  v[i] = 1;
  return v;
}

CliffordElement random_element(Rng& rng) {
  std::array<Int, kMonomials> c;
  for (auto& x : c) x = rng.uniform(0, 6) == 0 ? rng.uniform(-3, 3) : 0;
  return CliffordElement(monomial_reassemble(c));
}

}  // namespace

TEST_CASE("wedge signs and the Mukai pairing") {
  CHECK(wedge_sign(0b0001, 0b0010) == 1);
  CHECK(wedge_sign(0b0010, 0b0001) == -1);
  CHECK(wedge_sign(0b0011, 0b0011) == 0);
  CHECK(wedge_sign(0b0101, 0b1010) == -1);  // e13 ∧ e24 = −e1234
  CHECK(integral(SpinorElement::basis(15)) == 1);

  CHECK(pairing_S(SpinorElement::basis(0), SpinorElement::basis(15)) == 1);
  CHECK(pairing_S(SpinorElement::basis(3), SpinorElement::basis(12)) == -1);  // −∫e12∧e34
  CHECK(pairing_S(SpinorElement::basis(1), SpinorElement::basis(14)) == 1);

  // (x,x)_{S⁺} = 2rt − 2pf(H)
  const SpinorElement m = SpinorElement::mukai(2, IntVector{1, 0, 0, 0, 0, 3}, 5);
  CHECK(pairing_S(m, m) == 2 * 2 * 5 - 2 * 3);
  CHECK(gram_S_plus()(0, 7) == 1);
  CHECK(gram_V() == IntMatrix{{0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}});
  CHECK(Q_V(IntVector{1, 0, 0, 0, 1, 0, 0, 0}) == 1);
  CHECK(Q_V(IntVector{2, 3, 0, 0, 5, 7, 0, 0}) == 31);
}

TEST_CASE("vectors act by wedge and contraction") {
  const SpinorElement one = SpinorElement::basis(0);
  CHECK(act_vector(unit8(0), one) == SpinorElement::basis(1));
  CHECK(act_vector(unit8(4), SpinorElement::basis(1)) == one);
  CHECK(act_vector(unit8(4), SpinorElement::basis(2)) == SpinorElement());
  // e1* ⌟ (e2 ∧ e1) = −e2
  CHECK(act_vector(unit8(4), SpinorElement::basis(3)) == SpinorElement::basis(2));
  CHECK(act_vector(unit8(5), SpinorElement::basis(3)) == Int(-1) * SpinorElement::basis(1));
  CHECK(SpinorElement::from_splus(IntVector{1, 0, 0, 0, 0, 0, 0, 0}) == one);
  CHECK(SpinorElement::basis(5).is_even());
  CHECK(SpinorElement::basis(7).is_odd());
}

TEST_CASE("Clifford relation on all basis pairs") {
  const IntMatrix g = gram_V();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const IntMatrix a = clifford_embed(unit8(i)), b = clifford_embed(unit8(j));
      CHECK(a * b + b * a == g(i, j) * IntMatrix::identity(16));
    }
}

TEST_CASE("Clifford relation on random vectors") {
  Rng rng = Rng::split(11, "clifford-rel");
  for (int s = 0; s < 200; ++s) {
    const IntVector v = random_vector(rng, 8, 6);
    const IntMatrix a = clifford_embed(v);
    CHECK(a * a == Q_V(v) * IntMatrix::identity(16));
  }
}

TEST_CASE("monomials form a basis of End(S)") {
  CHECK(rank(monomial_basis_matrix()) == 256);
  Rng rng = Rng::split(12, "monomials");
  for (int s = 0; s < 30; ++s) {
    const CliffordElement x = random_element(rng);
    CHECK(monomial_reassemble(monomial_decompose(x.matrix())) == x.matrix());
    const auto d = x.with_decomposition().decomposition();
    REQUIRE(d);
    CHECK(monomial_reassemble(*d) == x.matrix());
  }
  auto id = monomial_decompose(IntMatrix::identity(16));
  CHECK(id[0] == 1);
  for (unsigned a = 1; a < kMonomials; ++a) CHECK(id[a] == 0);
}

TEST_CASE("tau, alpha and star") {
  for (std::size_t i = 0; i < 8; ++i) {
    const CliffordElement v = CliffordElement::vector(unit8(i));
    CHECK(tau(v) == v);
    CHECK(alpha(v).matrix() == -v.matrix());
    CHECK(star(v).matrix() == -v.matrix());
  }
  for (unsigned a = 0; a < kMonomials; ++a) {
    if ((a & (a >> 4) & 0xFu) != 0) continue;
    const int d = std::popcount(a);
    const Int sgn = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(tau(monomial_matrix(a)) == sgn * monomial_matrix(a));
    CHECK(alpha(monomial_matrix(a)) == Int(d % 2 == 0 ? 1 : -1) * monomial_matrix(a));
  }
  // e1·e1* is not a product of orthogonal vectors: τ(e1 e1*) = e1* e1 = 1 − e1 e1*.
  const IntMatrix p = monomial_matrix(0b10001);
  CHECK(tau(p) == IntMatrix::identity(16) - p);

  Rng rng = Rng::split(13, "tau");
  for (int s = 0; s < 30; ++s) {
    const CliffordElement x = random_element(rng), y = random_element(rng);
    CHECK(tau(x * y) == tau(y) * tau(x));
    CHECK(alpha(x * y) == alpha(x) * alpha(y));
    CHECK(star(x * y) == star(y) * star(x));
    CHECK(tau(tau(x)) == x);
    CHECK(alpha(alpha(x)) == x);
  }
}

TEST_CASE("tau on forms") {
  for (unsigned m = 0; m < kSpinDim; ++m) {
    const int d = degree(m);
    const Int sgn = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(tau_forms(SpinorElement::basis(m)) == sgn * SpinorElement::basis(m));
  }
}

TEST_CASE("group flags of simple elements") {
  const CliffordElement vp = CliffordElement::vector(IntVector{1, 0, 0, 0, 1, 0, 0, 0});  // Q = 1
  const CliffordElement vm = CliffordElement::vector(IntVector{1, 0, 0, 0, -1, 0, 0, 0});  // Q = −1
  const CliffordElement wp = CliffordElement::vector(IntVector{0, 1, 0, 0, 0, 1, 0, 0});

  auto f = group_flags(vp);
  CHECK(f.in_G);
  CHECK(f.parity == Parity::odd);
  CHECK(f.norm == 1);
  CHECK(f.orientation == -1);
  CHECK_FALSE(f.in_Spin);

  f = group_flags(vm);
  CHECK(f.in_Pin);
  CHECK(f.norm == -1);
  CHECK(f.orientation == 1);

  f = group_flags(vp * wp);
  CHECK(f.in_Spin);
  CHECK(f.parity == Parity::even);

  f = group_flags(CliffordElement::scalar(-1));
  CHECK(f.in_Spin);
  REQUIRE(f.rho);
  CHECK(f.rho->is_identity());

  CHECK(group_flags(CliffordElement::scalar(2)).norm == 0);
  CHECK(as_scalar(Rat(5) * to_rat(IntMatrix::identity(16))) == std::optional<Rat>(5));
  CHECK_FALSE(as_scalar(to_rat(monomial_matrix(1))).has_value());
}

TEST_CASE("unit vectors act on V by minus the reflection") {
  Rng rng = Rng::split(14, "rho");
  for (int s = 0; s < 40; ++s) {
    const int q = s % 2 == 0 ? 1 : -1;
    const IntVector v = random_unit_V(rng, q, 3);
    REQUIRE(Q_V(v) == q);
    const auto f = group_flags(CliffordElement::vector(v));
    REQUIRE(f.rho);
    CHECK(-*f.rho == to_rat(reflection(lattice_V(), v).matrix()));
    CHECK(f.norm == q);
  }
}

TEST_CASE("characters are multiplicative on sampled group elements") {
  Rng rng = Rng::split(15, "chars");
  for (int s = 0; s < 40; ++s) {
    CliffordElement x = CliffordElement::identity(), y = CliffordElement::identity();
    for (int k = 0; k < 2; ++k) {
      x = x * CliffordElement::vector(random_unit_V(rng, rng.sign(), 2));
      y = y * CliffordElement::vector(random_unit_V(rng, rng.sign(), 2));
    }
    const auto fx = group_flags(x), fy = group_flags(y), fxy = group_flags(x * y);
    CHECK(fxy.norm == fx.norm * fy.norm);
    CHECK(fxy.orientation == fx.orientation * fy.orientation);
    CHECK(*fxy.rho == *fx.rho * *fy.rho);
  }
}

TEST_CASE("non-group elements are rejected") {
  // 1 + e1 is invertible but of mixed parity, so it does not normalize V.
  const IntMatrix x = IntMatrix::identity(16) + monomial_matrix(0b1);
  CHECK_FALSE(try_rho(to_rat(x)).has_value());
  CHECK_THROWS_AS(group_flags(CliffordElement(x)), NotInCliffordGroup);
}
