#include <doctest.h>

#include "kspin/sampling.hpp"
#include "kspin/triality_algebra.hpp"

using namespace kspin;

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

Int form(const IntVector& a, const IntVector& b) {
  const IntMatrix g = ax_gram();
  Int s = 0;
  for (std::size_t i = 0; i < kAXDim; ++i)
    for (std::size_t j = 0; j < kAXDim; ++j) s += a[i] * g(i, j) * b[j];
  return s;
}

CliffordElement random_spin(Rng& rng) {
  CliffordElement x = CliffordElement::identity();
  for (int k = 0; k < 2; ++k) {
    const int q = rng.sign();
    x = x * CliffordElement::vector(random_unit_V(rng, q, 2)) * CliffordElement::vector(random_unit_V(rng, q, 2));
  }
  return x;
}

}  // namespace

TEST_CASE("A_X product oracles") {
  // 1 ∈ S⁺ times e1 ∈ V lands in S⁻ as e1.
  AXElement a, b;
  a.s_plus[0] = 1;
  b.v[0] = 1;
  const AXElement ab = ax_product(a, b);
  CHECK(ab.s_minus == IntVector{1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(ab.v == IntVector(8));
  CHECK(ab.s_plus == IntVector(8));
  CHECK(AXElement::from_flat(a.flat()).s_plus == a.s_plus);
}

TEST_CASE("A_X product is commutative with an invariant trilinear form") {
  Rng rng = Rng::split(21, "ax");
  for (int s = 0; s < 30; ++s) {
    const IntVector a = random_vector(rng, kAXDim, 3), b = random_vector(rng, kAXDim, 3),
                    c = random_vector(rng, kAXDim, 3);
    CHECK(ax_product(a, b) == ax_product(b, a));
    CHECK(form(ax_product(a, b), c) == form(a, ax_product(b, c)));
  }
}

TEST_CASE("m_y squares to (y,y)/2") {
  Rng rng = Rng::split(22, "m-plus");
  for (int s = 0; s < 30; ++s) {
    const IntVector y = random_vector(rng, 8, 4);
    const Int q = pairing(*lattice_S_plus(), y, y);
    CHECK(2 * (m_plus(y) * m_plus(y)) == q * IntMatrix::identity(16));
  }
}

TEST_CASE("triality J") {
  const AXAutomorphism& J = build_J();
  CHECK((J * J * J).mat.is_identity());
  CHECK_FALSE(J.mat.is_identity());
  CHECK((J * build_J_inverse()).mat.is_identity());
  CHECK(J.flags.is_isometry);
  CHECK(J.flags.is_algebra_automorphism);
  CHECK(J.flags.block_permutation == std::array<int, 3>{kSplus, kV, kSminus});
  for (std::size_t x = 0; x < kAXDim; ++x) {
    const RatVector jx = J.apply(to_rat(unit(kAXDim, x)));
    CHECK(mult_operator(jx) == J.mat * to_rat(mult_operator(unit(kAXDim, x))) * build_J_inverse().mat);
  }
}

TEST_CASE("mu_tilde is a faithful representation by automorphisms") {
  const AXAutomorphism m = mu_minus_one();
  CHECK(m.block(kV, kV).is_identity());
  CHECK(m.block(kSplus, kSplus) == -RatMatrix::identity(8));
  CHECK(m.block(kSminus, kSminus) == -RatMatrix::identity(8));

  Rng rng = Rng::split(23, "mu");
  for (int s = 0; s < 10; ++s) {
    const CliffordElement g = random_spin(rng), h = random_spin(rng);
    const AXAutomorphism mg = mu_tilde(g);
    CHECK(mg.flags.is_algebra_automorphism);
    CHECK(mg.flags.is_isometry);
    CHECK(mg.flags.block_permutation == std::array<int, 3>{kV, kSminus, kSplus});
    CHECK(mu_tilde(g * h) == mg * mu_tilde(h));
    // outer automorphism j is a homomorphism landing in μ̃(Spin)
    const AXAutomorphism jg = outer_j(g);
    CHECK(jg.flags.is_algebra_automorphism);
    CHECK(jg.flags.block_permutation == std::array<int, 3>{kV, kSminus, kSplus});
    CHECK(outer_j(g * h) == jg * outer_j(h));
  }
}

TEST_CASE("j is an order-three outer automorphism by isometries") {
  const AXAutomorphism& J = build_J();
  const AXAutomorphism& Ji = build_J_inverse();
  Rng rng = Rng::split(26, "j3");
  for (int s = 0; s < 20; ++s) {
    const CliffordElement g = random_spin(rng);
    const AXAutomorphism jg = outer_j(g);
    CHECK(jg.flags.is_isometry);
    CHECK(Ji * (Ji * jg * J) * J == mu_tilde(g));  // j³(g) = g
  }
}

TEST_CASE("m_tilde(-1) is J mu(-1) J^-1: identity on S+, -1 on V and S-") {
  const AXAutomorphism m = m_tilde_minus_one();
  CHECK(m == build_J() * mu_minus_one() * build_J_inverse());
  CHECK(m.block(kSplus, kSplus).is_identity());
  CHECK(m.block(kV, kV) == -RatMatrix::identity(8));
  CHECK(m.block(kSminus, kSminus) == -RatMatrix::identity(8));
}

TEST_CASE("j(-1) is -1 on V and S+, identity on S-") {
  const AXAutomorphism j = outer_j(CliffordElement::scalar(-1));
  CHECK(j.block(kV, kV) == -RatMatrix::identity(8));
  CHECK(j.block(kSplus, kSplus) == -RatMatrix::identity(8));
  CHECK(j.block(kSminus, kSminus).is_identity());
  CHECK((j * j).mat.is_identity());
}

TEST_CASE("m_tilde of roots") {
  const IntVector y = mukai_vector(1, IntVector(6), 1);  // (y,y) = 2
  const AXAutomorphism m = m_tilde(y);
  CHECK(m.flags.is_algebra_automorphism);
  CHECK(m.flags.is_isometry);
  CHECK(m.flags.block_permutation == std::array<int, 3>{kSminus, kV, kSplus});
  CHECK((m * m).mat.is_identity());
  CHECK(m.block(kSplus, kSplus) == -to_rat(reflection(lattice_S_plus(), y).matrix()));
  CHECK_THROWS_AS(m_tilde(mukai_vector(1, IntVector(6), 2)), std::invalid_argument);

  Rng rng = Rng::split(24, "m-tilde");
  for (int s = 0; s < 10; ++s) {
    const int sq = s % 2 == 0 ? 2 : -2;
    const IntVector y1 = random_root_S_plus(rng, sq, 2), y2 = random_root_S_plus(rng, sq, 2);
    const AXAutomorphism p = m_tilde_pair(y1, y2);
    CHECK(p.flags.is_algebra_automorphism);
    CHECK(p.flags.block_permutation == std::array<int, 3>{kV, kSminus, kSplus});
  }
}

TEST_CASE("alpha_tilde and tau_tilde") {
  const AXAutomorphism a = alpha_tilde();
  CHECK(a.block(kSplus, kSplus).is_identity());
  CHECK(a.block(kV, kV) == -RatMatrix::identity(8));
  CHECK(a.flags.is_algebra_automorphism);
  const AXAutomorphism t = tau_tilde();
  CHECK((t * t).mat.is_identity());
  // τ̃ scales the form by −1 on V ⊕ S⁻ and is not an automorphism.
  const RatMatrix g = to_rat(ax_gram());
  const RatMatrix tg = t.mat.transpose() * g * t.mat;
  CHECK(tg.block(0, 0, 16, 16) == -g.block(0, 0, 16, 16));
  CHECK(tg.block(16, 16, 8, 8) == g.block(16, 16, 8, 8));
  CHECK_FALSE(t.flags.is_algebra_automorphism);
}

TEST_CASE("spinor view conversions are inverse") {
  Rng rng = Rng::split(25, "view");
  for (int s = 0; s < 10; ++s) {
    const RatMatrix g = to_rat(random_spin(rng).matrix());
    CHECK(view_to_spinor(spinor_to_view(g)) == g);
  }
}
