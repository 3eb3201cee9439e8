#include <doctest.h>

#include "kspin/fm_actions.hpp"
#include "kspin/sampling.hpp"

using namespace kspin;

namespace {

void require_all(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.status == Status::pass);
  }
}

}  // namespace

TEST_CASE("line bundle classes") {
  const LineBundleClass f{IntVector{1, 0, 0, 0, 0, 1}};  // e12 + e34
  CHECK(f.c1_squared_half() == 1);
  CHECK(f.ch() == IntVector{1, 1, 0, 0, 0, 0, 1, 1});
  CHECK(f.inverse().c1 == IntVector{-1, 0, 0, 0, 0, -1});
  CHECK((f * f.inverse()).c1 == IntVector(6));
  const LineBundleClass g{IntVector{0, 1, 0, 0, 1, 0}};  // e13 + e24: ∫ = −2
  CHECK(g.c1_squared_half() == -1);
  // ch is multiplicative: ch(F⊗G) = ch(F)·ch(G) in S⁺.
  const IntVector fg = (f * g).ch();
  CHECK(fg[7] == f.c1_squared_half() + g.c1_squared_half() +
                     integral(wedge(SpinorElement::mukai(0, f.c1, 0), SpinorElement::mukai(0, g.c1, 0))));
}

TEST_CASE("iota PD on basis classes") {
  CHECK(iota_pd(SpinorElement::basis(0)) == SpinorElement::basis(15));
  CHECK(iota_pd(SpinorElement::basis(1)) == SpinorElement::basis(14));
  CHECK(iota_pd(SpinorElement::basis(15)) == SpinorElement::basis(0));
  const IntMatrix p = phi_P_matrix();
  CHECK(abs(determinant(p)) == 1);
}

TEST_CASE("FM identities on basis classes") {
  require_all(verify_two_poincare_dualities());
  require_all(verify_derivative_conjugation());
  require_all(verify_phi_P_equivariance());
}

TEST_CASE("phi_F oracle for F = O(e12)") {
  const LineBundleClass f{IntVector{1, 0, 0, 0, 0, 0}};
  const AXAutomorphism p = phi_F(f);
  // 1 ↦ 1 + e12 on S⁺, and c₁² = 0.
  const RatVector img = p.apply(to_rat(IntVector{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(img == to_rat(IntVector{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(p.flags.is_algebra_automorphism);
  CHECK(group_flags(ch_element(f)).in_Spin);
}

TEST_CASE("tensorization and reflection lifts on seeded line bundles") {
  Rng rng = Rng::split(31, "fm-test");
  for (int s = 0; s < 10; ++s) {
    const LineBundleClass f1{random_vector(rng, 6, 3)}, f2{random_vector(rng, 6, 3)};
    require_all(verify_tensorization_formulas(f1));
    require_all(verify_reflection_lifts(f1, f2));
    // φ_F is a homomorphism in F
    CHECK(phi_F(f1 * f2) == phi_F(f1) * phi_F(f2));
  }
}

TEST_CASE("eta is an isometry") {
  const AXAutomorphism e = eta();
  CHECK(e.flags.is_isometry);
  CHECK(phi_P_tilde().flags.is_isometry);
}
