#pragma once

#include <vector>

#include "kspin/check.hpp"
#include "kspin/triality_algebra.hpp"

namespace kspin {

// X̂ is modeled by the dual basis f_i = ι(e_i*): its cohomology uses the same
// 16 mask coordinates as X, its V uses (f_i, f_i*) in the slots of (e_i, e_i*).

// Line bundle F given by c₁(F) ∈ ∧²H¹ (6 coordinates e12,e13,e14,e23,e24,e34).
struct LineBundleClass {
  IntVector c1 = IntVector(6);

  // ∫c₁∧c₁ / 2, the H⁴ coefficient of ch(F).
  Int c1_squared_half() const;
  // ch(F) = (1, c₁, c₁²/2) ∈ S⁺.
  IntVector ch() const;
  LineBundleClass inverse() const;
  LineBundleClass operator*(const LineBundleClass& o) const;  // tensor product
};

// Left wedge multiplication by ch(F) on S, an element of Spin(V).
CliffordElement ch_element(const LineBundleClass& f);
AXAutomorphism phi_F(const LineBundleClass& f);

// PD(x) = ∫x∧(·); ι(PD x) = Σ_J (∫x∧e_J) f_J, as a 16×16 matrix on mask coordinates.
IntMatrix iota_pd_matrix();
SpinorElement iota_pd(const SpinorElement& x);
// (ι*)⁻¹: ∧^j H¹(X) → ∧^j H¹(X̂)*, e_J ↦ f_J*; PD_{X̂}⁻¹ of that.
SpinorElement pd_hat_inverse_of_dual(const SpinorElement& x);
// φ_P = Σ (−1)^{i(i+1)/2} ι∘PD on degree i.
IntMatrix phi_P_matrix();
// varphi_P(w,θ) = −(ι(θ), (ι*)⁻¹(w)).
IntMatrix varphi_P_matrix();
// φ_P acting on A_X → A_X̂ (varphi_P on V).
const AXAutomorphism& phi_P_tilde();
// c₁(F̂) = ι(PD(c₁ F)).
LineBundleClass dual_bundle(const LineBundleClass& f);
// η = m̃_ŝ ∘ φ_P.
AXAutomorphism eta();

std::vector<CheckResult> verify_tensorization_formulas(const LineBundleClass& f);
std::vector<CheckResult> verify_two_poincare_dualities();
std::vector<CheckResult> verify_derivative_conjugation();
std::vector<CheckResult> verify_phi_P_equivariance();
std::vector<CheckResult> verify_reflection_lifts(const LineBundleClass& f1, const LineBundleClass& f2);

}  // namespace kspin
