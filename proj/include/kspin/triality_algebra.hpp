#pragma once

#include <array>
#include <optional>

#include "kspin/spinor_clifford.hpp"

namespace kspin {

// A_X = V ⊕ S⁻ ⊕ S⁺ in 24 coordinates: V at 0..7, S⁻ at 8..15, S⁺ at 16..23,
// each half-spinor in its 8-coordinate view.
constexpr std::size_t kAXDim = 24;
enum Summand : int { kV = 0, kSminus = 1, kSplus = 2 };
constexpr std::size_t offset(Summand s) { return 8 * std::size_t(s); }

struct AXElement {
  IntVector v = IntVector(8);
  IntVector s_minus = IntVector(8);
  IntVector s_plus = IntVector(8);

  IntVector flat() const;
  static AXElement from_flat(const IntVector& x);
};

// Clifford product pieces.
IntMatrix clifford_V_to_Sminus(const IntVector& y_plus);  // v ↦ v·y
IntMatrix product_Sminus_to_V(const IntVector& y_plus);   // t ↦ y·t
IntMatrix clifford_V_to_Splus(const IntVector& t_minus);  // v ↦ v·t
AXElement ax_product(const AXElement& a, const AXElement& b);
IntVector ax_product(const IntVector& a, const IntVector& b);
// Multiplication operator b ↦ a·b on A_X.
IntMatrix mult_operator(const IntVector& a);
RatMatrix mult_operator(const RatVector& a);
IntMatrix ax_gram();

// m_y on V ⊕ S⁻ (16×16, V first) for y ∈ S⁺.
IntMatrix m_plus(const IntVector& y_plus);

struct AXFlags {
  bool is_isometry = false;
  bool is_algebra_automorphism = false;
  // block_permutation[k] = summand that summand k is mapped into, or −1.
  std::array<int, 3> block_permutation{-1, -1, -1};
};

struct AXAutomorphism {
  RatMatrix mat;
  AXFlags flags;

  RatVector apply(const RatVector& x) const { return mat.apply(x); }
  RatMatrix block(Summand to, Summand from) const { return mat.block(offset(to), offset(from), 8, 8); }
  AXAutomorphism operator*(const AXAutomorphism& o) const;
  bool operator==(const AXAutomorphism& o) const { return mat == o.mat; }
};

AXFlags compute_ax_flags(const RatMatrix& m);
AXAutomorphism make_ax(RatMatrix m);
AXAutomorphism ax_identity();
// Block-diagonal automorphism from its three diagonal blocks.
AXAutomorphism ax_block_diagonal(const RatMatrix& v, const RatMatrix& s_minus, const RatMatrix& s_plus);
std::optional<AXAutomorphism> ax_inverse(const AXAutomorphism& a);

// The 16×16 spinor matrix re-expressed on (S⁻ ⊕ S⁺) in view coordinates.
RatMatrix spinor_to_view(const RatMatrix& g16);
RatMatrix view_to_spinor(const RatMatrix& g16view);

// μ̃(g): ρ(g) on V and g on S. Requires g ∈ G₀(V).
AXAutomorphism mu_tilde(const CliffordElement& g);
AXAutomorphism mu_tilde(const RatMatrix& g);

// m̃_y: multiplication by y between V and S⁻, −R_y on S⁺; (y,y) = ±2.
AXAutomorphism m_tilde(const IntVector& y_plus);
// m̃_{y1·y2}: m_{y1}∘m_{y2} on V ⊕ S⁻, R_{y1}∘R_{y2} on S⁺. Equal squares give an
// element of μ̃(Spin(V)); squares 2 and −2 give the extra generator of G(S⁺)^even.
AXAutomorphism m_tilde_pair(const IntVector& y1, const IntVector& y2);

IntVector mukai_vector(long r, const IntVector& h6, long t);

// Triality: J = μ̃(x₁)∘t with u₁ = (1,0,1), x₁ = e₁+e₁*.
const AXAutomorphism& build_J();
const AXAutomorphism& build_J_inverse();
// j(g) = J⁻¹·μ̃(g)·J; throws std::logic_error if the result leaves the image of Spin(V).
AXAutomorphism outer_j(const CliffordElement& g);

AXAutomorphism mu_minus_one();     // μ̃(−1)
AXAutomorphism m_tilde_minus_one();  // J·μ̃(−1)·J⁻¹
AXAutomorphism alpha_tilde();      // id on S⁺, −1 on S⁻ and V
AXAutomorphism tau_tilde();        // −α̃·m̃_{s₁s₂}

}  // namespace kspin
