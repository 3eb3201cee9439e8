#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kspin/check.hpp"
#include "kspin/stabilizer_monodromy.hpp"

namespace kspin {

// m_y on V ⊕ S⁻ for rational y ∈ S⁺_ℚ.
RatMatrix m_plus_rat(const RatVector& y);
// V → V block of m_{y₁}∘m_{y₂}.
RatMatrix compose_on_V(const RatVector& y1, const RatVector& y2);

struct WeilStructure {
  IntVector w, h;
  long n = 0;  // (w,w) = −2n
  long k = 0;  // (h,h) = −2k
  long d = 0;  // n·k
  IntMatrix theta_prime = IntMatrix(8, 8);  // Θ′_h = m_w∘m_h on V
  IntMatrix theta_form = IntMatrix(8, 8);   // Θ_h(x,y) = (Θ′_h x, y)_V as xᵀ·theta_form·y
};

// Throws std::invalid_argument unless (w,h) = 0, (w,w) < 0 and (h,h) < 0 or h = 0.
WeilStructure weil_structure(const IntVector& w, const IntVector& h);

struct ComplexStructureJ {
  RatVector u1, u2;
  RatMatrix j;  // m_{u₁}∘m_{u₂} on V
};
// Requires (u_i,u_i) = −2, (u₁,u₂) = 0.
ComplexStructureJ j_ell(const RatVector& u1, const RatVector& u2);

struct KahlerMetric {
  RatMatrix g = RatMatrix(8, 8);
  bool symmetric = false;
  std::vector<Rat> leading_minors;
  int sign = 0;  // +1 positive definite, −1 negative definite, 0 indefinite
};
// g(x,y) = Θ_h(J x, y); requires J's plane orthogonal to w and h.
KahlerMetric kahler_metric(const WeilStructure& ws, const ComplexStructureJ& j);
// Sign of a symmetric form from its leading principal minors (0 if not definite).
int definiteness(const RatMatrix& g, std::vector<Rat>* minors = nullptr);

struct AnticommuteResult {
  bool anticommute = false;
  bool metrics_equal = false;
};
// h, h′, f pairwise orthogonal in w^⊥ with squares −2; J_ℓ = m_{h′}m_f, J_ℓ′ = m_f m_h.
AnticommuteResult anticommute_check(const IntVector& w, const IntVector& h, const IntVector& h2, const IntVector& f);

// Θ_h((a+bΘ′)x, (a+bΘ′)y) = (a²+b²d)·Θ_h(x,y).
bool weil_multiplication_check(const WeilStructure& ws, long a, long b);

// H(x,y) = d(x,y) + √−d·(Θ′x,y), stored as (real, imaginary ⁄ √−d).
struct KValue {
  Rat re, im;
  friend bool operator==(const KValue& a, const KValue& b) { return a.re == b.re && a.im == b.im; }
};
KValue hermitian(const WeilStructure& ws, const RatVector& x, const RatVector& y);

struct DiscriminantWitness {
  bool found = false;  // false when the bounded search for U₁⊕U₂ failed
  IntVector e1, f1, e2, f2;
  std::vector<RatVector> x;  // x₁..x₄
  Rat det_psi;
  Rat x1_sq, x3_sq;  // (x₁,x₁), (x₃,x₃)
  std::vector<CheckResult> checks;
};
// The trivial-discriminant construction with a bounded search for e_i, f_i ∈ {w,h}^⊥.
DiscriminantWitness hermitian_and_discriminant(const WeilStructure& ws, long search_bound = 2);

// Each V-action commutes with Θ′_h and preserves (·,·)_V and Θ_h.
bool spin_wh_commutant_check(const WeilStructure& ws, const std::vector<RatMatrix>& v_actions);

// Parse 6 coordinates (h = (0,A,0)) or 8 Mukai coordinates.
IntVector h_from_coeffs(const IntVector& coeffs);

std::vector<CheckResult> weil_suite(long n, const IntVector& h, std::uint64_t seed);
std::vector<CheckResult> discriminant_suite(long n, std::uint64_t seed);

}  // namespace kspin
