#pragma once

#include <string>
#include <vector>

#include "kspin/check.hpp"
#include "kspin/sampling.hpp"
#include "kspin/triality_algebra.hpp"

namespace kspin {

// s_n = (1,0,−n) ∈ S⁺.
IntVector s_n(long n);
// s_n^⊥ with the BBF form −(·,·)_S on the basis e12,e13,e14,e23,e24,e34,(1,0,n).
LatticePtr sn_perp_lattice(long n);
// 8×7 matrix whose columns are that basis inside S⁺.
IntMatrix sn_perp_basis(long n);

enum class GeneratorKind { sl4, pair_reflection, tilde_tau, tilde_alpha, minus_one, word };
const char* to_string(GeneratorKind k);

struct StabilizerGenerator {
  GeneratorKind kind;
  std::string label;
  AXAutomorphism realization;
  LatticeIsometry induced;  // ort_{S⁺}(g)·g restricted to s_n^⊥
  long n;
  bool in_spin;  // the realization lies in μ̃(Spin(V))

  IntMatrix v_action() const { return to_int(realization.block(kV, kV)); }
};

// 4×4 integer matrix M with det M = 1 acting by ∧*M on S and M ⊕ M^{−T} on V.
StabilizerGenerator sl4_embed(const IntMatrix& m, long n);
// m̃_{t₁}∘m̃_{t₂} with t_i = (1, A_i, n), ∫A_i² = 2n−2, A_i primitive.
StabilizerGenerator pair_reflection_gen(const IntVector& a1, const IntVector& a2, long n);
StabilizerGenerator tilde_tau_gen(long n);
StabilizerGenerator tilde_alpha_gen(long n);
StabilizerGenerator minus_one_gen(long n);
StabilizerGenerator compose(const StabilizerGenerator& a, const StabilizerGenerator& b);

// Induced isometry of s_n^⊥ for an automorphism fixing s_n up to sign on S⁺.
LatticeIsometry induced_on_sn_perp(const AXAutomorphism& g, long n);

// Primitive A ∈ H² with ∫A² = 2n−2; with orthogonal_to, also ∫A∧B = 0 for B = e12+e34.
IntVector random_line_bundle_class(Rng& rng, long n, bool orthogonal_to_h, long bound = 3);
// Skew 4×4 coefficient matrix P of a 2-form A = Σ a_ij e_i∧e_j; ∧²M fixes A iff M·P·Mᵀ = P.
IntMatrix skew_matrix(const IntVector& a6);
// The 2-form h₀ = e12 + e34.
IntVector standard_h();
// M ∈ SL(4,ℤ) with ∧²M(e12+e34) = A; requires ∫A² = 2 (so A is unimodular).
IntMatrix symplectic_frame(const IntVector& a6);
// ∧²M on the 6 coordinates e12,e13,e14,e23,e24,e34.
IntMatrix wedge2(const IntMatrix& m);
// A transvection I + c·v·vᵀ·P⁻¹ preserving the 2-form with skew matrix P.
IntMatrix random_symplectic_transvection(Rng& rng, const IntMatrix& p, long bound = 2);
IntMatrix random_elementary(Rng& rng);

enum class StabilizerMode { w_only, w_and_h };
// Seeded Spin-kind generator set for the stabilizer of s_n (and of h = (0,A,0) in mode w_and_h, default A = e12+e34).
std::vector<StabilizerGenerator> stabilizer_generators(long n, std::size_t count, Rng& rng, StabilizerMode mode,
                                                      const IntVector& h = standard_h());

// Matrix in (ℤ/n)^{4×4}; entries stored reduced to [0,n).
struct ModNMatrix {
  long n;
  IntMatrix m;
  ModNMatrix operator*(const ModNMatrix& o) const;
  bool operator==(const ModNMatrix& o) const { return n == o.n && m == o.m; }
};
ModNMatrix reduce_mod(const IntMatrix& m, long n);
// Throws std::domain_error when H¹(X,ℤ/n)* is not invariant.
ModNMatrix mod_n_rep(const StabilizerGenerator& g);
ModNMatrix mod_n_rep(const IntMatrix& v_action, long n);

struct GammaCokernel {
  std::vector<Int> invariant_factors;  // all 8, including units
  bool adjoint_identity = false;       // m_w†∘m_w = −n·id
};
GammaCokernel gamma_w_cokernel(const IntVector& w);

std::vector<CheckResult> det_chi_suite(long n, std::size_t samples, std::uint64_t seed);
std::vector<CheckResult> modn_suite(long n, std::size_t samples, std::uint64_t seed);
std::vector<CheckResult> gamma_suite(long n);

}  // namespace kspin
