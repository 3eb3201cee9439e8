#pragma once

#include <array>
#include <optional>
#include <vector>

#include "kspin/check.hpp"
#include "kspin/stabilizer_monodromy.hpp"

namespace kspin {

// H*(X×X̂,ℚ) as the exterior algebra on e₁..e₄ (bits 0..3) and f₁..f₄ (bits 4..7).
class ExtRingElement {
 public:
  static constexpr unsigned kSize = 256;

  ExtRingElement() { c_.fill(Rat(0)); }
  static ExtRingElement scalar(const Rat& x);
  static ExtRingElement monomial(unsigned mask, const Rat& x = 1);

  const Rat& operator[](unsigned mask) const { return c_.at(mask); }
  Rat& operator[](unsigned mask) { return c_.at(mask); }

  // Sum of components of total degree k.
  ExtRingElement degree_part(int k) const;
  // Components of bidegree (X-degree, X̂-degree).
  ExtRingElement bidegree_part(int x_deg, int xhat_deg) const;
  bool is_zero() const;

  ExtRingElement& operator+=(const ExtRingElement& o);
  ExtRingElement& operator-=(const ExtRingElement& o);
  friend ExtRingElement operator+(ExtRingElement a, const ExtRingElement& b) { return a += b; }
  friend ExtRingElement operator-(ExtRingElement a, const ExtRingElement& b) { return a -= b; }
  friend ExtRingElement operator-(const ExtRingElement& a);
  friend ExtRingElement operator*(const Rat& s, const ExtRingElement& a);
  friend ExtRingElement operator*(const ExtRingElement& a, const ExtRingElement& b);
  friend bool operator==(const ExtRingElement& a, const ExtRingElement& b) { return a.c_ == b.c_; }

 private:
  std::array<Rat, kSize> c_;
};

// Sign of x_I ∧ x_J relative to x_{I∪J} on 8 generators; 0 if I∩J ≠ ∅.
int ext_sign(unsigned i, unsigned j);
// exp of an element with zero constant term (nilpotent).
ExtRingElement ext_exp(const ExtRingElement& x);

// c₁(P) = Σ e_i∧f_i.
ExtRingElement c1_poincare();
// π₁*[pt_X] = e₁e₂e₃e₄, π₂*[pt_X̂] = f₁f₂f₃f₄.
ExtRingElement pt_X();
ExtRingElement pt_Xhat();

// A topological K-class recorded by its Chern character.
struct ChClass {
  Int rank = 0;
  ExtRingElement ch;

  ExtRingElement ch_k(int k) const { return ch.degree_part(2 * k); }
  ExtRingElement c1() const { return ch_k(1); }
  ChClass dual() const;  // ch_k ↦ (−1)^k ch_k
  friend ChClass operator+(const ChClass& a, const ChClass& b);
  friend ChClass operator-(const ChClass& a);
  friend ChClass operator*(const Int& m, const ChClass& a);
  friend ChClass operator*(const ChClass& a, const ChClass& b);  // tensor product
};

ChClass structure_sheaf_class();
ChClass poincare_class();
ChClass pt_X_class();     // π₁^![ℂ₀]
ChClass pt_Xhat_class();  // π₂^![ℂ_0̂]

// [Φ(F^∨)] = −n[𝒪] + π₂^![ℂ_0̂] − n[P] + n²π₁^![ℂ₀].
ChClass fm_class(long n);
// Degree-4 part of ch(b)·exp(−c₁(b)/rank).
ExtRingElement kappa2(const ChClass& b);
// c₂(b⊗b*) from −ch₂(b⊗b*) computed directly.
ExtRingElement c2_end(const ChClass& b);
// The same via −2·rank·κ₂(b).
ExtRingElement c2_end_via_kappa(const ChClass& b);

// ∧⁴V with V ordered e₁..e₄, e₁*..e₄*; coordinates over sorted 4-subsets in lexicographic order.
class Wedge4VElement {
 public:
  static constexpr std::size_t kDim = 70;

  Wedge4VElement() { c_.fill(Rat(0)); }
  static const std::vector<unsigned>& basis_masks();
  static std::size_t index_of(unsigned mask);  // throws if mask is not a 4-subset of 8

  const Rat& operator[](std::size_t k) const { return c_.at(k); }
  Rat& operator[](std::size_t k) { return c_.at(k); }
  RatVector vector() const { return RatVector(c_.begin(), c_.end()); }
  static Wedge4VElement from_vector(const RatVector& v);
  bool is_zero() const;
  // Scaled to a primitive integral vector with positive leading coefficient.
  Wedge4VElement primitive() const;
  friend bool operator==(const Wedge4VElement& a, const Wedge4VElement& b) { return a.c_ == b.c_; }

 private:
  std::array<Rat, kDim> c_;
};

// Degree-4 part of an ExtRingElement, transported by f_i ↦ e_i*.
Wedge4VElement to_wedge4(const ExtRingElement& x);
// α = Σ e_i∧e_i*, β = e₁∧e₂∧e₃∧e₄, γ = e₁*∧e₂*∧e₃*∧e₄* as elements of ∧*V.
ExtRingElement alpha_class();
ExtRingElement beta_class();
ExtRingElement gamma_class();
// −N²α² + 4N³β + 4Nγ.
Wedge4VElement cayley_class(long n);
bool proportional(const Wedge4VElement& a, const Wedge4VElement& b);
bool in_span(const Wedge4VElement& x, const std::vector<Wedge4VElement>& basis);

// ∧⁴ of an 8×8 matrix in the basis above.
RatMatrix wedge4(const RatMatrix& m);

struct InvariantResult {
  std::size_t rank = 0;
  std::vector<Wedge4VElement> kernel;  // primitive integral basis
};
// ∩_g ker(∧⁴ρ(g) − id) over the V actions of the generators.
// Throws std::invalid_argument if a generator does not fix h (mode w_and_h).
InvariantResult invariant_rank(const std::vector<StabilizerGenerator>& gens, StabilizerMode mode,
                               const IntVector& h = standard_h());
InvariantResult invariant_rank(const std::vector<RatMatrix>& v_actions);

// Generator set used by the report: count seeded generators, plus τ̃.
std::vector<StabilizerGenerator> cayley_generators(long n, std::size_t count, std::uint64_t seed, StabilizerMode mode,
                                                  const IntVector& h = standard_h());

std::vector<CheckResult> cayley_suite(long n, std::uint64_t seed, const std::optional<IntVector>& h = std::nullopt);

}  // namespace kspin
