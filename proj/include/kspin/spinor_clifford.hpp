#pragma once

#include <array>
#include <optional>

#include "kspin/exact_linalg.hpp"
#include "kspin/lattice_core.hpp"

namespace kspin {

// Coordinates of S = ∧*H¹ are indexed by subset masks of {e1,e2,e3,e4}
// (bit i ↔ e_{i+1}); a mask stands for the wedge of its elements in
// increasing order. V has basis e1..e4, e1*..e4* (indices 0..7).
constexpr std::size_t kSpinDim = 16;
constexpr std::size_t kHalfDim = 8;
constexpr std::size_t kMonomials = 256;

int degree(unsigned mask);

// 8-coordinate views. S⁺: (r, H in e12,e13,e14,e23,e24,e34, t); S⁻: (e1..e4, e234,e134,e124,e123).
const std::array<unsigned, 8>& splus_masks();
const std::array<unsigned, 8>& sminus_masks();
const std::array<unsigned, 6>& h2_masks();

class SpinorElement {
 public:
  SpinorElement() : c_(kSpinDim) {}
  explicit SpinorElement(IntVector coords16);
  static SpinorElement basis(unsigned mask);
  static SpinorElement from_splus(const IntVector& v8);
  static SpinorElement from_sminus(const IntVector& v8);
  // (r, H, t) with H given by 6 coordinates.
  static SpinorElement mukai(const Int& r, const IntVector& h6, const Int& t);

  const IntVector& coords() const { return c_; }
  const Int& operator[](unsigned mask) const { return c_.at(mask); }
  IntVector splus() const;
  IntVector sminus() const;
  bool is_even() const;
  bool is_odd() const;

  SpinorElement& operator+=(const SpinorElement& o);
  SpinorElement& operator-=(const SpinorElement& o);
  friend SpinorElement operator+(SpinorElement a, const SpinorElement& b) { return a += b; }
  friend SpinorElement operator-(SpinorElement a, const SpinorElement& b) { return a -= b; }
  friend SpinorElement operator*(const Int& k, SpinorElement a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }
  friend bool operator==(const SpinorElement& a, const SpinorElement& b) { return a.c_ == b.c_; }

 private:
  IntVector c_;
};

// Sign of e_I ∧ e_J relative to e_{I∪J}; 0 when I∩J ≠ ∅.
int wedge_sign(unsigned i, unsigned j);
SpinorElement wedge(const SpinorElement& a, const SpinorElement& b);
// Coefficient of e1∧e2∧e3∧e4.
Int integral(const SpinorElement& s);
// (−1)^{i(i−1)/2} on degree i.
SpinorElement tau_forms(const SpinorElement& s);
// (s,t)_S = ∫ τ(s) ∪ t.
Int pairing_S(const SpinorElement& s, const SpinorElement& t);

// Q(v) = (v,v)_V / 2 for v = (w, θ).
Int Q_V(const IntVector& v);
IntMatrix gram_V();
IntMatrix gram_S_plus();
IntMatrix gram_S_minus();
LatticePtr lattice_V();
LatticePtr lattice_S_plus();
LatticePtr lattice_S_minus();

IntMatrix left_wedge_matrix(int i);
IntMatrix contraction_matrix(int i);
IntMatrix clifford_embed(const IntVector& v);  // L_w + D_θ
SpinorElement act_vector(const IntVector& v, const SpinorElement& s);
// Degree operator (−1)^{deg} on S.
IntMatrix parity_matrix();

// Element of C(V) realized as its 16×16 image in End(S).
class CliffordElement {
 public:
  explicit CliffordElement(IntMatrix m);
  static CliffordElement identity();
  static CliffordElement scalar(const Int& k);
  static CliffordElement vector(const IntVector& v);
  static CliffordElement monomial(unsigned a);
  // Attach the decomposition over the 256 monomials.
  CliffordElement with_decomposition() const;

  const IntMatrix& matrix() const { return m_; }
  const std::optional<std::array<Int, kMonomials>>& decomposition() const { return dec_; }

  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    return CliffordElement(a.m_ * b.m_);
  }
  friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
    return CliffordElement(a.m_ + b.m_);
  }
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
    return CliffordElement(a.m_ - b.m_);
  }
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.m_ == b.m_; }

 private:
  IntMatrix m_;
  std::optional<std::array<Int, kMonomials>> dec_;
};

// Monomial a (8-bit mask over e1..e4, e1*..e4*) as a product in increasing generator order.
IntMatrix monomial_matrix(unsigned a);
std::array<Int, kMonomials> monomial_decompose(const IntMatrix& x);
std::array<Rat, kMonomials> monomial_decompose(const RatMatrix& x);
IntMatrix monomial_reassemble(const std::array<Int, kMonomials>& c);
RatMatrix monomial_reassemble(const std::array<Rat, kMonomials>& c);
// 256×256 matrix whose columns are the flattened monomials.
IntMatrix monomial_basis_matrix();

IntMatrix tau(const IntMatrix& x);
RatMatrix tau(const RatMatrix& x);
IntMatrix alpha(const IntMatrix& x);
RatMatrix alpha(const RatMatrix& x);
IntMatrix star(const IntMatrix& x);
CliffordElement tau(const CliffordElement& x);
CliffordElement alpha(const CliffordElement& x);
CliffordElement star(const CliffordElement& x);

enum class Parity { even, odd, mixed };

struct GroupFlags {
  bool in_G = false;
  bool in_Pin = false;
  bool in_Spin = false;
  bool in_G0 = false;
  int norm = 0;         // x·τ(x) when it is ±1, else 0
  int orientation = 0;  // x·x* when it is ±1, else 0
  Parity parity = Parity::mixed;
  std::optional<RatMatrix> rho;  // 8×8 standard representation
};

class NotInCliffordGroup : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Parity parity_of(const RatMatrix& x);
// ρ(x)(v) = x·v·x⁻¹, or nullopt when x is singular or x·V·x⁻¹ ⊄ V.
std::optional<RatMatrix> try_rho(const RatMatrix& x);
// Throws NotInCliffordGroup if x·V·x⁻¹ ⊄ V.
GroupFlags group_flags(const CliffordElement& x);
GroupFlags group_flags(const RatMatrix& x);

// Scalar c if x = c·id, otherwise nullopt.
std::optional<Rat> as_scalar(const RatMatrix& x);

}  // namespace kspin
