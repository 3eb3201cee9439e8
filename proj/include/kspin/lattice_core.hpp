#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "kspin/exact_linalg.hpp"

namespace kspin {

// Integer lattice given by a symmetric Gram matrix.
class IntLattice {
 public:
  IntLattice(IntMatrix gram, std::string label);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  bool is_even() const;

 private:
  IntMatrix gram_;
  std::string label_;
};

using LatticePtr = std::shared_ptr<const IntLattice>;

struct LatticeVector {
  LatticePtr lattice;
  IntVector coords;

  LatticeVector(LatticePtr l, IntVector c);
};

// Invariant Mᵀ·gram·M = gram is checked on construction.
class LatticeIsometry {
 public:
  LatticeIsometry(IntMatrix m, LatticePtr lattice);

  const IntMatrix& matrix() const { return m_; }
  const LatticePtr& lattice() const { return lattice_; }
  LatticeIsometry operator*(const LatticeIsometry& o) const;

 private:
  IntMatrix m_;
  LatticePtr lattice_;
};

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // only the factors > 1
  std::vector<RatVector> generator_lifts;
  Int order() const;
};

struct CharacterTriple {
  int det = 1;
  int chi = 1;
  int ort = 1;
};

Int pairing(const IntLattice& l, const IntVector& x, const IntVector& y);
Int pairing(const LatticeVector& x, const LatticeVector& y);
Rat pairing(const IntLattice& l, const RatVector& x, const RatVector& y);

// R_u(x) = x − 2(x,u)/(u,u)·u; requires (u,u) = ±2 on an even lattice.
LatticeIsometry reflection(const LatticePtr& l, const IntVector& u);
// r_u = ((u,u)/−2)·R_u.
LatticeIsometry signed_reflection(const LatticePtr& l, const IntVector& u);

int det_character(const LatticeIsometry& g);
// Sign by which g acts on L*/L; throws std::domain_error if it is not ±1.
int chi_character(const IntLattice& l, const LatticeIsometry& g);
// Orientation character relative to a maximal positive-definite subspace.
int ort_character(const IntLattice& l, const LatticeIsometry& g, const RatMatrix& positive_basis);
int ort_character(const IntLattice& l, const LatticeIsometry& g);
// Maximal positive-definite subspace from a congruence diagonalization over ℚ (columns).
RatMatrix positive_basis(const IntLattice& l);
std::pair<std::size_t, std::size_t> signature(const IntLattice& l);

DiscriminantGroup discriminant_group(const IntLattice& l);

// JSON: integers that fit in a signed 64-bit word are emitted as numbers, else as strings.
nlohmann::json to_json(const Int& x);
nlohmann::json to_json(const Rat& x);
nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const IntLattice& l);
nlohmann::json to_json(const LatticeVector& v);
Int int_from_json(const nlohmann::json& j);
IntMatrix int_matrix_from_json(const nlohmann::json& j);
IntLattice lattice_from_json(const nlohmann::json& j);

}  // namespace kspin
