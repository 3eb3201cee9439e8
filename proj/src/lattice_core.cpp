#include "kspin/lattice_core.hpp"

#include <stdexcept>

namespace kspin {

IntLattice::IntLattice(IntMatrix gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_ != gram_.transpose()) throw std::invalid_argument("gram matrix must be symmetric");
}

bool IntLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

LatticeVector::LatticeVector(LatticePtr l, IntVector c) : lattice(std::move(l)), coords(std::move(c)) {
  if (!lattice || coords.size() != lattice->rank()) throw std::invalid_argument("vector length must equal lattice rank");
}

LatticeIsometry::LatticeIsometry(IntMatrix m, LatticePtr lattice) : m_(std::move(m)), lattice_(std::move(lattice)) {
  const auto& g = lattice_->gram();
  if (m_.rows() != g.rows() || !m_.is_square()) throw std::invalid_argument("isometry has wrong size");
  if (m_.transpose() * g * m_ != g) throw std::invalid_argument("matrix does not preserve the form");
}

LatticeIsometry LatticeIsometry::operator*(const LatticeIsometry& o) const {
  return LatticeIsometry(m_ * o.m_, lattice_);
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

Int pairing(const IntLattice& l, const IntVector& x, const IntVector& y) {
  if (x.size() != l.rank() || y.size() != l.rank()) throw std::invalid_argument("rank mismatch in pairing");
  Int s = 0;
  const auto& g = l.gram();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (g(i, j) != 0 && y[j] != 0) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

Int pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.lattice->gram() != y.lattice->gram()) throw std::invalid_argument("vectors live in different lattices");
  return pairing(*x.lattice, x.coords, y.coords);
}

Rat pairing(const IntLattice& l, const RatVector& x, const RatVector& y) {
  if (x.size() != l.rank() || y.size() != l.rank()) throw std::invalid_argument("rank mismatch in pairing");
  Rat s = 0;
  const auto& g = l.gram();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (g(i, j) != 0) s += x[i] * Rat(g(i, j)) * y[j];
  return s;
}

LatticeIsometry reflection(const LatticePtr& l, const IntVector& u) {
  Int uu = pairing(*l, u, u);
  if (uu != 2 && uu != -2) throw std::invalid_argument("reflection requires (u,u) = ±2");
  if (!l->is_even()) throw std::invalid_argument("reflection requires an even lattice");
  const std::size_t n = l->rank();
  // Gu = gram·u; R = I − (2/(u,u)) u (Gu)ᵀ, and 2/(u,u) = ±1.
  IntVector gu = l->gram().apply(u);
  Int c = 2 / uu;
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= c * u[i] * gu[j];
  return LatticeIsometry(std::move(r), l);
}

LatticeIsometry signed_reflection(const LatticePtr& l, const IntVector& u) {
  auto r = reflection(l, u);
  Int uu = pairing(*l, u, u);
  if (uu == 2) return LatticeIsometry(-r.matrix(), l);
  return r;
}

int det_character(const LatticeIsometry& g) {
  Int d = determinant(g.matrix());
  if (d != 1 && d != -1) throw std::domain_error("isometry determinant is not ±1");
  return d == 1 ? 1 : -1;
}

int chi_character(const IntLattice& l, const LatticeIsometry& g) {
  auto disc = discriminant_group(l);
  if (disc.generator_lifts.empty()) return 1;
  const auto m = to_rat(g.matrix());
  bool plus = true, minus = true;
  for (const auto& x : disc.generator_lifts) {
    RatVector gx = m.apply(x);
    for (std::size_t i = 0; i < gx.size(); ++i) {
      if (Rat(gx[i] - x[i]).get_den() != 1) plus = false;
      if (Rat(gx[i] + x[i]).get_den() != 1) minus = false;
    }
  }
  if (plus) return 1;
  if (minus) return -1;
  throw std::domain_error("isometry acts on the discriminant group by neither +1 nor -1");
}

namespace {

// Congruence diagonalization: columns of the returned matrix are a ℚ-basis
// that is orthogonal for the form.
RatMatrix orthogonal_basis(const IntLattice& l) {
  const std::size_t n = l.rank();
  RatMatrix g = to_rat(l.gram());
  RatMatrix b = RatMatrix::identity(n);  // columns are basis vectors
  auto form = [&](const RatMatrix& basis, std::size_t i, std::size_t j) {
    RatVector x = basis.col(i), y = basis.col(j);
    Rat s = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (g(p, q) != 0) s += x[p] * g(p, q) * y[q];
    return s;
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (form(b, k, k) == 0) {
      // Find a partner making the k-th vector anisotropic.
      bool found = false;
      for (std::size_t j = k + 1; j < n && !found; ++j) {
        if (form(b, j, j) != 0) {
          for (std::size_t p = 0; p < n; ++p) std::swap(b(p, k), b(p, j));
          found = true;
        } else if (form(b, k, j) != 0) {
          for (std::size_t p = 0; p < n; ++p) b(p, k) += b(p, j);
          found = true;
        }
      }
      if (!found) continue;  // radical direction
    }
    Rat kk = form(b, k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      Rat c = form(b, k, j) / kk;
      if (c == 0) continue;
      for (std::size_t p = 0; p < n; ++p) b(p, j) -= c * b(p, k);
    }
  }
  return b;
}

}  // namespace

std::pair<std::size_t, std::size_t> signature(const IntLattice& l) {
  RatMatrix b = orthogonal_basis(l);
  RatMatrix d = b.transpose() * to_rat(l.gram()) * b;
  std::size_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (d(i, i) > 0) ++pos;
    if (d(i, i) < 0) ++neg;
  }
  return {pos, neg};
}

RatMatrix positive_basis(const IntLattice& l) {
  RatMatrix b = orthogonal_basis(l);
  RatMatrix d = b.transpose() * to_rat(l.gram()) * b;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (d(i, i) > 0) keep.push_back(i);
  if (keep.empty()) throw std::domain_error("lattice has no positive directions");
  RatMatrix p(l.rank(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < l.rank(); ++i) p(i, j) = b(i, keep[j]);
  return p;
}

int ort_character(const IntLattice& l, const LatticeIsometry& g, const RatMatrix& pb) {
  if (pb.rows() != l.rank()) throw std::invalid_argument("positive basis has wrong length");
  RatMatrix gram = to_rat(l.gram());
  RatMatrix pp = pb.transpose() * gram * pb;
  for (std::size_t k = 1; k <= pp.rows(); ++k)
    if (determinant(pp.block(0, 0, k, k)) <= 0) throw std::invalid_argument("basis is not positive definite");
  // sign det(π∘g|P) = sign det(Pᵀ G g P), because Pᵀ G P is positive definite.
  Rat d = determinant(pb.transpose() * gram * to_rat(g.matrix()) * pb);
  if (d == 0) throw std::domain_error("projection of g(P) to P is singular");
  return d > 0 ? 1 : -1;
}

int ort_character(const IntLattice& l, const LatticeIsometry& g) {
  return ort_character(l, g, positive_basis(l));
}

DiscriminantGroup discriminant_group(const IntLattice& l) {
  if (determinant(l.gram()) == 0) throw std::invalid_argument("degenerate gram matrix");
  SmithForm s = smith_normal_form(l.gram());
  DiscriminantGroup dg;
  // gram = left⁻¹·D·right⁻¹, so L* = right·D⁻¹·ℤⁿ.
  for (std::size_t k = 0; k < s.invariant_factors.size(); ++k) {
    const Int& d = s.invariant_factors[k];
    if (d == 1) continue;
    dg.invariant_factors.push_back(d);
    RatVector lift(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) lift[i] = Rat(s.right(i, k), d);
    for (auto& x : lift) x.canonicalize();
    dg.generator_lifts.push_back(std::move(lift));
  }
  return dg;
}

nlohmann::json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

nlohmann::json to_json(const Rat& x) {
  if (x.get_den() == 1) return to_json(x.get_num());
  return x.get_str();
}

nlohmann::json to_json(const IntVector& v) {
  auto j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

nlohmann::json to_json(const IntMatrix& m) {
  auto j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

nlohmann::json to_json(const RatMatrix& m) {
  auto j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    j.push_back(r);
  }
  return j;
}

nlohmann::json to_json(const IntLattice& l) {
  return {{"label", l.label()}, {"rank", l.rank()}, {"gram", to_json(l.gram())}};
}

nlohmann::json to_json(const LatticeVector& v) {
  return {{"lattice", v.lattice->label()}, {"coords", to_json(v.coords)}};
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("expected nested integer arrays");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

IntLattice lattice_from_json(const nlohmann::json& j) {
  return IntLattice(int_matrix_from_json(j.at("gram")), j.value("label", std::string{}));
}

}  // namespace kspin
