#include "kspin/spinor_clifford.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <utility>

namespace kspin {

int degree(unsigned mask) { return std::popcount(mask); }

const std::array<unsigned, 8>& splus_masks() {
  static const std::array<unsigned, 8> m{0u, 3u, 5u, 9u, 6u, 10u, 12u, 15u};
  return m;
}
const std::array<unsigned, 8>& sminus_masks() {
  static const std::array<unsigned, 8> m{1u, 2u, 4u, 8u, 14u, 13u, 11u, 7u};
  return m;
}
const std::array<unsigned, 6>& h2_masks() {
  static const std::array<unsigned, 6> m{3u, 5u, 9u, 6u, 10u, 12u};
  return m;
}

SpinorElement::SpinorElement(IntVector coords16) : c_(std::move(coords16)) {
  if (c_.size() != kSpinDim) throw std::invalid_argument("spinor needs 16 coordinates");
}

SpinorElement SpinorElement::basis(unsigned mask) {
  SpinorElement s;
  s.c_.at(mask) = 1;
  return s;
}

SpinorElement SpinorElement::from_splus(const IntVector& v8) {
  if (v8.size() != kHalfDim) throw std::invalid_argument("S+ view needs 8 coordinates");
  SpinorElement s;
  for (std::size_t k = 0; k < 8; ++k) s.c_[splus_masks()[k]] = v8[k];
  return s;
}

SpinorElement SpinorElement::from_sminus(const IntVector& v8) {
  if (v8.size() != kHalfDim) throw std::invalid_argument("S- view needs 8 coordinates");
  SpinorElement s;
  for (std::size_t k = 0; k < 8; ++k) s.c_[sminus_masks()[k]] = v8[k];
  return s;
}

SpinorElement SpinorElement::mukai(const Int& r, const IntVector& h6, const Int& t) {
  if (h6.size() != 6) throw std::invalid_argument("H² needs 6 coordinates");
  IntVector v{r};
  v.insert(v.end(), h6.begin(), h6.end());
  v.push_back(t);
  return from_splus(v);
}

IntVector SpinorElement::splus() const {
  IntVector v(8);
  for (std::size_t k = 0; k < 8; ++k) v[k] = c_[splus_masks()[k]];
  return v;
}

IntVector SpinorElement::sminus() const {
  IntVector v(8);
  for (std::size_t k = 0; k < 8; ++k) v[k] = c_[sminus_masks()[k]];
  return v;
}

bool SpinorElement::is_even() const {
  for (unsigned m = 0; m < kSpinDim; ++m)
    if (degree(m) % 2 == 1 && c_[m] != 0) return false;
  return true;
}

bool SpinorElement::is_odd() const {
  for (unsigned m = 0; m < kSpinDim; ++m)
    if (degree(m) % 2 == 0 && c_[m] != 0) return false;
  return true;
}

SpinorElement& SpinorElement::operator+=(const SpinorElement& o) {
  for (std::size_t i = 0; i < kSpinDim; ++i) c_[i] += o.c_[i];
  return *this;
}

SpinorElement& SpinorElement::operator-=(const SpinorElement& o) {
  for (std::size_t i = 0; i < kSpinDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

int wedge_sign(unsigned i, unsigned j) {
  if (i & j) return 0;
  int inversions = 0;
  for (unsigned b = 0; b < 4; ++b)
    if (i & (1u << b)) inversions += std::popcount(j & ((1u << b) - 1));
  return inversions % 2 ? -1 : 1;
}

SpinorElement wedge(const SpinorElement& a, const SpinorElement& b) {
  IntVector out(kSpinDim);
  for (unsigned i = 0; i < kSpinDim; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < kSpinDim; ++j) {
      if (b[j] == 0) continue;
      int s = wedge_sign(i, j);
      if (s != 0) out[i | j] += s * a[i] * b[j];
    }
  }
  return SpinorElement(std::move(out));
}

Int integral(const SpinorElement& s) { return s[15]; }

namespace {
int tau_sign(int deg) { return (deg * (deg - 1) / 2) % 2 ? -1 : 1; }
}  // namespace

SpinorElement tau_forms(const SpinorElement& s) {
  IntVector out = s.coords();
  for (unsigned m = 0; m < kSpinDim; ++m) out[m] *= tau_sign(degree(m));
  return SpinorElement(std::move(out));
}

Int pairing_S(const SpinorElement& s, const SpinorElement& t) {
  Int sum = 0;
  for (unsigned i = 0; i < kSpinDim; ++i) {
    unsigned j = 15u & ~i;
    if (s[i] == 0 || t[j] == 0) continue;
    sum += tau_sign(degree(i)) * wedge_sign(i, j) * s[i] * t[j];
  }
  return sum;
}

Int Q_V(const IntVector& v) {
  if (v.size() != 8) throw std::invalid_argument("V vectors have 8 coordinates");
  Int q = 0;
  for (int i = 0; i < 4; ++i) q += v[i] * v[i + 4];
  return q;
}

IntMatrix gram_V() {
  IntMatrix g(8, 8);
  for (int i = 0; i < 4; ++i) g(i, i + 4) = g(i + 4, i) = 1;
  return g;
}

namespace {
IntMatrix half_gram(const std::array<unsigned, 8>& masks) {
  IntMatrix g(8, 8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      g(a, b) = pairing_S(SpinorElement::basis(masks[a]), SpinorElement::basis(masks[b]));
  return g;
}
}  // namespace

IntMatrix gram_S_plus() { return half_gram(splus_masks()); }
IntMatrix gram_S_minus() { return half_gram(sminus_masks()); }

LatticePtr lattice_V() {
  static const LatticePtr l = std::make_shared<const IntLattice>(gram_V(), "V");
  return l;
}
LatticePtr lattice_S_plus() {
  static const LatticePtr l = std::make_shared<const IntLattice>(gram_S_plus(), "S+");
  return l;
}
LatticePtr lattice_S_minus() {
  static const LatticePtr l = std::make_shared<const IntLattice>(gram_S_minus(), "S-");
  return l;
}

namespace {

// Signed partial permutation of the 16 spinor basis vectors.
struct SignedMap {
  std::array<int, kSpinDim> target;  // -1 when the image is zero
  std::array<int, kSpinDim> sign;
};

SignedMap generator_map(int g) {
  SignedMap m;
  const unsigned bit = 1u << (g % 4);
  for (unsigned k = 0; k < kSpinDim; ++k) {
    const int s = std::popcount(k & (bit - 1)) % 2 ? -1 : 1;
    if (g < 4) {
      m.target[k] = (k & bit) ? -1 : int(k | bit);
    } else {
      m.target[k] = (k & bit) ? int(k & ~bit) : -1;
    }
    m.sign[k] = s;
  }
  return m;
}

struct MonomialTables {
  std::array<SignedMap, kMonomials> mono;
  // τ(M_A) expanded over monomials.
  std::array<std::vector<std::pair<unsigned, int>>, kMonomials> tau_terms;
};

IntMatrix to_matrix(const SignedMap& m) {
  IntMatrix x(kSpinDim, kSpinDim);
  for (unsigned k = 0; k < kSpinDim; ++k)
    if (m.target[k] >= 0) x(m.target[k], k) = m.sign[k];
  return x;
}

template <class T>
std::array<T, kMonomials> decompose_with(const std::array<SignedMap, kMonomials>& mono, Matrix<T> r) {
  if (r.rows() != kSpinDim || r.cols() != kSpinDim) throw std::invalid_argument("Clifford elements are 16x16");
  std::array<T, kMonomials> c{};
  std::array<unsigned, kSpinDim> order;
  for (unsigned k = 0; k < kSpinDim; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) { return degree(a) < degree(b); });
  // M_{P,Q} = L_P·D_Q sends e_Q to ±e_P and kills every e_K with K ⊉ Q, so
  // columns can be cleared in order of increasing |Q|.
  for (unsigned q : order) {
    for (unsigned p = 0; p < kSpinDim; ++p) {
      if (r(p, q) == 0) continue;
      const unsigned a = p | (q << 4);
      const SignedMap& m = mono[a];
      T coef = r(p, q) * m.sign[q];
      for (unsigned k = 0; k < kSpinDim; ++k)
        if (m.target[k] >= 0) r(m.target[k], k) -= coef * m.sign[k];
      c[a] = coef;
    }
  }
  if (!r.is_zero()) throw std::logic_error("monomial decomposition left a residual");
  return c;
}

const MonomialTables& tables() {
  static const MonomialTables t = [] {
    MonomialTables t;
    std::array<SignedMap, 8> gens;
    for (int g = 0; g < 8; ++g) gens[g] = generator_map(g);
    for (unsigned a = 0; a < kMonomials; ++a) {
      SignedMap& m = t.mono[a];
      for (unsigned k = 0; k < kSpinDim; ++k) {
        int cur = int(k), s = 1;
        // Rightmost factor acts first.
        for (int g = 7; g >= 0 && cur >= 0; --g) {
          if (!(a & (1u << g))) continue;
          s *= gens[g].sign[cur];
          cur = gens[g].target[cur];
        }
        m.target[k] = cur;
        m.sign[k] = cur >= 0 ? s : 0;
      }
    }
    for (unsigned a = 0; a < kMonomials; ++a) {
      IntMatrix rev = IntMatrix::identity(kSpinDim);
      for (int g = 0; g < 8; ++g)
        if (a & (1u << g)) rev = to_matrix(gens[g]) * rev;  // reversed order: g_k ⋯ g_1
      auto c = decompose_with(t.mono, rev);
      for (unsigned b = 0; b < kMonomials; ++b)
        if (c[b] != 0) t.tau_terms[a].emplace_back(b, int(c[b].get_si()));
    }
    return t;
  }();
  return t;
}

template <class T>
Matrix<T> reassemble_with(const std::array<T, kMonomials>& c) {
  const auto& mono = tables().mono;
  Matrix<T> x(kSpinDim, kSpinDim);
  for (unsigned a = 0; a < kMonomials; ++a) {
    if (c[a] == 0) continue;
    for (unsigned k = 0; k < kSpinDim; ++k)
      if (mono[a].target[k] >= 0) x(mono[a].target[k], k) += c[a] * mono[a].sign[k];
  }
  return x;
}

template <class T>
Matrix<T> tau_impl(const Matrix<T>& x) {
  auto c = decompose_with(tables().mono, x);
  std::array<T, kMonomials> out{};
  for (unsigned a = 0; a < kMonomials; ++a) {
    if (c[a] == 0) continue;
    for (auto [b, s] : tables().tau_terms[a]) out[b] += c[a] * s;
  }
  return reassemble_with(out);
}

template <class T>
Matrix<T> alpha_impl(const Matrix<T>& x) {
  Matrix<T> y = x;
  for (unsigned i = 0; i < kSpinDim; ++i)
    for (unsigned j = 0; j < kSpinDim; ++j)
      if ((degree(i) + degree(j)) % 2) y(i, j) = -y(i, j);
  return y;
}

}  // namespace

IntMatrix left_wedge_matrix(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("generator index");
  return to_matrix(generator_map(i));
}

IntMatrix contraction_matrix(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("generator index");
  return to_matrix(generator_map(i + 4));
}

IntMatrix clifford_embed(const IntVector& v) {
  if (v.size() != 8) throw std::invalid_argument("V vectors have 8 coordinates");
  IntMatrix m(kSpinDim, kSpinDim);
  for (int g = 0; g < 8; ++g) {
    if (v[g] == 0) continue;
    auto gm = generator_map(g);
    for (unsigned k = 0; k < kSpinDim; ++k)
      if (gm.target[k] >= 0) m(gm.target[k], k) += v[g] * gm.sign[k];
  }
  return m;
}

SpinorElement act_vector(const IntVector& v, const SpinorElement& s) {
  return SpinorElement(clifford_embed(v).apply(s.coords()));
}

IntMatrix parity_matrix() {
  IntMatrix p(kSpinDim, kSpinDim);
  for (unsigned k = 0; k < kSpinDim; ++k) p(k, k) = degree(k) % 2 ? -1 : 1;
  return p;
}

CliffordElement::CliffordElement(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != kSpinDim || m_.cols() != kSpinDim) throw std::invalid_argument("Clifford elements are 16x16");
}
CliffordElement CliffordElement::identity() { return CliffordElement(IntMatrix::identity(kSpinDim)); }
CliffordElement CliffordElement::scalar(const Int& k) { return CliffordElement(k * IntMatrix::identity(kSpinDim)); }
CliffordElement CliffordElement::vector(const IntVector& v) { return CliffordElement(clifford_embed(v)); }
CliffordElement CliffordElement::monomial(unsigned a) { return CliffordElement(monomial_matrix(a)); }

CliffordElement CliffordElement::with_decomposition() const {
  CliffordElement c = *this;
  c.dec_ = monomial_decompose(m_);
  return c;
}

IntMatrix monomial_matrix(unsigned a) {
  if (a >= kMonomials) throw std::out_of_range("monomial index");
  return to_matrix(tables().mono[a]);
}

std::array<Int, kMonomials> monomial_decompose(const IntMatrix& x) { return decompose_with(tables().mono, x); }
std::array<Rat, kMonomials> monomial_decompose(const RatMatrix& x) { return decompose_with(tables().mono, x); }
IntMatrix monomial_reassemble(const std::array<Int, kMonomials>& c) { return reassemble_with(c); }
RatMatrix monomial_reassemble(const std::array<Rat, kMonomials>& c) { return reassemble_with(c); }

IntMatrix monomial_basis_matrix() {
  IntMatrix b(kMonomials, kMonomials);
  for (unsigned a = 0; a < kMonomials; ++a) {
    const auto& m = tables().mono[a];
    for (unsigned k = 0; k < kSpinDim; ++k)
      if (m.target[k] >= 0) b(unsigned(m.target[k]) * kSpinDim + k, a) = m.sign[k];
  }
  return b;
}

IntMatrix tau(const IntMatrix& x) { return tau_impl(x); }
RatMatrix tau(const RatMatrix& x) { return tau_impl(x); }
IntMatrix alpha(const IntMatrix& x) { return alpha_impl(x); }
RatMatrix alpha(const RatMatrix& x) { return alpha_impl(x); }
IntMatrix star(const IntMatrix& x) { return tau(alpha(x)); }
CliffordElement tau(const CliffordElement& x) { return CliffordElement(tau(x.matrix())); }
CliffordElement alpha(const CliffordElement& x) { return CliffordElement(alpha(x.matrix())); }
CliffordElement star(const CliffordElement& x) { return CliffordElement(star(x.matrix())); }

std::optional<Rat> as_scalar(const RatMatrix& x) {
  Rat c = x(0, 0);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != (i == j ? c : Rat(0))) return std::nullopt;
  return c;
}

Parity parity_of(const RatMatrix& x) {
  bool has_even = false, has_odd = false;
  for (unsigned i = 0; i < kSpinDim; ++i)
    for (unsigned j = 0; j < kSpinDim; ++j) {
      if (x(i, j) == 0) continue;
      ((degree(i) + degree(j)) % 2 ? has_odd : has_even) = true;
    }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

std::optional<RatMatrix> try_rho(const RatMatrix& x) {
  auto xinv = inverse(x);
  if (!xinv) return std::nullopt;
  RatMatrix r(8, 8);
  for (unsigned i = 0; i < 8; ++i) {
    IntVector e(8);
    e[i] = 1;
    auto c = monomial_decompose(RatMatrix(x * to_rat(clifford_embed(e)) * *xinv));
    for (unsigned a = 0; a < kMonomials; ++a) {
      if (c[a] == 0) continue;
      if (degree(a) != 1) return std::nullopt;
      r(std::countr_zero(a), i) = c[a];
    }
  }
  return r;
}

GroupFlags group_flags(const RatMatrix& x) {
  GroupFlags f;
  f.rho = try_rho(x);
  if (!f.rho) throw NotInCliffordGroup("x·V·x⁻¹ is not contained in V");
  f.in_G = true;
  f.parity = parity_of(x);
  const RatMatrix t = tau(x);
  if (auto n = as_scalar(x * t); n && (*n == 1 || *n == -1)) f.norm = *n == 1 ? 1 : -1;
  if (auto o = as_scalar(x * alpha(t)); o && (*o == 1 || *o == -1)) f.orientation = *o == 1 ? 1 : -1;
  f.in_G0 = f.norm == 1;
  f.in_Pin = f.orientation == 1;
  f.in_Spin = f.in_Pin && f.parity == Parity::even;
  return f;
}

GroupFlags group_flags(const CliffordElement& x) { return group_flags(to_rat(x.matrix())); }

}  // namespace kspin
