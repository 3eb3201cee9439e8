#include "kspin/triality_algebra.hpp"

#include <mutex>
#include <stdexcept>

namespace kspin {

IntVector AXElement::flat() const {
  IntVector x(kAXDim);
  for (std::size_t k = 0; k < 8; ++k) {
    x[k] = v.at(k);
    x[8 + k] = s_minus.at(k);
    x[16 + k] = s_plus.at(k);
  }
  return x;
}

AXElement AXElement::from_flat(const IntVector& x) {
  if (x.size() != kAXDim) throw std::invalid_argument("A_X element needs 24 coordinates");
  AXElement e;
  for (std::size_t k = 0; k < 8; ++k) {
    e.v[k] = x[k];
    e.s_minus[k] = x[8 + k];
    e.s_plus[k] = x[16 + k];
  }
  return e;
}

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

void check8(const IntVector& v) {
  if (v.size() != 8) throw std::invalid_argument("expected 8 coordinates");
}

}  // namespace

IntMatrix clifford_V_to_Sminus(const IntVector& y_plus) {
  check8(y_plus);
  const SpinorElement y = SpinorElement::from_splus(y_plus);
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const IntVector c = act_vector(unit(8, i), y).sminus();
    for (std::size_t k = 0; k < 8; ++k) m(k, i) = c[k];
  }
  return m;
}

IntMatrix clifford_V_to_Splus(const IntVector& t_minus) {
  check8(t_minus);
  const SpinorElement t = SpinorElement::from_sminus(t_minus);
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const IntVector c = act_vector(unit(8, i), t).splus();
    for (std::size_t k = 0; k < 8; ++k) m(k, i) = c[k];
  }
  return m;
}

// y·t is the u ∈ V with (u,x)_V = (x·y, t)_{S⁻} for all x, i.e. u = G_V⁻¹·C_yᵀ·G_{S⁻}·t.
// G_V is an involution, so G_V⁻¹ = G_V.
IntMatrix product_Sminus_to_V(const IntVector& y_plus) {
  return gram_V() * clifford_V_to_Sminus(y_plus).transpose() * gram_S_minus();
}

namespace {

// L_{e_i} for the 24 basis vectors.
const std::vector<IntMatrix>& basis_operators() {
  static const std::vector<IntMatrix> ops = [] {
    std::vector<IntMatrix> out;
    out.reserve(kAXDim);
    for (std::size_t i = 0; i < kAXDim; ++i) {
      IntMatrix l(kAXDim, kAXDim);
      const IntVector e = unit(8, i % 8);
      if (i < 8) {  // V: S⁺ → S⁻ and S⁻ → S⁺
        IntMatrix to_minus(8, 8), to_plus(8, 8);
        for (std::size_t j = 0; j < 8; ++j) {
          const IntVector a = act_vector(e, SpinorElement::from_splus(unit(8, j))).sminus();
          const IntVector b = act_vector(e, SpinorElement::from_sminus(unit(8, j))).splus();
          for (std::size_t k = 0; k < 8; ++k) {
            to_minus(k, j) = a[k];
            to_plus(k, j) = b[k];
          }
        }
        l.set_block(offset(kSminus), offset(kSplus), to_minus);
        l.set_block(offset(kSplus), offset(kSminus), to_plus);
      } else if (i < 16) {  // t ∈ S⁻: V → S⁺ and S⁺ → V
        l.set_block(offset(kSplus), offset(kV), clifford_V_to_Splus(e));
        IntMatrix to_v(8, 8);
        for (std::size_t j = 0; j < 8; ++j) {
          const IntVector u = product_Sminus_to_V(unit(8, j)).apply(e);
          for (std::size_t k = 0; k < 8; ++k) to_v(k, j) = u[k];
        }
        l.set_block(offset(kV), offset(kSplus), to_v);
      } else {  // y ∈ S⁺: V → S⁻ and S⁻ → V
        l.set_block(offset(kSminus), offset(kV), clifford_V_to_Sminus(e));
        l.set_block(offset(kV), offset(kSminus), product_Sminus_to_V(e));
      }
      out.push_back(std::move(l));
    }
    return out;
  }();
  return ops;
}

}  // namespace

IntMatrix mult_operator(const IntVector& a) {
  if (a.size() != kAXDim) throw std::invalid_argument("A_X element needs 24 coordinates");
  IntMatrix l(kAXDim, kAXDim);
  const auto& ops = basis_operators();
  for (std::size_t i = 0; i < kAXDim; ++i)
    if (a[i] != 0) l += a[i] * ops[i];
  return l;
}

RatMatrix mult_operator(const RatVector& a) {
  if (a.size() != kAXDim) throw std::invalid_argument("A_X element needs 24 coordinates");
  RatMatrix l(kAXDim, kAXDim);
  const auto& ops = basis_operators();
  for (std::size_t i = 0; i < kAXDim; ++i)
    if (a[i] != 0) l += a[i] * to_rat(ops[i]);
  return l;
}

IntVector ax_product(const IntVector& a, const IntVector& b) { return mult_operator(a).apply(b); }

AXElement ax_product(const AXElement& a, const AXElement& b) {
  return AXElement::from_flat(ax_product(a.flat(), b.flat()));
}

IntMatrix ax_gram() {
  IntMatrix g(kAXDim, kAXDim);
  g.set_block(offset(kV), offset(kV), gram_V());
  g.set_block(offset(kSminus), offset(kSminus), gram_S_minus());
  g.set_block(offset(kSplus), offset(kSplus), gram_S_plus());
  return g;
}

IntMatrix m_plus(const IntVector& y_plus) {
  IntMatrix m(16, 16);
  m.set_block(8, 0, clifford_V_to_Sminus(y_plus));
  m.set_block(0, 8, product_Sminus_to_V(y_plus));
  return m;
}

AXFlags compute_ax_flags(const RatMatrix& m) {
  if (m.rows() != kAXDim || m.cols() != kAXDim) throw std::invalid_argument("A_X map must be 24×24");
  AXFlags f;
  // Work with the integral matrix D·m, D the common denominator.
  Int den = 1;
  for (const auto& x : m.data()) den = lcm(den, Int(x.get_den()));
  IntMatrix mi(kAXDim, kAXDim);
  for (std::size_t i = 0; i < kAXDim; ++i)
    for (std::size_t j = 0; j < kAXDim; ++j) mi(i, j) = Int(m(i, j).get_num()) * (den / m(i, j).get_den());
  const IntMatrix g = ax_gram();
  f.is_isometry = mi.transpose() * g * mi == (den * den) * g;

  f.is_algebra_automorphism = true;
  const auto& ops = basis_operators();
  for (std::size_t a = 0; a < kAXDim && f.is_algebra_automorphism; ++a) {
    // M(e_a · b) = M(e_a) · M(b) for all b  ⇔  M·L_{e_a} = L_{M e_a}·M.
    if (!(den * (mi * ops[a]) == mult_operator(mi.col(a)) * mi)) f.is_algebra_automorphism = false;
  }

  for (int from = 0; from < 3; ++from) {
    int target = -1;
    for (int to = 0; to < 3; ++to) {
      if (m.block(8 * to, 8 * from, 8, 8).is_zero()) continue;
      target = target == -1 ? to : -2;
    }
    f.block_permutation[from] = target < 0 ? -1 : target;
  }
  return f;
}

AXAutomorphism make_ax(RatMatrix m) {
  AXFlags f = compute_ax_flags(m);
  return {std::move(m), f};
}

namespace {

// Isometric automorphisms with a full block permutation; closed under products and inverses.
bool is_structured(const AXFlags& f) {
  if (!f.is_isometry || !f.is_algebra_automorphism) return false;
  for (int t : f.block_permutation)
    if (t < 0) return false;
  return true;
}

}  // namespace

AXAutomorphism AXAutomorphism::operator*(const AXAutomorphism& o) const {
  if (!is_structured(flags) || !is_structured(o.flags)) return make_ax(mat * o.mat);
  AXFlags f = flags;
  for (int k = 0; k < 3; ++k) f.block_permutation[k] = flags.block_permutation[o.flags.block_permutation[k]];
  return {mat * o.mat, f};
}

AXAutomorphism ax_identity() { return make_ax(RatMatrix::identity(kAXDim)); }

AXAutomorphism ax_block_diagonal(const RatMatrix& v, const RatMatrix& s_minus, const RatMatrix& s_plus) {
  RatMatrix m(kAXDim, kAXDim);
  m.set_block(offset(kV), offset(kV), v);
  m.set_block(offset(kSminus), offset(kSminus), s_minus);
  m.set_block(offset(kSplus), offset(kSplus), s_plus);
  return make_ax(std::move(m));
}

std::optional<AXAutomorphism> ax_inverse(const AXAutomorphism& a) {
  auto inv = inverse(a.mat);
  if (!inv) return std::nullopt;
  if (!is_structured(a.flags)) return make_ax(std::move(*inv));
  AXFlags f = a.flags;
  for (int k = 0; k < 3; ++k) f.block_permutation[a.flags.block_permutation[k]] = k;
  return AXAutomorphism{std::move(*inv), f};
}

namespace {

// View index k ↦ spinor mask: S⁻ first, then S⁺.
const std::array<unsigned, 16>& view_masks() {
  static const std::array<unsigned, 16> p = [] {
    std::array<unsigned, 16> out{};
    for (std::size_t k = 0; k < 8; ++k) {
      out[k] = sminus_masks()[k];
      out[8 + k] = splus_masks()[k];
    }
    return out;
  }();
  return p;
}

}  // namespace

RatMatrix spinor_to_view(const RatMatrix& g) {
  if (g.rows() != kSpinDim || g.cols() != kSpinDim) throw std::invalid_argument("spinor map must be 16×16");
  const auto& p = view_masks();
  RatMatrix out(kSpinDim, kSpinDim);
  for (std::size_t a = 0; a < kSpinDim; ++a)
    for (std::size_t b = 0; b < kSpinDim; ++b) out(a, b) = g(p[a], p[b]);
  return out;
}

RatMatrix view_to_spinor(const RatMatrix& g) {
  if (g.rows() != kSpinDim || g.cols() != kSpinDim) throw std::invalid_argument("spinor map must be 16×16");
  const auto& p = view_masks();
  RatMatrix out(kSpinDim, kSpinDim);
  for (std::size_t a = 0; a < kSpinDim; ++a)
    for (std::size_t b = 0; b < kSpinDim; ++b) out(p[a], p[b]) = g(a, b);
  return out;
}

AXAutomorphism mu_tilde(const RatMatrix& g) {
  const GroupFlags f = group_flags(g);
  if (!f.in_G0) throw std::domain_error("mu_tilde: element is not in G0(V)");
  RatMatrix m(kAXDim, kAXDim);
  m.set_block(offset(kV), offset(kV), *f.rho);
  m.set_block(offset(kSminus), offset(kSminus), spinor_to_view(g));
  return make_ax(std::move(m));
}

AXAutomorphism mu_tilde(const CliffordElement& g) { return mu_tilde(to_rat(g.matrix())); }

namespace {

void check_root(const IntVector& y) {
  check8(y);
  const Int sq = pairing(*lattice_S_plus(), y, y);
  if (sq != 2 && sq != -2) throw std::invalid_argument("S+ vector must have square ±2");
}

}  // namespace

AXAutomorphism m_tilde(const IntVector& y) {
  check_root(y);
  RatMatrix m(kAXDim, kAXDim);
  m.set_block(offset(kSminus), offset(kV), to_rat(clifford_V_to_Sminus(y)));
  m.set_block(offset(kV), offset(kSminus), to_rat(product_Sminus_to_V(y)));
  m.set_block(offset(kSplus), offset(kSplus), to_rat(-reflection(lattice_S_plus(), y).matrix()));
  return make_ax(std::move(m));
}

AXAutomorphism m_tilde_pair(const IntVector& y1, const IntVector& y2) {
  check_root(y1);
  check_root(y2);
  const IntMatrix vs = m_plus(y1) * m_plus(y2);
  const IntMatrix rr = reflection(lattice_S_plus(), y1).matrix() * reflection(lattice_S_plus(), y2).matrix();
  RatMatrix m(kAXDim, kAXDim);
  m.set_block(0, 0, to_rat(vs));
  m.set_block(offset(kSplus), offset(kSplus), to_rat(rr));
  return make_ax(std::move(m));
}

IntVector mukai_vector(long r, const IntVector& h6, long t) {
  if (h6.size() != 6) throw std::invalid_argument("H needs 6 coordinates");
  IntVector v(8);
  v[0] = r;
  for (std::size_t k = 0; k < 6; ++k) v[1 + k] = h6[k];
  v[7] = t;
  return v;
}

namespace {

struct JPair {
  AXAutomorphism j, j_inv;
};

const JPair& j_pair() {
  static const JPair p = [] {
    const IntVector u1 = mukai_vector(1, IntVector(6), 1);
    IntVector x1(8);
    x1[0] = 1;
    x1[4] = 1;
    const AXAutomorphism t = m_tilde(u1);
    const AXAutomorphism j = mu_tilde(CliffordElement::vector(x1)) * t;
    auto inv = ax_inverse(j);
    if (!inv) throw std::logic_error("J is singular");
    return JPair{j, *inv};
  }();
  return p;
}

}  // namespace

const AXAutomorphism& build_J() { return j_pair().j; }
const AXAutomorphism& build_J_inverse() { return j_pair().j_inv; }

AXAutomorphism outer_j(const CliffordElement& g) {
  const GroupFlags gf = group_flags(g);
  if (!gf.in_Spin) throw std::domain_error("outer_j: element is not in Spin(V)");
  const AXAutomorphism out = build_J_inverse() * mu_tilde(g) * build_J();
  const auto& f = out.flags;
  if (!f.is_isometry || !f.is_algebra_automorphism || f.block_permutation != std::array<int, 3>{0, 1, 2})
    throw std::logic_error("outer_j: conjugate does not preserve the summands");
  // The spinor part must itself be a Spin element inducing the V block.
  RatMatrix s(kSpinDim, kSpinDim);
  s.set_block(0, 0, out.mat.block(8, 8, 16, 16));
  const RatMatrix h = view_to_spinor(s);
  const GroupFlags hf = group_flags(h);
  if (!hf.in_Spin || !(*hf.rho == out.block(kV, kV)))
    throw std::logic_error("outer_j: conjugate is not in the image of Spin(V)");
  return out;
}

AXAutomorphism mu_minus_one() { return mu_tilde(CliffordElement::scalar(-1)); }

AXAutomorphism m_tilde_minus_one() { return build_J() * mu_minus_one() * build_J_inverse(); }

AXAutomorphism alpha_tilde() {
  const RatMatrix one = RatMatrix::identity(8);
  return ax_block_diagonal(-one, -one, one);
}

AXAutomorphism tau_tilde() {
  const IntVector s1 = mukai_vector(1, IntVector(6), -1);
  const IntVector s2 = mukai_vector(1, IntVector(6), 1);
  return mu_minus_one() * alpha_tilde() * m_tilde_pair(s1, s2);
}

}  // namespace kspin
