#include "kspin/fm_actions.hpp"

#include <sstream>
#include <stdexcept>

namespace kspin {

namespace {

IntVector unit8(std::size_t i) {
  IntVector v(8);
  v[i] = 1;
  return v;
}

// 16×16 matrix of a map given on basis masks.
template <class F>
IntMatrix matrix_of(F&& f) {
  IntMatrix m(kSpinDim, kSpinDim);
  for (unsigned k = 0; k < kSpinDim; ++k) {
    const SpinorElement c = f(SpinorElement::basis(k));
    for (unsigned j = 0; j < kSpinDim; ++j) m(j, k) = c[j];
  }
  return m;
}

SpinorElement apply(const IntMatrix& m, const SpinorElement& x) { return SpinorElement(m.apply(x.coords())); }

IntMatrix full_gram_S() {
  IntMatrix g(kSpinDim, kSpinDim);
  for (unsigned a = 0; a < kSpinDim; ++a)
    for (unsigned b = 0; b < kSpinDim; ++b) g(a, b) = pairing_S(SpinorElement::basis(a), SpinorElement::basis(b));
  return g;
}

SpinorElement h2_element(const IntVector& h6) { return SpinorElement::mukai(0, h6, 0); }

IntVector h2_part(const SpinorElement& x) {
  IntVector h(6);
  for (std::size_t k = 0; k < 6; ++k) h[k] = x[h2_masks()[k]];
  return h;
}

IntVector splus_image(const AXAutomorphism& a, const IntVector& y) {
  RatVector x(kAXDim);
  for (std::size_t k = 0; k < 8; ++k) x[16 + k] = y[k];
  const RatVector out = a.apply(x);
  IntVector r(8);
  for (std::size_t k = 0; k < 8; ++k) {
    if (out[16 + k].get_den() != 1) throw std::logic_error("non-integral image in S+");
    r[k] = out[16 + k].get_num();
  }
  return r;
}

std::string c1_label(const LineBundleClass& f) {
  std::ostringstream os;
  os << "c1=(";
  for (std::size_t k = 0; k < 6; ++k) os << (k ? "," : "") << f.c1[k].get_str();
  os << ")";
  return os.str();
}

}  // namespace

Int LineBundleClass::c1_squared_half() const {
  return c1.at(0) * c1.at(5) - c1.at(1) * c1.at(4) + c1.at(2) * c1.at(3);
}

IntVector LineBundleClass::ch() const {
  IntVector v = mukai_vector(1, c1, 0);
  v[7] = c1_squared_half();
  return v;
}

LineBundleClass LineBundleClass::inverse() const {
  LineBundleClass f;
  for (std::size_t k = 0; k < 6; ++k) f.c1[k] = -c1.at(k);
  return f;
}

LineBundleClass LineBundleClass::operator*(const LineBundleClass& o) const {
  LineBundleClass f;
  for (std::size_t k = 0; k < 6; ++k) f.c1[k] = c1.at(k) + o.c1.at(k);
  return f;
}

CliffordElement ch_element(const LineBundleClass& f) {
  const SpinorElement c = SpinorElement::from_splus(f.ch());
  return CliffordElement(matrix_of([&](const SpinorElement& x) { return wedge(c, x); }));
}

AXAutomorphism phi_F(const LineBundleClass& f) { return mu_tilde(ch_element(f)); }

IntMatrix iota_pd_matrix() {
  IntMatrix m(kSpinDim, kSpinDim);
  for (unsigned x = 0; x < kSpinDim; ++x) {
    const unsigned comp = 15u & ~x;
    m(comp, x) = wedge_sign(x, comp);
  }
  return m;
}

SpinorElement iota_pd(const SpinorElement& x) { return apply(iota_pd_matrix(), x); }

SpinorElement pd_hat_inverse_of_dual(const SpinorElement& x) {
  // e_J ↦ f_J* ↦ γ with ∫γ∧f_K = δ_{JK}, i.e. γ = sign(~J,J)·f_{~J}.
  SpinorElement out;
  for (unsigned j = 0; j < kSpinDim; ++j) {
    if (x[j] == 0) continue;
    const unsigned comp = 15u & ~j;
    out += Int(wedge_sign(comp, j) * x[j]) * SpinorElement::basis(comp);
  }
  return out;
}

IntMatrix phi_P_matrix() {
  IntMatrix m = iota_pd_matrix();
  for (unsigned x = 0; x < kSpinDim; ++x) {
    const int i = degree(x);
    if ((i * (i + 1) / 2) % 2 != 0)
      for (unsigned r = 0; r < kSpinDim; ++r) m(r, x) = -m(r, x);
  }
  return m;
}

IntMatrix varphi_P_matrix() {
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, 4 + i) = -1;  // θ = e_i* ↦ −ι(e_i*) = −f_i
    m(4 + i, i) = -1;  // w = e_i ↦ −(ι*)⁻¹(e_i) = −f_i*
  }
  return m;
}

const AXAutomorphism& phi_P_tilde() {
  static const AXAutomorphism p = [] {
    RatMatrix m(kAXDim, kAXDim);
    m.set_block(offset(kV), offset(kV), to_rat(varphi_P_matrix()));
    m.set_block(offset(kSminus), offset(kSminus), spinor_to_view(to_rat(phi_P_matrix())));
    return make_ax(std::move(m));
  }();
  return p;
}

LineBundleClass dual_bundle(const LineBundleClass& f) {
  LineBundleClass g;
  g.c1 = h2_part(iota_pd(h2_element(f.c1)));
  return g;
}

AXAutomorphism eta() { return m_tilde(mukai_vector(1, IntVector(6), 1)) * phi_P_tilde(); }

std::vector<CheckResult> verify_tensorization_formulas(const LineBundleClass& f) {
  const std::string ref = "lemma-tensorization-by-line-bundle-F";
  std::vector<CheckResult> out;
  const AXAutomorphism p = phi_F(f);
  const SpinorElement c1 = h2_element(f.c1);

  // S⁺: (r,H,s) ↦ (r, H + r c₁, s + r c₁²/2 + H∧c₁)
  IntMatrix plus(8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const IntVector e = unit8(k);
    const Int r = e[0], s = e[7];
    IntVector h(e.begin() + 1, e.begin() + 7);
    IntVector img(8);
    img[0] = r;
    for (std::size_t q = 0; q < 6; ++q) img[1 + q] = h[q] + r * f.c1[q];
    img[7] = s + r * f.c1_squared_half() + integral(wedge(h2_element(h), c1));
    for (std::size_t q = 0; q < 8; ++q) plus(q, k) = img[q];
  }
  out.push_back(make_check("phi_F_on_S_plus", ref, p.block(kSplus, kSplus) == to_rat(plus), c1_label(f)));

  // S⁻: (w, w′) ↦ (w, w′ + c₁∧w)
  IntMatrix minus(8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const SpinorElement x = SpinorElement::from_sminus(unit8(k));
    SpinorElement w;
    for (unsigned b = 0; b < 4; ++b) w += Int(x[1u << b]) * SpinorElement::basis(1u << b);
    const IntVector img = (x + wedge(c1, w)).sminus();
    for (std::size_t q = 0; q < 8; ++q) minus(q, k) = img[q];
  }
  out.push_back(make_check("phi_F_on_S_minus", ref, p.block(kSminus, kSminus) == to_rat(minus), c1_label(f)));

  // V: (w, θ) ↦ (w − D_θ(c₁), θ)
  IntMatrix v(8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    IntVector img = unit8(k);
    if (k >= 4) {
      const SpinorElement d = SpinorElement(contraction_matrix(int(k - 4)).apply(c1.coords()));
      for (unsigned b = 0; b < 4; ++b) img[b] -= d[1u << b];
    }
    for (std::size_t q = 0; q < 8; ++q) v(q, k) = img[q];
  }
  out.push_back(make_check("phi_F_on_V", ref, p.block(kV, kV) == to_rat(v), c1_label(f)));

  const GroupFlags g = group_flags(ch_element(f));
  out.push_back(make_check("phi_F_in_Spin", ref, g.in_Spin, c1_label(f)));
  return out;
}

std::vector<CheckResult> verify_two_poincare_dualities() {
  const std::string ref = "lemma-two-Poincare-dualities";
  std::vector<CheckResult> out;
  bool p1 = true;
  for (unsigned a = 0; a < kSpinDim; ++a)
    for (unsigned b = 0; b < kSpinDim; ++b) {
      if (degree(a) + degree(b) != 4) continue;
      const SpinorElement x = SpinorElement::basis(a), y = SpinorElement::basis(b);
      if (integral(wedge(x, y)) != integral(wedge(iota_pd(x), iota_pd(y)))) p1 = false;
    }
  out.push_back(make_check("PD_compatible_with_pairing", ref, p1, "all complementary-degree basis pairs"));

  bool p2 = true;
  for (unsigned a = 0; a < kSpinDim; ++a) {
    const SpinorElement x = SpinorElement::basis(a);
    const Int sign = degree(a) % 2 ? -1 : 1;
    if (!(pd_hat_inverse_of_dual(x) == sign * iota_pd(x))) p2 = false;
  }
  out.push_back(make_check("two_Poincare_dualities_compared", ref, p2, "all 16 basis classes"));

  const IntMatrix phi = phi_P_matrix(), g = full_gram_S();
  out.push_back(make_check("phi_P_isometry", ref, phi.transpose() * g * phi == g, "16x16 Gram check"));

  const SpinorElement e1 = SpinorElement::basis(1);
  out.push_back(make_check("iota_PD_e1", ref, iota_pd(e1) == SpinorElement::basis(14), "iota(PD(e1)) = f2 f3 f4"));
  return out;
}

std::vector<CheckResult> verify_derivative_conjugation() {
  bool ok = true;
  for (unsigned hm : h2_masks())
    for (int i = 0; i < 4; ++i) {
      const SpinorElement beta = SpinorElement::basis(hm);
      const SpinorElement lhs = iota_pd(wedge(beta, SpinorElement::basis(1u << i)));
      const SpinorElement rhs = apply(contraction_matrix(i), iota_pd(beta));
      if (!(lhs == rhs)) ok = false;
    }
  return {make_check("derivative_conjugation", "lemma-conjugation-of-derivative-by-phi-P", ok,
                     "all beta in H^2, theta in H^1 basis")};
}

std::vector<CheckResult> verify_phi_P_equivariance() {
  const std::string ref = "lemma-phi-P-is-Spin-Spin-equivariant";
  std::vector<CheckResult> out;
  const IntMatrix phi = phi_P_matrix(), vp = varphi_P_matrix();
  bool all = true;
  for (std::size_t k = 0; k < 8; ++k) {
    const IntVector v = unit8(k);
    if (!(clifford_embed(vp.apply(v)) * phi == phi * clifford_embed(v))) all = false;
  }
  out.push_back(make_check("phi_P_equivariance", ref, all, "all 8 basis vectors of V"));
  // Ad_{φ_P}(L_{e1}) = −D_{(ι*)⁻¹ e1}, checked as φ_P L φ_P⁻¹ = −D.
  out.push_back(make_check("Ad_phi_P_of_L_w", "eq-Ad-phi-P-of-L-w",
                           phi * left_wedge_matrix(0) == -contraction_matrix(0) * phi, "w = e1"));
  out.push_back(make_check("Ad_phi_P_of_D_theta", ref,
                           phi * contraction_matrix(0) == clifford_embed(vp.apply(unit8(4))) * phi,
                           "theta = e1*"));
  return out;
}

std::vector<CheckResult> verify_reflection_lifts(const LineBundleClass& f1, const LineBundleClass& f2) {
  std::vector<CheckResult> out;
  const std::string label = c1_label(f1) + " " + c1_label(f2);
  const IntVector s = mukai_vector(1, IntVector(6), 1);
  const AXAutomorphism& P = phi_P_tilde();
  const AXAutomorphism P_inv = *ax_inverse(P);
  const AXAutomorphism ms = m_tilde(s);

  auto fm_composite = [&](const LineBundleClass& f) {
    return P_inv * phi_F(dual_bundle(f)) * P * phi_F(f.inverse());
  };

  // (a) for F = F₁
  const AXAutomorphism phiF = phi_F(f1);
  const IntVector phiF_s = splus_image(phiF, s);
  const AXAutomorphism lhs = fm_composite(f1);
  const AXAutomorphism rhs = ms * m_tilde(phiF_s);
  out.push_back(make_check("product_of_two_reflections_via_FM", "eq-product-of-two-reflections-via-FM", lhs == rhs,
                           c1_label(f1)));
  const RatMatrix rr = to_rat(reflection(lattice_S_plus(), s).matrix() *
                              reflection(lattice_S_plus(), phiF_s).matrix());
  out.push_back(make_check("FM_composite_on_S_plus", "lemma-auto-equivalence-acts-as-two-reflections",
                           lhs.block(kSplus, kSplus) == rr, c1_label(f1)));

  // (b)
  out.push_back(make_check("conjugation_of_m_s_by_phi_P", "eq-conjugation-of-m-s-by-phi-P", P_inv * ms * P == ms,
                           "s = (1,0,1)"));
  out.push_back(make_check("conjugation_of_m_s_by_phi_F", "eq-conjugation-of-m-s-by-phi-F",
                           phiF * ms * *ax_inverse(phiF) == m_tilde(phiF_s), c1_label(f1)));

  // η φ̃_F η⁻¹ = φ̃_F̂ encodes c₁(F̂) = ι(PD(c₁ F)).
  const AXAutomorphism e = eta();
  out.push_back(make_check("c1_of_dual_bundle", "lemma-auto-equivalence-acts-as-two-reflections",
                           e * phiF * *ax_inverse(e) == phi_F(dual_bundle(f1)), c1_label(f1)));

  // (c) F = F₂ ⊗ F₁⁻¹, conjugated by φ_{F₂}.
  const AXAutomorphism phiF2 = phi_F(f2);
  const AXAutomorphism composite = *ax_inverse(phiF2) * fm_composite(f2 * f1.inverse()) * phiF2;
  const IntVector s2 = splus_image(phi_F(f2.inverse()), s);
  const IntVector s1 = splus_image(phi_F(f1.inverse()), s);
  out.push_back(make_check("reflections_in_two_line_bundles", "eq-reflections-in-two-line-bundles",
                           composite == m_tilde(s2) * m_tilde(s1), label));
  return out;
}

}  // namespace kspin
