#include "tilt/tilt_geometry.hpp"

#include <ostream>

namespace tilt {

std::ostream& operator<<(std::ostream& os, const SlopeValue& s) { return os << s.str(); }

namespace {

void require_nonzero(const ChernVector& v, const char* op) {
  if (v.is_zero()) throw std::domain_error(std::string(op) + ": zero Chern vector");
}

}  // namespace

SlopeValue slope_mu(const ChernVector& v, const TiltParameter& p, const PolarizedGeometry& geom) {
  require_nonzero(v, "slope_mu");
  if (v.v0 == 0) return SlopeValue::infinite();
  const Rational t1 = v.v1 - p.beta * v.v0;
  return SlopeValue::finite(p.alpha_sq * geom.degree_D * t1 / v.v0);
}

SlopeValue slope_nu_hat(const ChernVector& v, const TiltParameter& p,
                        const PolarizedGeometry& geom) {
  (void)geom;  // nu_hat is degree-free: D cancels between numerator and denominator
  require_nonzero(v, "slope_nu_hat");
  const ChernVector t = twist_by_B(v, p.beta);
  if (t.v1 == 0) return SlopeValue::infinite();
  return SlopeValue::finite((t.v2 - p.alpha_sq / 6 * t.v0) / t.v1);
}

CentralChargeValue central_charge(const ChernVector& v, const TiltParameter& p,
                                  const PolarizedGeometry& geom) {
  const ChernVector t = twist_by_B(v, p.beta);
  const Rational& D = geom.degree_D;
  return {-D * t.v3 + p.alpha_sq * D / 2 * t.v1, D * t.v2 - p.alpha_sq * D / 6 * t.v0};
}

bool phase_one_indicator(const ChernVector& v, const TiltParameter& p,
                         const PolarizedGeometry& geom) {
  require_nonzero(v, "phase_one_indicator");
  const CentralChargeValue z = central_charge(v, p, geom);
  return z.im_coef == 0 && z.re < 0;
}

Rational discriminant_delta(const ChernVector& v, const TiltParameter& p,
                            const PolarizedGeometry& geom) {
  (void)p;  // omega*Delta = alpha * (this value); the alpha factor is common
            // to every comparison and is left off per the nu_hat convention.
  return geom.degree_D * (v.v1 * v.v1 - 2 * v.v0 * v.v2);
}

Rational discriminant_delta_bar(const ChernVector& v, const TiltParameter& p,
                                const PolarizedGeometry& geom) {
  const Rational& D = geom.degree_D;
  const Rational a4 = p.alpha_sq * p.alpha_sq;
  // definitional form on twisted components; w^3 tch0 and w tch2 each carry
  // one odd power of alpha, so their product contributes alpha^2 exactly
  const ChernVector t = twist_by_B(v, p.beta);
  const Rational w2t1 = p.alpha_sq * D * t.v1;
  const Rational w3t0_red = p.alpha_sq * D * t.v0;  // w^3 tch0 = alpha * (this)
  const Rational wt2_red = D * t.v2;                // w tch2  = alpha * (this)
  const Rational definitional = w2t1 * w2t1 - 2 * p.alpha_sq * w3t0_red * wt2_red;
  // closed form, manifestly beta-free
  const Rational closed = a4 * D * D * (v.v1 * v.v1 - 2 * v.v0 * v.v2);
  if (definitional != closed)
    throw std::logic_error("discriminant_delta_bar: definitional and closed forms disagree");
  return closed;
}

BmtResult bmt_check(const ChernVector& v, const TiltParameter& p, const PolarizedGeometry& geom,
                    BmtForm form) {
  (void)geom;  // the common factor of D is dropped from both sides
  const ChernVector t = twist_by_B(v, p.beta);
  if (form == BmtForm::strong) {
    const Rational margin = p.alpha_sq / 18 * t.v1 - t.v3;
    return {margin >= 0, margin};
  }
  const Rational margin = p.alpha_sq / 2 * t.v1 - t.v3;
  return {margin > 0, margin};
}

PositivityResult positivity_check(const ChernVector& v, const TiltParameter& p,
                                  const PolarizedGeometry& geom) {
  (void)p;  // sign(delta_bar) is alpha-free; report the alpha^4-stripped value
  const Rational value = geom.degree_D * geom.degree_D * (v.v1 * v.v1 - 2 * v.v0 * v.v2);
  return {value >= 0, value};
}

Rational compute_c(const TiltParameter& p, const PolarizedGeometry& geom) {
  // Over v0, v1 in Z and beta = p/q in lowest terms, t1 = v1 - beta*v0 =
  // (q v1 - p v0)/q takes every value in (1/q)Z, so the minimum positive
  // value of alpha^2 D t1 is alpha^2 D / q.
  return p.alpha_sq * geom.degree_D / Rational(denominator(p.beta));
}

std::strong_ordering large_m_compare(const ChernVector& vA, const ChernVector& vC,
                                     const Rational& beta, const PolarizedGeometry& geom) {
  (void)geom;
  const ChernVector tA = twist_by_B(vA, beta);
  const ChernVector tC = twist_by_B(vC, beta);
  if (tA.v1 == 0 || tC.v1 == 0)
    throw std::domain_error("large_m_compare: requires tch1 != 0 on both sides");
  auto cmp = [](const Rational& a, const Rational& b) {
    return a < b   ? std::strong_ordering::less
           : a > b ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  };
  // nu_{m w, B} ~ (m alpha/6)(-t0/t1) + (1/(m alpha))(t2/t1)
  const auto leading = cmp(-tA.v0 / tA.v1, -tC.v0 / tC.v1);
  if (leading != std::strong_ordering::equal) return leading;
  return cmp(tA.v2 / tA.v1, tC.v2 / tC.v1);
}

Rational destabilizer_slope_bound(const Rational& delta_t1, const TiltParameter& p,
                                  const PolarizedGeometry& geom) {
  (void)p;
  (void)geom;  // the bound is alpha- and D-free in nu_hat units (see header)
  if (delta_t1 >= 0)
    throw std::domain_error("destabilizer_slope_bound: requires tch1(E) < 0");
  return -delta_t1 / 2;
}

}  // namespace tilt
