#pragma once

#include <compare>

#include "tilt/chern.hpp"
#include "tilt/slope.hpp"

namespace tilt {

/// Central charge Z = (-tch3 + (w^2/2) tch1) + i (w tch2 - (w^3/6) tch0)
/// in reduced form. Im Z carries one factor of alpha, which may be
/// irrational; since alpha > 0, sign and order information lives entirely in
/// the stored rational coefficient:
///   re      = -D t3 + (alpha^2 D / 2) t1          (exactly Re Z)
///   im_coef = D t2 - (alpha^2 D / 6) t0           (Im Z = alpha * im_coef)
struct CentralChargeValue {
  Rational re;
  Rational im_coef;

  friend bool operator==(const CentralChargeValue&, const CentralChargeValue&) = default;
};

struct BmtResult {
  bool satisfied;
  Rational margin;  // RHS - LHS of the inequality, exact
};

enum class BmtForm { strong, weak };

struct PositivityResult {
  bool delta_bar_ok;
  Rational value;  // alpha-independent coefficient delta_bar / alpha^4 = D^2 (v1^2 - 2 v0 v2)
};

/// mu_{w,B}(E) = w^2 tch1 / tch0 = alpha^2 D t1 / v0; +infinity for torsion
/// classes (v0 = 0). The zero vector is a domain error.
SlopeValue slope_mu(const ChernVector& v, const TiltParameter& p, const PolarizedGeometry& geom);

/// Rationalized tilt slope nu_hat = alpha * nu = (t2 - (alpha^2/6) t0) / t1.
/// nu itself carries odd powers of alpha (irrational in the key cases);
/// nu_hat is order-isomorphic to nu at any fixed parameter, sharing its sign
/// and zeros. +infinity when t1 = 0; zero vector is a domain error.
SlopeValue slope_nu_hat(const ChernVector& v, const TiltParameter& p,
                        const PolarizedGeometry& geom);

CentralChargeValue central_charge(const ChernVector& v, const TiltParameter& p,
                                  const PolarizedGeometry& geom);

/// True iff Z lies on the negative real axis (im_coef = 0 and re < 0), the
/// phase-1 ray of the half-closed upper half plane. For Im Z < 0 the class is
/// outside the heart and the indicator is simply false.
bool phase_one_indicator(const ChernVector& v, const TiltParameter& p,
                         const PolarizedGeometry& geom);

/// Bogomolov discriminant paired with omega, reported as the alpha-free
/// coefficient of omega*Delta = alpha * D (v1^2 - 2 v0 v2); B-independent.
Rational discriminant_delta(const ChernVector& v, const TiltParameter& p,
                            const PolarizedGeometry& geom);

/// delta_bar_w = (w^2 tch1)^2 - 2 (w^3 tch0)(w tch2) = alpha^4 D^2 (v1^2 - 2 v0 v2).
/// Evaluated both from the definition on twisted components and from the
/// closed form; the two agree identically (beta-independence is exact in the
/// rank-1 reduced model).
Rational discriminant_delta_bar(const ChernVector& v, const TiltParameter& p,
                                const PolarizedGeometry& geom);

/// Pure inequality evaluator for the conjectural ch3 bounds, in reduced form:
///   strong:  t3 <= (alpha^2/18) t1   (margin = RHS - LHS, satisfied iff >= 0)
///   weak:    t3 <  (alpha^2/2)  t1   (margin = RHS - LHS, satisfied iff > 0)
/// Their hypothesis (tilt-stability with nu = 0) is not decidable from
/// numerics and is the caller's responsibility.
BmtResult bmt_check(const ChernVector& v, const TiltParameter& p, const PolarizedGeometry& geom,
                    BmtForm form);

/// Necessary condition for nu-semistability: delta_bar >= 0. A negative
/// value proves that no nu-semistable object has this character (it does not
/// prove instability of any particular sheaf).
PositivityResult positivity_check(const ChernVector& v, const TiltParameter& p,
                                  const PolarizedGeometry& geom);

/// c = min{ w^2 tch1(F) > 0 } over the integral lattice = alpha^2 D / q,
/// where q is the lowest-terms denominator of beta. Assumes Pic = Z.H (so
/// v0, v1 range over Z); the enumeration oracle in the tests cross-checks
/// this closed form.
Rational compute_c(const TiltParameter& p, const PolarizedGeometry& geom);

/// Eventual ordering of nu_{m*w,B}(vA) vs nu_{m*w,B}(vC) as m -> infinity,
/// decided lexicographically on the expansion nu ~ -(m alpha/6)(t0/t1) +
/// (t2/t1)/(m alpha): first the leading coefficients, then the O(1/m) terms.
/// Equality of both means the slopes agree for every m. Requires t1 != 0 on
/// both sides.
std::strong_ordering large_m_compare(const ChernVector& vA, const ChernVector& vC,
                                     const Rational& beta, const PolarizedGeometry& geom);

/// Upper bound, in nu_hat units, on the slope of any rank >= 1 sub candidate
/// w of a line-bundle shift E[1] with tch1(E) = delta_t1 < 0 that satisfies
/// 0 < t1(w) < -delta_t1 and delta_bar(w) >= 0.
///
/// Unit consistency: the source bound is nu_{m w}(M) <= -(w^2 delta)/(2 w^3)
/// in nu units. With delta = delta_t1 * H and w = alpha H this is
/// nu <= -delta_t1/(2 alpha), i.e. nu_hat = alpha nu <= -delta_t1/2 — the
/// m >= 1 slack disappears entirely in nu_hat units, and the chain
///   nu_hat(w) = t2/t1 - (alpha^2/6)(t0/t1)
///            <= t1/(2 t0) - (alpha^2/6)(t0/t1)      [delta_bar(w) >= 0]
///            <  t1(w)/2 <= -delta_t1/2              [t0 >= 1, t1(w) < -delta_t1]
/// holds for every alpha^2 > 0. The enumeration test exercises this bound
/// directly over the lattice box.
Rational destabilizer_slope_bound(const Rational& delta_t1, const TiltParameter& p,
                                  const PolarizedGeometry& geom);

}  // namespace tilt
