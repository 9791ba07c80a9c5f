#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tilt/tilt_geometry.hpp"

namespace tilt {

/// Threshold values of m^2 (omega replaced by m*omega) for the shifted line
/// bundle O(kH)[1], k < 0, at B = 0:
///   m_sq_nu_zero   — nu(O(k)[1]) = 0 exactly at this m^2,
///   m_sq_stability — nu-stability holds for m^2 >= this,
///   m_sq_weak_conj — the weak ch3 bound holds iff m^2 > this.
/// The first two coincide (both reduce to 3k^2/alpha^2), so every such shift
/// is stable at its own nu = 0 parameter.
struct LineBundleThresholds {
  Rational m_sq_nu_zero;
  Rational m_sq_stability;
  Rational m_sq_weak_conj;

  bool stable_at_nu_zero() const { return m_sq_nu_zero >= m_sq_stability; }
};

LineBundleThresholds line_bundle_thresholds(const Rational& k, const TiltParameter& p,
                                            const PolarizedGeometry& geom);

/// Verdicts of the two sufficient criteria for nu-stability of a torsion-free
/// sheaf class with nu_hat = 0 and w^2 tch1 = 2c. Both are conditional:
/// criterion1 on the caller-supplied maximal slope (numerics cannot see HN
/// filtrations), criterion2 on the Pic = Z.H lattice reduction that pins
/// t1(M) = 1/q for every class with w^2 tch1(M) = c.
struct TwoCResult {
  bool criterion1;  // 3 mu_max^2 < alpha^6 D^2, i.e. mu_max < w^3/sqrt(3)
  bool criterion2;  // alpha^2 > 3/q^2,          i.e. w^3 > 3 w (tch1 M)^2
  bool preconditions_ok;
};

TwoCResult two_c_stability_check(const ChernVector& v, const TiltParameter& p,
                                 const PolarizedGeometry& geom, const Rational& mu_max_sq);

/// Rank-1 convenience: mu_max = mu(v) for a torsion-free rank-1 class, so the
/// square is derived automatically. Requires v0 = 1.
TwoCResult two_c_stability_check(const ChernVector& v, const TiltParameter& p,
                                 const PolarizedGeometry& geom);

/// Structured verdicts for E = L^2 (x) I_C at B = 0, Pic = Z.H:
///   m_sq            — the unique nu = 0 parameter, 12 - 6d/D
///   nu_zero_feasible— m_sq > 0, equivalently d < 2D
///   stable_flag     — d < 3D/2 (equivalently m_sq > 3): nu-stable; in the
///                     complementary regime stability is unknown, not refuted
///   bmt_flag        — -ch3(O_C) <= 4d/3, the reduced strong ch3 bound
///   genus_bound     — g <= dD/2 - 7d/6 + 1 route (hypersurface-in-P^4 only)
///   castelnuovo_*   — classical bound g <= (d-1)(d-2)/2, which implies the
///                     genus route whenever d <= D
struct IdealTwistReport {
  Rational m_sq;
  bool nu_zero_feasible;
  bool stable_flag;
  std::optional<bool> bmt_flag;
  std::optional<Rational> genus_bound;
  std::optional<Rational> castelnuovo_bound;
  bool castelnuovo_applicable;
};

IdealTwistReport ideal_sheaf_twist_report(const CurveData& curve, const PolarizedGeometry& geom,
                                          bool hypersurface_in_P4);

/// Numerical feasibility box for rank-3 stable reflexive sheaves on P^3 with
/// c1 = 0: c2 >= 3, c3 even, -c2^2 + c2 <= c3 <= 0.
bool miro_roig_feasible(std::int64_t c2, std::int64_t c3);

/// One tilt-unstable family member F = E(-n)[1] on P^3.
struct FamilyMember {
  std::int64_t n, m;
  std::int64_t c2;
  std::int64_t c3;
  ChernVector chern_F;
  bool nu_zero_verified;  // nu_hat(chern_F) = 0 at alpha^2 = m^2, beta = 0, D = 1
  bool bmt_violated;      // ch3(F) > (m^2/18) w^2 ch1(F), evaluated directly
};

/// Family enumeration result. Membership is decided by direct evaluation of
/// the strong ch3 inequality per c3; the two closed-form c3 bounds (which
/// differ by a sign on the 2nm^2/3 term) are also evaluated, and the
/// discrepancy flag is raised when the displayed bound selects a different
/// set than direct evaluation does.
struct FamilyReport {
  std::int64_t n, m;
  std::int64_t c2;
  std::vector<FamilyMember> members;           // sorted ascending in c3
  Rational displayed_bound;                    // member iff c3 < this (as displayed)
  Rational derived_bound;                      // member iff c3 < this (proof chain)
  std::vector<std::int64_t> displayed_member_c3;
  bool bound_discrepancy;
};

/// All members for positive integers n, m of the same parity with
/// 3n^2 - m^2 >= 6; the enumeration fixes D = 1, beta = 0, alpha^2 = m^2.
/// Every member is reported tilt-unstable (the strong ch3 bound is a proven
/// necessary condition on P^3). Violated preconditions raise a domain error
/// naming the condition.
FamilyReport p3_family_report(std::int64_t n, std::int64_t m);

std::vector<FamilyMember> p3_unstable_family(std::int64_t n, std::int64_t m);

}  // namespace tilt
