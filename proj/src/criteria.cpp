#include "tilt/criteria.hpp"

#include <algorithm>

namespace tilt {

LineBundleThresholds line_bundle_thresholds(const Rational& k, const TiltParameter& p,
                                            const PolarizedGeometry& geom) {
  (void)geom;  // D cancels in all three reduced values
  if (k >= 0)
    throw std::domain_error(
        "line_bundle_thresholds: requires k < 0 (the hypothesis d = c1 w^2 < 0 fails)");
  if (p.beta != 0)
    throw std::domain_error("line_bundle_thresholds: stated for B = 0 only");
  const Rational k_sq = k * k;
  // m^2 = 3 c1^2 w / w^3 and m^2 >= 3 d^2/(w^3)^2 both reduce to 3k^2/alpha^2;
  // m^2 > c1^3/(3d) reduces to k^2/(3 alpha^2).
  return {3 * k_sq / p.alpha_sq, 3 * k_sq / p.alpha_sq, k_sq / (3 * p.alpha_sq)};
}

TwoCResult two_c_stability_check(const ChernVector& v, const TiltParameter& p,
                                 const PolarizedGeometry& geom, const Rational& mu_max_sq) {
  const Rational& D = geom.degree_D;
  const Rational c = compute_c(p, geom);
  bool pre = v.v0 >= 1;
  if (pre && !v.is_zero()) {
    const Rational t1 = v.v1 - p.beta * v.v0;
    pre = pre && (p.alpha_sq * D * t1 == 2 * c);
    pre = pre && (slope_nu_hat(v, p, geom) == SlopeValue::finite(0));
  }
  const Rational w3_sq = pow_rat(p.alpha_sq, 3) * D * D;  // (w^3)^2 = alpha^6 D^2
  const bool criterion1 = 3 * mu_max_sq < w3_sq;
  // every lattice class M with w^2 tch1(M) = c has t1(M) = 1/q, so
  // w^3 > 3 w tch1(M)^2 becomes alpha^2 > 3/q^2 after cancelling alpha D
  const Rational q{denominator(p.beta)};
  const bool criterion2 = p.alpha_sq > 3 / (q * q);
  return {criterion1, criterion2, pre};
}

TwoCResult two_c_stability_check(const ChernVector& v, const TiltParameter& p,
                                 const PolarizedGeometry& geom) {
  if (v.v0 != 1)
    throw std::domain_error(
        "two_c_stability_check: automatic mu_max is available for rank-1 classes only");
  const Rational mu = slope_mu(v, p, geom).value();
  return two_c_stability_check(v, p, geom, mu * mu);
}

IdealTwistReport ideal_sheaf_twist_report(const CurveData& curve, const PolarizedGeometry& geom,
                                          bool hypersurface_in_P4) {
  if (curve.degree_d <= 0)
    throw std::domain_error("ideal_sheaf_twist_report: curve degree must be > 0");
  validate_curve(curve, geom, hypersurface_in_P4);
  const Rational& d = curve.degree_d;
  const Rational& D = geom.degree_D;

  IdealTwistReport r;
  r.m_sq = 12 - 6 * d / D;
  r.nu_zero_feasible = r.m_sq > 0;          // <=> d < 2D
  r.stable_flag = d < Rational(3) * D / 2;  // <=> m^2 > 3
  r.bmt_flag = -curve.ch3_OC <= Rational(4) * d / 3;
  r.castelnuovo_applicable = d <= D;
  if (hypersurface_in_P4 && curve.genus) {
    r.genus_bound = d * D / 2 - Rational(7) * d / 6 + 1;
    r.castelnuovo_bound = (d - 1) * (d - 2) / 2;
  }
  return r;
}

bool miro_roig_feasible(std::int64_t c2, std::int64_t c3) {
  if (c2 < 3) return false;
  if (c3 % 2 != 0) return false;
  const Integer C2 = c2, C3 = c3;
  return -C2 * C2 + C2 <= C3 && C3 <= 0;
}

FamilyReport p3_family_report(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1)
    throw std::domain_error("p3_unstable_family: n and m must be positive integers");
  if ((n - m) % 2 != 0)
    throw std::domain_error("p3_unstable_family: n and m must have the same parity");
  const Integer disc = 3 * Integer(n) * n - Integer(m) * m;
  if (disc < 6) throw std::domain_error("p3_unstable_family: requires 3n^2 - m^2 >= 6");
  if (disc > 4000000)
    throw std::domain_error(
        "p3_unstable_family: feasibility box has more than ~10^12 entries; refusing");

  const std::int64_t c2 = static_cast<std::int64_t>(disc / 2);  // integral by parity
  const PolarizedGeometry p3(1);     // X = P^3, w = c1(O(1)), beta = 0
  const TiltParameter param(Rational(m) * m, 0);

  FamilyReport report;
  report.n = n;
  report.m = m;
  report.c2 = c2;
  report.displayed_bound = -(2 * Rational(n) * n * n + 2 * Rational(n) * m * m / 3);
  report.derived_bound = -2 * Rational(n) * n * n + 2 * Rational(n) * m * m / 3;

  // the box floor -c2^2 + c2 is even, so stepping by 2 covers every even c3
  const Integer lo = -Integer(c2) * c2 + c2;
  for (Integer c3_big = lo; c3_big <= 0; c3_big += 2) {
    const std::int64_t c3 = static_cast<std::int64_t>(c3_big);
    if (!miro_roig_feasible(c2, c3)) continue;
    ChernVector E = from_chern_classes(3, 0, c2, c3);
    ChernVector F = shift(twist_by_line_bundle(E, Rational(-n)), 1);
    // direct strong ch3 test: ch3(F) > (m^2/18) w^2 ch1(F)
    const BmtResult bmt = bmt_check(F, param, p3, BmtForm::strong);
    const bool violated = !bmt.satisfied && bmt.margin < 0;
    if (Rational(c3) < report.displayed_bound) report.displayed_member_c3.push_back(c3);
    if (!violated) continue;
    FamilyMember member;
    member.n = n;
    member.m = m;
    member.c2 = c2;
    member.c3 = c3;
    member.chern_F = F;
    member.nu_zero_verified = slope_nu_hat(F, param, p3) == SlopeValue::finite(0);
    member.bmt_violated = violated;
    report.members.push_back(std::move(member));
  }

  std::vector<std::int64_t> direct_c3;
  direct_c3.reserve(report.members.size());
  for (const auto& mem : report.members) direct_c3.push_back(mem.c3);
  report.bound_discrepancy = report.displayed_member_c3 != direct_c3;
  return report;
}

std::vector<FamilyMember> p3_unstable_family(std::int64_t n, std::int64_t m) {
  return p3_family_report(n, m).members;
}

}  // namespace tilt
