#include "tilt/search.hpp"

#include <algorithm>
#include <thread>

namespace tilt {

namespace {

Rational delta_bar_coef(const Rational& a0, const Rational& a1, const Rational& a2) {
  return a1 * a1 - 2 * a0 * a2;
}

struct SliceContext {
  const ChernVector& v;
  const TiltParameter& p;
  const PolarizedGeometry& geom;
  const SearchBounds& bounds;
  const SearchOptions& opts;
  Rational t1v;
  Rational nu_v;
  Rational a4D2;  // alpha^4 D^2, the delta_bar scale
};

void scan_slice(const SliceContext& ctx, const Integer& n0,
                std::vector<DestabilizerCandidate>& out) {
  const auto& [v, p, geom, bounds, opts, t1v, nu_v, a4D2] = ctx;
  const Rational q1{ctx.geom.lattice_denoms[1]};
  const Rational q2{ctx.geom.lattice_denoms[2]};

  const Rational w0 = Rational(n0) / geom.lattice_denoms[0];
  const Rational lo1 = p.beta * w0;  // t1(w) in [0, t1v] pins w1 in [lo1, lo1 + t1v]

  // Slope-bound pruning: any w0 >= 1 class with 0 < t1(w) < t1v and
  // delta_bar(w) >= 0 has nu_hat(w) < t1v/2, so when nu_hat(v) >= t1v/2 the
  // interior of the slice cannot contain candidates.
  const bool prune_interior =
      opts.use_slope_bound_pruning && w0 >= 1 && nu_v >= t1v / 2;

  for (Integer n1 = ceil_rat(lo1 * q1); n1 <= floor_rat((lo1 + t1v) * q1); ++n1) {
    const Rational w1 = Rational(n1) / geom.lattice_denoms[1];
    const Rational t1w = w1 - p.beta * w0;
    const bool interior = t1w > 0 && t1w < t1v;
    if (prune_interior && interior) continue;

    const Rational n2_hi = bounds.ch2_bound * q2;
    for (Integer n2 = ceil_rat(-n2_hi); n2 <= floor_rat(n2_hi); ++n2) {
      const Rational w2 = Rational(n2) / geom.lattice_denoms[2];
      if (w0 == 0 && w1 == 0 && w2 == 0) continue;
      if (w0 == v.v0 && w1 == v.v1 && w2 == v.v2) continue;  // numerically equal to v

      const Rational sub_coef = delta_bar_coef(w0, w1, w2);
      if (sub_coef < 0) continue;
      const Rational quot_coef = delta_bar_coef(v.v0 - w0, v.v1 - w1, v.v2 - w2);
      const Rational t1q = t1v - t1w;

      DestabilizerCandidate cand;
      cand.w = {w0, w1, w2, 0};
      cand.sub_delta_bar = a4D2 * sub_coef;
      cand.quotient_delta_bar = a4D2 * quot_coef;
      cand.quotient_infinite = t1q == 0;

      if (t1w == 0) {
        // infinite-slope sub, reported separately; quotient here has finite
        // slope (t1q = t1v > 0), so the usual feasibility test applies
        if (quot_coef < 0) continue;
        cand.nu_hat_w = SlopeValue::infinite();
        cand.strict = false;
        cand.infinite_slope = true;
      } else {
        const Rational t2w = w2 - p.beta * w1 + p.beta * p.beta * w0 / 2;
        const Rational nu_w = (t2w - p.alpha_sq / 6 * w0) / t1w;
        if (nu_w < nu_v) continue;
        if (t1q > 0) {
          if (quot_coef < 0) continue;
        } else {
          // quotient of infinite slope: delta_bar(v-w) is waived here and
          // the slope cap takes its place (see header)
          if (nu_w - nu_v >= t1v / 2) continue;
        }
        cand.nu_hat_w = SlopeValue::finite(nu_w);
        cand.strict = nu_w > nu_v;
        cand.infinite_slope = false;
      }
      out.push_back(std::move(cand));
    }
  }
}

}  // namespace

std::vector<DestabilizerCandidate> destabilizer_search(const ChernVector& v,
                                                       const TiltParameter& p,
                                                       const PolarizedGeometry& geom,
                                                       const SearchBounds& bounds,
                                                       const SearchOptions& opts) {
  if (bounds.rank_bound < 1 || bounds.ch2_bound < 0)
    throw std::domain_error("destabilizer_search: bounds must be finite and positive");
  const SlopeValue nu_v = slope_nu_hat(v, p, geom);
  if (nu_v.is_infinite())
    throw std::domain_error("destabilizer_search: nu_hat(v) must be finite");
  const Rational t1v = v.v1 - p.beta * v.v0;
  if (t1v < 0) return {};  // the window 0 <= t1(w) <= t1(v) is empty

  SliceContext ctx{v,
                   p,
                   geom,
                   bounds,
                   opts,
                   t1v,
                   nu_v.value(),
                   p.alpha_sq * p.alpha_sq * geom.degree_D * geom.degree_D};

  const Integer n0_bound = Integer(bounds.rank_bound) * geom.lattice_denoms[0];
  std::vector<Integer> slices;
  for (Integer n0 = -n0_bound; n0 <= n0_bound; ++n0) slices.push_back(n0);

  std::vector<std::vector<DestabilizerCandidate>> per_slice(slices.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(opts.workers, slices.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < slices.size(); ++i) scan_slice(ctx, slices[i], per_slice[i]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < slices.size(); i += workers)
          scan_slice(ctx, slices[i], per_slice[i]);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<DestabilizerCandidate> out;
  for (auto& part : per_slice)
    for (auto& c : part) out.push_back(std::move(c));
  return out;  // slice order ascending in w0; inner loops ascend (w1, w2)
}

CaseSplitReport case_split_2c(const ChernVector& v, const TiltParameter& p,
                              const PolarizedGeometry& geom, const SearchBounds& bounds,
                              const SearchOptions& opts) {
  const Rational c = compute_c(p, geom);
  const Rational t1v = v.v1 - p.beta * v.v0;
  if (p.alpha_sq * geom.degree_D * t1v != 2 * c)
    throw std::domain_error("case_split_2c: requires w^2 tch1(v) = 2c");

  CaseSplitReport report;
  report.c = c;
  for (auto& cand : destabilizer_search(v, p, geom, bounds, opts)) {
    const Rational t1w = cand.w.v1 - p.beta * cand.w.v0;
    const Rational w2tch1 = p.alpha_sq * geom.degree_D * t1w;
    if (w2tch1 == 0)
      report.case_0_2c.push_back(std::move(cand));
    else if (w2tch1 == c)
      report.case_c_c.push_back(std::move(cand));
    else if (w2tch1 == 2 * c)
      report.case_2c_0.push_back(std::move(cand));
    else
      report.off_lattice.push_back(std::move(cand));
  }
  return report;
}

WallEquation wall_equation(const ChernVector& v, const ChernVector& w) {
  // 2x2 minors of the (v, w) component matrix
  const Rational x01 = v.v0 * w.v1 - v.v1 * w.v0;
  const Rational x02 = v.v0 * w.v2 - v.v2 * w.v0;
  const Rational x12 = v.v1 * w.v2 - v.v2 * w.v1;
  if (x01 == 0 && x02 == 0 && x12 == 0)
    throw std::domain_error(
        "wall_equation: classes are proportional (identical slope everywhere)");

  // cross-multiplied nu_hat equality; the beta^3 terms cancel identically
  Rational coefs[4] = {-x01 / 6, -x01 / 2, x02, -x12};  // (a1, b2, b1, b0)

  Integer lcm_den = 1;
  for (const auto& r : coefs) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(r));
  Integer gcd_num = 0;
  for (const auto& r : coefs)
    gcd_num = boost::multiprecision::gcd(gcd_num, numerator(Rational(r * lcm_den)));
  const Rational scale = Rational(lcm_den) / Rational(gcd_num);  // content normalization
  for (auto& r : coefs) r *= scale;
  for (const auto& r : coefs) {
    if (r == 0) continue;
    if (r < 0)
      for (auto& s : coefs) s = -s;
    break;
  }
  return {coefs[0], coefs[1], coefs[2], coefs[3]};
}

std::vector<WallSample> wall_sample(const WallEquation& eq, const Rational& beta_lo,
                                    const Rational& beta_hi, std::int64_t count) {
  if (count < 1) throw std::domain_error("wall_sample: count must be >= 1");
  if (beta_lo > beta_hi) throw std::domain_error("wall_sample: empty beta range");

  std::vector<WallSample> out;
  for (std::int64_t i = 0; i < count; ++i) {
    const Rational beta =
        count == 1 ? beta_lo : beta_lo + (beta_hi - beta_lo) * i / (count - 1);
    if (eq.a1 == 0) continue;  // degenerate wall, constant in A
    const Rational A = -(eq.b2 * beta * beta + eq.b1 * beta + eq.b0) / eq.a1;
    if (A > 0) out.push_back({beta, A});
  }
  return out;
}

}  // namespace tilt
