#pragma once

#include <cstdint>
#include <vector>

#include "tilt/tilt_geometry.hpp"

namespace tilt {

/// Finite enumeration box: |w0| <= rank_bound, |w2| <= ch2_bound, stepping on
/// the lattice (1/q_i)Z from PolarizedGeometry. The w1 range is not a free
/// dimension — it is pinned by 0 <= t1(w) <= t1(v).
struct SearchBounds {
  std::int64_t rank_bound;
  Rational ch2_bound;
};

struct SearchOptions {
  /// Skip the (w0 >= 1, 0 < t1(w) < t1(v)) region when the slope bound
  /// already excludes it; never changes the output set (differential-tested).
  bool use_slope_bound_pruning = false;
  /// Parallel workers over w0 slices; the merged order is deterministic and
  /// independent of this value.
  int workers = 1;
};

/// A numerical destabilizer candidate: a lattice class w (w3 = 0; nu is
/// ch3-independent) that could sit as the sub M of a destabilizing sequence
/// 0 -> M -> v -> N -> 0 as far as slopes and discriminants can tell.
/// Existence of an actual subobject is never claimed.
struct DestabilizerCandidate {
  ChernVector w;
  SlopeValue nu_hat_w = SlopeValue::infinite();
  bool strict;              // finite nu_hat(w) > nu_hat(v)
  bool infinite_slope;      // t1(w) = 0: reported separately, never "strict"
  bool quotient_infinite;   // t1(v-w) = 0: the boundary the proofs eliminate
  Rational sub_delta_bar;       // delta_bar(w), always >= 0
  Rational quotient_delta_bar;  // delta_bar(v-w); may be < 0 when quotient_infinite
};

/// Enumerates all lattice w = (w0, w1, w2, 0) in the box with
///   0 <= t1(w) <= t1(v),
///   delta_bar(w) >= 0,
///   delta_bar(v-w) >= 0 whenever the quotient has finite slope, and
///   nu_hat(w) >= nu_hat(v)  (t1(w) = 0 classes flagged as infinite-slope).
/// At the boundary t1(v-w) = 0 the quotient discriminant test is waived and
/// replaced by the slope cap nu_hat(w) - nu_hat(v) < t1(v)/2 (the
/// destabilizer_slope_bound applied at this boundary). Excludes w = 0 and w
/// numerically equal to v; output is sorted lexicographically by
/// (w0, w1, w2). Requires nu_hat(v) finite.
std::vector<DestabilizerCandidate> destabilizer_search(const ChernVector& v,
                                                       const TiltParameter& p,
                                                       const PolarizedGeometry& geom,
                                                       const SearchBounds& bounds,
                                                       const SearchOptions& opts = {});

/// Candidates of a 2c-class input split by w^2 tch1(w) in {0, c, 2c},
/// mirroring the three-case analysis of destabilizing sequences. The outer
/// cases carry an infinite slope on the M (resp. N) side. off_lattice is
/// empty on the default lattice.
struct CaseSplitReport {
  Rational c;
  std::vector<DestabilizerCandidate> case_0_2c;  // t1(w) = 0, M side infinite
  std::vector<DestabilizerCandidate> case_c_c;
  std::vector<DestabilizerCandidate> case_2c_0;  // t1(v-w) = 0, N side infinite
  std::vector<DestabilizerCandidate> off_lattice;
};

/// Requires w^2 tch1(v) = 2 * compute_c(p, geom).
CaseSplitReport case_split_2c(const ChernVector& v, const TiltParameter& p,
                              const PolarizedGeometry& geom, const SearchBounds& bounds,
                              const SearchOptions& opts = {});

/// The locus nu_hat(v) = nu_hat(w) in the (beta, A = alpha^2) plane, after
/// cross-multiplying and clearing denominators:
///   P(beta, A) = a1*A + b2*beta^2 + b1*beta + b0 = 0.
/// The cubic beta terms cancel identically and A only ever appears linearly.
/// Normalized to coprime integer coefficients with the first nonzero of
/// (a1, b2, b1, b0) positive, so equal walls compare bit-exactly.
struct WallEquation {
  Rational a1, b2, b1, b0;

  Rational eval(const Rational& beta, const Rational& A) const {
    return a1 * A + b2 * beta * beta + b1 * beta + b0;
  }

  friend bool operator==(const WallEquation&, const WallEquation&) = default;
};

/// Requires (v0,v1,v2) and (w0,w1,w2) non-proportional (proportional classes
/// have identical slope everywhere, so there is no wall).
WallEquation wall_equation(const ChernVector& v, const ChernVector& w);

struct WallSample {
  Rational beta;
  Rational alpha_sq;
};

/// Exact wall points at `count` evenly spaced beta in [beta_lo, beta_hi]:
/// for each beta the unique root A of the (linear in A) wall polynomial is
/// returned when positive; betas without a positive root are omitted. Every
/// returned point satisfies the wall equation with zero residual.
std::vector<WallSample> wall_sample(const WallEquation& eq, const Rational& beta_lo,
                                    const Rational& beta_hi, std::int64_t count);

}  // namespace tilt
