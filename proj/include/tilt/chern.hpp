#pragma once

#include <cstdint>
#include <iosfwd>

#include "tilt/geometry.hpp"
#include "tilt/rational.hpp"

namespace tilt {

/// Reduced rational Chern character on a Picard-rank-1 threefold:
/// ch_i(E) = v_i * H^i numerically, i.e. H^{3-i}.ch_i(E) = v_i * D.
/// A plain value type; the zero vector is representable (it is rejected by
/// slope operations downstream).
struct ChernVector {
  Rational v0, v1, v2, v3;

  friend bool operator==(const ChernVector&, const ChernVector&) = default;

  bool is_zero() const { return v0 == 0 && v1 == 0 && v2 == 0 && v3 == 0; }

  ChernVector operator+(const ChernVector& o) const {
    return {v0 + o.v0, v1 + o.v1, v2 + o.v2, v3 + o.v3};
  }
  ChernVector operator-(const ChernVector& o) const {
    return {v0 - o.v0, v1 - o.v1, v2 - o.v2, v3 - o.v3};
  }
  ChernVector operator*(const Rational& s) const { return {v0 * s, v1 * s, v2 * s, v3 * s}; }
};

std::ostream& operator<<(std::ostream& os, const ChernVector& v);

struct ChernClasses {
  std::int64_t rank;
  Rational c1, c2, c3;
};

/// Newton-identity conversion from Chern classes to the reduced character,
/// valid for rank <= 3 data (higher rank is rejected; character-level
/// arithmetic itself is rank-unlimited):
///   v0 = rank, v1 = c1, v2 = (c1^2 - 2c2)/2, v3 = (c1^3 - 3c1c2 + 3c3)/6.
ChernVector from_chern_classes(std::int64_t rank, const Rational& c1, const Rational& c2,
                               const Rational& c3);

/// Inverse of from_chern_classes; requires v0 integral in [0, 3].
ChernClasses to_chern_classes(const ChernVector& v);

/// Multiplication by e^{kH}: v'_i = sum_{j<=i} v_j k^{i-j}/(i-j)!.
/// Group law: twist(twist(v,a),b) = twist(v,a+b); rank is preserved.
ChernVector twist_by_line_bundle(const ChernVector& v, const Rational& k);

/// Twisted Chern character tch = e^{-B} ch with B = beta*H; equals
/// twist_by_line_bundle(v, -beta). Returns the components (t0,t1,t2,t3).
ChernVector twist_by_B(const ChernVector& v, const Rational& beta);

/// Numerical derived dual: (v0, -v1, v2, -v3). An involution that commutes
/// with twist up to sign: dual(twist(v,k)) = twist(dual(v),-k).
ChernVector dual(const ChernVector& v);

/// Shift [k] multiplies the character by (-1)^k.
ChernVector shift(const ChernVector& v, std::int64_t k);

/// ch(I_C) = ch(O_X) - ch(O_C) = (1, 0, -d/D, -e/D) with e = ch3(O_C).
ChernVector ideal_sheaf_of_curve(const CurveData& curve, const PolarizedGeometry& geom);

/// ch(O_C) = (0, 0, d/D, e/D); complements ideal_sheaf_of_curve to ch(O_X).
ChernVector structure_sheaf_of_curve(const CurveData& curve, const PolarizedGeometry& geom);

}  // namespace tilt
