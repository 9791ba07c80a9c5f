#include "tilt/chern.hpp"

#include <ostream>

namespace tilt {

Rational genus_to_ch3(const Rational& d, const Rational& D, std::int64_t g) {
  return 1 - Rational(g) - (d / 2) * (5 - D);
}

void validate_curve(const CurveData& curve, const PolarizedGeometry& geom,
                    bool hypersurface_in_P4) {
  if (curve.degree_d <= 0) throw std::domain_error("CurveData: degree d = H.[C] must be > 0");
  if (curve.genus) {
    if (*curve.genus < 0) throw std::domain_error("CurveData: genus must be >= 0");
    if (hypersurface_in_P4 &&
        curve.ch3_OC != genus_to_ch3(curve.degree_d, geom.degree_D, *curve.genus))
      throw std::domain_error(
          "CurveData: ch3(O_C) inconsistent with genus on a degree-D hypersurface in P^4");
  }
}

std::ostream& operator<<(std::ostream& os, const ChernVector& v) {
  return os << "(" << v.v0.str() << ", " << v.v1.str() << ", " << v.v2.str() << ", "
            << v.v3.str() << ")";
}

ChernVector from_chern_classes(std::int64_t rank, const Rational& c1, const Rational& c2,
                               const Rational& c3) {
  if (rank < 0 || rank > 3)
    throw std::domain_error("from_chern_classes: conversion is defined for rank 0..3 only");
  return {Rational(rank), c1, (c1 * c1 - 2 * c2) / 2, (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6};
}

ChernClasses to_chern_classes(const ChernVector& v) {
  if (!is_integer(v.v0) || v.v0 < 0 || v.v0 > 3)
    throw std::domain_error("to_chern_classes: v0 must be an integer in [0, 3]");
  Rational c1 = v.v1;
  Rational c2 = (v.v1 * v.v1 - 2 * v.v2) / 2;
  Rational c3 = 2 * v.v3 - (c1 * c1 * c1) / 3 + c1 * c2;
  return {static_cast<std::int64_t>(numerator(v.v0)), c1, c2, c3};
}

ChernVector twist_by_line_bundle(const ChernVector& v, const Rational& k) {
  return {v.v0,
          v.v1 + v.v0 * k,
          v.v2 + v.v1 * k + v.v0 * k * k / 2,
          v.v3 + v.v2 * k + v.v1 * k * k / 2 + v.v0 * k * k * k / 6};
}

ChernVector twist_by_B(const ChernVector& v, const Rational& beta) {
  return twist_by_line_bundle(v, -beta);
}

ChernVector dual(const ChernVector& v) { return {v.v0, -v.v1, v.v2, -v.v3}; }

ChernVector shift(const ChernVector& v, std::int64_t k) {
  const bool odd = (k % 2) != 0;
  return odd ? ChernVector{-v.v0, -v.v1, -v.v2, -v.v3} : v;
}

ChernVector ideal_sheaf_of_curve(const CurveData& curve, const PolarizedGeometry& geom) {
  if (curve.degree_d <= 0)
    throw std::domain_error("ideal_sheaf_of_curve: curve degree must be > 0");
  return {1, 0, -curve.degree_d / geom.degree_D, -curve.ch3_OC / geom.degree_D};
}

ChernVector structure_sheaf_of_curve(const CurveData& curve, const PolarizedGeometry& geom) {
  if (curve.degree_d <= 0)
    throw std::domain_error("structure_sheaf_of_curve: curve degree must be > 0");
  return {0, 0, curve.degree_d / geom.degree_D, curve.ch3_OC / geom.degree_D};
}

}  // namespace tilt
