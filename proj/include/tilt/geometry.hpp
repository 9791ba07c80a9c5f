#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "tilt/rational.hpp"

namespace tilt {

/// Numerical data of a polarized Picard-rank-1 threefold: the degree
/// D = H^3 of the ample generator H, and the lattice denominators
/// (q0,q1,q2,q3) such that integral objects have v_i in (1/q_i)*Z.
/// The default (1,1,2,6) is the integral Chern-character lattice of P^3.
struct PolarizedGeometry {
  Rational degree_D = 1;
  std::array<std::int64_t, 4> lattice_denoms = {1, 1, 2, 6};

  PolarizedGeometry() = default;
  explicit PolarizedGeometry(Rational D, std::array<std::int64_t, 4> denoms = {1, 1, 2, 6})
      : degree_D(std::move(D)), lattice_denoms(denoms) {
    if (degree_D <= 0) throw std::domain_error("PolarizedGeometry: degree D = H^3 must be > 0");
    for (auto q : lattice_denoms)
      if (q < 1) throw std::domain_error("PolarizedGeometry: lattice denominators must be >= 1");
  }
};

/// Tilt parameter (alpha^2, beta) encoding omega = alpha*H, B = beta*H.
/// alpha itself may be irrational; only alpha^2 is ever needed, so it is
/// stored exactly.
struct TiltParameter {
  Rational alpha_sq = 1;
  Rational beta = 0;

  TiltParameter() = default;
  TiltParameter(Rational a_sq, Rational b) : alpha_sq(std::move(a_sq)), beta(std::move(b)) {
    if (alpha_sq <= 0) throw std::domain_error("TiltParameter: alpha^2 must be > 0");
  }
};

/// Curve data on the polarized threefold: degree d = H.[C], the numerical
/// ch3 of its structure sheaf, and optionally the arithmetic genus.
struct CurveData {
  Rational degree_d;
  Rational ch3_OC;
  std::optional<std::int64_t> genus;
};

/// ch3(O_C) = 1 - g - (d/2)(5 - D) for a curve of degree d and genus g on a
/// smooth degree-D hypersurface in P^4 (Riemann-Roch for chi(O_C)). The
/// hypersurface context is asserted by the caller.
Rational genus_to_ch3(const Rational& d, const Rational& D, std::int64_t g);

/// Checks the CurveData invariants: d > 0, genus >= 0, and (when the
/// geometry is declared a degree-D hypersurface in P^4 and genus is known)
/// exact consistency of ch3_OC with genus_to_ch3.
void validate_curve(const CurveData& curve, const PolarizedGeometry& geom,
                    bool hypersurface_in_P4);

}  // namespace tilt
