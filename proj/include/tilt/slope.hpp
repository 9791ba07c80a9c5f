#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "tilt/rational.hpp"

namespace tilt {

/// A rational slope or the distinguished value +infinity, totally ordered
/// with every finite value below the infinite one.
class SlopeValue {
 public:
  static SlopeValue infinite() { return SlopeValue(true, 0); }
  static SlopeValue finite(Rational r) { return SlopeValue(false, std::move(r)); }

  bool is_infinite() const { return infinite_; }

  /// Finite value; calling this on the infinite slope is a logic error.
  const Rational& value() const {
    if (infinite_) throw std::logic_error("SlopeValue: no finite value for +infinity");
    return value_;
  }

  friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

 private:
  SlopeValue(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const SlopeValue& s);

}  // namespace tilt
