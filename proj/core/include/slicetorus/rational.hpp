#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace slicetorus {

using Rational = boost::rational<std::int64_t>;

/// Canonical text form "n/d" (always with a denominator, e.g. "1/1").
std::string format_rational(const Rational& r);

/// Accepts "n/d" or a bare integer "n". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Closed interval [lower, upper] of exact rationals. Never empty.
class RationalInterval {
 public:
  RationalInterval(Rational lower, Rational upper);

  static RationalInterval point(Rational value) { return {value, value}; }

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  Rational width() const { return upper_ - lower_; }
  bool is_point() const { return lower_ == upper_; }

  bool contains(const Rational& x) const { return lower_ <= x && x <= upper_; }
  bool contains(const RationalInterval& other) const {
    return lower_ <= other.lower_ && other.upper_ <= upper_;
  }

  /// Endpoint-wise negation: [-upper, -lower].
  RationalInterval operator-() const { return {-upper_, -lower_}; }

  /// [a*lower + b, a*upper + b] for a >= 0.
  RationalInterval affine(const Rational& scale, const Rational& shift) const;

  RationalInterval hull(const RationalInterval& other) const;

  /// Empty result when the intervals are disjoint.
  std::optional<RationalInterval> intersect(const RationalInterval& other) const;

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

 private:
  Rational lower_;
  Rational upper_;
};

std::string to_string(const RationalInterval& interval);

}  // namespace slicetorus
