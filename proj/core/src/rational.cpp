#include "slicetorus/rational.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace slicetorus {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

RationalInterval::RationalInterval(Rational lower, Rational upper) : lower_(lower), upper_(upper) {
  if (upper_ < lower_) {
    throw std::invalid_argument("empty interval [" + format_rational(lower_) + ", " +
                                format_rational(upper_) + "]");
  }
}

RationalInterval RationalInterval::affine(const Rational& scale, const Rational& shift) const {
  if (scale < 0) throw std::invalid_argument("affine map needs a non-negative scale");
  return {scale * lower_ + shift, scale * upper_ + shift};
}

RationalInterval RationalInterval::hull(const RationalInterval& other) const {
  return {std::min(lower_, other.lower_), std::max(upper_, other.upper_)};
}

std::optional<RationalInterval> RationalInterval::intersect(const RationalInterval& other) const {
  auto lo = std::max(lower_, other.lower_);
  auto hi = std::min(upper_, other.upper_);
  if (hi < lo) return std::nullopt;
  return RationalInterval(lo, hi);
}

std::string to_string(const RationalInterval& interval) {
  return "[" + format_rational(interval.lower()) + ", " + format_rational(interval.upper()) + "]";
}

}  // namespace slicetorus
