#include "slicetorus/bennequin.hpp"

#include <stdexcept>

namespace slicetorus {

BennequinEndpoints bennequin_endpoints(const ClosureSummary& s) {
  return {Rational(1 + s.writhe - s.strands + 2L * s.missing_positive, 2),
          Rational(-1 + s.writhe + s.strands - 2L * s.missing_negative, 2)};
}

RationalInterval slice_torus_interval(const BraidWord& word) {
  const auto summary = closure_summary(word);
  if (summary.components != 1) {
    throw std::invalid_argument("closure of " + render_braid(word) + " has " +
                                std::to_string(summary.components) + " components");
  }
  const auto ends = bennequin_endpoints(summary);
  if (ends.upper < ends.lower) {
    throw std::invalid_argument("empty slice-Bennequin interval for " + render_braid(word));
  }
  return {ends.lower, ends.upper};
}

}  // namespace slicetorus
