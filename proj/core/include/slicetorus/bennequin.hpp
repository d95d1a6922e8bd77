#pragma once

#include "slicetorus/braid.hpp"
#include "slicetorus/rational.hpp"

namespace slicetorus {

/// Raw endpoints of the braid slice-Bennequin bound, halved:
///   lower = (1 + w - k + 2 O_+) / 2,  upper = (-1 + w + k - 2 O_-) / 2.
/// No precondition; lower may exceed upper for split words.
struct BennequinEndpoints {
  Rational lower;
  Rational upper;
};

BennequinEndpoints bennequin_endpoints(const ClosureSummary& summary);

/// Interval containing phi(cl(word)) for every slice-torus invariant phi.
/// Throws std::invalid_argument if the closure is not a knot or the interval is empty.
RationalInterval slice_torus_interval(const BraidWord& word);

}  // namespace slicetorus
