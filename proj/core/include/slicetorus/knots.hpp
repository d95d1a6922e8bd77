#pragma once

#include <optional>
#include <string>

#include "slicetorus/braid.hpp"
#include "slicetorus/rational.hpp"

namespace slicetorus {

/// Torus knot T(p, q). Both parameters positive is a positive torus knot; a negative
/// sign on either one denotes the mirror (the concordance inverse).
class TorusKnotSpec {
 public:
  /// Throws std::invalid_argument unless p, q are nonzero and coprime.
  TorusKnotSpec(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  bool is_positive() const { return (p_ > 0) == (q_ > 0); }
  bool is_unknot() const;
  TorusKnotSpec abs() const { return {p_ < 0 ? -p_ : p_, q_ < 0 ? -q_ : q_}; }
  TorusKnotSpec mirror() const { return {p_, -q_}; }

  /// Same knot type: T(p,q) = T(q,p), every T(1,n) is the unknot.
  bool same_knot(const TorusKnotSpec& other) const;

  friend bool operator==(const TorusKnotSpec&, const TorusKnotSpec&) = default;

 private:
  int p_;
  int q_;
};

/// Accepts "p,q" (whitespace tolerated).
TorusKnotSpec parse_torus_spec(const std::string& text);
std::string to_string(const TorusKnotSpec& spec);

/// (sigma_1 ... sigma_{p-1})^q in B_p. Non-coprime input is allowed and yields a
/// gcd(p,q)-component torus link. Throws if p < 1 or q < 1.
BraidWord torus_braid(int p, int q);

/// Braid presentation of a (possibly mirrored) torus knot.
BraidWord torus_braid(const TorusKnotSpec& spec);

/// (p-1)(q-1)/2 for positive coprime p, q. Throws for non-coprime or non-positive input.
long torus_g4(int p, int q);

/// Slice genus of |spec|.
long torus_g4(const TorusKnotSpec& spec);

/// (1 + l - k)/2 for a positive braid word whose closure is a knot, which is its slice
/// genus. Throws std::invalid_argument otherwise.
Rational positive_braid_genus(const BraidWord& word);

/// Genus (1 + l - k)/2 of the Seifert surface of any braid closure that is a knot.
/// An upper bound for the slice genus. Throws if the closure is not a knot.
Rational braid_seifert_genus(const BraidWord& word);

/// Recognizes a word as a presentation of a torus knot.
///
/// The word is first Markov-destabilized while the top generator occurs exactly once,
/// then compared letter-for-letter with torus_braid(k, n) or its concordance inverse.
/// The unknot is reported as T(1,1). Returns nothing if the word is not of this shape.
std::optional<TorusKnotSpec> recognize_torus(const BraidWord& word);

/// Repeated Markov destabilization of the top strand while its generator occurs once.
BraidWord destabilize_fully(const BraidWord& word);

}  // namespace slicetorus
