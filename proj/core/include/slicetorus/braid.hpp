#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slicetorus {

/// A word in the standard generators of the braid group on `strands` strands.
///
/// Letter `+i` encodes sigma_i and `-i` its inverse, with 1 <= |letter| <= strands - 1.
/// Words are stored unreduced; cancelling pairs are only ever removed by an explicit
/// cobordism move. The empty word is legal and closes to a `strands`-component unlink.
class BraidWord {
 public:
  BraidWord() : BraidWord(1, {}) {}
  /// Throws std::invalid_argument if strands < 1 or a letter is out of range.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Grammar: `<k> ":" <letter>*`, letters separated by whitespace.
/// Throws std::invalid_argument on malformed input.
BraidWord parse_braid(std::string_view text);

/// Canonical form, e.g. "3: 1 2 -1" or "1:". Left inverse of parse_braid.
std::string render_braid(const BraidWord& word);

struct ClosureSummary {
  int strands = 1;
  long writhe = 0;
  std::size_t length = 0;
  int components = 1;
  int missing_positive = 0;  // generators i with sigma_i absent
  int missing_negative = 0;  // generators i with sigma_i^{-1} absent
  bool is_positive_word = true;

  friend bool operator==(const ClosureSummary&, const ClosureSummary&) = default;
};

ClosureSummary closure_summary(const BraidWord& word);

/// 0-based permutation sending each start position to its end position.
std::vector<int> closure_permutation(const BraidWord& word);

/// Number of link components of the braid closure.
int closure_components(const BraidWord& word);

inline bool closes_to_knot(const BraidWord& word) { return closure_components(word) == 1; }

long writhe(const BraidWord& word);

/// Braid inverse: letters reversed and negated. Its closure is the reverse mirror -K.
BraidWord concordance_inverse(const BraidWord& word);

/// Juxtaposition in B_{k1+k2-1}: the second word's indices shift by k1 - 1.
BraidWord connected_sum(const BraidWord& first, const BraidWord& second);

/// Component label of every arc of the closure diagram.
///
/// Cut c (0 <= c < max(length, 1)) sits immediately before letter c; cut `length` is
/// identified with cut 0 by the closure. Labels run 0..count-1 in order of first
/// appearance scanning cut 0 then later cuts.
class ComponentLabels {
 public:
  explicit ComponentLabels(const BraidWord& word);

  int count() const { return count_; }
  /// `cut` is reduced modulo the word length; `position` is 0-based.
  int at(std::size_t cut, int position) const;

 private:
  int strands_;
  std::size_t cuts_;
  int count_ = 0;
  std::vector<int> labels_;
};

}  // namespace slicetorus
