#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "slicetorus/braid.hpp"
#include "slicetorus/knots.hpp"
#include "slicetorus/rational.hpp"

namespace slicetorus {

// Elementary moves of a cobordism movie. Positions index into the current word's
// letters (0-based). Only the two saddle moves change the surface; every other move
// is an isotopy of the closure.

/// 1-handle: insert `letter` before index `position` (position == length appends).
struct SaddleInsert {
  std::size_t position = 0;
  int letter = 1;
  friend bool operator==(const SaddleInsert&, const SaddleInsert&) = default;
};

/// 1-handle: delete the letter at `position`.
struct SaddleDelete {
  std::size_t position = 0;
  friend bool operator==(const SaddleDelete&, const SaddleDelete&) = default;
};

/// Insert sigma_g^{order} sigma_g^{-order} before `position`; order is +1 or -1.
struct InsertCancelingPair {
  std::size_t position = 0;
  int generator = 1;
  int order = 1;
  friend bool operator==(const InsertCancelingPair&, const InsertCancelingPair&) = default;
};

/// Delete letters `position`, `position + 1`, which must be mutually inverse.
struct DeleteCancelingPair {
  std::size_t position = 0;
  friend bool operator==(const DeleteCancelingPair&, const DeleteCancelingPair&) = default;
};

/// Rewrite a b a -> b a b at `position`, where a, b share a sign and |a|, |b| are
/// adjacent generators. direction = +1 when |a| < |b|, -1 when |a| > |b|.
struct BraidRelation {
  std::size_t position = 0;
  int direction = 1;
  friend bool operator==(const BraidRelation&, const BraidRelation&) = default;
};

/// Swap letters `position`, `position + 1` whose generators are at distance >= 2.
struct Commutation {
  std::size_t position = 0;
  friend bool operator==(const Commutation&, const Commutation&) = default;
};

/// word -> letter^{-1} word letter.
struct Conjugate {
  int letter = 1;
  friend bool operator==(const Conjugate&, const Conjugate&) = default;
};

/// Move the first letter to the end.
struct CyclicShift {
  friend bool operator==(const CyclicShift&, const CyclicShift&) = default;
};

/// Add a strand and append sigma_k^{sign}; sign is +1 or -1.
struct Stabilize {
  int sign = 1;
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};

/// Remove the top strand; its generator must occur exactly once.
struct Destabilize {
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};

using Move = std::variant<SaddleInsert, SaddleDelete, InsertCancelingPair, DeleteCancelingPair,
                          BraidRelation, Commutation, Conjugate, CyclicShift, Stabilize,
                          Destabilize>;

bool is_saddle(const Move& move);

/// Euler characteristic contribution: -1 for saddles, 0 for isotopies.
int euler_cost(const Move& move);

/// Stable snake_case name used by the JSON format.
std::string move_type_name(const Move& move);

/// Result of applying one move: the new word plus a cut of the old word and a cut of
/// the new word that are the same slice of the movie. Arcs at shared positions on
/// these two cuts lie on corresponding closure components.
struct MoveEffect {
  BraidWord after;
  std::size_t anchor_before = 0;
  std::size_t anchor_after = 0;
};

/// Throws std::invalid_argument with a reason when the move does not apply.
MoveEffect apply_move(const BraidWord& word, const Move& move);

struct CobordismCertificate {
  BraidWord start;
  std::vector<Move> moves;
  friend bool operator==(const CobordismCertificate&, const CobordismCertificate&) = default;
};

/// Raised when a movie cannot be replayed; `step()` is the 0-based move index.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::size_t step, const std::string& reason)
      : std::runtime_error("move " + std::to_string(step) + ": " + reason), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct VerifiedCobordism {
  BraidWord start_word;
  BraidWord end_word;
  std::size_t saddle_count = 0;
  /// Present only for connected cobordisms between knots.
  std::optional<Rational> genus;
  bool connected = true;
  int start_components = 1;
  int end_components = 1;
};

/// Replays the movie, checking every move and tracking closure components through
/// each slice. The trace surface is connected iff the graph with one vertex per
/// (slice, component) and edges between corresponding components is connected.
VerifiedCobordism verify_certificate(const CobordismCertificate& certificate);

/// Final word of the movie. Throws VerificationError on an inapplicable move.
BraidWord end_word(const CobordismCertificate& certificate);

/// Cobordism from the closure of a positive braid knot to T(p, p+1), p = max(k, l-1),
/// built from letter insertions only (plus Markov stabilizations). Its genus is
/// g4(T(p,p+1)) - (1 + l - k)/2. A one-strand input is stabilized into B_2 first.
CobordismCertificate build_lemma_i(const BraidWord& word);

/// Index p of the torus knot T(p, p+1) at which build_lemma_i(word) ends.
int lemma_i_target(const BraidWord& word);

enum class LemmaIIStart {
  /// torus_braid(p-1, p) in B_{p-1}, stabilized once. Chains with build_lemma_i and with
  /// build_lemma_ii(p+1) letter for letter.
  kStabilized,
  /// (sigma_1 ... sigma_{p-1})^{p-1} in B_p; the movie only appends letters.
  kFullTwistPower,
};

/// Cobordism of genus p-1 from T(p-1, p) to torus_braid(p, p+1) made of 2(p-1) saddles.
///
/// kStabilized: stabilize, close each of the first p-1 blocks with sigma_{p-1}, then
/// append one block sigma_1 ... sigma_{p-1}. kFullTwistPower: append
/// (sigma_1 ... sigma_{p-1})^2. Throws std::invalid_argument if p < 2.
CobordismCertificate build_lemma_ii(int p, LemmaIIStart start = LemmaIIStart::kStabilized);

/// build_lemma_ii(from+1) composed through build_lemma_ii(to): T(from, from+1) to
/// T(to, to+1). Empty movie at torus_braid(from, from+1) when from == to.
CobordismCertificate build_lemma_ii_chain(int from, int to);

/// Concatenation. Throws std::invalid_argument unless the first movie ends on exactly
/// the second's start word.
CobordismCertificate compose(const CobordismCertificate& first, const CobordismCertificate& second);

/// Squeezedness check for the knot between the two movies.
///
/// `plus` must start at a presentation of the positive torus knot `t_plus` and
/// `minus` must end at a presentation of the mirror of |t_minus|, with `minus`
/// starting where `plus` ends. When the combined genus equals
/// g4(t_plus) + g4(|t_minus|) the knot is squeezed and the common slice-torus value
/// g4(t_plus) - genus(plus) is returned; otherwise the result is empty.
/// Throws std::invalid_argument when endpoints or connectivity preconditions fail.
std::optional<Rational> check_squeezed(const CobordismCertificate& plus,
                                       const CobordismCertificate& minus,
                                       const TorusKnotSpec& t_plus, const TorusKnotSpec& t_minus);

}  // namespace slicetorus
