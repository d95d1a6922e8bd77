#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slicetorus/braid.hpp"
#include "slicetorus/certificate_io.hpp"
#include "slicetorus/cobordism.hpp"
#include "slicetorus/rational.hpp"

namespace slicetorus {

/// Known values of slice-torus invariants on one knot, supplied by the user.
/// `limit_values` are accumulation points of a family of such invariants.
struct InvariantFixture {
  std::string label;
  std::vector<Rational> values;
  std::vector<Rational> limit_values;
};

/// {"label": str, "values": ["n/d", ...], "limit_values": ["n/d", ...]}
InvariantFixture fixture_from_json(const Json& j);
Json fixture_to_json(const InvariantFixture& fixture);
/// One fixture object or an array of them.
std::vector<InvariantFixture> fixtures_from_text(std::string_view text);

/// A rational upper or lower bound together with the argument that proves it.
struct Bound {
  Rational value;
  std::string witness;
};

/// [lower, upper] where each endpoint names the inequality or certificate behind it.
struct CertifiedBracket {
  Rational lower;
  Rational upper;
  std::string lower_witness;
  std::string upper_witness;

  RationalInterval interval() const { return {lower, upper}; }
};

using GenusBracket = CertifiedBracket;

/// {"lower": "n/d", "upper": "n/d", "lower_witness": str, "upper_witness": str}
Json bracket_to_json(const CertifiedBracket& bracket);

/// Bracket on the slice genus of cl(word). The lower endpoint also bounds the stable
/// slice genus from below; the upper endpoint bounds both from above.
///
/// Upper bounds: the Seifert surface of the braid closure, and every certificate that
/// starts at `word` or its concordance inverse and ends at a recognized torus knot T
/// (genus + g4(T)). Throws std::invalid_argument if the closure is not a knot or a
/// certificate does not verify, starts elsewhere, or ends at an unrecognized word.
GenusBracket g4_bracket(const BraidWord& word, std::span<const CobordismCertificate> certs = {});

/// Upper bound for t_p(K) = g4^(T(p,p+1) # K) - g4^(T(p,p+1)), K = cl(word).
///
/// Uses g4 upper bounds for T(p,p+1) # K from the Seifert surface, certificates starting
/// at that sum word, and cobordism-distance certificates starting at -K (a movie from -K
/// to a torus knot T' bounds g4(T(p,p+1) # K) by its genus plus a distance from T(p,p+1)
/// to T'), and certificates starting at K via g4(T # K) <= g4(T) + g4(K). When -K is a
/// positive braid knot the build_lemma_i movie to T(p0,p0+1) is built and verified
/// automatically. Certificates starting anywhere else are ignored.
Bound tp_upper(const BraidWord& word, int p, std::span<const CobordismCertificate> certs = {});

/// tp_upper for p = 1..p_max, tightened so that each step is at most the previous one:
/// a verified genus p-1 movie from T(p-1,p) to T(p,p+1) turns a bound for t_{p-1} into
/// one for t_p. The per-p bounds are computed concurrently. Result index i holds p = i+1.
std::vector<Bound> tp_upper_sequence(const BraidWord& word, int p_max,
                                     std::span<const CobordismCertificate> certs = {});

/// Bracket containing l(K): upper = min_p t_p(K) bound, lower = -(min_p t_p(-K) bound).
CertifiedBracket ell_bracket(const BraidWord& word, int p_max,
                             std::span<const CobordismCertificate> certs_k = {},
                             std::span<const CobordismCertificate> certs_inv = {});

struct VEstimateOptions {
  std::vector<InvariantFixture> fixtures;
  /// Other braid words whose closures are asserted (not checked) to be the same knot.
  std::vector<BraidWord> alternate_words;
  /// When positive, the outer interval is also cut down by ell_bracket(word, p_max).
  int p_max = 0;
  std::vector<CobordismCertificate> certs_k;
  std::vector<CobordismCertificate> certs_inv;
  /// Common slice-torus value established by check_squeezed.
  std::optional<Rational> squeezed_value;
};

struct VEstimate {
  RationalInterval outer;
  /// Empty when no fixture or squeezed value is available ("unknown").
  std::optional<RationalInterval> inner;
  std::string outer_witness;
};

/// inner ⊆ V(K) ⊆ outer, where V(K) is the set of values of all slice-torus invariants.
/// Throws std::invalid_argument if the fixtures are inconsistent with the outer bound.
VEstimate v_estimate(const BraidWord& word, const VEstimateOptions& options = {});

/// [a*lower + b, a*upper + b]: value set of K^{#a} # T(2,3)^{#b} given V(K) = v.
/// Throws std::invalid_argument if a < 0.
RationalInterval sum_with_squeezed(const RationalInterval& v, long a, long b);

}  // namespace slicetorus
