#include "slicetorus/estimator.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "slicetorus/bennequin.hpp"
#include "slicetorus/knots.hpp"

namespace slicetorus {

namespace {

Rational torus_pp1_genus(int p) { return Rational(static_cast<std::int64_t>(p) * (p - 1), 2); }

std::string label_of(const BraidWord& word) { return "'" + render_braid(word) + "'"; }

// Keeps the smallest bound; ties go to the earliest candidate.
void offer_min(std::optional<Bound>& best, Rational value, std::string witness) {
  if (!best || value < best->value) best = Bound{value, std::move(witness)};
}

void offer_max(std::optional<Bound>& best, Rational value, std::string witness) {
  if (!best || value > best->value) best = Bound{value, std::move(witness)};
}

struct VerifiedToTorus {
  Rational genus;
  TorusKnotSpec target;
};

VerifiedToTorus verify_to_torus(const CobordismCertificate& cert, std::size_t index) {
  const auto verified = verify_certificate(cert);
  const std::string name = "certificate #" + std::to_string(index);
  if (!verified.genus) {
    throw std::invalid_argument(name + " is not a connected cobordism between knots");
  }
  auto target = recognize_torus(verified.end_word);
  if (!target) {
    throw std::invalid_argument(name + " ends at " + render_braid(verified.end_word) +
                                ", which is not a recognized torus knot presentation");
  }
  return {*verified.genus, *target};
}

// Verified genus of the composed lemma (ii) movie T(q,q+1) -> ... -> T(p,p+1).
Rational lemma_ii_chain_genus(int q, int p) {
  const auto verified = verify_certificate(build_lemma_ii_chain(q, p));
  const Rational expected = torus_pp1_genus(p) - torus_pp1_genus(q);
  if (!verified.genus || *verified.genus != expected) {
    throw std::logic_error("lemma (ii) chain " + std::to_string(q) + " -> " + std::to_string(p) +
                           " failed to verify");
  }
  return *verified.genus;
}

// Upper bound on the cobordism distance from T(p,p+1) to a torus knot.
Bound torus_distance_upper(int p, const TorusKnotSpec& target) {
  if (target.is_unknot()) {
    return {torus_pp1_genus(p), "g4(T(" + std::to_string(p) + "," + std::to_string(p + 1) + "))"};
  }
  const auto a = target.abs();
  if (target.is_positive() && a.q() == a.p() + 1 && a.p() <= p) {
    return {lemma_ii_chain_genus(a.p(), p),
            "lemma (ii) chain T(" + std::to_string(a.p()) + "," + std::to_string(a.q()) +
                ") -> T(" + std::to_string(p) + "," + std::to_string(p + 1) + ")"};
  }
  return {torus_pp1_genus(p) + torus_g4(target), "distance through the unknot to " + to_string(target)};
}

}  // namespace

InvariantFixture fixture_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("fixture must be a JSON object");
  InvariantFixture f;
  if (auto it = j.find("label"); it != j.end() && it->is_string()) f.label = it->get<std::string>();
  auto read = [&](const char* key, std::vector<Rational>& out, bool required) {
    auto it = j.find(key);
    if (it == j.end()) {
      if (required) throw std::invalid_argument(std::string("fixture lacks '") + key + "'");
      return;
    }
    if (!it->is_array()) throw std::invalid_argument(std::string("fixture '") + key + "' must be an array");
    for (const auto& v : *it) {
      if (!v.is_string()) throw std::invalid_argument("fixture values must be \"n/d\" strings");
      out.push_back(parse_rational(v.get<std::string>()));
    }
  };
  read("values", f.values, true);
  read("limit_values", f.limit_values, false);
  return f;
}

Json fixture_to_json(const InvariantFixture& fixture) {
  Json j;
  j["label"] = fixture.label;
  j["values"] = Json::array();
  for (const auto& v : fixture.values) j["values"].push_back(format_rational(v));
  j["limit_values"] = Json::array();
  for (const auto& v : fixture.limit_values) j["limit_values"].push_back(format_rational(v));
  return j;
}

std::vector<InvariantFixture> fixtures_from_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("fixture JSON: ") + e.what());
  }
  std::vector<InvariantFixture> out;
  if (doc.is_array()) {
    for (const auto& item : doc) out.push_back(fixture_from_json(item));
  } else {
    out.push_back(fixture_from_json(doc));
  }
  return out;
}

Json bracket_to_json(const CertifiedBracket& bracket) {
  Json j;
  j["lower"] = format_rational(bracket.lower);
  j["upper"] = format_rational(bracket.upper);
  j["lower_witness"] = bracket.lower_witness;
  j["upper_witness"] = bracket.upper_witness;
  return j;
}

GenusBracket g4_bracket(const BraidWord& word, std::span<const CobordismCertificate> certs) {
  const auto interval = slice_torus_interval(word);
  const auto mirror = concordance_inverse(word);

  std::optional<Bound> lower;
  offer_max(lower, 0, "slice genus is non-negative");
  offer_max(lower, interval.lower(), "slice-Bennequin lower endpoint for " + label_of(word));
  offer_max(lower, slice_torus_interval(mirror).lower(),
            "slice-Bennequin lower endpoint for the mirror " + label_of(mirror));

  std::optional<Bound> upper;
  const bool positive = closure_summary(word).is_positive_word;
  offer_min(upper, braid_seifert_genus(word),
            positive ? "positive braid genus (1+l-k)/2" : "Seifert surface of the braid closure");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (certs[i].start != word && certs[i].start != mirror) {
      throw std::invalid_argument("certificate #" + std::to_string(i) + " starts at " +
                                  render_braid(certs[i].start) + ", not at " + render_braid(word) +
                                  " or its mirror");
    }
    const auto hit = verify_to_torus(certs[i], i);
    offer_min(upper, hit.genus + torus_g4(hit.target),
              "certificate #" + std::to_string(i) + " (genus " + format_rational(hit.genus) +
                  ") to " + to_string(hit.target));
  }
  if (upper->value < lower->value) {
    throw std::logic_error("slice genus bracket is empty for " + render_braid(word));
  }
  return {lower->value, upper->value, lower->witness, upper->witness};
}

Bound tp_upper(const BraidWord& word, int p, std::span<const CobordismCertificate> certs) {
  if (p < 1) throw std::invalid_argument("tp_upper needs p >= 1");
  if (!closes_to_knot(word)) throw std::invalid_argument("closure of the word is not a knot");
  const auto sum = connected_sum(torus_braid(p, p + 1), word);
  const auto sum_mirror = concordance_inverse(sum);
  const auto mirror = concordance_inverse(word);
  const std::string torus = "T(" + std::to_string(p) + "," + std::to_string(p + 1) + ")";

  std::optional<Bound> best;
  offer_min(best, braid_seifert_genus(sum), "Seifert surface of " + torus + " # K");

  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& cert = certs[i];
    const std::string name = "certificate #" + std::to_string(i);
    if (cert.start == sum || cert.start == sum_mirror) {
      const auto hit = verify_to_torus(cert, i);
      offer_min(best, hit.genus + torus_g4(hit.target),
                name + " from " + torus + " # K to " + to_string(hit.target));
    } else if (cert.start == mirror) {
      const auto hit = verify_to_torus(cert, i);
      const auto distance = torus_distance_upper(p, hit.target);
      offer_min(best, hit.genus + distance.value,
                "cobordism distance: " + name + " from -K to " + to_string(hit.target) + " + " +
                    distance.witness);
    } else if (cert.start == word) {
      const auto hit = verify_to_torus(cert, i);
      offer_min(best, torus_pp1_genus(p) + hit.genus + torus_g4(hit.target),
                "subadditivity with " + name + " from K to " + to_string(hit.target));
    }
  }

  const auto mirror_summary = closure_summary(mirror);
  if (mirror_summary.is_positive_word && mirror_summary.components == 1 &&
      lemma_i_target(mirror) <= p) {
    const auto verified = verify_certificate(build_lemma_i(mirror));
    const auto target = recognize_torus(verified.end_word);
    if (!verified.genus || !target) throw std::logic_error("lemma (i) movie failed to verify");
    const auto distance = torus_distance_upper(p, *target);
    offer_min(best, *verified.genus + distance.value,
              "cobordism distance: lemma (i) movie from -K to " + to_string(*target) + " + " +
                  distance.witness);
  }

  return {best->value - torus_pp1_genus(p), best->witness + " minus g4(" + torus + ")"};
}

std::vector<Bound> tp_upper_sequence(const BraidWord& word, int p_max,
                                     std::span<const CobordismCertificate> certs) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  std::vector<std::future<Bound>> pending;
  pending.reserve(static_cast<std::size_t>(p_max));
  for (int p = 1; p <= p_max; ++p) {
    pending.push_back(std::async(std::launch::async, [&word, p, certs] { return tp_upper(word, p, certs); }));
  }
  std::vector<Bound> direct;
  direct.reserve(pending.size());
  for (auto& f : pending) direct.push_back(f.get());

  std::vector<Bound> out;
  out.reserve(direct.size());
  out.push_back(direct.front());
  for (int p = 2; p <= p_max; ++p) {
    const auto& previous = out.back();
    auto& here = direct[static_cast<std::size_t>(p - 1)];
    if (previous.value < here.value) {
      if (lemma_ii_chain_genus(p - 1, p) != Rational(p - 1)) {
        throw std::logic_error("lemma (ii) genus mismatch");
      }
      out.push_back({previous.value, "t_" + std::to_string(p - 1) +
                                         " bound carried by lemma (ii) movie of genus " +
                                         std::to_string(p - 1)});
    } else {
      out.push_back(std::move(here));
    }
  }
  return out;
}

CertifiedBracket ell_bracket(const BraidWord& word, int p_max,
                             std::span<const CobordismCertificate> certs_k,
                             std::span<const CobordismCertificate> certs_inv) {
  const auto mirror = concordance_inverse(word);
  auto upper_future = std::async(std::launch::async,
                                 [&] { return tp_upper_sequence(word, p_max, certs_k); });
  const auto inverse_seq = tp_upper_sequence(mirror, p_max, certs_inv);
  const auto upper_seq = upper_future.get();

  // Both sequences are non-increasing, so the last entry is the minimum over p.
  const auto& up = upper_seq.back();
  const auto& inv = inverse_seq.back();
  if (up.value < -inv.value) throw std::logic_error("ell bracket is empty; a bound is unsound");
  return {-inv.value, up.value, "-(t_p(-K) bound, p=" + std::to_string(p_max) + ": " + inv.witness + ")",
          "t_p(K) bound, p=" + std::to_string(p_max) + ": " + up.witness};
}

VEstimate v_estimate(const BraidWord& word, const VEstimateOptions& options) {
  RationalInterval outer = slice_torus_interval(word);
  std::string witness = "slice-Bennequin interval of " + label_of(word);
  for (const auto& alt : options.alternate_words) {
    auto cut = outer.intersect(slice_torus_interval(alt));
    if (!cut) throw std::invalid_argument("alternate word " + render_braid(alt) + " gives a disjoint interval");
    if (*cut != outer) witness += " cut by " + label_of(alt);
    outer = *cut;
  }
  if (options.p_max > 0) {
    const auto ell = ell_bracket(word, options.p_max, options.certs_k, options.certs_inv);
    auto cut = outer.intersect(ell.interval());
    if (!cut) throw std::invalid_argument("ell bracket is disjoint from the slice-Bennequin bound");
    if (*cut != outer) witness += " cut by ell bracket";
    outer = *cut;
  }

  std::optional<RationalInterval> inner;
  auto include = [&inner](const Rational& x) {
    inner = inner ? inner->hull(RationalInterval::point(x)) : RationalInterval::point(x);
  };
  for (const auto& f : options.fixtures) {
    for (const auto& v : f.values) include(v);
    for (const auto& v : f.limit_values) include(v);
  }
  if (options.squeezed_value) include(*options.squeezed_value);

  if (inner && !outer.contains(*inner)) {
    throw std::invalid_argument("fixture hull " + to_string(*inner) + " is not inside " + to_string(outer));
  }
  return {outer, inner, witness};
}

RationalInterval sum_with_squeezed(const RationalInterval& v, long a, long b) {
  if (a < 0) throw std::invalid_argument("connected-sum multiplicity a must be non-negative");
  return v.affine(Rational(a), Rational(b));
}

}  // namespace slicetorus
