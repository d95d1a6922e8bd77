#include "slicetorus/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace slicetorus {

TorusKnotSpec::TorusKnotSpec(int p, int q) : p_(p), q_(q) {
  if (p == 0 || q == 0) throw std::invalid_argument("torus knot parameters must be nonzero");
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) +
                                ") is a link, not a knot");
  }
}

bool TorusKnotSpec::is_unknot() const { return std::abs(p_) == 1 || std::abs(q_) == 1; }

bool TorusKnotSpec::same_knot(const TorusKnotSpec& other) const {
  if (is_unknot() || other.is_unknot()) return is_unknot() && other.is_unknot();
  if (is_positive() != other.is_positive()) return false;
  auto a = abs();
  auto b = other.abs();
  return (a.p() == b.p() && a.q() == b.q()) || (a.p() == b.q() && a.q() == b.p());
}

TorusKnotSpec parse_torus_spec(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("torus spec must be 'p,q'");
  try {
    std::size_t used = 0;
    const int p = std::stoi(text.substr(0, comma), &used);
    const std::string tail = text.substr(comma + 1);
    const int q = std::stoi(tail, &used);
    if (tail.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    return {p, q};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed torus spec '" + text + "'");
  }
}

std::string to_string(const TorusKnotSpec& spec) {
  return "T(" + std::to_string(spec.p()) + "," + std::to_string(spec.q()) + ")";
}

BraidWord torus_braid(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus_braid needs p >= 1 and q >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>((p - 1) * q));
  for (int rep = 0; rep < q; ++rep) {
    for (int i = 1; i < p; ++i) letters.push_back(i);
  }
  return BraidWord(p, std::move(letters));
}

BraidWord torus_braid(const TorusKnotSpec& spec) {
  auto a = spec.abs();
  auto word = torus_braid(a.p(), a.q());
  return spec.is_positive() ? word : concordance_inverse(word);
}

long torus_g4(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus_g4 needs positive parameters");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_g4 needs coprime parameters");
  return static_cast<long>(p - 1) * (q - 1) / 2;
}

long torus_g4(const TorusKnotSpec& spec) {
  auto a = spec.abs();
  return torus_g4(a.p(), a.q());
}

Rational braid_seifert_genus(const BraidWord& word) {
  if (!closes_to_knot(word)) throw std::invalid_argument("braid closure is not a knot");
  return Rational(1 + static_cast<long>(word.length()) - word.strands(), 2);
}

Rational positive_braid_genus(const BraidWord& word) {
  if (!closure_summary(word).is_positive_word) {
    throw std::invalid_argument("word is not positive: " + render_braid(word));
  }
  return braid_seifert_genus(word);
}

BraidWord destabilize_fully(const BraidWord& word) {
  BraidWord current = word;
  while (current.strands() >= 2) {
    const int top = current.strands() - 1;
    const auto letters = current.letters();
    auto hits = std::count_if(letters.begin(), letters.end(),
                              [top](int e) { return std::abs(e) == top; });
    if (hits != 1) break;
    std::vector<int> rest;
    std::copy_if(letters.begin(), letters.end(), std::back_inserter(rest),
                 [top](int e) { return std::abs(e) != top; });
    current = BraidWord(current.strands() - 1, std::move(rest));
  }
  return current;
}

std::optional<TorusKnotSpec> recognize_torus(const BraidWord& word) {
  const BraidWord reduced = destabilize_fully(word);
  const int k = reduced.strands();
  if (reduced.empty()) {
    if (k == 1) return TorusKnotSpec(1, 1);
    return std::nullopt;
  }
  const auto letters = reduced.letters();
  const bool positive = letters.front() > 0;
  if (k < 2 || letters.size() % static_cast<std::size_t>(k - 1) != 0) return std::nullopt;
  const int n = static_cast<int>(letters.size() / static_cast<std::size_t>(k - 1));
  if (std::gcd(k, n) != 1) return std::nullopt;

  const auto candidate = positive ? torus_braid(k, n) : concordance_inverse(torus_braid(k, n));
  if (candidate != reduced) return std::nullopt;
  const int lo = std::min(k, n);
  const int hi = std::max(k, n);
  return TorusKnotSpec(lo, positive ? hi : -hi);
}

}  // namespace slicetorus
