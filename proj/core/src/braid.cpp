#include "slicetorus/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace slicetorus {

namespace {

// Position reached by a strand at 0-based `pos` after passing through `letter`.
int step(int pos, int letter) {
  const int gen = std::abs(letter);  // swaps 0-based positions gen-1 and gen
  if (pos == gen - 1) return gen;
  if (pos == gen) return gen - 1;
  return pos;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view token, std::string_view what) {
  long value = 0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int e = letters_[i];
    if (e == 0 || std::abs(e) > strands_ - 1) {
      throw std::invalid_argument("letter " + std::to_string(e) + " at index " + std::to_string(i) +
                                  " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord parse_braid(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("braid text lacks ':'");
  const long strands = parse_long(trim(text.substr(0, colon)), "strand count");
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");

  std::vector<int> letters;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    if (rest.empty()) break;
    std::size_t end = 0;
    while (end < rest.size() && !is_space(rest[end])) ++end;
    const long e = parse_long(rest.substr(0, end), "letter");
    if (e == 0 || std::labs(e) > strands - 1) {
      throw std::invalid_argument("letter " + std::to_string(e) + " out of range for " +
                                  std::to_string(strands) + " strands");
    }
    letters.push_back(static_cast<int>(e));
    rest.remove_prefix(end);
  }
  return BraidWord(static_cast<int>(strands), std::move(letters));
}

std::string render_braid(const BraidWord& word) {
  std::string out = std::to_string(word.strands()) + ":";
  for (int e : word.letters()) {
    out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::vector<int> closure_permutation(const BraidWord& word) {
  std::vector<int> perm(static_cast<std::size_t>(word.strands()));
  for (int s = 0; s < word.strands(); ++s) {
    int pos = s;
    for (int e : word.letters()) pos = step(pos, e);
    perm[static_cast<std::size_t>(s)] = pos;
  }
  return perm;
}

int closure_components(const BraidWord& word) {
  const auto perm = closure_permutation(word);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = true;
  }
  return cycles;
}

long writhe(const BraidWord& word) {
  long w = 0;
  for (int e : word.letters()) w += e > 0 ? 1 : -1;
  return w;
}

ClosureSummary closure_summary(const BraidWord& word) {
  ClosureSummary summary;
  summary.strands = word.strands();
  summary.length = word.length();
  summary.writhe = writhe(word);
  summary.components = closure_components(word);

  const auto gens = static_cast<std::size_t>(word.strands() - 1);
  std::vector<bool> has_pos(gens, false);
  std::vector<bool> has_neg(gens, false);
  for (int e : word.letters()) {
    (e > 0 ? has_pos : has_neg)[static_cast<std::size_t>(std::abs(e) - 1)] = true;
  }
  summary.missing_positive = static_cast<int>(std::count(has_pos.begin(), has_pos.end(), false));
  summary.missing_negative = static_cast<int>(std::count(has_neg.begin(), has_neg.end(), false));
  summary.is_positive_word =
      std::none_of(word.letters().begin(), word.letters().end(), [](int e) { return e < 0; });
  return summary;
}

BraidWord concordance_inverse(const BraidWord& word) {
  std::vector<int> letters(word.letters().rbegin(), word.letters().rend());
  for (int& e : letters) e = -e;
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord connected_sum(const BraidWord& first, const BraidWord& second) {
  const int shift = first.strands() - 1;
  std::vector<int> letters(first.letters().begin(), first.letters().end());
  letters.reserve(first.length() + second.length());
  for (int e : second.letters()) letters.push_back(e > 0 ? e + shift : e - shift);
  return BraidWord(first.strands() + second.strands() - 1, std::move(letters));
}

ComponentLabels::ComponentLabels(const BraidWord& word)
    : strands_(word.strands()),
      cuts_(std::max<std::size_t>(word.length(), 1)),
      labels_(cuts_ * static_cast<std::size_t>(strands_), -1) {
  const auto letters = word.letters();
  const std::size_t length = letters.size();
  auto slot = [&](std::size_t cut, int pos) {
    return cut * static_cast<std::size_t>(strands_) + static_cast<std::size_t>(pos);
  };
  for (std::size_t cut = 0; cut < cuts_; ++cut) {
    for (int s = 0; s < strands_; ++s) {
      if (labels_[slot(cut, s)] != -1) continue;
      const int label = count_++;
      std::size_t c = cut;
      int pos = s;
      while (labels_[slot(c, pos)] == -1) {
        labels_[slot(c, pos)] = label;
        if (length == 0) break;
        pos = step(pos, letters[c]);
        c = (c + 1) % length;
      }
    }
  }
}

int ComponentLabels::at(std::size_t cut, int position) const {
  return labels_[(cut % cuts_) * static_cast<std::size_t>(strands_) +
                 static_cast<std::size_t>(position)];
}

}  // namespace slicetorus
