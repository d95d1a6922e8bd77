#include "slicetorus/cobordism.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <type_traits>

namespace slicetorus {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void reject(const std::string& reason) { throw std::invalid_argument(reason); }

void require_letter(const BraidWord& word, int letter) {
  if (letter == 0 || std::abs(letter) > word.strands() - 1) {
    reject("letter " + std::to_string(letter) + " out of range for " +
           std::to_string(word.strands()) + " strands");
  }
}

void require_window(const BraidWord& word, std::size_t position, std::size_t width) {
  if (position + width > word.length()) {
    reject("position " + std::to_string(position) + " leaves no room for " +
           std::to_string(width) + " letters in a word of length " +
           std::to_string(word.length()));
  }
}

std::size_t modulo_cut(std::size_t cut, std::size_t length) { return length == 0 ? 0 : cut % length; }

// Replace letters [position, position + width) by `replacement`; the slice is anchored
// at the cut just before the window in both words.
MoveEffect splice(const BraidWord& word, std::size_t position, std::size_t width,
                  const std::vector<int>& replacement, int strands) {
  std::vector<int> letters(word.letters().begin(), word.letters().begin() + static_cast<long>(position));
  letters.insert(letters.end(), replacement.begin(), replacement.end());
  letters.insert(letters.end(), word.letters().begin() + static_cast<long>(position + width),
                 word.letters().end());
  BraidWord after(strands, std::move(letters));
  const auto after_length = after.length();
  return {std::move(after), modulo_cut(position, word.length()), modulo_cut(position, after_length)};
}

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
};

// Records moves while tracking the current word.
class MovieRecorder {
 public:
  explicit MovieRecorder(BraidWord start) : start_(start), current_(std::move(start)) {}

  void push(const Move& move) {
    current_ = apply_move(current_, move).after;
    moves_.push_back(move);
  }
  const BraidWord& current() const { return current_; }
  CobordismCertificate finish() && { return {std::move(start_), std::move(moves_)}; }

 private:
  BraidWord start_;
  BraidWord current_;
  std::vector<Move> moves_;
};

}  // namespace

bool is_saddle(const Move& move) {
  return std::holds_alternative<SaddleInsert>(move) || std::holds_alternative<SaddleDelete>(move);
}

int euler_cost(const Move& move) { return is_saddle(move) ? -1 : 0; }

std::string move_type_name(const Move& move) {
  return std::visit(Overloaded{
                        [](const SaddleInsert&) { return "saddle_insert"; },
                        [](const SaddleDelete&) { return "saddle_delete"; },
                        [](const InsertCancelingPair&) { return "insert_canceling_pair"; },
                        [](const DeleteCancelingPair&) { return "delete_canceling_pair"; },
                        [](const BraidRelation&) { return "braid_relation"; },
                        [](const Commutation&) { return "commutation"; },
                        [](const Conjugate&) { return "conjugate"; },
                        [](const CyclicShift&) { return "cyclic_shift"; },
                        [](const Stabilize&) { return "stabilize"; },
                        [](const Destabilize&) { return "destabilize"; },
                    },
                    move);
}

MoveEffect apply_move(const BraidWord& word, const Move& move) {
  const auto letters = word.letters();
  const int k = word.strands();
  return std::visit(
      Overloaded{
          [&](const SaddleInsert& m) {
            require_letter(word, m.letter);
            if (m.position > word.length()) reject("insert position past end of word");
            return splice(word, m.position, 0, {m.letter}, k);
          },
          [&](const SaddleDelete& m) {
            require_window(word, m.position, 1);
            return splice(word, m.position, 1, {}, k);
          },
          [&](const InsertCancelingPair& m) {
            require_letter(word, m.generator);
            if (m.generator < 0) reject("canceling pair generator must be positive");
            if (m.order != 1 && m.order != -1) reject("canceling pair order must be +1 or -1");
            if (m.position > word.length()) reject("insert position past end of word");
            return splice(word, m.position, 0, {m.order * m.generator, -m.order * m.generator}, k);
          },
          [&](const DeleteCancelingPair& m) {
            require_window(word, m.position, 2);
            if (letters[m.position] != -letters[m.position + 1]) {
              reject("letters " + std::to_string(letters[m.position]) + " " +
                     std::to_string(letters[m.position + 1]) + " do not cancel");
            }
            return splice(word, m.position, 2, {}, k);
          },
          [&](const BraidRelation& m) {
            require_window(word, m.position, 3);
            const int a = letters[m.position];
            const int b = letters[m.position + 1];
            const int c = letters[m.position + 2];
            if (a != c || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1) {
              reject("letters " + std::to_string(a) + " " + std::to_string(b) + " " +
                     std::to_string(c) + " do not form a braid relation");
            }
            const int actual = std::abs(a) < std::abs(b) ? 1 : -1;
            if (m.direction != actual) reject("braid relation direction does not match letters");
            return splice(word, m.position, 3, {b, a, b}, k);
          },
          [&](const Commutation& m) {
            require_window(word, m.position, 2);
            const int a = letters[m.position];
            const int b = letters[m.position + 1];
            if (std::abs(std::abs(a) - std::abs(b)) < 2) {
              reject("generators " + std::to_string(a) + " and " + std::to_string(b) +
                     " do not commute");
            }
            return splice(word, m.position, 2, {b, a}, k);
          },
          [&](const Conjugate& m) {
            require_letter(word, m.letter);
            std::vector<int> out{-m.letter};
            out.insert(out.end(), letters.begin(), letters.end());
            out.push_back(m.letter);
            return MoveEffect{BraidWord(k, std::move(out)), 0, 1};
          },
          [&](const CyclicShift&) {
            if (word.empty()) reject("cannot shift an empty word");
            std::vector<int> out(letters.begin() + 1, letters.end());
            out.push_back(letters.front());
            return MoveEffect{BraidWord(k, std::move(out)), modulo_cut(1, word.length()), 0};
          },
          [&](const Stabilize& m) {
            if (m.sign != 1 && m.sign != -1) reject("stabilization sign must be +1 or -1");
            std::vector<int> out(letters.begin(), letters.end());
            out.push_back(m.sign * k);
            return MoveEffect{BraidWord(k + 1, std::move(out)), 0, 0};
          },
          [&](const Destabilize&) {
            if (k < 2) reject("cannot destabilize a one-strand braid");
            const int top = k - 1;
            auto hits = std::count_if(letters.begin(), letters.end(),
                                      [top](int e) { return std::abs(e) == top; });
            if (hits != 1) {
              reject("generator " + std::to_string(top) + " occurs " + std::to_string(hits) +
                     " times, destabilization needs exactly one");
            }
            std::vector<int> out;
            std::copy_if(letters.begin(), letters.end(), std::back_inserter(out),
                         [top](int e) { return std::abs(e) != top; });
            return MoveEffect{BraidWord(k - 1, std::move(out)), 0, 0};
          },
      },
      move);
}

BraidWord end_word(const CobordismCertificate& certificate) {
  BraidWord current = certificate.start;
  for (std::size_t t = 0; t < certificate.moves.size(); ++t) {
    try {
      current = apply_move(current, certificate.moves[t]).after;
    } catch (const std::invalid_argument& e) {
      throw VerificationError(t, e.what());
    }
  }
  return current;
}

VerifiedCobordism verify_certificate(const CobordismCertificate& certificate) {
  VerifiedCobordism result;
  result.start_word = certificate.start;

  UnionFind trace;
  BraidWord current = certificate.start;
  ComponentLabels labels(current);
  int offset = 0;
  for (int c = 0; c < labels.count(); ++c) trace.add();
  result.start_components = labels.count();

  for (std::size_t t = 0; t < certificate.moves.size(); ++t) {
    const Move& move = certificate.moves[t];
    MoveEffect effect;
    try {
      effect = apply_move(current, move);
    } catch (const std::invalid_argument& e) {
      throw VerificationError(t, e.what());
    }
    ComponentLabels next(effect.after);
    const int next_offset = static_cast<int>(trace.size());
    for (int c = 0; c < next.count(); ++c) trace.add();

    const int shared = std::min(current.strands(), effect.after.strands());
    std::vector<int> image(static_cast<std::size_t>(labels.count()), -1);
    bool bijective = true;
    for (int s = 0; s < shared; ++s) {
      const int from = labels.at(effect.anchor_before, s);
      const int to = next.at(effect.anchor_after, s);
      trace.unite(offset + from, next_offset + to);
      auto& slot = image[static_cast<std::size_t>(from)];
      if (slot != -1 && slot != to) bijective = false;
      slot = to;
    }

    const int delta = next.count() - labels.count();
    if (is_saddle(move)) {
      ++result.saddle_count;
      if (delta != 1 && delta != -1) {
        throw std::logic_error("saddle at move " + std::to_string(t) +
                               " did not change the component count by one");
      }
    } else if (delta != 0 || !bijective) {
      throw std::logic_error("isotopy at move " + std::to_string(t) +
                             " did not carry components bijectively");
    }

    current = std::move(effect.after);
    labels = std::move(next);
    offset = next_offset;
  }

  result.end_word = current;
  result.end_components = labels.count();
  const int root = trace.find(0);
  result.connected = true;
  for (int v = 1; v < static_cast<int>(trace.size()); ++v) {
    if (trace.find(v) != root) {
      result.connected = false;
      break;
    }
  }
  if (result.connected && result.start_components == 1 && result.end_components == 1) {
    if (result.saddle_count % 2 != 0) {
      throw std::logic_error("odd saddle count between two knots");
    }
    result.genus = Rational(static_cast<std::int64_t>(result.saddle_count), 2);
  }
  return result;
}

int lemma_i_target(const BraidWord& word) {
  const int k = std::max(word.strands(), 2);
  const int l = static_cast<int>(word.length()) + (word.strands() == 1 ? 1 : 0);
  return std::max(k, l - 1);
}

CobordismCertificate build_lemma_i(const BraidWord& word) {
  const auto summary = closure_summary(word);
  if (!summary.is_positive_word) reject("build_lemma_i needs a positive word");
  if (summary.components != 1) reject("build_lemma_i needs a knot closure");

  MovieRecorder movie(word);
  if (word.strands() == 1) movie.push(Stabilize{1});

  const int k = movie.current().strands();
  const auto original = movie.current().letters();
  const std::vector<int> input(original.begin(), original.end());
  const int l = static_cast<int>(input.size());
  const int p = std::max(k, l - 1);

  // (a) grow every sigma_i into sigma_1 ... sigma_{k-1}.
  std::size_t cursor = 0;
  for (int letter : input) {
    for (int j = 1; j < letter; ++j) movie.push(SaddleInsert{cursor++, j});
    ++cursor;  // the original sigma_i
    for (int j = letter + 1; j < k; ++j) movie.push(SaddleInsert{cursor++, j});
  }

  // (b) T(k, l) -> T(k, p+1) by appending full twists of the block.
  for (int rep = 0; rep < p + 1 - l; ++rep) {
    for (int j = 1; j < k; ++j) movie.push(SaddleInsert{movie.current().length(), j});
  }

  // (c) T(m, p+1) -> T(m+1, p+1): stabilize, then close every earlier block with sigma_m.
  for (int m = k; m < p; ++m) {
    movie.push(Stabilize{1});
    const auto block = static_cast<std::size_t>(m - 1);
    for (int rep = 0; rep < p; ++rep) {
      // Block rep occupies letters [rep * m, rep * m + m - 1) before its sigma_m lands.
      const auto position = static_cast<std::size_t>(rep) * (block + 1) + block;
      movie.push(SaddleInsert{position, m});
    }
  }
  return std::move(movie).finish();
}

CobordismCertificate build_lemma_ii(int p, LemmaIIStart start) {
  if (p < 2) reject("build_lemma_ii needs p >= 2");
  if (start == LemmaIIStart::kFullTwistPower) {
    MovieRecorder movie(torus_braid(p, p - 1));
    for (int rep = 0; rep < 2; ++rep) {
      for (int j = 1; j < p; ++j) movie.push(SaddleInsert{movie.current().length(), j});
    }
    return std::move(movie).finish();
  }

  // (sigma_1 ... sigma_{p-2})^p sigma_{p-1} after stabilizing; p blocks of length p-2.
  MovieRecorder movie(torus_braid(p - 1, p));
  movie.push(Stabilize{1});
  const auto block = static_cast<std::size_t>(p - 2);
  for (int rep = 0; rep < p - 1; ++rep) {
    movie.push(SaddleInsert{static_cast<std::size_t>(rep) * (block + 1) + block, p - 1});
  }
  for (int j = 1; j < p; ++j) movie.push(SaddleInsert{movie.current().length(), j});
  return std::move(movie).finish();
}

CobordismCertificate build_lemma_ii_chain(int from, int to) {
  if (from < 1 || to < from) reject("lemma (ii) chain needs 1 <= from <= to");
  CobordismCertificate chain{torus_braid(from, from + 1), {}};
  for (int p = from + 1; p <= to; ++p) chain = compose(chain, build_lemma_ii(p));
  return chain;
}

CobordismCertificate compose(const CobordismCertificate& first,
                             const CobordismCertificate& second) {
  const BraidWord middle = end_word(first);
  if (middle != second.start) {
    reject("cannot compose: first movie ends at " + render_braid(middle) +
           " but second starts at " + render_braid(second.start));
  }
  CobordismCertificate out = first;
  out.moves.insert(out.moves.end(), second.moves.begin(), second.moves.end());
  return out;
}

std::optional<Rational> check_squeezed(const CobordismCertificate& plus,
                                       const CobordismCertificate& minus,
                                       const TorusKnotSpec& t_plus,
                                       const TorusKnotSpec& t_minus) {
  if (!t_plus.is_positive() && !t_plus.is_unknot()) {
    reject("T+ must be a positive torus knot, got " + to_string(t_plus));
  }
  const auto upper = verify_certificate(plus);
  const auto lower = verify_certificate(minus);
  for (const auto* v : {&upper, &lower}) {
    if (!v->genus) reject("both movies must be connected cobordisms between knots");
  }

  const auto start_type = recognize_torus(upper.start_word);
  if (!start_type || !start_type->same_knot(t_plus)) {
    reject("C+ starts at " + render_braid(upper.start_word) + ", not a presentation of " +
           to_string(t_plus));
  }
  if (upper.end_word != lower.start_word) {
    reject("C+ ends at " + render_braid(upper.end_word) + " but C- starts at " +
           render_braid(lower.start_word));
  }
  const TorusKnotSpec target = t_minus.abs().mirror();
  const auto end_type = recognize_torus(lower.end_word);
  if (!end_type || !end_type->same_knot(target)) {
    reject("C- ends at " + render_braid(lower.end_word) + ", not a presentation of " +
           to_string(target));
  }

  const Rational g_plus = torus_g4(t_plus);
  const Rational g_minus = torus_g4(t_minus);
  if (*upper.genus + *lower.genus != g_plus + g_minus) return std::nullopt;
  return g_plus - *upper.genus;
}

}  // namespace slicetorus
