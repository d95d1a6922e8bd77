#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "slicetorus/cobordism.hpp"
#include "slicetorus/knots.hpp"

using namespace slicetorus;

namespace {

CobordismCertificate movie(const char* start, std::vector<Move> moves) {
  return {parse_braid(start), std::move(moves)};
}

std::string end_text(const CobordismCertificate& c) { return render_braid(end_word(c)); }

Move random_move(std::mt19937& rng, const BraidWord& w) {
  const int k = w.strands();
  const auto len = w.length();
  auto pick = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi)(rng); };
  auto letter = [&] {
    const int g = std::uniform_int_distribution<int>(1, std::max(k - 1, 1))(rng);
    return std::bernoulli_distribution(0.5)(rng) ? g : -g;
  };
  switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
    case 0: return SaddleInsert{pick(len), letter()};
    case 1: return SaddleDelete{pick(len)};
    case 2: return InsertCancelingPair{pick(len), std::abs(letter()), std::bernoulli_distribution(0.5)(rng) ? 1 : -1};
    case 3: return DeleteCancelingPair{pick(len)};
    case 4: return BraidRelation{pick(len), std::bernoulli_distribution(0.5)(rng) ? 1 : -1};
    case 5: return Commutation{pick(len)};
    case 6: return Conjugate{letter()};
    case 7: return CyclicShift{};
    case 8: return Stabilize{std::bernoulli_distribution(0.5)(rng) ? 1 : -1};
    default: return Destabilize{};
  }
}

}  // namespace

TEST_CASE("move costs", "[cobordism][moves]") {
  CHECK(euler_cost(SaddleInsert{}) == -1);
  CHECK(euler_cost(SaddleDelete{}) == -1);
  for (const Move& m : std::vector<Move>{InsertCancelingPair{}, DeleteCancelingPair{}, BraidRelation{},
                                         Commutation{}, Conjugate{}, CyclicShift{}, Stabilize{},
                                         Destabilize{}}) {
    CHECK(euler_cost(m) == 0);
    CHECK_FALSE(is_saddle(m));
  }
  CHECK(move_type_name(Move{BraidRelation{}}) == "braid_relation");
}

TEST_CASE("each move rewrites the word", "[cobordism][moves]") {
  const auto w = parse_braid("3: 1 2 1");
  CHECK(render_braid(apply_move(w, SaddleInsert{3, -2}).after) == "3: 1 2 1 -2");
  CHECK(render_braid(apply_move(w, SaddleDelete{1}).after) == "3: 1 1");
  CHECK(render_braid(apply_move(w, InsertCancelingPair{1, 2, -1}).after) == "3: 1 -2 2 2 1");
  CHECK(render_braid(apply_move(parse_braid("3: 1 2 -2"), DeleteCancelingPair{1}).after) == "3: 1");
  CHECK(render_braid(apply_move(w, BraidRelation{0, 1}).after) == "3: 2 1 2");
  CHECK(render_braid(apply_move(parse_braid("3: -2 -1 -2"), BraidRelation{0, -1}).after) == "3: -1 -2 -1");
  CHECK(render_braid(apply_move(parse_braid("4: 1 3"), Commutation{0}).after) == "4: 3 1");
  CHECK(render_braid(apply_move(w, Conjugate{2}).after) == "3: -2 1 2 1 2");
  CHECK(render_braid(apply_move(w, CyclicShift{}).after) == "3: 2 1 1");
  CHECK(render_braid(apply_move(w, Stabilize{-1}).after) == "4: 1 2 1 -3");
  CHECK(render_braid(apply_move(parse_braid("3: 1 2 1"), Destabilize{}).after) == "2: 1 1");
}

TEST_CASE("inapplicable moves are rejected", "[cobordism][moves]") {
  const auto w = parse_braid("3: 1 2 1");
  CHECK_THROWS_AS(apply_move(w, SaddleInsert{4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, SaddleInsert{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, SaddleDelete{3}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, DeleteCancelingPair{0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, BraidRelation{0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, BraidRelation{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse_braid("3: 1 -2 1"), BraidRelation{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, Commutation{0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse_braid("2:"), CyclicShift{}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, Stabilize{2}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse_braid("3: 2 1 2"), Destabilize{}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse_braid("1:"), Destabilize{}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(w, InsertCancelingPair{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("verification reports the failing step", "[cobordism][verify]") {
  const auto bad = movie("2: 1 1 1", {SaddleDelete{0}, BraidRelation{5, 1}});
  try {
    verify_certificate(bad);
    FAIL("expected a verification error");
  } catch (const VerificationError& e) {
    CHECK(e.step() == 1);
  }
  CHECK_THROWS_AS(end_word(bad), VerificationError);
}

TEST_CASE("identity cobordism", "[cobordism][verify]") {
  const auto v = verify_certificate(movie("2: 1 1 1", {}));
  CHECK(v.start_word == v.end_word);
  CHECK(v.saddle_count == 0);
  CHECK(v.genus == Rational(0));
  CHECK(v.connected);
}

TEST_CASE("isotopies preserve genus zero", "[cobordism][verify]") {
  const auto c = movie("3: 1 2 1 -2", {BraidRelation{0, 1}, InsertCancelingPair{4, 1, 1}, CyclicShift{},
                                       Conjugate{-2}, Stabilize{1}, DeleteCancelingPair{2}});
  const auto v = verify_certificate(c);
  CHECK(v.saddle_count == 0);
  CHECK(v.genus == Rational(0));
  CHECK(render_braid(v.end_word) == "4: 2 1 1 -1 2 -2 3");
}

TEST_CASE("component tracking and connectivity", "[cobordism][verify]") {
  // Unknot to Hopf link: one saddle, knot to link, so no genus.
  const auto hopf = verify_certificate(movie("2: 1", {SaddleInsert{1, 1}}));
  CHECK(hopf.connected);
  CHECK(hopf.end_components == 2);
  CHECK_FALSE(hopf.genus.has_value());

  // A split unknot that never meets the rest keeps the trace disconnected.
  const auto split = verify_certificate(movie("3: 1 1", {SaddleDelete{0}, SaddleDelete{0}}));
  CHECK(split.start_components == 3);
  CHECK(split.end_components == 3);
  CHECK_FALSE(split.connected);

  const auto joined = verify_certificate(movie("3: 1", {SaddleInsert{1, 2}}));
  CHECK(joined.start_components == 2);
  CHECK(joined.end_components == 1);
  CHECK(joined.connected);

  // Splitting off a component and merging it back gives genus one.
  const auto handle = verify_certificate(movie("2: 1 1 1", {SaddleDelete{0}, SaddleDelete{0}}));
  CHECK(handle.connected);
  CHECK(handle.genus == Rational(1));
}

TEST_CASE("random movies never break the component bookkeeping", "[cobordism][verify][property]") {
  std::mt19937 rng(41);
  int applied_total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    CobordismCertificate c{oracle::random_word(rng, 5, 10), {}};
    BraidWord current = c.start;
    for (int attempt = 0; attempt < 60 && c.moves.size() < 20; ++attempt) {
      const Move m = random_move(rng, current);
      try {
        current = apply_move(current, m).after;
        c.moves.push_back(m);
      } catch (const std::invalid_argument&) {
      }
    }
    applied_total += static_cast<int>(c.moves.size());
    const auto v = verify_certificate(c);
    CHECK(v.end_word == current);
    CHECK(v.start_components == oracle::components(c.start));
    CHECK(v.end_components == oracle::components(current));
    CHECK((v.saddle_count + v.start_components + v.end_components) % 2 == 0);
    if (v.genus) CHECK(*v.genus * 2 == Rational(static_cast<std::int64_t>(v.saddle_count)));
  }
  CHECK(applied_total > 1000);
}

TEST_CASE("build_lemma_i examples", "[cobordism][lemma_i]") {
  const auto trefoil = build_lemma_i(parse_braid("2: 1 1 1"));
  CHECK(trefoil.moves.empty());
  CHECK(verify_certificate(trefoil).genus == Rational(0));

  const auto t34 = verify_certificate(build_lemma_i(parse_braid("3: 1 2 1 2")));
  CHECK(t34.saddle_count == 4);
  CHECK(t34.genus == Rational(2));
  CHECK(t34.end_word == torus_braid(3, 4));

  const auto sum = verify_certificate(build_lemma_i(parse_braid("3: 1 1 1 2 2 2")));
  CHECK(sum.saddle_count == 16);
  CHECK(sum.genus == Rational(8));
  CHECK(sum.end_word == torus_braid(5, 6));
  CHECK(sum.genus == Rational(torus_g4(5, 6)) - Rational(2));

  const auto unknot = verify_certificate(build_lemma_i(parse_braid("1:")));
  CHECK(unknot.end_word == torus_braid(2, 3));
  CHECK(unknot.genus == Rational(1));

  CHECK_THROWS_AS(build_lemma_i(parse_braid("2: 1 -1 1")), std::invalid_argument);
  CHECK_THROWS_AS(build_lemma_i(parse_braid("2: 1 1")), std::invalid_argument);
}

TEST_CASE("build_lemma_i stage counts and genus identity", "[cobordism][lemma_i][property]") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const auto w = oracle::random_positive_knot(rng, 6, 20);
    const int k = w.strands();
    const int l = static_cast<int>(w.length());
    const int p = std::max(k, l - 1);
    INFO(render_braid(w));
    const auto v = verify_certificate(build_lemma_i(w));
    CHECK(lemma_i_target(w) == p);
    CHECK(v.end_word == torus_braid(p, p + 1));
    CHECK(static_cast<long>(v.saddle_count) == oracle::lemma_i_saddles(k, l));
    CHECK(v.genus == Rational(torus_g4(p, p + 1)) - positive_braid_genus(w));
  }
}

TEST_CASE("build_lemma_ii", "[cobordism][lemma_ii]") {
  const auto p2 = verify_certificate(build_lemma_ii(2));
  CHECK(render_braid(p2.start_word) == "1:");
  CHECK(render_braid(p2.end_word) == "2: 1 1 1");
  CHECK(p2.saddle_count == 2);
  CHECK(p2.genus == Rational(1));

  const auto p3 = build_lemma_ii(3);
  CHECK(p3.start == torus_braid(2, 3));
  CHECK(p3.moves.front() == Move{Stabilize{1}});
  const auto v3 = verify_certificate(p3);
  CHECK(v3.end_word == torus_braid(3, 4));
  CHECK(v3.saddle_count == 4);
  CHECK(v3.genus == Rational(2));

  for (int p = 2; p <= 10; ++p) {
    INFO("p = " << p);
    for (auto start : {LemmaIIStart::kStabilized, LemmaIIStart::kFullTwistPower}) {
      const auto c = build_lemma_ii(p, start);
      const auto v = verify_certificate(c);
      CHECK(v.saddle_count == static_cast<std::size_t>(2 * (p - 1)));
      CHECK(v.genus == Rational(p - 1));
      CHECK(v.end_word == torus_braid(p, p + 1));
      CHECK(recognize_torus(v.start_word)->same_knot(TorusKnotSpec(p - 1, p)));
    }
  }
  CHECK(build_lemma_ii(4, LemmaIIStart::kFullTwistPower).start == torus_braid(4, 3));
  CHECK_THROWS_AS(build_lemma_ii(1), std::invalid_argument);
}

TEST_CASE("compose", "[cobordism][compose]") {
  const auto chain = compose(build_lemma_ii(2), build_lemma_ii(3));
  const auto v = verify_certificate(chain);
  CHECK(render_braid(v.start_word) == "1:");
  CHECK(v.end_word == torus_braid(3, 4));
  CHECK(v.genus == Rational(3));
  CHECK(v.genus == Rational(torus_g4(3, 4)));

  const auto c = build_lemma_i(parse_braid("3: 1 2 1 2"));
  CHECK(compose(c, CobordismCertificate{end_word(c), {}}) == c);
  CHECK_THROWS_AS(compose(build_lemma_ii(3), build_lemma_ii(3)), std::invalid_argument);

  // Lemma (i) output feeds straight into the (ii) chain.
  const auto long_chain = compose(build_lemma_i(parse_braid("2: 1 1 1")), build_lemma_ii_chain(2, 5));
  CHECK(verify_certificate(long_chain).genus == Rational(torus_g4(5, 6) - 1));
  CHECK(build_lemma_ii_chain(3, 3).moves.empty());
}

TEST_CASE("genus adds under composition", "[cobordism][compose][property]") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = oracle::random_positive_knot(rng, 5, 12);
    const auto first = build_lemma_i(w);
    const int p = lemma_i_target(w);
    const auto second = build_lemma_ii_chain(p, p + 2);
    const auto g1 = *verify_certificate(first).genus;
    const auto g2 = *verify_certificate(second).genus;
    CHECK(verify_certificate(compose(first, second)).genus == g1 + g2);
  }
}

TEST_CASE("check_squeezed", "[cobordism][squeezed]") {
  const auto plus = movie("2: 1 1 1", {});
  const auto minus = movie("2: 1 1 1", {SaddleDelete{2}, SaddleDelete{1}});
  CHECK(end_text(minus) == "2: 1");
  CHECK(check_squeezed(plus, minus, TorusKnotSpec(2, 3), TorusKnotSpec(1, 2)) == Rational(1));

  const auto unknot = movie("1:", {});
  CHECK(check_squeezed(unknot, unknot, TorusKnotSpec(1, 1), TorusKnotSpec(1, 1)) == Rational(0));

  // Down to the unknot and back up to the mirror trefoil: 6 saddles, genus 3 > 1 + 1.
  const auto slack = movie("2: 1 1 1", {SaddleDelete{0}, SaddleDelete{0}, SaddleInsert{1, -1}, SaddleInsert{1, -1},
                                        SaddleInsert{1, -1}, SaddleInsert{1, -1}, DeleteCancelingPair{0}});
  CHECK(end_text(slack) == "2: -1 -1 -1");
  CHECK(verify_certificate(slack).genus == Rational(3));
  CHECK_FALSE(check_squeezed(plus, slack, TorusKnotSpec(2, 3), TorusKnotSpec(2, 3)).has_value());

  // Mismatched endpoints and declared knots.
  CHECK_THROWS_AS(check_squeezed(plus, minus, TorusKnotSpec(3, 4), TorusKnotSpec(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(check_squeezed(plus, minus, TorusKnotSpec(2, 3), TorusKnotSpec(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(check_squeezed(unknot, minus, TorusKnotSpec(1, 1), TorusKnotSpec(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(check_squeezed(plus, minus, TorusKnotSpec(2, -3), TorusKnotSpec(1, 2)), std::invalid_argument);
}

TEST_CASE("positive braid knots are squeezed by the lemma movies", "[cobordism][squeezed][property]") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const auto w = oracle::random_positive_knot(rng, 4, 8);
    const int p = lemma_i_target(w);
    // C+ is the reversed lemma (i) movie; build it forward from T(p,p+1) by deleting the
    // inserted letters in reverse order.
    auto forward = build_lemma_i(w);
    std::vector<BraidWord> slices{forward.start};
    for (const auto& m : forward.moves) slices.push_back(apply_move(slices.back(), m).after);
    CobordismCertificate plus{slices.back(), {}};
    for (std::size_t t = forward.moves.size(); t-- > 0;) {
      if (const auto* ins = std::get_if<SaddleInsert>(&forward.moves[t])) {
        plus.moves.push_back(SaddleDelete{ins->position});
      } else {
        plus.moves.push_back(Destabilize{});
      }
    }
    REQUIRE(end_word(plus) == w);
    // C- deletes every letter but one per generator, reaching an unknot.
    CobordismCertificate minus{w, {}};
    BraidWord current = w;
    for (int g = 1; g < w.strands(); ++g) {
      bool kept = false;
      for (std::size_t i = 0; i < current.length();) {
        if (current.letters()[i] != g) {
          ++i;
        } else if (!kept) {
          kept = true;
          ++i;
        } else {
          minus.moves.push_back(SaddleDelete{i});
          current = apply_move(current, SaddleDelete{i}).after;
        }
      }
    }
    INFO(render_braid(w) << " -> " << render_braid(current));
    if (!recognize_torus(current)) continue;
    const auto value = check_squeezed(plus, minus, TorusKnotSpec(p, p + 1), TorusKnotSpec(1, 1));
    REQUIRE(value.has_value());
    CHECK(*value == positive_braid_genus(w));
  }
}
