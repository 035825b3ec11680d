#include "eafc/words.hpp"

#include <doctest.h>

#include "catalog.hpp"
#include "oracles.hpp"

#include <random>

using namespace eafc;
using testkit::make_edge;
using testkit::make_square;

namespace {
const ArtinSystem& sq() {
  static ArtinSystem sys = make_square(2, 4, 2, 4);
  return sys;
}
}  // namespace

TEST_CASE("parsing and formatting") {
  const ArtinSystem& sys = sq();
  Word w = parse_word(sys, "a b^-1 a");
  CHECK(w.syllables() == std::vector<Syllable>{{0, 1}, {1, -1}, {0, 1}});
  CHECK(format_word(w) == "a b^-1 a");

  CHECK(parse_word(sys, "a a^2").syllables() == std::vector<Syllable>{{0, 3}});
  CHECK(parse_word(sys, "a b b^-1 a^-1").empty());
  CHECK(parse_word(sys, "").empty());
  CHECK(parse_word(sys, "   ").empty());
  CHECK(format_word(parse_word(sys, "")) == "");
  CHECK(parse_word(sys, "c^-3").syllables() == std::vector<Syllable>{{2, -3}});

  CHECK_THROWS_AS(parse_word(sys, "q"), input_error);
  CHECK_THROWS_AS(parse_word(sys, "a^0"), input_error);
  CHECK_THROWS_AS(parse_word(sys, "a^x"), input_error);
  CHECK_THROWS_AS(parse_word(sys, "a^"), input_error);
  CHECK_THROWS_AS(parse_word(sys, "a^2^3"), input_error);

  // Round trip on random words.
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word r = testkit::random_word(sys, 12, rng);
    CHECK(parse_word(sys, format_word(r)) == r);
  }
}

TEST_CASE("from_syllables validates and reduces") {
  const ArtinSystem& sys = sq();
  CHECK(Word::from_syllables(sys, {{0, 1}, {0, -1}}).empty());
  CHECK(Word::from_syllables(sys, {{0, 1}, {0, 2}, {1, 1}, {1, -1}, {0, -3}}).empty());
  CHECK_THROWS_AS(Word::from_syllables(sys, {{7, 1}}), input_error);
  // Zero exponents are normalized away, not rejected.
  CHECK(Word::from_syllables(sys, {{0, 0}}).empty());
  CHECK(Word::from_syllables(sys, {{0, 2}, {1, 0}, {0, 1}}) ==
        Word::from_syllables(sys, {{0, 3}}));
}

TEST_CASE("defining relators") {
  ArtinSystem e2 = make_edge(2);
  CHECK(format_word(artin_relator(e2, 0, 1)) == "a b a^-1 b^-1");
  ArtinSystem e4 = make_edge(4);
  Word rel = artin_relator(e4, 0, 1);
  CHECK(format_word(rel) == "a b a b a^-1 b^-1 a^-1 b^-1");
  CHECK(rel.length() == 8);
  CHECK(artin_relator(e4, 1, 0) == invert(rel));
  CHECK_THROWS_AS(artin_relator(sq(), 0, 2), input_error);  // non-edge
  for (const auto& entry : testkit::catalog())
    for (const Edge& e : entry.sys.edges()) {
      Word r = entry.sys.edges().empty() ? Word(entry.sys) : artin_relator(entry.sys, e.u, e.v);
      for (const Int& x : abelian_image(r)) CHECK(x == 0);
    }
}

TEST_CASE("retraction") {
  const ArtinSystem& sys = sq();
  Word w = parse_word(sys, "a b a b");
  CHECK(format_word(retraction(VertexSubset::of(sys, {"b"}), w)) == "b^2");
  CHECK(retraction(VertexSubset::full(sys), w) == w);
  CHECK(retraction(VertexSubset(std::vector<int>{}), w).empty());

  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word r = testkit::random_word(sys, 10, rng);
    VertexSubset T = VertexSubset::of(sys, {"a", "b", "c"});
    VertexSubset S = VertexSubset::of(sys, {"a", "c"});
    // Idempotence and nesting S within T.
    CHECK(retraction(S, retraction(S, r)) == retraction(S, r));
    CHECK(retraction(S, retraction(T, r)) == retraction(S, r));
    // Homomorphism.
    Word r2 = testkit::random_word(sys, 10, rng);
    CHECK(retraction(S, concat(r, r2)) == concat(retraction(S, r), retraction(S, r2)));
  }
}

TEST_CASE("abelian image and total exponent") {
  const ArtinSystem& sys = sq();
  CHECK(abelian_image(Word(sys)) == std::vector<Int>{0, 0, 0, 0});
  CHECK(total_exponent(Word(sys)) == 0);
  Word w = parse_word(sys, "a b^-1");
  CHECK(abelian_image(w) == std::vector<Int>{1, -1, 0, 0});
  CHECK(total_exponent(w) == 0);
  CHECK(total_exponent(parse_word(sys, "a^5 d^-2")) == 3);

  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    Word x = testkit::random_word(sys, 8, rng), y = testkit::random_word(sys, 8, rng);
    std::vector<Int> sum = abelian_image(x);
    std::vector<Int> yim = abelian_image(y);
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += yim[k];
    CHECK(abelian_image(concat(x, y)) == sum);
    std::vector<Int> neg = abelian_image(invert(x));
    for (size_t k = 0; k < neg.size(); ++k) CHECK(neg[k] == -abelian_image(x)[k]);
  }
}

TEST_CASE("group operations") {
  const ArtinSystem& sys = sq();
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    Word w = testkit::random_word(sys, 10, rng);
    Word c = testkit::random_word(sys, 6, rng);
    CHECK(concat(w, invert(w)).empty());
    CHECK(power(w, 0).empty());
    CHECK(power(w, 3) == concat(concat(w, w), w));
    CHECK(power(w, -2) == invert(power(w, 2)));
    CHECK(conjugate(w, c) == concat(concat(c, w), invert(c)));
  }
  CHECK(conjugate(Word(sys), parse_word(sys, "a b")).empty());

  ArtinSystem other = make_edge(2);
  CHECK_THROWS_AS(concat(Word(sys), Word(other)), input_error);

  // Arbitrary-precision exponents survive power sweeps.
  Word big = power(parse_word(sys, "a"), Int(1) << 80);
  REQUIRE(big.syllables().size() == 1);
  CHECK(big.syllables()[0].exp == Int(1) << 80);
  CHECK(power(big, -(Int(1) << 10)).syllables()[0].exp == -(Int(1) << 90));
}

TEST_CASE("free reduction is confluent") {
  const ArtinSystem& sys = sq();
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> gen(0, 3), coin(0, 1);
  for (int trial = 0; trial < 400; ++trial) {
    testkit::Letters letters;
    int len = static_cast<int>(rng() % 14);
    for (int i = 0; i < len; ++i) letters.push_back({gen(rng), coin(rng) ? 1 : -1});

    Word all_at_once = testkit::word_from_letters(sys, letters);
    // Reduce by concatenating random-size chunks, one at a time.
    Word incremental(sys);
    size_t pos = 0;
    while (pos < letters.size()) {
      size_t take = 1 + rng() % 4;
      testkit::Letters chunk(letters.begin() + static_cast<long>(pos),
                             letters.begin() + static_cast<long>(std::min(letters.size(), pos + take)));
      incremental = concat(incremental, testkit::word_from_letters(sys, chunk));
      pos += take;
    }
    CHECK(all_at_once == incremental);
  }
}
