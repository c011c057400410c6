#include <doctest.h>

#include "stallings/errors.hpp"
#include "stallings/random.hpp"
#include "stallings/word.hpp"

using namespace stallings;

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(reduce({1, -1, 2}) == Word{2});
  CHECK(reduce({}) == Word{});
  CHECK(reduce({1, 2, -2, -1, 1}) == Word{1});  // cascading cancellation
  CHECK(reduce({1, -2, 2, -1}) == Word{});
}

TEST_CASE("zero is rejected as a letter") {
  CHECK_THROWS_AS(Word({1, 0, 2}), AlphabetError);
  CHECK_THROWS_AS(Word::parse("1 x 2"), AlphabetError);
}

TEST_CASE("inverse and concatenation") {
  Word w{1, 2, -1};
  CHECK(w.inverse() == Word{1, -2, -1});
  CHECK(w.inverse().inverse() == w);
  CHECK(w * w.inverse() == Word{});
  CHECK(Word{1, 2} * Word{-2, -1, 3} == Word{3});
}

TEST_CASE("parse and str round-trip") {
  Word w = Word::parse("1 -2 1");
  CHECK(w == Word{1, -2, 1});
  CHECK(w.str() == "1 -2 1");
  CHECK(Word::parse("").empty());
  CHECK(Word{}.str() == "");
  CHECK(Word{1, 2, -1}.max_index() == 2);
  CHECK(Word{}.max_index() == 0);
}

TEST_CASE("reduction is idempotent and leaves no cancellable pair") {
  RandomStream rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    int len = static_cast<int>(rng.below(12));
    for (int i = 0; i < len; ++i) {
      int l = 1 + static_cast<int>(rng.below(3));
      raw.push_back(rng.below(2) ? l : -l);
    }
    Word w(raw);
    for (std::size_t i = 1; i < w.size(); ++i) {
      CHECK(w[i] != -w[i - 1]);
    }
    CHECK(Word(w.letters()) == w);
    // group laws through reduction
    Word u = sample_reduced_word(3, 1 + static_cast<int>(rng.below(6)), rng);
    CHECK((w * u).size() <= w.size() + u.size());
    CHECK((w * u) * u.inverse() == w);
  }
}
