#include <random>
#include <vector>

#include "doctest.h"
#include "fgtk/word.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using fgtk::Endomorphism;
using fgtk::ErrorKind;
using fgtk::Word;
using fgtk::WordTuple;
using testutil::error_kind_of;

TEST_CASE("reduce cancels adjacent inverse pairs") {
  Word w = Word::reduce({1, 2, -2, -1, 3}, 3);
  CHECK(w.letters() == std::vector<std::int32_t>{3});

  CHECK(Word::reduce({}, 2).empty());
  CHECK(Word::reduce({1, -1}, 1).empty());
  CHECK(Word::reduce({1, 2, 1}, 2).letters() == std::vector<std::int32_t>{1, 2, 1});
}

TEST_CASE("reduce rejects invalid letters") {
  CHECK(error_kind_of([] { Word::reduce({0}, 2); }) == ErrorKind::InvalidLetter);
  CHECK(error_kind_of([] { Word::reduce({3}, 2); }) == ErrorKind::InvalidLetter);
  CHECK(error_kind_of([] { Word::reduce({-4}, 3); }) == ErrorKind::InvalidLetter);
  CHECK(error_kind_of([] { Word(0); }) == ErrorKind::InvalidLetter);
}

TEST_CASE("reduce agrees with the scan oracle") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    auto raw = testutil::random_raw_letters(rng, 3, 12);
    oracle::Letters as_int(raw.begin(), raw.end());
    auto expected = oracle::reduce(as_int);
    auto got = Word::reduce(raw, 3).letters();
    CHECK(std::vector<int>(got.begin(), got.end()) == expected);
  }
}

TEST_CASE("concat reduces across the junction") {
  Word ab = Word::parse("ab", 2);
  Word Ba = Word::parse("Ba", 2);
  CHECK(concat(ab, Ba).str() == "aa");

  Word e(2);
  CHECK(concat(ab, e) == ab);
  CHECK(concat(e, ab) == ab);
  CHECK(concat(ab, ab.inverse()).empty());

  CHECK(error_kind_of([&] { concat(ab, Word::parse("c", 3)); }) == ErrorKind::RankMismatch);
}

TEST_CASE("inverse reverses and flips") {
  CHECK(Word::parse("ab", 2).inverse().str() == "BA");
  CHECK(Word(2).inverse().empty());

  std::mt19937_64 rng(7002);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = testutil::random_reduced_word(rng, 3, 8);
    CHECK(w.inverse().inverse() == w);
    CHECK(concat(w, w.inverse()).empty());
  }
}

TEST_CASE("cyclic reduction peels conjugators") {
  auto bAB = cyclically_reduce(Word::parse("bAB", 2));
  CHECK(bAB.core.str() == "A");
  CHECK(bAB.conjugator.str() == "b");

  auto abA = cyclically_reduce(Word::parse("abA", 2));
  CHECK(abA.core.str() == "b");
  CHECK(abA.conjugator.str() == "a");

  auto ab = cyclically_reduce(Word::parse("ab", 2));
  CHECK(ab.core.str() == "ab");
  CHECK(ab.conjugator.empty());

  auto empty = cyclically_reduce(Word(2));
  CHECK(empty.core.empty());
  CHECK(empty.conjugator.empty());
}

TEST_CASE("cyclic reduction reassembles the word") {
  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = testutil::random_reduced_word(rng, 3, 10);
    auto form = cyclically_reduce(w);
    // core is cyclically reduced: first and last letters are not inverse
    if (form.core.size() >= 2) {
      CHECK(form.core.letters().front() != -form.core.letters().back());
    }
    Word back = concat(concat(form.conjugator, form.core), form.conjugator.inverse());
    CHECK(back == w);
  }
}

TEST_CASE("parse and str round-trip") {
  CHECK(Word::parse("1", 2).empty());
  CHECK(Word(2).str() == "1");
  CHECK(Word::parse("aB", 2).letters() == std::vector<std::int32_t>{1, -2});
  CHECK(Word::parse("aA", 1).empty());  // parsing reduces

  CHECK(Word::parse("abc").rank() == 3);  // inferred
  CHECK(Word::parse("1").rank() == 1);

  CHECK(error_kind_of([] { Word::parse("", 2); }) == ErrorKind::Parse);
  CHECK(error_kind_of([] { Word::parse("a1", 2); }) == ErrorKind::Parse);
  CHECK(error_kind_of([] { Word::parse("a b", 2); }) == ErrorKind::Parse);
  CHECK(error_kind_of([] { Word::parse("c", 2); }) == ErrorKind::InvalidLetter);

  std::mt19937_64 rng(7004);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = testutil::random_reduced_word(rng, 3, 9);
    CHECK(Word::parse(w.str(), 3) == w);
  }
}

TEST_CASE("abelianization counts exponents") {
  CHECK(fgtk::abelianization(Word::parse("abAb", 2)) == std::vector<std::int64_t>{0, 2});
  CHECK(fgtk::abelianization(Word(3)) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("endomorphism application") {
  Endomorphism e({Word::parse("ab", 2), Word::parse("b", 2)});
  CHECK(e.apply(Word::parse("aB", 2)).str() == "a");
  CHECK(e.apply(Word(2)).empty());

  Endomorphism id = Endomorphism::identity(2);
  CHECK(id.apply(Word::parse("abAB", 2)).str() == "abAB");

  CHECK(error_kind_of([&] { e.apply(Word::parse("c", 3)); }) == ErrorKind::RankMismatch);
  CHECK(error_kind_of([] {
          Endomorphism({Word::parse("a", 1), Word::parse("b", 2)});
        }) == ErrorKind::RankMismatch);
}

TEST_CASE("endomorphism composition law") {
  std::mt19937_64 rng(7005);
  for (int trial = 0; trial < 60; ++trial) {
    Endomorphism e1({testutil::random_reduced_word(rng, 2, 4), testutil::random_reduced_word(rng, 2, 4)});
    Endomorphism e2({testutil::random_reduced_word(rng, 2, 4), testutil::random_reduced_word(rng, 2, 4)});
    Word w = testutil::random_reduced_word(rng, 2, 6);
    CHECK(compose(e1, e2).apply(w) == e1.apply(e2.apply(w)));
  }
}

TEST_CASE("inner endomorphism conjugates") {
  Word u = Word::parse("ab", 2);
  Endomorphism inner = Endomorphism::inner(u);
  Word x = Word::parse("a", 2);
  CHECK(inner.apply(x) == concat(concat(u, x), u.inverse()));
}

TEST_CASE("word tuples enforce a common rank") {
  WordTuple t = fgtk::parse_tuple({"ab", "ba"});
  CHECK(t.rank == 2);
  CHECK(t.arity() == 2);

  WordTuple wide = fgtk::parse_tuple({"a"}, 3);
  CHECK(wide.rank == 3);

  CHECK(error_kind_of([] {
          WordTuple({Word::parse("a", 1), Word::parse("b", 2)}, 2);
        }) == ErrorKind::RankMismatch);
  CHECK(error_kind_of([] { WordTuple::of({}); }) == ErrorKind::RankMismatch);
}
