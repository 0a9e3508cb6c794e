#include <random>
#include <vector>

#include "doctest.h"
#include "fgtk/stallings.hpp"
#include "test_util.hpp"

using fgtk::ErrorKind;
using fgtk::GraphEdge;
using fgtk::StallingsGraph;
using fgtk::Word;
using fgtk::WordTuple;
using testutil::error_kind_of;

namespace {

Word product_of(const std::vector<Word>& gens, const std::vector<int>& expression,
                std::int32_t rank) {
  Word acc(rank);
  for (int e : expression) {
    const Word& g = gens[static_cast<std::size_t>(std::abs(e) - 1)];
    acc = concat(acc, e > 0 ? g : g.inverse());
  }
  return acc;
}

}  // namespace

TEST_CASE("single generator graphs") {
  auto loop = StallingsGraph::build({Word::parse("a", 1)}, 1);
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.edges() == std::vector<GraphEdge>{{0, 0, 1}});
  CHECK(loop.subgroup_rank() == 1);
  CHECK(loop.is_complete());

  auto sq = StallingsGraph::build({Word::parse("aa", 1)}, 1);
  CHECK(sq.vertex_count() == 2);
  CHECK(sq.edges() == std::vector<GraphEdge>{{0, 1, 1}, {1, 0, 1}});
  CHECK(sq.subgroup_rank() == 1);
  CHECK(sq.is_complete());  // index two
  CHECK(sq.contains(Word::parse("aa", 1)));
  CHECK(sq.contains(Word::parse("AAAA", 1)));
  CHECK_FALSE(sq.contains(Word::parse("a", 1)));
  CHECK(sq.contains(Word(1)));

  auto bas = sq.basis();
  REQUIRE(bas.size() == 1);
  CHECK(bas[0].str() == "aa");
}

TEST_CASE("trivial subgroup") {
  auto trivial = StallingsGraph::build({}, 2);
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edges().empty());
  CHECK(trivial.subgroup_rank() == 0);
  CHECK(trivial.basis().empty());
  CHECK(trivial.contains(Word(2)));
  CHECK_FALSE(trivial.contains(Word::parse("a", 2)));
  CHECK_FALSE(trivial.is_complete());

  // empty words contribute nothing
  CHECK(StallingsGraph::build({Word(2), Word::parse("a", 2)}, 2) ==
        StallingsGraph::build({Word::parse("a", 2)}, 2));
}

TEST_CASE("folding merges duplicate generators") {
  auto once = StallingsGraph::build({Word::parse("a", 1)}, 1);
  auto twice = StallingsGraph::build({Word::parse("a", 1), Word::parse("a", 1)}, 1);
  CHECK(once == twice);
}

TEST_CASE("build is order independent") {
  auto ab_ac = StallingsGraph::build(fgtk::parse_tuple({"ab", "ac"}, 3));
  auto ac_ab = StallingsGraph::build(fgtk::parse_tuple({"ac", "ab"}, 3));
  CHECK(ab_ac == ac_ab);
}

TEST_CASE("shared prefixes fold") {
  auto g = StallingsGraph::build(fgtk::parse_tuple({"ab", "ac"}, 3));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges().size() == 3);
  CHECK(g.subgroup_rank() == 2);
  CHECK(g.contains(Word::parse("Bc", 3)));
  CHECK(g.contains(Word::parse("ab", 3)));
  CHECK(g.contains(Word::parse("abBc", 3)));  // reduces to ac
  CHECK_FALSE(g.contains(Word::parse("a", 3)));
  CHECK_FALSE(g.contains(Word::parse("b", 3)));
  CHECK_FALSE(g.is_complete());
}

TEST_CASE("conjugates keep a tail to the base") {
  auto g = StallingsGraph::build({Word::parse("abA", 2)}, 2);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges() == std::vector<GraphEdge>{{0, 1, 1}, {1, 1, 2}});
  CHECK(g.subgroup_rank() == 1);
  CHECK(g.contains(Word::parse("abA", 2)));
  CHECK(g.contains(Word::parse("abbA", 2)));
  CHECK_FALSE(g.contains(Word::parse("b", 2)));
}

TEST_CASE("whole group graph") {
  auto g = StallingsGraph::build(fgtk::parse_tuple({"a", "b"}));
  CHECK(g.vertex_count() == 1);
  CHECK(g.subgroup_rank() == 2);
  CHECK(g.is_complete());
  auto bas = g.basis();
  REQUIRE(bas.size() == 2);
  CHECK(bas[0].str() == "a");
  CHECK(bas[1].str() == "b");
}

TEST_CASE("basis of a rank two fold") {
  auto g = StallingsGraph::build(fgtk::parse_tuple({"ab", "ba"}));
  CHECK(g.vertex_count() == 3);
  CHECK(g.subgroup_rank() == 2);
  auto bas = g.basis();
  REQUIRE(bas.size() == 2);
  CHECK(bas[0].str() == "ba");
  CHECK(bas[1].str() == "ab");
}

TEST_CASE("membership validates rank") {
  auto g = StallingsGraph::build(fgtk::parse_tuple({"ab"}));
  CHECK(error_kind_of([&] { g.contains(Word::parse("c", 3)); }) == ErrorKind::RankMismatch);
}

TEST_CASE("graph json is stable") {
  auto g = StallingsGraph::build({Word::parse("aa", 1)}, 1);
  CHECK(g.to_json() == R"({"vertices":2,"base":0,"edges":[[0,1,1],[1,0,1]]})");
}

TEST_CASE("random tuples: containment, rank bound, basis round trip") {
  std::mt19937_64 rng(7200);
  std::uniform_int_distribution<std::size_t> arity(1, 3);
  std::uniform_int_distribution<int> expr_len(0, 4);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  for (int trial = 0; trial < 120; ++trial) {
    std::int32_t rank = static_cast<std::int32_t>(1 + (trial % 3));
    WordTuple t = testutil::random_tuple(rng, rank, arity(rng), 6);
    auto g = StallingsGraph::build(t);

    CHECK(g.subgroup_rank() <= static_cast<std::int32_t>(t.arity()));

    // random products of the generators stay inside
    std::uniform_int_distribution<int> pick_gen(1, static_cast<int>(t.arity()));
    for (int p = 0; p < 5; ++p) {
      std::vector<int> expr;
      int len = expr_len(rng);
      for (int i = 0; i < len; ++i) expr.push_back(pick_gen(rng) * (pick_sign(rng) ? 1 : -1));
      CHECK(g.contains(product_of(t.words, expr, rank)));
    }

    // the basis generates the same subgroup
    auto bas = g.basis();
    CHECK(static_cast<std::int32_t>(bas.size()) == g.subgroup_rank());
    auto g2 = StallingsGraph::build(bas, rank);
    CHECK(g == g2);
    for (const auto& w : bas) CHECK(g.contains(w));
    for (const auto& w : t.words) CHECK(g2.contains(w));
  }
}
