#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcat/io.hpp"
#include "qcat/leftmost.hpp"

using namespace qcat;

TEST_CASE("worked examples") {
  WeylGroup a3(named_quiver("A3"));
  WeylElement w = a3.evaluate_word({1, 2, 3, 2});
  CHECK(leftmost_positions(a3, w, C_INFINITY) == PositionList{1, 2, 3, 5});
  auto missing = positions_to_indices(a3.quiver(), {1, 2, 3, 5});
  REQUIRE(missing.size() == 4);
  CHECK(missing[0] == PreprojIndex{1, 0});
  CHECK(missing[1] == PreprojIndex{2, 0});
  CHECK(missing[2] == PreprojIndex{3, 0});
  CHECK(missing[3] == PreprojIndex{2, 1});

  WeylGroup tri(named_quiver("triangle"));
  WeylElement v = tri.evaluate_word({1, 2, 3, 2, 1});
  CHECK(leftmost_positions(tri, v, C_INFINITY) ==
        PositionList{1, 2, 3, 5, 7});
  auto tm = positions_to_indices(tri.quiver(), {1, 2, 3, 5, 7});
  CHECK(tm[3] == PreprojIndex{2, 1});
  CHECK(tm[4] == PreprojIndex{1, 2});

  CHECK(leftmost_positions(a3, a3.identity(), C_INFINITY).empty());
}

TEST_CASE("word_from_missing") {
  SubcategorySpec spec;
  spec.quiver = named_quiver("A3");
  spec.missing = {{1, 0}, {2, 0}, {3, 0}, {2, 1}};
  CHECK(word_from_missing(spec) == Word{1, 2, 3, 2});
  spec.missing.clear();
  CHECK(word_from_missing(spec).empty());
  spec.quiver = named_quiver("triangle");
  spec.missing = {{1, 0}, {2, 0}, {3, 0}, {2, 1}, {1, 2}};
  CHECK(word_from_missing(spec) == Word{1, 2, 3, 2, 1});
}

TEST_CASE("category_of basics") {
  WeylGroup a2(named_quiver("A2"));
  CHECK(category_of(a2, a2.identity()).missing.empty());
  auto m = category_of(a2, a2.evaluate_word({2})).missing;
  REQUIRE(m.size() == 1);
  CHECK(m[0] == PreprojIndex{2, 0});
}

TEST_CASE("round trip and injectivity") {
  for (const char* name : {"A2", "A3", "D4"}) {
    WeylGroup g(named_quiver(name));
    std::set<std::string> seen;
    for (const WeylElement& w : g.enumerate_group()) {
      SubcategorySpec spec = category_of(g, w);
      CHECK(static_cast<int>(spec.missing.size()) == w.len);
      CHECK(g.evaluate_word(word_from_missing(spec)) == w);
      std::string key;
      for (const auto& idx : spec.missing)
        key += std::to_string(idx.j) + "." + std::to_string(idx.k) + ";";
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("greedy list is lexicographically smallest reduced occurrence") {
  for (const char* name : {"A2", "A3"}) {
    WeylGroup g(named_quiver(name));
    Word base;
    for (int copy = 0; copy < 3; ++copy)
      for (int i = 1; i <= g.rank(); ++i) base.push_back(i);
    for (const WeylElement& w : g.enumerate_group()) {
      PositionList greedy = leftmost_positions(g, w, base);
      // enumerate every reduced occurrence of w in the base
      int len = w.len;
      std::vector<PositionList> occurrences;
      PositionList cur;
      auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == len) {
          Word sub;
          for (int p : cur) sub.push_back(base[p - 1]);
          if (g.evaluate_word(sub) == w) occurrences.push_back(cur);
          return;
        }
        for (int p = start; p <= static_cast<int>(base.size()); ++p) {
          cur.push_back(p);
          self(self, p + 1);
          cur.pop_back();
        }
      };
      rec(rec, 1);
      REQUIRE(!occurrences.empty());
      CHECK(*std::min_element(occurrences.begin(), occurrences.end()) ==
            greedy);
    }
  }
}

TEST_CASE("weak order monotonicity of position sets") {
  WeylGroup g(named_quiver("A3"));
  auto elements = g.enumerate_group();
  for (const WeylElement& v : elements)
    for (const WeylElement& w : elements) {
      if (!g.weak_leq_right(v, w)) continue;
      PositionList pv = leftmost_positions(g, v, C_INFINITY);
      PositionList pw = leftmost_positions(g, w, C_INFINITY);
      CHECK(std::includes(pw.begin(), pw.end(), pv.begin(), pv.end()));
    }
}

TEST_CASE("is_leftmost") {
  WeylGroup g(named_quiver("A2"));
  CHECK(is_leftmost(g, {1, 2, 1}, {2, 3}));
  CHECK_FALSE(is_leftmost(g, {1, 2, 1}, {3}));
  CHECK(is_leftmost(g, {1, 2, 1}, {}));
  CHECK_FALSE(is_leftmost(g, {1, 2, 1}, {1, 2, 3, 4}));  // out of range
}

TEST_CASE("finite base exhaustion") {
  WeylGroup g(named_quiver("A2"));
  CHECK_THROWS_AS(
      leftmost_positions(g, g.evaluate_word({1, 2, 1}), Word{1, 2}),
      NotASubword);
}
