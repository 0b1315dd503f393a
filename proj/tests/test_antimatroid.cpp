#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcat/antimatroid.hpp"
#include "qcat/arquiver.hpp"
#include "qcat/io.hpp"
#include "qcat/leftmost.hpp"

using namespace qcat;

namespace {

SetSystem make(int ground, std::vector<std::uint32_t> sets) {
  SetSystem s;
  s.ground_size = ground;
  s.feasible = std::move(sets);
  std::sort(s.feasible.begin(), s.feasible.end());
  return s;
}

}  // namespace

TEST_CASE("feasible sets of a base word") {
  WeylGroup g(named_quiver("A2"));
  SetSystem s = feasible_sets_from_word(g, {1, 2, 1});
  // {}, {1}, {2}, {1,2}, {2,3}, {1,2,3}
  CHECK(s.feasible == std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b011,
                                                 0b110, 0b111});

  WeylGroup g1(named_quiver("A1"));
  CHECK(feasible_sets_from_word(g1, {1}).feasible ==
        std::vector<std::uint32_t>{0, 1});
  CHECK(feasible_sets_from_word(g1, {1, 1}).feasible ==
        std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("feasible count equals the number of expressible elements") {
  WeylGroup g(named_quiver("A3"));
  Word base = ar_word_w0(g.quiver());
  SetSystem s = feasible_sets_from_word(g, base);
  // brute force over all subsets of the base word
  std::set<std::string> elements;
  for (unsigned mask = 0; mask < (1u << base.size()); ++mask) {
    Word sub;
    for (size_t i = 0; i < base.size(); ++i)
      if (mask >> i & 1) sub.push_back(base[i]);
    elements.insert(g.evaluate_word(sub).key());
  }
  CHECK(s.feasible.size() == elements.size());
  CHECK(s.feasible.size() == 24);
  CHECK(s.contains(0));
}

TEST_CASE("accessibility") {
  CHECK(is_accessible(make(2, {0b00, 0b01, 0b11})));
  CHECK_FALSE(is_accessible(make(2, {0b00, 0b11})));
  WeylGroup g(named_quiver("A2"));
  CHECK(is_accessible(feasible_sets_from_word(g, {1, 2, 1})));
}

TEST_CASE("antimatroid exchange") {
  WeylGroup g(named_quiver("A2"));
  CHECK(is_antimatroid(feasible_sets_from_word(g, {1, 2, 1})));
  CHECK_FALSE(is_antimatroid(make(2, {0b00, 0b01, 0b10})));
  CHECK(is_antimatroid(make(1, {0b0})));
}

TEST_CASE("supersolvable exchange") {
  WeylGroup g(named_quiver("A2"));
  CHECK(is_supersolvable(feasible_sets_from_word(g, {1, 2, 1})));
  // A = {}, B = {1,2}: the forced minimum 1 gives {1}, which is missing
  CHECK_FALSE(is_supersolvable(make(2, {0b00, 0b10, 0b11})));
  std::optional<ExchangeCounterexample> ce;
  CHECK_FALSE(is_supersolvable(make(2, {0b00, 0b10, 0b11}), {}, &ce));
  REQUIRE(ce.has_value());
  CHECK(ce->axiom == "supersolvable");
}

TEST_CASE("ar reading words yield supersolvable antimatroids") {
  for (const char* name : {"A2", "A3", "A4"}) {
    Quiver q = named_quiver(name);
    WeylGroup g(q);
    SetSystem s = feasible_sets_from_word(g, ar_word_w0(q));
    CHECK(is_accessible(s));
    CHECK(is_antimatroid(s));
    CHECK(is_supersolvable(s));
    CHECK(s.feasible.size() == g.enumerate_group().size());
  }
}

TEST_CASE("every reduced word of w_0 in A2 works") {
  WeylGroup g(named_quiver("A2"));
  for (const Word& word : g.reduced_words(g.longest_element())) {
    SetSystem s = feasible_sets_from_word(g, word);
    CHECK(is_supersolvable(s));
    CHECK(s.feasible.size() == 6);
  }
}

TEST_CASE("supersolvable implies antimatroid implies accessible") {
  WeylGroup g(named_quiver("A3"));
  for (const Word& base : {Word{1, 2, 3, 1, 2, 1}, Word{1, 2, 1, 3, 2, 1},
                           Word{3, 2, 1, 2, 3, 2}}) {
    SetSystem s = feasible_sets_from_word(g, base);
    if (is_supersolvable(s)) CHECK(is_antimatroid(s));
    if (is_antimatroid(s)) CHECK(is_accessible(s));
  }
}
