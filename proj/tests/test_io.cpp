#include <doctest.h>

#include "qcat/io.hpp"

using namespace qcat;

TEST_CASE("quiver json") {
  Quiver q = quiver_from_json(
      R"({"n": 3, "arrows": [[1,2],[2,3],[1,3]], "name": "triangle"})");
  CHECK(q.n == 3);
  CHECK(q.arrows.size() == 3);
  CHECK(q.name == "triangle");
  Quiver round = quiver_from_json(quiver_to_json(q));
  CHECK(round.arrows == q.arrows);
  CHECK_THROWS_AS(quiver_from_json("{"), ParseError);
  CHECK_THROWS_AS(quiver_from_json(R"({"n": 2, "arrows": [[2,1]]})"),
                  NumberingError);
}

TEST_CASE("named quivers") {
  CHECK(named_quiver("A5").n == 5);
  CHECK(named_quiver("D5").dynkin_label == "D5");
  CHECK(named_quiver("E7").dynkin_label == "E7");
  CHECK(named_quiver("triangle").arrows.size() == 3);
  CHECK(named_quiver("kronecker").arrows.size() == 2);
  CHECK_THROWS_AS(named_quiver("B2"), ParseError);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("1 2 3 2 1") == Word{1, 2, 3, 2, 1});
  CHECK(parse_word("s1s2s3s2s1") == Word{1, 2, 3, 2, 1});
  CHECK(parse_word("").empty());
  CHECK(parse_word("  ").empty());
  CHECK_THROWS_AS(parse_word("1 x 2"), ParseError);
  CHECK_THROWS_AS(parse_word("0 1"), ParseError);
  CHECK(word_to_string({1, 2, 3}) == "1 2 3");
}
