#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcat/grassmann.hpp"
#include "qcat/io.hpp"

using namespace qcat;

TEST_CASE("rectangle word") {
  GridWord g = rectangle_word(4, 2);
  CHECK(g.generator(1, 1) == 2);
  CHECK(g.generator(1, 3) == 4);
  CHECK(g.generator(2, 1) == 1);
  CHECK(g.generator(2, 3) == 3);
  CHECK(rectangle_word(2, 1).generator(1, 2) == 2);
  CHECK_THROWS_AS(rectangle_word(3, 4), InvalidIndex);
}

TEST_CASE("partitions in a rectangle") {
  CHECK(partitions_in_rectangle(4, 2).size() == 10);
  CHECK(partitions_in_rectangle(1, 1).size() == 2);
  CHECK(partitions_in_rectangle(2, 1).size() == 3);
}

TEST_CASE("word of a partition") {
  Partition full;
  full.n = 4;
  full.k = 2;
  full.parts = {3, 3};
  CHECK(word_of_partition(full) == Word{2, 3, 4, 1, 2, 3});
  CHECK(static_cast<int>(word_of_partition(full).size()) == 2 * (4 - 2 + 1));

  Partition empty;
  empty.n = 4;
  empty.k = 2;
  CHECK(word_of_partition(empty).empty());

  Partition one;
  one.n = 4;
  one.k = 2;
  one.parts = {1};
  CHECK(word_of_partition(one) == Word{2});

  // the full word is reduced and maximal among the coset representatives
  WeylGroup g(linear_a_quiver(4));
  CHECK(g.is_reduced(word_of_partition(full)));
  WeylElement top = g.evaluate_word(word_of_partition(full));
  for (const WeylElement& w : grassmannian_permutations(g, 2))
    CHECK(w.len <= top.len);
}

TEST_CASE("bad pattern detection") {
  Partition box;
  box.n = 2;
  box.k = 2;
  box.parts = {2, 2};
  CellSelection all = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK_FALSE(has_bad_le(box, all));
  CHECK_FALSE(has_bad_le(box, {}));
  CHECK(has_bad_le(box, {{2, 2}}));
  CHECK_FALSE(has_bad_le(box, {{1, 1}}));
  CHECK_FALSE(has_bad_le(box, {{1, 2}, {2, 2}}));
}

TEST_CASE("leftmost iff no bad pattern") {
  CHECK(verify_le_theorem(2, 1));
  CHECK(verify_le_theorem(3, 2));
  CHECK(verify_le_theorem(4, 2));
}

TEST_CASE("grassmannian permutations") {
  WeylGroup g2(linear_a_quiver(2));
  auto reps2 = grassmannian_permutations(g2, 1);
  CHECK(reps2.size() == 3);
  bool has_identity = false;
  for (const WeylElement& w : reps2)
    if (w.is_identity()) has_identity = true;
  CHECK(has_identity);

  WeylGroup g4(linear_a_quiver(4));
  auto reps = grassmannian_permutations(g4, 2);
  CHECK(reps.size() == 10);
  std::set<std::string> from_partitions;
  for (const Partition& lambda : partitions_in_rectangle(4, 2))
    from_partitions.insert(
        g4.evaluate_word(word_of_partition(lambda)).key());
  CHECK(from_partitions.size() == 10);
  for (const WeylElement& w : reps) CHECK(from_partitions.count(w.key()));
}

TEST_CASE("partition words are coset-minimal and bijective for small rank") {
  auto binomial = [](int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return static_cast<size_t>(r);
  };
  for (int n = 2; n <= 5; ++n) {
    WeylGroup g(linear_a_quiver(n));
    for (int k = 1; k <= n; ++k) {
      std::set<std::string> images;
      for (const Partition& lambda : partitions_in_rectangle(n, k)) {
        Word word = word_of_partition(lambda);
        CHECK(g.is_reduced(word));
        WeylElement w = g.evaluate_word(word);
        for (int i = 1; i <= n; ++i)
          if (i != k) CHECK_FALSE(g.left_descent(w, i));
        images.insert(w.key());
      }
      CHECK(images.size() == partitions_in_rectangle(n, k).size());
      CHECK(images.size() == binomial(n + 1, k));
      CHECK(grassmannian_permutations(g, k).size() == binomial(n + 1, k));
    }
  }
}

TEST_CASE("full and empty selections never show the bad pattern") {
  for (const Partition& lambda : partitions_in_rectangle(4, 2)) {
    CellSelection all;
    for (int r = 1; r <= lambda.rows(); ++r)
      for (int c = 1; c <= lambda.parts[r - 1]; ++c) all.emplace_back(r, c);
    CHECK_FALSE(has_bad_le(lambda, all));
    CHECK_FALSE(has_bad_le(lambda, {}));
  }
}

TEST_CASE("reading orders respecting the grid agree") {
  WeylGroup g(linear_a_quiver(4));
  for (const Partition& lambda : partitions_in_rectangle(4, 2)) {
    Word by_rows = word_of_partition(lambda);
    // anti-diagonal sweep: cells ordered by r+c, then by row
    GridWord grid = rectangle_word(4, 2);
    std::vector<std::tuple<int, int, int>> cells;
    for (int r = 1; r <= lambda.rows(); ++r)
      for (int c = 1; c <= lambda.parts[r - 1]; ++c)
        cells.emplace_back(r + c, r, c);
    std::sort(cells.begin(), cells.end());
    Word diagonal;
    for (const auto& [sum, r, c] : cells) diagonal.push_back(grid.generator(r, c));
    CHECK(g.evaluate_word(by_rows) == g.evaluate_word(diagonal));
  }
}
