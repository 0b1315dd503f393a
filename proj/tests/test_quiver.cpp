#include <doctest.h>

#include "qcat/io.hpp"
#include "qcat/quiver.hpp"
#include "qcat/weyl.hpp"

using namespace qcat;

TEST_CASE("validation and classification") {
  Quiver a3 = validate_quiver(3, {{1, 2}, {2, 3}});
  CHECK(a3.dynkin);
  CHECK(a3.dynkin_label == "A3");

  Quiver tri = validate_quiver(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(tri.dynkin);

  CHECK_THROWS_AS(validate_quiver(2, {{1, 2}, {2, 1}}), CycleError);
  CHECK_THROWS_AS(validate_quiver(2, {{2, 1}}), NumberingError);
  CHECK_THROWS_AS(validate_quiver(3, {{1, 2}}), DisconnectedError);

  Quiver d4 = named_quiver("D4");
  CHECK(d4.dynkin_label == "D4");
  CHECK(named_quiver("E6").dynkin_label == "E6");
  CHECK_FALSE(named_quiver("kronecker").dynkin);
}

TEST_CASE("renumbering suggestion") {
  auto renum = suggest_renumbering(2, {{2, 1}});
  CHECK(renum[2] == 1);
  CHECK(renum[1] == 2);
  CHECK_THROWS_AS(suggest_renumbering(2, {{1, 2}, {2, 1}}), CycleError);
}

TEST_CASE("cartan matrix") {
  Quiver a2 = named_quiver("A2");
  IntMatrix c = cartan_matrix(a2);
  CHECK(c.at(0, 0) == 2);
  CHECK(c.at(0, 1) == -1);
  CHECK(c.at(1, 0) == -1);

  Quiver tri = named_quiver("triangle");
  IntMatrix ct = cartan_matrix(tri);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ct.at(i, j) == (i == j ? 2 : -1));

  IntMatrix ck = cartan_matrix(named_quiver("kronecker"));
  CHECK(ck.at(0, 1) == -2);
}

TEST_CASE("euler matrix and the cartan relation") {
  Quiver a2 = named_quiver("A2");
  IntMatrix e = euler_matrix(a2);
  CHECK(e.at(0, 0) == 1);
  CHECK(e.at(0, 1) == -1);
  CHECK(e.at(1, 0) == 0);

  for (const char* name : {"A2", "A3", "A4", "D4", "triangle", "kronecker"}) {
    Quiver q = named_quiver(name);
    IntMatrix e2 = euler_matrix(q);
    IntMatrix sum = e2;
    IntMatrix et = e2.transpose();
    for (size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += et.a[i];
    CHECK(sum == cartan_matrix(q));
    for (int i = 0; i < q.n; ++i)
      for (int j = 0; j <= i; ++j)
        CHECK(e2.at(i, j) == (i == j ? 1 : 0));  // upper triangular
  }
}

TEST_CASE("coxeter word and double quiver") {
  CHECK(coxeter_word(named_quiver("A3")) == Word{1, 2, 3});
  CHECK(coxeter_word(named_quiver("A1")) == Word{1});
  CHECK(double_quiver(named_quiver("A2")).all_arrows.size() == 2);
  CHECK(double_quiver(named_quiver("A3")).all_arrows.size() == 4);
  CHECK(double_quiver(named_quiver("triangle")).all_arrows.size() == 6);
}

TEST_CASE("dynkin detection agrees with group finiteness at small rank") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
    Quiver q = named_quiver(name);
    CHECK(q.dynkin);
    CHECK_NOTHROW(WeylGroup(q).enumerate_group(500));
  }
  for (const char* name : {"triangle", "kronecker"}) {
    Quiver q = named_quiver(name);
    CHECK_FALSE(q.dynkin);
    CHECK_THROWS_AS(WeylGroup(q).enumerate_group(500), CapExceeded);
  }
}

TEST_CASE("exhaustive rank <= 4: dynkin iff the group is finite") {
  // all admissible quivers on n vertices with arrow multiplicities <= 2
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    int total = 1;
    for (size_t s = 0; s < slots.size(); ++s) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<Arrow> arrows;
      int c = code;
      for (const auto& [i, j] : slots) {
        for (int m = 0; m < c % 3; ++m) arrows.emplace_back(i, j);
        c /= 3;
      }
      Quiver q;
      try {
        q = validate_quiver(n, arrows);
      } catch (const DisconnectedError&) {
        continue;
      }
      bool finite = true;
      try {
        WeylGroup(q).enumerate_group(500);
      } catch (const CapExceeded&) {
        finite = false;
      }
      CHECK(q.dynkin == finite);
    }
  }
}
