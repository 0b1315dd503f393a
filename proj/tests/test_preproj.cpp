#include <doctest.h>

#include <algorithm>
#include <random>

#include "qcat/io.hpp"
#include "qcat/preproj.hpp"

using namespace qcat;

TEST_CASE("algebra dimensions") {
  PreprojAlgebra a2(named_quiver("A2"), 5);
  CHECK(a2.dim() == 4);
  CHECK(a2.graded_dims() == std::vector<int>{2, 2});

  PreprojAlgebra a3(named_quiver("A3"), 5);
  CHECK(a3.dim() == 10);

  PreprojAlgebra a1(named_quiver("A1"), 5);
  CHECK(a1.dim() == 1);

  CHECK_THROWS_AS(PreprojAlgebra(named_quiver("triangle"), 5), NotDynkin);
}

TEST_CASE("associativity on random triples") {
  PreprojAlgebra pi(named_quiver("A3"), 5);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    PreprojAlgebra::Elt x = pi.zero(), y = pi.zero(), z = pi.zero();
    for (int g = 0; g < pi.dim(); ++g) {
      x[g] = static_cast<int>(rng() % 5);
      y[g] = static_cast<int>(rng() % 5);
      z[g] = static_cast<int>(rng() % 5);
    }
    CHECK(pi.multiply(pi.multiply(x, y), z) ==
          pi.multiply(x, pi.multiply(y, z)));
  }
}

TEST_CASE("ideals I_i") {
  PreprojAlgebra pi(named_quiver("A2"), 5);
  IdealSubspace i1 = ideal_Ii(pi, 1);
  IdealSubspace i2 = ideal_Ii(pi, 2);
  CHECK(i1.dim() == 3);
  CHECK(i2.dim() == 3);
  // I_i . I_i = I_i
  CHECK(multiply_ideals(pi, i1, i1).basis == i1.basis);
  CHECK(multiply_ideals(pi, i2, i2).basis == i2.basis);
  // I . Pi = I and 0 . J = 0
  CHECK(multiply_ideals(pi, i1, ideal_full(pi)).basis == i1.basis);
  CHECK(multiply_ideals(pi, ideal_zero(pi), i1).dim() == 0);

  PreprojAlgebra a3(named_quiver("A3"), 5);
  CHECK(ideal_Ii(a3, 1).dim() == 9);
}

TEST_CASE("I_w basics") {
  Quiver q = named_quiver("A2");
  PreprojAlgebra pi(q, 5);
  WeylGroup g(q);
  IdealCache ideals(pi, g);
  CHECK(ideals.ideal_Iw(Word{}).dim() == pi.dim());
  CHECK(ideals.ideal_Iw(Word{1, 2, 1}).dim() == 0);
  // both reduced words of w_0 vanish
  IdealSubspace other = ideal_full(pi);
  for (int letter : Word{2, 1, 2})
    other = multiply_ideals(pi, ideal_Ii(pi, letter), other);
  CHECK(other.dim() == 0);
  CHECK_THROWS_AS(ideals.ideal_Iw(Word{1, 1}), NotReduced);

  Quiver a3 = named_quiver("A3");
  PreprojAlgebra pi3(a3, 5);
  WeylGroup g3(a3);
  IdealCache ideals3(pi3, g3);
  CHECK(ideals3.ideal_Iw(Word{1}).dim() == 9);
}

TEST_CASE("reduced word independence on A2") {
  Quiver q = named_quiver("A2");
  PreprojAlgebra pi(q, 5);
  WeylGroup g(q);
  IdealCache ideals(pi, g);
  for (const WeylElement& w : g.enumerate_group()) {
    const IdealSubspace& ref = ideals.ideal_Iw(w);
    for (const Word& word : g.reduced_words(w)) {
      IdealSubspace folded = ideal_full(pi);
      for (int letter : word)
        folded = multiply_ideals(pi, ideal_Ii(pi, letter), folded);
      CHECK(folded.basis == ref.basis);
    }
  }
}

TEST_CASE("restriction to kQ") {
  Quiver q = named_quiver("A2");
  PreprojAlgebra pi(q, 5);
  Catalogue cat(q, 5);
  Rep whole = restrict_to_kQ(pi, ideal_full(pi));
  CHECK(whole.dim == DimVector{2, 2});
  auto parts = decompose(q, whole);
  CHECK(parts == std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
  Rep nothing = restrict_to_kQ(pi, ideal_zero(pi));
  CHECK(nothing.dim == DimVector{0, 0});

  WeylGroup g(q);
  IdealCache ideals(pi, g);
  Rep quotient_by_w0 =
      restrict_quotient_to_kQ(pi, ideals.ideal_Iw(g.longest_element()));
  CHECK(decompose(q, quotient_by_w0) ==
        std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("C(I_w) and C(Pi/I_w)") {
  Quiver q = named_quiver("A2");
  PreprojAlgebra pi(q, 5);
  WeylGroup g(q);
  IdealCache ideals(pi, g);
  Catalogue cat(q, 5);
  CHECK(C_of(pi, ideals, cat, g.identity()) == full_set(cat));
  CHECK(C_of(pi, ideals, cat, g.longest_element()).empty());
  CHECK(C_of_quotient(pi, ideals, cat, g.identity()).empty());
  CHECK(C_of_quotient(pi, ideals, cat, g.longest_element()) == full_set(cat));
  IndecSet s1_only{cat.index_of({1, 0})};
  CHECK(C_of_quotient(pi, ideals, cat, g.evaluate_word({1})) == s1_only);

  Quiver a3 = named_quiver("A3");
  PreprojAlgebra pi3(a3, 5);
  WeylGroup g3(a3);
  IdealCache ideals3(pi3, g3);
  Catalogue cat3(a3, 5);
  IndecSet expected = full_set(cat3);
  expected.erase(cat3.index_of({1, 0, 0}));
  expected.erase(cat3.index_of({1, 1, 0}));
  expected.erase(cat3.index_of({1, 1, 1}));
  expected.erase(cat3.index_of({0, 1, 1}));  // tau^{-1} P_2
  CHECK(C_of(pi3, ideals3, cat3, g3.evaluate_word({1, 2, 3, 2})) == expected);
}

TEST_CASE("duality dimension shadow") {
  Quiver q = named_quiver("A2");
  PreprojAlgebra pi(q, 5);
  WeylGroup g(q);
  IdealCache ideals(pi, g);
  for (const WeylElement& w : g.enumerate_group())
    CHECK(verify_duality(pi, ideals, w));
}

TEST_CASE("ideal containment against bruhat order") {
  Quiver q = named_quiver("A2");
  PreprojAlgebra pi(q, 5);
  WeylGroup g(q);
  IdealCache ideals(pi, g);
  WeylElement s1 = g.evaluate_word({1});
  WeylElement s2 = g.evaluate_word({2});
  WeylElement s1s2 = g.evaluate_word({1, 2});
  CHECK(ideals.ideal_contains(g.identity(), g.longest_element()));
  CHECK(ideals.ideal_contains(s1, s1s2));
  CHECK_FALSE(ideals.ideal_contains(s1, s2));
  for (const WeylElement& v : g.enumerate_group())
    for (const WeylElement& w : g.enumerate_group())
      CHECK(ideals.ideal_contains(v, w) == g.bruhat_leq(v, w));
}

TEST_CASE("characteristic independence of dimensions on A2") {
  Quiver q = named_quiver("A2");
  WeylGroup g(q);
  PreprojAlgebra pi3(q, 3), pi5(q, 5);
  IdealCache c3(pi3, g), c5(pi5, g);
  CHECK(pi3.dim() == pi5.dim());
  for (const WeylElement& w : g.enumerate_group())
    CHECK(c3.ideal_Iw(w).dim() == c5.ideal_Iw(w).dim());
}
