#include <doctest.h>

#include "qcat/fp.hpp"

using namespace qcat;

TEST_CASE("field arithmetic") {
  Fp f(5);
  CHECK(f.norm(-3) == 2);
  CHECK(f.mul(3, 4) == 2);
  for (int a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("rref, rank, kernel") {
  Fp f(5);
  FpMat m(2, 3);
  // rows (1,2,3), (2,4,2): independent mod 5
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 2;
  CHECK(fp_rank(f, m) == 2);
  FpMat ker = fp_kernel(f, m);
  CHECK(ker.cols == 1);
  // m . ker == 0
  FpMat prod = fp_mul(f, m, ker);
  for (int v : prod.a) CHECK(v == 0);
}

TEST_CASE("span insert and reduce") {
  Fp f(5);
  FpSpan span(f, 3);
  CHECK(span.insert({1, 2, 0}));
  CHECK(span.insert({0, 1, 1}));
  CHECK_FALSE(span.insert({1, 3, 1}));  // dependent
  CHECK(span.dim() == 2);
  CHECK(span.contains({2, 4, 0}));
  CHECK_FALSE(span.contains({0, 0, 1}));
}
