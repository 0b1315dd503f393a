#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

/// Dense square integer matrix.  All group-theoretic data in this project
/// (Cartan matrices, Euler forms, reflection matrices, Weyl group elements)
/// is exact integer arithmetic; there is no floating point anywhere.
struct IntMatrix {
  int n = 0;
  std::vector<i64> a;  // row-major, n*n

  IntMatrix() = default;
  explicit IntMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  i64& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  i64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static IntMatrix identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntMatrix mul(const IntMatrix& rhs) const {
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        i64 v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < n; ++j) out.at(i, j) += v * rhs.at(k, j);
      }
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Vec apply(const Vec& x) const {
    Vec y(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  /// Byte key for hashing / map lookups.
  std::string key() const {
    return std::string(reinterpret_cast<const char*>(a.data()),
                       a.size() * sizeof(i64));
  }
};

/// Inverse of a unitriangular (unit diagonal, triangular either way) integer
/// matrix; the inverse is again integral.
IntMatrix inverse_unitriangular(const IntMatrix& m);

inline IntMatrix negate(const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& v : out.a) v = -v;
  return out;
}

}  // namespace qcat
