#pragma once

#include <cstdint>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat {

/// Arithmetic mod a small prime p.
struct Fp {
  int p;
  explicit Fp(int prime) : p(prime) {
    if (prime < 2) throw ParseError("field characteristic must be prime");
  }
  int norm(long long x) const {
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
  }
  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return norm(a - b); }
  int mul(int a, int b) const {
    return static_cast<int>(static_cast<long long>(a) * b % p);
  }
  int neg(int a) const { return a == 0 ? 0 : p - a; }
  int inv(int a) const {  // p is prime and small
    int r = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

/// Dense matrix over F_p, row-major.  Linear maps act on column vectors,
/// y = M x, so an (r x c) matrix maps F^c -> F^r.
struct FpMat {
  int rows = 0, cols = 0;
  std::vector<int> a;

  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FpMat identity(int n) {
    FpMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const FpMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

FpMat fp_mul(const Fp& f, const FpMat& x, const FpMat& y);
FpMat fp_add(const Fp& f, const FpMat& x, const FpMat& y);
FpMat fp_scale(const Fp& f, int c, const FpMat& x);
FpMat fp_transpose(const FpMat& x);
FpMat fp_hstack(const FpMat& x, const FpMat& y);
FpMat fp_vstack(const FpMat& x, const FpMat& y);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row (rows below are zero and are trimmed).
std::vector<int> fp_rref(const Fp& f, FpMat& m);

int fp_rank(const Fp& f, FpMat m);

/// Basis of the kernel of m (as columns of the returned matrix).
FpMat fp_kernel(const Fp& f, const FpMat& m);

/// Row-space basis in rref form (a canonical basis of the span of the rows).
FpMat fp_row_basis(const Fp& f, FpMat m);

/// Incremental span of row vectors with reduction, mirroring textbook
/// Gaussian elimination; used wherever we accumulate subspaces.
struct FpSpan {
  const Fp* f;
  int width;
  FpMat basis;             // rref rows
  std::vector<int> pivots;

  FpSpan(const Fp& field, int w) : f(&field), width(w), basis(0, w) {}

  /// Reduce v against the current basis (in place); returns true if v was
  /// already in the span (i.e. reduces to zero).
  bool reduce(std::vector<int>& v) const;
  /// Insert v if independent; returns true if the span grew.
  bool insert(std::vector<int> v);
  bool contains(std::vector<int> v) const {
    return reduce(v);
  }
  int dim() const { return basis.rows; }
};

}  // namespace qcat
