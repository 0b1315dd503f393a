#include "qcat/fp.hpp"

namespace qcat {

FpMat fp_mul(const Fp& f, const FpMat& x, const FpMat& y) {
  if (x.cols != y.rows) throw InternalError("fp_mul shape mismatch");
  FpMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
    }
  return out;
}

FpMat fp_add(const Fp& f, const FpMat& x, const FpMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw InternalError("fp_add shape mismatch");
  FpMat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.add(out.a[i], y.a[i]);
  return out;
}

FpMat fp_scale(const Fp& f, int c, const FpMat& x) {
  FpMat out = x;
  for (auto& v : out.a) v = f.mul(f.norm(c), v);
  return out;
}

FpMat fp_transpose(const FpMat& x) {
  FpMat out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

FpMat fp_hstack(const FpMat& x, const FpMat& y) {
  if (x.rows == 0 && x.cols == 0) return y;
  if (y.rows == 0 && y.cols == 0) return x;
  if (x.rows != y.rows) throw InternalError("fp_hstack shape mismatch");
  FpMat out(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) out.at(i, x.cols + j) = y.at(i, j);
  }
  return out;
}

FpMat fp_vstack(const FpMat& x, const FpMat& y) {
  if (x.rows == 0 && x.cols == 0) return y;
  if (y.rows == 0 && y.cols == 0) return x;
  if (x.cols != y.cols) throw InternalError("fp_vstack shape mismatch");
  FpMat out(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) out.at(x.rows + i, j) = y.at(i, j);
  return out;
}

std::vector<int> fp_rref(const Fp& f, FpMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    int s = f.inv(m.at(row, col));
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(s, m.at(row, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m.at(i, col)) continue;
      int c = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  // trim zero rows
  FpMat trimmed(row, m.cols);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < m.cols; ++j) trimmed.at(i, j) = m.at(i, j);
  m = trimmed;
  return pivots;
}

int fp_rank(const Fp& f, FpMat m) {
  return static_cast<int>(fp_rref(f, m).size());
}

FpMat fp_kernel(const Fp& f, const FpMat& m) {
  FpMat r = m;
  std::vector<int> pivots = fp_rref(f, r);
  std::vector<char> is_pivot(m.cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  int free_count = m.cols - static_cast<int>(pivots.size());
  FpMat ker(m.cols, free_count);
  int col = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    ker.at(j, col) = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      ker.at(pivots[i], col) = f.neg(r.at(static_cast<int>(i), j));
    ++col;
  }
  return ker;
}

FpMat fp_row_basis(const Fp& f, FpMat m) {
  fp_rref(f, m);
  return m;
}

bool FpSpan::reduce(std::vector<int>& v) const {
  for (int i = 0; i < basis.rows; ++i) {
    int c = v[pivots[i]];
    if (!c) continue;
    for (int j = 0; j < width; ++j) v[j] = f->sub(v[j], f->mul(c, basis.at(i, j)));
  }
  for (int x : v)
    if (x) return false;
  return true;
}

bool FpSpan::insert(std::vector<int> v) {
  if (reduce(v)) return false;
  int piv = 0;
  while (!v[piv]) ++piv;
  int s = f->inv(v[piv]);
  for (auto& x : v) x = f->mul(s, x);
  // clear the new pivot column in existing rows, keep rows sorted by pivot
  for (int i = 0; i < basis.rows; ++i) {
    int c = basis.at(i, piv);
    if (!c) continue;
    for (int j = 0; j < width; ++j)
      basis.at(i, j) = f->sub(basis.at(i, j), f->mul(c, v[j]));
  }
  int pos = 0;
  while (pos < basis.rows && pivots[pos] < piv) ++pos;
  FpMat nb(basis.rows + 1, width);
  std::vector<int> np;
  np.reserve(basis.rows + 1);
  for (int i = 0; i < pos; ++i) {
    for (int j = 0; j < width; ++j) nb.at(i, j) = basis.at(i, j);
    np.push_back(pivots[i]);
  }
  for (int j = 0; j < width; ++j) nb.at(pos, j) = v[j];
  np.push_back(piv);
  for (int i = pos; i < basis.rows; ++i) {
    for (int j = 0; j < width; ++j) nb.at(i + 1, j) = basis.at(i, j);
    np.push_back(pivots[i]);
  }
  basis = std::move(nb);
  pivots = std::move(np);
  return true;
}

}  // namespace qcat
