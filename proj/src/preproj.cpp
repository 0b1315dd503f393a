#include "qcat/preproj.hpp"

#include <algorithm>

namespace qcat {

PreprojAlgebra::PreprojAlgebra(const Quiver& q, int p)
    : q_(q), p_(p), f_(p) {
  if (!q.dynkin)
    throw NotDynkin("the preprojective algebra is finite dimensional only in Dynkin type");
  int m = static_cast<int>(q_.arrows.size());
  darrows_.reserve(2 * m);
  for (const auto& [s, t] : q_.arrows) darrows_.emplace_back(s, t);
  for (const auto& [s, t] : q_.arrows) darrows_.emplace_back(t, s);
  build();
}

void PreprojAlgebra::build() {
  int n = q_.n;
  int m = static_cast<int>(q_.arrows.size());
  degree_offset_.push_back(0);
  for (int v = 1; v <= n; ++v)
    basis_.push_back({v, v, 0, -1, -1});
  graded_dims_.push_back(n);
  degree_offset_.push_back(n);
  degrees_.emplace_back();  // placeholder for degree 0

  const int degree_cap = 200;
  for (int deg = 1; deg <= degree_cap; ++deg) {
    int lo = degree_offset_[deg - 1], hi = degree_offset_[deg];
    DegreeData data;
    std::map<std::pair<int, int>, int> formal_index;
    for (int g = lo; g < hi; ++g)
      for (int x = 0; x < 2 * m; ++x)
        if (basis_[g].src == darrows_[x].second) {
          formal_index[{g, x}] = static_cast<int>(data.formal.size());
          data.formal.emplace_back(g, x);
        }
    int fcount = static_cast<int>(data.formal.size());
    if (fcount == 0) {
      degrees_.push_back(std::move(data));
      break;
    }

    // relation vectors b * rho_v for b in the basis two degrees down
    FpMat rels(0, fcount);
    if (deg >= 2) {
      int plo = degree_offset_[deg - 2], phi = degree_offset_[deg - 1];
      std::vector<std::vector<int>> rel_rows;
      const DegreeData& prev = degrees_[deg - 1];
      auto expand_and_append = [&](std::vector<int>& rel, int b, int x,
                                   int then_arrow, int sign) {
        // rel += sign * (reduction of the formal pair (b, x)) tensor then_arrow
        auto it = std::find(prev.formal.begin(), prev.formal.end(),
                            std::make_pair(b, x));
        if (it == prev.formal.end())
          throw InternalError("missing formal pair during relation build");
        int fidx = static_cast<int>(it - prev.formal.begin());
        const std::vector<int>& red = prev.reduce[fidx];
        for (size_t local = 0; local < red.size(); ++local) {
          if (!red[local]) continue;
          int beta = degree_offset_[deg - 1] + static_cast<int>(local);
          auto jt = formal_index.find({beta, then_arrow});
          if (jt == formal_index.end())
            throw InternalError("incomposable relation term");
          int coef = sign > 0 ? red[local] : f_.neg(red[local]);
          rel[jt->second] = f_.add(rel[jt->second], coef);
        }
      };
      for (int b = plo; b < phi; ++b) {
        int v = basis_[b].src;
        std::vector<int> rel(fcount, 0);
        for (int a = 0; a < m; ++a) {
          if (q_.arrows[a].second == v)  // loop a a* based at tgt(a)
            expand_and_append(rel, b, a, a + m, +1);
          if (q_.arrows[a].first == v)   // loop a* a based at src(a)
            expand_and_append(rel, b, a + m, a, -1);
        }
        bool nonzero = false;
        for (int c : rel)
          if (c) nonzero = true;
        if (nonzero) rel_rows.push_back(std::move(rel));
      }
      rels = FpMat(static_cast<int>(rel_rows.size()), fcount);
      for (size_t r = 0; r < rel_rows.size(); ++r)
        for (int c = 0; c < fcount; ++c)
          rels.at(static_cast<int>(r), c) = rel_rows[r][c];
    }
    std::vector<int> pivots = fp_rref(f_, rels);
    std::vector<char> is_pivot(fcount, 0);
    for (int pcol : pivots) is_pivot[pcol] = 1;

    // survivors become the canonical degree-d basis
    std::vector<int> basis_pos(fcount, -1);
    data.basis_of_formal.clear();
    for (int c = 0; c < fcount; ++c)
      if (!is_pivot[c]) {
        basis_pos[c] = static_cast<int>(data.basis_of_formal.size());
        data.basis_of_formal.push_back(c);
      }
    int newdim = static_cast<int>(data.basis_of_formal.size());
    data.reduce.assign(fcount, {});
    for (int c = 0; c < fcount; ++c) {
      std::vector<int> red(newdim, 0);
      if (!is_pivot[c]) {
        red[basis_pos[c]] = 1;
      } else {
        int row = static_cast<int>(
            std::find(pivots.begin(), pivots.end(), c) - pivots.begin());
        for (int c2 = 0; c2 < fcount; ++c2)
          if (!is_pivot[c2] && rels.at(row, c2))
            red[basis_pos[c2]] = f_.neg(rels.at(row, c2));
      }
      data.reduce[c] = std::move(red);
    }
    for (int c : data.basis_of_formal) {
      auto [g, x] = data.formal[c];
      basis_.push_back({darrows_[x].first, basis_[g].tgt, deg, g, x});
    }
    degrees_.push_back(std::move(data));
    if (newdim == 0) break;
    graded_dims_.push_back(newdim);
    degree_offset_.push_back(static_cast<int>(basis_.size()));
    if (deg == degree_cap)
      throw InternalError("preprojective algebra construction did not stabilize");
  }
  dim_ = static_cast<int>(basis_.size());
}

PreprojAlgebra::Elt PreprojAlgebra::right_mul_arrow(const Elt& x,
                                                    int arrow_idx) const {
  Elt out = zero();
  int j = q_.arrows[arrow_idx].second;
  for (int g = 0; g < dim_; ++g) {
    if (!x[g] || basis_[g].src != j) continue;
    int deg = basis_[g].deg;
    if (deg + 1 >= static_cast<int>(degrees_.size())) continue;  // lands in 0
    const DegreeData& next = degrees_[deg + 1];
    auto it = std::find(next.formal.begin(), next.formal.end(),
                        std::make_pair(g, arrow_idx));
    if (it == next.formal.end()) continue;
    int fidx = static_cast<int>(it - next.formal.begin());
    const std::vector<int>& red = next.reduce[fidx];
    int off = degree_offset_[deg + 1];
    for (size_t local = 0; local < red.size(); ++local)
      if (red[local])
        out[off + static_cast<int>(local)] =
            f_.add(out[off + static_cast<int>(local)],
                   f_.mul(x[g], red[local]));
  }
  return out;
}

const PreprojAlgebra::Elt& PreprojAlgebra::basis_product(int x, int y) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = product_cache_.find({x, y});
    if (it != product_cache_.end()) return it->second;
  }
  Elt result = zero();
  const BasisElt& bx = basis_[x];
  const BasisElt& by = basis_[y];
  if (by.deg == 0) {
    if (bx.src == by.src) result[x] = 1;
  } else if (bx.deg == 0) {
    if (by.tgt == bx.src) result[y] = 1;
  } else {
    // y = prev * arrow; so x*y = (x*prev) * arrow
    const Elt& inner = basis_product(x, by.prev);
    for (int g = 0; g < dim_; ++g) {
      if (!inner[g]) continue;
      int deg = basis_[g].deg;
      if (deg + 1 >= static_cast<int>(degrees_.size())) continue;
      const DegreeData& next = degrees_[deg + 1];
      auto it = std::find(next.formal.begin(), next.formal.end(),
                          std::make_pair(g, by.arrow));
      if (it == next.formal.end()) continue;
      int fidx = static_cast<int>(it - next.formal.begin());
      const std::vector<int>& red = next.reduce[fidx];
      int off = degree_offset_[deg + 1];
      for (size_t local = 0; local < red.size(); ++local)
        if (red[local])
          result[off + static_cast<int>(local)] =
              f_.add(result[off + static_cast<int>(local)],
                     f_.mul(inner[g], red[local]));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return product_cache_.emplace(std::make_pair(x, y), std::move(result))
      .first->second;
}

PreprojAlgebra::Elt PreprojAlgebra::multiply(const Elt& x, const Elt& y) const {
  Elt out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      const Elt& prod = basis_product(i, j);
      int c = f_.mul(x[i], y[j]);
      for (int g = 0; g < dim_; ++g)
        if (prod[g]) out[g] = f_.add(out[g], f_.mul(c, prod[g]));
    }
  }
  return out;
}

namespace {

IdealSubspace span_to_ideal(const FpSpan& span) {
  IdealSubspace out;
  out.basis = span.basis;
  out.pivots = span.pivots;
  return out;
}

void verify_two_sided(const PreprojAlgebra& pi, const IdealSubspace& ideal) {
  Fp f(pi.p());
  FpSpan span(f, pi.dim());
  for (int r = 0; r < ideal.basis.rows; ++r) {
    std::vector<int> row(pi.dim());
    for (int c = 0; c < pi.dim(); ++c) row[c] = ideal.basis.at(r, c);
    span.insert(std::move(row));
  }
  // degree <= 1 elements generate the algebra
  std::vector<int> gens;
  for (int g = 0; g < pi.dim(); ++g)
    if (pi.basis(g).deg <= 1) gens.push_back(g);
  for (int r = 0; r < ideal.basis.rows; ++r) {
    PreprojAlgebra::Elt row(pi.dim());
    for (int c = 0; c < pi.dim(); ++c) row[c] = ideal.basis.at(r, c);
    for (int g : gens) {
      PreprojAlgebra::Elt left = pi.multiply(pi.unit(g), row);
      PreprojAlgebra::Elt right = pi.multiply(row, pi.unit(g));
      if (!span.contains(std::move(left)) || !span.contains(std::move(right)))
        throw InternalError("subspace is not a two-sided ideal");
    }
  }
}

}  // namespace

IdealSubspace ideal_Ii(const PreprojAlgebra& pi, int i) {
  if (i < 1 || i > pi.quiver().n) throw InvalidIndex("vertex out of range");
  Fp f(pi.p());
  FpSpan span(f, pi.dim());
  for (int x = 0; x < pi.dim(); ++x) {
    for (int y = 0; y < pi.dim(); ++y) {
      int j = pi.basis(x).src;
      if (j == i || pi.basis(y).tgt != j) continue;
      span.insert(pi.basis_product(x, y));
    }
  }
  IdealSubspace out = span_to_ideal(span);
  verify_two_sided(pi, out);
  return out;
}

IdealSubspace multiply_ideals(const PreprojAlgebra& pi, const IdealSubspace& x,
                              const IdealSubspace& y) {
  Fp f(pi.p());
  FpSpan span(f, pi.dim());
  for (int r = 0; r < x.basis.rows; ++r) {
    PreprojAlgebra::Elt ex(pi.dim());
    for (int c = 0; c < pi.dim(); ++c) ex[c] = x.basis.at(r, c);
    for (int r2 = 0; r2 < y.basis.rows; ++r2) {
      PreprojAlgebra::Elt ey(pi.dim());
      for (int c = 0; c < pi.dim(); ++c) ey[c] = y.basis.at(r2, c);
      span.insert(pi.multiply(ex, ey));
    }
  }
  IdealSubspace out = span_to_ideal(span);
  verify_two_sided(pi, out);
  return out;
}

IdealSubspace ideal_full(const PreprojAlgebra& pi) {
  IdealSubspace out;
  out.basis = FpMat::identity(pi.dim());
  out.pivots.resize(pi.dim());
  for (int i = 0; i < pi.dim(); ++i) out.pivots[i] = i;
  return out;
}

IdealSubspace ideal_zero(const PreprojAlgebra& pi) {
  IdealSubspace out;
  out.basis = FpMat(0, pi.dim());
  return out;
}

bool ideal_contains_subspace(const PreprojAlgebra& pi, const IdealSubspace& big,
                             const IdealSubspace& small) {
  Fp f(pi.p());
  FpSpan span(f, pi.dim());
  for (int r = 0; r < big.basis.rows; ++r) {
    std::vector<int> row(pi.dim());
    for (int c = 0; c < pi.dim(); ++c) row[c] = big.basis.at(r, c);
    span.insert(std::move(row));
  }
  for (int r = 0; r < small.basis.rows; ++r) {
    std::vector<int> row(pi.dim());
    for (int c = 0; c < pi.dim(); ++c) row[c] = small.basis.at(r, c);
    if (!span.contains(std::move(row))) return false;
  }
  return true;
}

IdealCache::IdealCache(const PreprojAlgebra& pi, const WeylGroup& g)
    : pi_(pi), g_(g) {
  for (int i = 1; i <= pi.quiver().n; ++i) gens_.push_back(ideal_Ii(pi, i));
}

const IdealSubspace& IdealCache::ideal_of_element(const WeylElement& w) {
  std::string key = w.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  IdealSubspace result;
  if (w.is_identity()) {
    result = ideal_full(pi_);
  } else {
    int i = 0;
    for (int c = 1; c <= g_.rank(); ++c)
      if (g_.left_descent(w, c)) {
        i = c;
        break;
      }
    // w = s_i v reduced, so I_w = I_v . I_i (ideal factors run right-to-left)
    const IdealSubspace& rest = ideal_of_element(g_.mul_gen_left(i, w));
    result = multiply_ideals(pi_, rest, gens_[i - 1]);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

const IdealSubspace& IdealCache::ideal_Iw(const WeylElement& w) {
  return ideal_of_element(w);
}

const IdealSubspace& IdealCache::ideal_Iw(const Word& reduced_word) {
  if (!g_.is_reduced(reduced_word))
    throw NotReduced("I_w requires a reduced word");
  return ideal_of_element(g_.evaluate_word(reduced_word));
}

bool IdealCache::ideal_contains(const WeylElement& v, const WeylElement& w) {
  return ideal_contains_subspace(pi_, ideal_Iw(v), ideal_Iw(w));
}

namespace {

std::vector<int> row_as_vector(const FpMat& m, int r) {
  std::vector<int> out(m.cols);
  for (int c = 0; c < m.cols; ++c) out[c] = m.at(r, c);
  return out;
}

// src vertex of a (src,tgt)-homogeneous coordinate vector; 0 if zero
int row_src(const PreprojAlgebra& pi, const std::vector<int>& row) {
  int src = 0;
  for (int c = 0; c < pi.dim(); ++c) {
    if (!row[c]) continue;
    if (src == 0)
      src = pi.basis(c).src;
    else if (src != pi.basis(c).src)
      throw InternalError("ideal basis row is not src-homogeneous");
  }
  return src;
}

// express `vec` over rref rows restricted to those with given indices
std::vector<int> express_in_rows(const PreprojAlgebra& pi, const FpMat& basis,
                                 const std::vector<int>& pivots,
                                 const std::vector<int>& rows,
                                 std::vector<int> vec) {
  Fp f(pi.p());
  std::vector<int> coeff(rows.size(), 0);
  for (size_t k = 0; k < rows.size(); ++k) {
    int r = rows[k];
    int c = vec[pivots[r]];
    if (!c) continue;
    coeff[k] = c;
    for (int j = 0; j < basis.cols; ++j)
      vec[j] = f.sub(vec[j], f.mul(c, basis.at(r, j)));
  }
  for (int x : vec)
    if (x) throw InternalError("restriction left the subspace");
  return coeff;
}

}  // namespace

std::vector<int> right_component_dims(const PreprojAlgebra& pi,
                                      const IdealSubspace& sub) {
  std::vector<int> dims(pi.quiver().n + 1, 0);
  for (int r = 0; r < sub.basis.rows; ++r) {
    int src = row_src(pi, row_as_vector(sub.basis, r));
    if (src > 0) ++dims[src];
  }
  return dims;
}

std::vector<int> left_component_dims(const PreprojAlgebra& pi,
                                     const IdealSubspace& sub) {
  std::vector<int> dims(pi.quiver().n + 1, 0);
  for (int r = 0; r < sub.basis.rows; ++r) {
    int tgt = 0;
    for (int c = 0; c < pi.dim(); ++c)
      if (sub.basis.at(r, c)) {
        tgt = pi.basis(c).tgt;
        break;
      }
    if (tgt > 0) ++dims[tgt];
  }
  return dims;
}

Rep restrict_to_kQ(const PreprojAlgebra& pi, const IdealSubspace& sub) {
  const Quiver& q = pi.quiver();
  Fp f(pi.p());
  // vertex component v: rows of the rref basis with src == v
  std::vector<std::vector<int>> rows_of(q.n + 1);
  for (int r = 0; r < sub.basis.rows; ++r) {
    int src = row_src(pi, row_as_vector(sub.basis, r));
    if (src > 0) rows_of[src].push_back(r);
  }
  Rep out;
  out.p = pi.p();
  out.dim.resize(q.n);
  for (int v = 1; v <= q.n; ++v)
    out.dim[v - 1] = static_cast<i64>(rows_of[v].size());
  out.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first, j = q.arrows[a].second;
    FpMat mat(static_cast<int>(out.dim[i - 1]),
              static_cast<int>(out.dim[j - 1]));
    for (size_t col = 0; col < rows_of[j].size(); ++col) {
      PreprojAlgebra::Elt x = row_as_vector(sub.basis, rows_of[j][col]);
      PreprojAlgebra::Elt img = pi.right_mul_arrow(x, static_cast<int>(a));
      std::vector<int> coeff =
          express_in_rows(pi, sub.basis, sub.pivots, rows_of[i], img);
      for (size_t r = 0; r < coeff.size(); ++r)
        mat.at(static_cast<int>(r), static_cast<int>(col)) = coeff[r];
    }
    out.mats[a] = std::move(mat);
  }
  return out;
}

Rep restrict_quotient_to_kQ(const PreprojAlgebra& pi,
                            const IdealSubspace& sub) {
  const Quiver& q = pi.quiver();
  Fp f(pi.p());
  std::vector<char> is_pivot(pi.dim(), 0);
  for (int p : sub.pivots) is_pivot[p] = 1;
  std::vector<std::vector<int>> coords_of(q.n + 1);
  for (int c = 0; c < pi.dim(); ++c)
    if (!is_pivot[c]) coords_of[pi.basis(c).src].push_back(c);
  auto project = [&](PreprojAlgebra::Elt vec, int vertex) {
    // reduce modulo the subspace, then read the surviving coordinates
    for (int r = 0; r < sub.basis.rows; ++r) {
      int c = vec[sub.pivots[r]];
      if (!c) continue;
      for (int j2 = 0; j2 < pi.dim(); ++j2)
        vec[j2] = f.sub(vec[j2], f.mul(c, sub.basis.at(r, j2)));
    }
    std::vector<int> out(coords_of[vertex].size());
    for (size_t k = 0; k < coords_of[vertex].size(); ++k)
      out[k] = vec[coords_of[vertex][k]];
    return out;
  };
  Rep out;
  out.p = pi.p();
  out.dim.resize(q.n);
  for (int v = 1; v <= q.n; ++v)
    out.dim[v - 1] = static_cast<i64>(coords_of[v].size());
  out.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first, j = q.arrows[a].second;
    FpMat mat(static_cast<int>(out.dim[i - 1]),
              static_cast<int>(out.dim[j - 1]));
    for (size_t col = 0; col < coords_of[j].size(); ++col) {
      PreprojAlgebra::Elt lift = pi.unit(coords_of[j][col]);
      std::vector<int> proj =
          project(pi.right_mul_arrow(lift, static_cast<int>(a)), i);
      for (size_t r = 0; r < proj.size(); ++r)
        mat.at(static_cast<int>(r), static_cast<int>(col)) = proj[r];
    }
    out.mats[a] = std::move(mat);
  }
  return out;
}

IndecSet C_of(const PreprojAlgebra& pi, IdealCache& ideals,
              const Catalogue& cat, const WeylElement& w, unsigned seed) {
  return decompose_to_set(cat, restrict_to_kQ(pi, ideals.ideal_Iw(w)), seed);
}

IndecSet C_of_quotient(const PreprojAlgebra& pi, IdealCache& ideals,
                       const Catalogue& cat, const WeylElement& w,
                       unsigned seed) {
  return decompose_to_set(
      cat, restrict_quotient_to_kQ(pi, ideals.ideal_Iw(w)), seed);
}

bool verify_duality(const PreprojAlgebra& pi, IdealCache& ideals,
                    const WeylElement& w) {
  const WeylGroup& g = ideals.group();
  WeylElement w0 = g.longest_element();
  WeylElement partner = g.mul(w0, g.inverse(w));  // w_0 w^{-1}
  const IdealSubspace& iw = ideals.ideal_Iw(w);
  const IdealSubspace& ip = ideals.ideal_Iw(partner);
  if (iw.dim() != pi.dim() - ip.dim()) return false;
  std::vector<int> right = right_component_dims(pi, iw);
  std::vector<int> left = left_component_dims(pi, ip);
  std::vector<int> total_left(pi.quiver().n + 1, 0);
  for (int c = 0; c < pi.dim(); ++c) ++total_left[pi.basis(c).tgt];
  for (int v = 1; v <= pi.quiver().n; ++v)
    if (right[v] != total_left[v] - left[v]) return false;
  return true;
}

}  // namespace qcat
