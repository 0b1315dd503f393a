#include "qcat/rep.hpp"

#include <algorithm>
#include <numeric>

#include "qcat/weyl.hpp"

namespace qcat {

namespace {

i64 total_dim(const DimVector& d) {
  return std::accumulate(d.begin(), d.end(), i64{0});
}

bool is_simple_vector(const DimVector& d, int* vertex) {
  int found = -1;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (d[i] != 1 || found >= 0) return false;
    found = static_cast<int>(i) + 1;
  }
  if (found < 0) return false;
  *vertex = found;
  return true;
}

// Solve K X = B for K with independent columns; throws if inconsistent.
FpMat fp_solve(const Fp& f, const FpMat& k, const FpMat& b) {
  FpMat aug = fp_hstack(k, b);
  std::vector<int> pivots = fp_rref(f, aug);
  FpMat x(k.cols, b.cols);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= k.cols)
      throw InternalError("fp_solve: inconsistent system");
    for (int c = 0; c < b.cols; ++c)
      x.at(pivots[r], c) = aug.at(static_cast<int>(r), k.cols + c);
  }
  return x;
}

// Restrict M to the subrepresentation spanned columnwise by bases[v]
// (which must be arrow-closed).
Rep subrep(const Quiver& q, const Rep& m, const std::vector<FpMat>& bases) {
  Fp f(m.p);
  Rep out;
  out.p = m.p;
  out.dim.resize(q.n);
  for (int v = 0; v < q.n; ++v) out.dim[v] = bases[v].cols;
  out.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first - 1, j = q.arrows[a].second - 1;
    FpMat img = fp_mul(f, m.mats[a], bases[j]);  // maps into span(bases[i])
    if (bases[i].cols == 0) {
      out.mats[a] = FpMat(0, bases[j].cols);
    } else {
      out.mats[a] = fp_solve(f, bases[i], img);
    }
  }
  return out;
}

struct QuotientData {
  std::vector<FpSpan> spans;          // span of the sub at each vertex
  std::vector<std::vector<int>> comp; // complement coordinates per vertex
};

// Quotient of M by the arrow-closed subspace spanned by bases[v].
Rep quotient_rep(const Quiver& q, const Rep& m,
                 const std::vector<FpMat>& bases, const Fp& f) {
  std::vector<FpSpan> spans;
  std::vector<std::vector<int>> comp(q.n);
  spans.reserve(q.n);
  for (int v = 0; v < q.n; ++v) {
    spans.emplace_back(f, static_cast<int>(m.dim[v]));
    for (int c = 0; c < bases[v].cols; ++c) {
      std::vector<int> col(m.dim[v]);
      for (int r = 0; r < bases[v].rows; ++r) col[r] = bases[v].at(r, c);
      spans[v].insert(std::move(col));
    }
    std::vector<char> is_pivot(m.dim[v], 0);
    for (int p : spans[v].pivots) is_pivot[p] = 1;
    for (int c = 0; c < m.dim[v]; ++c)
      if (!is_pivot[c]) comp[v].push_back(c);
  }
  Rep out;
  out.p = m.p;
  out.dim.resize(q.n);
  for (int v = 0; v < q.n; ++v) out.dim[v] = static_cast<i64>(comp[v].size());
  out.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first - 1, j = q.arrows[a].second - 1;
    FpMat na(static_cast<int>(comp[i].size()),
             static_cast<int>(comp[j].size()));
    for (size_t c = 0; c < comp[j].size(); ++c) {
      // lift the c-th quotient coordinate of vertex j, push through the
      // arrow map, reduce modulo the sub, read off quotient coordinates
      std::vector<int> vec(m.dim[i], 0);
      for (int r = 0; r < m.mats[a].rows; ++r)
        vec[r] = m.mats[a].at(r, comp[j][c]);
      spans[i].reduce(vec);
      for (size_t r = 0; r < comp[i].size(); ++r)
        na.at(static_cast<int>(r), static_cast<int>(c)) = vec[comp[i][r]];
    }
    out.mats[a] = std::move(na);
  }
  return out;
}

}  // namespace

Rep rep_zero(const Quiver& q, int p) {
  Rep r;
  r.p = p;
  r.dim.assign(q.n, 0);
  for (size_t a = 0; a < q.arrows.size(); ++a) r.mats.emplace_back(0, 0);
  return r;
}

Rep rep_simple(const Quiver& q, int j, int p) {
  Rep r = rep_zero(q, p);
  r.dim[j - 1] = 1;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].first - 1, t = q.arrows[a].second - 1;
    r.mats[a] = FpMat(s == j - 1 ? 1 : 0, t == j - 1 ? 1 : 0);
  }
  return r;
}

Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts) {
  Rep out;
  out.p = parts.empty() ? 5 : parts[0].p;
  out.dim.assign(q.n, 0);
  for (const auto& r : parts)
    for (int v = 0; v < q.n; ++v) out.dim[v] += r.dim[v];
  out.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first - 1, j = q.arrows[a].second - 1;
    FpMat blk(static_cast<int>(out.dim[i]), static_cast<int>(out.dim[j]));
    int ro = 0, co = 0;
    for (const auto& r : parts) {
      for (int rr = 0; rr < r.mats[a].rows; ++rr)
        for (int cc = 0; cc < r.mats[a].cols; ++cc)
          blk.at(ro + rr, co + cc) = r.mats[a].at(rr, cc);
      ro += static_cast<int>(r.dim[i]);
      co += static_cast<int>(r.dim[j]);
    }
    out.mats[a] = std::move(blk);
  }
  return out;
}

HomBasis hom_space(const Quiver& q, const Rep& x, const Rep& y) {
  if (x.p != y.p) throw InternalError("hom_space: field mismatch");
  Fp f(x.p);
  int n = q.n;
  // unknowns: entries of phi_v (Ydim_v x Xdim_v), vertex blocks in order
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v)
    offset[v + 1] = offset[v] + static_cast<int>(y.dim[v] * x.dim[v]);
  int unknowns = offset[n];
  if (unknowns == 0) return {};
  int eqs = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first - 1, j = q.arrows[a].second - 1;
    eqs += static_cast<int>(y.dim[i] * x.dim[j]);
  }
  FpMat sys(eqs, unknowns);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].first - 1, j = q.arrows[a].second - 1;
    const FpMat& xa = x.mats[a];  // Xdim_i x Xdim_j
    const FpMat& ya = y.mats[a];  // Ydim_i x Ydim_j
    // (phi_i . Xa - Ya . phi_j)[r][c] = 0
    for (int r = 0; r < y.dim[i]; ++r)
      for (int c = 0; c < x.dim[j]; ++c) {
        for (int k = 0; k < x.dim[i]; ++k) {
          int idx = offset[i] + r * static_cast<int>(x.dim[i]) + k;
          sys.at(row, idx) = f.add(sys.at(row, idx), xa.at(k, c));
        }
        for (int k = 0; k < y.dim[j]; ++k) {
          int idx = offset[j] + k * static_cast<int>(x.dim[j]) + c;
          sys.at(row, idx) = f.sub(sys.at(row, idx), ya.at(r, k));
        }
        ++row;
      }
  }
  FpMat ker = fp_kernel(f, sys);
  HomBasis basis;
  basis.reserve(ker.cols);
  for (int b = 0; b < ker.cols; ++b) {
    Morphism mor(n);
    for (int v = 0; v < n; ++v) {
      FpMat phi(static_cast<int>(y.dim[v]), static_cast<int>(x.dim[v]));
      for (int r = 0; r < y.dim[v]; ++r)
        for (int c = 0; c < x.dim[v]; ++c)
          phi.at(r, c) = ker.at(offset[v] + r * static_cast<int>(x.dim[v]) + c, b);
      mor[v] = std::move(phi);
    }
    basis.push_back(std::move(mor));
  }
  return basis;
}

int hom_dim(const Quiver& q, const Rep& x, const Rep& y) {
  return static_cast<int>(hom_space(q, x, y).size());
}

i64 euler_pairing(const Quiver& q, const DimVector& x, const DimVector& y) {
  i64 s = 0;
  for (int v = 0; v < q.n; ++v) s += x[v] * y[v];
  for (const auto& [i, j] : q.arrows) s -= x[j - 1] * y[i - 1];
  return s;
}

Rep build_indecomposable(const Quiver& q, const DimVector& root, int p) {
  if (!q.dynkin) throw NotDynkin("indecomposables are catalogued for Dynkin quivers only");
  WeylGroup g(q);
  {
    auto roots = g.positive_roots();
    if (std::find(roots.begin(), roots.end(), root) == roots.end())
      throw NotARoot("dimension vector is not a positive root");
  }
  Fp f(p);
  IntMatrix cartan = cartan_matrix(q);
  int n = q.n;
  int m = static_cast<int>(q.arrows.size());

  // reduce the root to a simple by reflecting at sinks of the opposite
  // orientation, sweeping vertices 1..n cyclically
  std::vector<int> seq;
  DimVector r = root;
  int simple_vertex = 0;
  long long guard = 16LL * n * (total_dim(root) + n);
  while (!is_simple_vector(r, &simple_vertex)) {
    int v = seq.empty() ? 1 : (seq.back() % n) + 1;
    DimVector nr = r;
    i64 acc = 0;
    for (int u = 0; u < n; ++u) acc += cartan.at(v - 1, u) * r[u];
    nr[v - 1] = r[v - 1] - acc;
    r = std::move(nr);
    seq.push_back(v);
    if (--guard < 0) throw InternalError("reflection sweep failed to terminate");
  }

  // orientation snapshots: dirs[a] = (from, to); start with the opposite
  // quiver, where module maps run along the arrows
  std::vector<std::vector<Arrow>> orient;
  std::vector<Arrow> cur(m);
  for (int a = 0; a < m; ++a)
    cur[a] = {q.arrows[a].second, q.arrows[a].first};
  orient.push_back(cur);
  for (int v : seq) {
    for (auto& [from, to] : cur)
      if (from == v || to == v) std::swap(from, to);
    orient.push_back(cur);
  }

  // start from the simple at the final orientation and walk back with
  // inverse reflection functors (each applied at a source)
  std::vector<i64> dims(n, 0);
  dims[simple_vertex - 1] = 1;
  std::vector<FpMat> mats(m);
  auto reshape = [&](const std::vector<Arrow>& o) {
    for (int a = 0; a < m; ++a)
      mats[a] = FpMat(static_cast<int>(dims[o[a].second - 1]),
                      static_cast<int>(dims[o[a].first - 1]));
  };
  reshape(orient.back());

  for (int step = static_cast<int>(seq.size()) - 1; step >= 0; --step) {
    int v = seq[step];
    const std::vector<Arrow>& after = orient[step + 1];  // v is a source here
    std::vector<int> out_arrows;
    int stack_dim = 0;
    for (int a = 0; a < m; ++a)
      if (after[a].first == v) {
        out_arrows.push_back(a);
        stack_dim += static_cast<int>(dims[after[a].second - 1]);
      }
    // psi : X_v -> (+) X_u, stacked in arrow order
    FpMat psi(stack_dim, static_cast<int>(dims[v - 1]));
    int ro = 0;
    for (int a : out_arrows) {
      for (int r2 = 0; r2 < mats[a].rows; ++r2)
        for (int c2 = 0; c2 < mats[a].cols; ++c2)
          psi.at(ro + r2, c2) = mats[a].at(r2, c2);
      ro += mats[a].rows;
    }
    // cokernel of psi, with the projection written via complement coords
    FpSpan span(f, stack_dim);
    for (int c = 0; c < psi.cols; ++c) {
      std::vector<int> col(stack_dim);
      for (int r2 = 0; r2 < stack_dim; ++r2) col[r2] = psi.at(r2, c);
      span.insert(std::move(col));
    }
    std::vector<char> is_pivot(stack_dim, 0);
    for (int pcol : span.pivots) is_pivot[pcol] = 1;
    std::vector<int> comp;
    for (int c = 0; c < stack_dim; ++c)
      if (!is_pivot[c]) comp.push_back(c);
    int cdim = static_cast<int>(comp.size());

    // new maps X_u -> X'_v: include u-block, then project to the cokernel
    std::vector<FpMat> new_in(out_arrows.size());
    ro = 0;
    for (size_t idx = 0; idx < out_arrows.size(); ++idx) {
      int a = out_arrows[idx];
      int du = static_cast<int>(dims[after[a].second - 1]);
      FpMat proj(cdim, du);
      for (int c = 0; c < du; ++c) {
        std::vector<int> vec(stack_dim, 0);
        vec[ro + c] = 1;
        span.reduce(vec);
        for (int r2 = 0; r2 < cdim; ++r2) proj.at(r2, c) = vec[comp[r2]];
      }
      new_in[idx] = std::move(proj);
      ro += du;
    }
    dims[v - 1] = cdim;
    for (size_t idx = 0; idx < out_arrows.size(); ++idx)
      mats[out_arrows[idx]] = std::move(new_in[idx]);
    // non-incident arrows keep their matrices; shapes are unaffected
  }

  if (DimVector(dims) != root)
    throw InternalError("reflection construction produced wrong dimensions");
  Rep out;
  out.p = p;
  out.dim = dims;
  out.mats = std::move(mats);
  return out;
}

Catalogue::Catalogue(const Quiver& q, int p) : q_(q), p_(p) {
  if (!q.dynkin) throw NotDynkin("catalogue needs a Dynkin quiver");
  PreprojTable table = enumerate_preprojectives(q);
  for (const auto& row : table.rows) {
    Rep r = build_indecomposable(q_, row.dim, p_);
    if (hom_dim(q_, r, r) != 1)
      throw InternalError("constructed module is not a brick");
    index_[row.dim] = static_cast<int>(reps_.size());
    reps_.push_back(std::move(r));
  }
}

int Catalogue::index_of(const DimVector& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? -1 : it->second;
}

const HomBasis& Catalogue::hom(int x, int y) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(x, y);
  auto it = hom_cache_.find(key);
  if (it != hom_cache_.end()) return it->second;
  HomBasis h = hom_space(q_, reps_[x], reps_[y]);
  return hom_cache_.emplace(key, std::move(h)).first->second;
}

IndecSet full_set(const Catalogue& cat) {
  IndecSet s;
  for (int i = 0; i < cat.size(); ++i) s.insert(i);
  return s;
}

IndecSet complement(const Catalogue& cat, const IndecSet& s) {
  IndecSet out;
  for (int i = 0; i < cat.size(); ++i)
    if (!s.count(i)) out.insert(i);
  return out;
}

bool is_generated(const Catalogue& cat, const IndecSet& s, int n_idx) {
  const Rep& n = cat.rep(n_idx);
  Fp f(cat.p());
  std::vector<FpSpan> spans;
  for (int v = 0; v < cat.quiver().n; ++v)
    spans.emplace_back(f, static_cast<int>(n.dim[v]));
  auto saturated = [&]() {
    for (int v = 0; v < cat.quiver().n; ++v)
      if (spans[v].dim() < n.dim[v]) return false;
    return true;
  };
  for (int x : s) {
    for (const Morphism& mor : cat.hom(x, n_idx))
      for (int v = 0; v < cat.quiver().n; ++v)
        for (int c = 0; c < mor[v].cols; ++c) {
          std::vector<int> col(n.dim[v]);
          for (int r = 0; r < mor[v].rows; ++r) col[r] = mor[v].at(r, c);
          spans[v].insert(std::move(col));
        }
    if (saturated()) return true;
  }
  return saturated();
}

bool is_cogenerated(const Catalogue& cat, const IndecSet& s, int n_idx) {
  const Rep& n = cat.rep(n_idx);
  Fp f(cat.p());
  for (int v = 0; v < cat.quiver().n; ++v) {
    if (n.dim[v] == 0) continue;
    FpMat stack(0, static_cast<int>(n.dim[v]));
    for (int x : s)
      for (const Morphism& mor : cat.hom(n_idx, x))
        stack = fp_vstack(stack, mor[v]);
    if (fp_rank(f, stack) < n.dim[v]) return false;
  }
  return true;
}

bool is_quotient_closed(const Catalogue& cat, const IndecSet& s) {
  for (int n = 0; n < cat.size(); ++n)
    if (!s.count(n) && is_generated(cat, s, n)) return false;
  return true;
}

bool is_subclosed(const Catalogue& cat, const IndecSet& s) {
  for (int n = 0; n < cat.size(); ++n)
    if (!s.count(n) && is_cogenerated(cat, s, n)) return false;
  return true;
}

namespace {

void summand_multisets(const Catalogue& cat, const DimVector& target,
                       int from_idx, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  bool zero = true;
  for (i64 v : target)
    if (v != 0) zero = false;
  if (zero) {
    out.push_back(cur);
    return;
  }
  for (int idx = from_idx; idx < cat.size(); ++idx) {
    const DimVector& r = cat.root(idx);
    bool fits = true;
    for (size_t v = 0; v < r.size(); ++v)
      if (r[v] > target[v]) fits = false;
    if (!fits) continue;
    DimVector rest(target.size());
    for (size_t v = 0; v < r.size(); ++v) rest[v] = target[v] - r[v];
    cur.push_back(idx);
    summand_multisets(cat, rest, idx, cur, out);
    cur.pop_back();
  }
}

// Does the direct sum of `parts` appear as the middle term of a short exact
// sequence 0 -> X -> M -> Z -> 0?  Enumerates Hom(X, M) for monomorphisms
// whose cokernel decomposes as Z.
bool middle_term_realizes(const Catalogue& cat, int xi, int zi,
                          const std::vector<int>& parts, unsigned seed) {
  const Quiver& q = cat.quiver();
  Fp f(cat.p());
  const long long enum_cap = 100000;
  std::vector<Rep> reps;
  reps.reserve(parts.size());
  for (int idx : parts) reps.push_back(cat.rep(idx));
  Rep mid = direct_sum(q, reps);
  HomBasis h = hom_space(q, cat.rep(xi), mid);
  if (h.empty()) return false;
  long long count = 1;
  for (size_t e = 0; e < h.size(); ++e) {
    count *= cat.p();
    if (count > enum_cap)
      throw FieldTooLargeForEnumeration(
          "Hom space too large for extension enumeration");
  }
  std::vector<int> coeff(h.size(), 0);
  for (long long it = 1; it < count; ++it) {
    long long t = it;
    for (size_t e = 0; e < h.size(); ++e) {
      coeff[e] = static_cast<int>(t % cat.p());
      t /= cat.p();
    }
    Morphism phi(q.n);
    for (int v = 0; v < q.n; ++v) {
      FpMat acc(static_cast<int>(mid.dim[v]),
                static_cast<int>(cat.rep(xi).dim[v]));
      for (size_t e = 0; e < h.size(); ++e)
        if (coeff[e]) acc = fp_add(f, acc, fp_scale(f, coeff[e], h[e][v]));
      phi[v] = std::move(acc);
    }
    bool mono = true;
    for (int v = 0; v < q.n && mono; ++v)
      if (fp_rank(f, phi[v]) < cat.rep(xi).dim[v]) mono = false;
    if (!mono) continue;
    Rep coker = quotient_rep(q, mid, phi, f);
    std::vector<DimVector> parts_of_coker = decompose(q, coker, seed);
    if (parts_of_coker.size() == 1 && parts_of_coker[0] == cat.root(zi))
      return true;
  }
  return false;
}

}  // namespace

bool is_extension_closed(const Catalogue& cat, const IndecSet& s,
                         unsigned seed) {
  const Quiver& q = cat.quiver();
  if (cat.p() > 5)
    throw FieldTooLargeForEnumeration(
        "extension enumeration is capped at p <= 5");
  for (int xi : s) {
    for (int zi : s) {
      // only split middle terms exist when Ext^1(Z, X) vanishes
      i64 ext = static_cast<i64>(cat.hom(zi, xi).size()) -
                euler_pairing(q, cat.root(zi), cat.root(xi));
      if (ext == 0) continue;
      DimVector target(q.n);
      for (int v = 0; v < q.n; ++v)
        target[v] = cat.root(xi)[v] + cat.root(zi)[v];
      std::vector<std::vector<int>> middles;
      std::vector<int> cur;
      summand_multisets(cat, target, 0, cur, middles);
      for (const auto& parts : middles) {
        bool inside = true;
        for (int idx : parts)
          if (!s.count(idx)) inside = false;
        if (inside) continue;  // cannot witness a violation
        if (middle_term_realizes(cat, xi, zi, parts, seed))
          return false;  // extension of Z by X with a summand outside S
      }
    }
  }
  return true;
}

bool exists_nonsplit_extension(const Catalogue& cat, int x_idx, int z_idx,
                               unsigned seed) {
  DimVector target(cat.quiver().n);
  for (int v = 0; v < cat.quiver().n; ++v)
    target[v] = cat.root(x_idx)[v] + cat.root(z_idx)[v];
  std::vector<int> split{std::min(x_idx, z_idx), std::max(x_idx, z_idx)};
  std::vector<std::vector<int>> middles;
  std::vector<int> cur;
  summand_multisets(cat, target, 0, cur, middles);
  for (const auto& parts : middles) {
    if (parts == split) continue;  // the split sequence
    if (middle_term_realizes(cat, x_idx, z_idx, parts, seed)) return true;
  }
  return false;
}

bool is_torsion_class(const Catalogue& cat, const IndecSet& s, unsigned seed) {
  return is_quotient_closed(cat, s) && is_extension_closed(cat, s, seed);
}

namespace {

std::vector<DimVector> decompose_impl(const Quiver& q, const Rep& m,
                                      std::mt19937& rng) {
  Fp f(m.p);
  i64 total = total_dim(m.dim);
  if (total == 0) return {};
  HomBasis end = hom_space(q, m, m);
  if (end.size() == 1) return {m.dim};
  for (int attempt = 0; attempt < 32; ++attempt) {
    Morphism phi(q.n);
    for (int v = 0; v < q.n; ++v)
      phi[v] = FpMat(static_cast<int>(m.dim[v]), static_cast<int>(m.dim[v]));
    for (const Morphism& e : end) {
      int c = static_cast<int>(rng() % static_cast<unsigned>(m.p));
      if (!c) continue;
      for (int v = 0; v < q.n; ++v)
        phi[v] = fp_add(f, phi[v], fp_scale(f, c, e[v]));
    }
    // Fitting: M = ker phi^N (+) im phi^N once N >= dim M
    i64 pw = 1;
    while (pw < total) {
      for (int v = 0; v < q.n; ++v) phi[v] = fp_mul(f, phi[v], phi[v]);
      pw *= 2;
    }
    std::vector<FpMat> kers(q.n), ims(q.n);
    i64 kdim = 0;
    for (int v = 0; v < q.n; ++v) {
      kers[v] = fp_kernel(f, phi[v]);
      ims[v] = fp_transpose(fp_row_basis(f, fp_transpose(phi[v])));
      kdim += kers[v].cols;
    }
    if (kdim == 0 || kdim == total) continue;
    Rep a = subrep(q, m, kers);
    Rep b = subrep(q, m, ims);
    std::vector<DimVector> out = decompose_impl(q, a, rng);
    std::vector<DimVector> right = decompose_impl(q, b, rng);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
  throw DecompositionFailure(
      "random endomorphism splitting failed; p may be too small");
}

}  // namespace

std::vector<DimVector> decompose(const Quiver& q, const Rep& m,
                                 unsigned seed) {
  std::mt19937 rng(seed + 0x9e3779b9u);
  std::vector<DimVector> out = decompose_impl(q, m, rng);
  std::sort(out.begin(), out.end());
  return out;
}

IndecSet decompose_to_set(const Catalogue& cat, const Rep& m, unsigned seed) {
  IndecSet out;
  for (const DimVector& d : decompose(cat.quiver(), m, seed)) {
    int idx = cat.index_of(d);
    if (idx < 0)
      throw DecompositionFailure("summand is not a catalogue root");
    out.insert(idx);
  }
  return out;
}

Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  arrows.reserve(q.arrows.size());
  for (const auto& [s, t] : q.arrows)
    arrows.emplace_back(q.n + 1 - t, q.n + 1 - s);
  return validate_quiver(q.n, arrows, q.name.empty() ? "" : q.name + "_op");
}

DimVector reverse_coords(const DimVector& d) {
  return DimVector(d.rbegin(), d.rend());
}

Rep dualize(const Quiver& q, const Rep& m) {
  Quiver op = opposite_quiver(q);
  Rep out;
  out.p = m.p;
  out.dim = reverse_coords(m.dim);
  out.mats.resize(m.mats.size());
  // arrow a: i->j of q becomes (n+1-j) -> (n+1-i) of op at the same index;
  // the dual of the map X_j -> X_i is the transpose X_i^* -> X_j^*
  for (size_t a = 0; a < m.mats.size(); ++a)
    out.mats[a] = fp_transpose(m.mats[a]);
  return out;
}

}  // namespace qcat
