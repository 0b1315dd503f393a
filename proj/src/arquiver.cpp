#include "qcat/arquiver.hpp"

#include <algorithm>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

std::vector<DimVector> projective_dim_vectors(const Quiver& q) {
  int n = q.n;
  // paths[j][i] = number of directed paths j -> i; vertices processed in
  // decreasing order thanks to the admissible numbering
  std::vector<std::vector<i64>> paths(n + 1, std::vector<i64>(n + 1, 0));
  for (int j = n; j >= 1; --j) {
    paths[j][j] = 1;
    for (const auto& [s, t] : q.arrows)
      if (s == j)
        for (int i = 1; i <= n; ++i) paths[j][i] += paths[t][i];
  }
  std::vector<DimVector> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    DimVector d(n);
    for (int j = 1; j <= n; ++j) d[j - 1] = paths[j][i];
    out.push_back(std::move(d));
  }
  return out;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  IntMatrix e = euler_matrix(q);
  IntMatrix einv_t = inverse_unitriangular(e.transpose());
  return negate(einv_t.mul(e));
}

namespace {

IntMatrix coxeter_inverse(const Quiver& q) {
  // Phi^{-1} = -E^{-1} E^T
  IntMatrix e = euler_matrix(q);
  return negate(inverse_unitriangular(e).mul(e.transpose()));
}

bool nonneg(const DimVector& v) {
  for (i64 x : v)
    if (x < 0) return false;
  return true;
}

bool is_zero_vec(const DimVector& v) {
  for (i64 x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::optional<DimVector> preproj_dim(const Quiver& q, int j, int k) {
  if (j < 1 || j > q.n) throw InvalidIndex("vertex out of range");
  if (k < 0) throw InvalidIndex("negative tau power");
  DimVector d = projective_dim_vectors(q)[j - 1];
  IntMatrix phi_inv = coxeter_inverse(q);
  for (int step = 0; step < k; ++step) {
    d = phi_inv.apply(d);
    if (!nonneg(d) || is_zero_vec(d)) return std::nullopt;
  }
  return d;
}

PreprojTable enumerate_preprojectives(const Quiver& q, int k_max) {
  PreprojTable table;
  table.quiver = q;
  table.vanish.assign(q.n + 1, std::nullopt);
  std::vector<DimVector> cur = projective_dim_vectors(q);
  IntMatrix phi_inv = coxeter_inverse(q);
  std::vector<bool> alive(q.n + 1, true);
  int k = 0;
  while (true) {
    bool any = false;
    for (int j = 1; j <= q.n; ++j) {
      if (!alive[j]) continue;
      table.rows.push_back({j, k, cur[j - 1]});
      any = true;
    }
    if (!any) break;
    if (!q.dynkin && k >= k_max) break;
    for (int j = 1; j <= q.n; ++j) {
      if (!alive[j]) continue;
      DimVector nxt = phi_inv.apply(cur[j - 1]);
      if (!nonneg(nxt) || is_zero_vec(nxt)) {
        alive[j] = false;
        table.vanish[j] = k + 1;
      } else {
        cur[j - 1] = std::move(nxt);
      }
    }
    ++k;
  }
  return table;
}

PreprojTable enumerate_preprojectives_knitting(const Quiver& q, int k_max) {
  PreprojTable table;
  table.quiver = q;
  table.vanish.assign(q.n + 1, std::nullopt);
  std::vector<DimVector> prev = projective_dim_vectors(q);  // slice k
  std::vector<bool> alive(q.n + 1, true);
  for (int j = 1; j <= q.n; ++j) table.rows.push_back({j, 0, prev[j - 1]});
  int k = 0;
  while (q.dynkin || k < k_max) {
    // mesh at tau^{-k} P_i:
    //   dim tau^{-(k+1)} P_i = sum_{i->j} dim tau^{-k} P_j
    //                        + sum_{m->i} dim tau^{-(k+1)} P_m
    //                        - dim tau^{-k} P_i
    std::vector<DimVector> next(q.n + 1);
    bool any = false;
    for (int i = 1; i <= q.n; ++i) {
      if (!alive[i]) continue;
      DimVector acc(q.n, 0);
      for (const auto& [s, t] : q.arrows) {
        if (s == i && alive[t])
          for (int c = 0; c < q.n; ++c) acc[c] += prev[t - 1][c];
        if (t == i && !next[s].empty())
          for (int c = 0; c < q.n; ++c) acc[c] += next[s][c];
      }
      for (int c = 0; c < q.n; ++c) acc[c] -= prev[i - 1][c];
      if (!nonneg(acc) || is_zero_vec(acc)) {
        alive[i] = false;
        table.vanish[i] = k + 1;
      } else {
        next[i] = acc;
        table.rows.push_back({i, k + 1, acc});
        any = true;
      }
    }
    if (!any) break;
    for (int i = 1; i <= q.n; ++i)
      if (alive[i]) prev[i - 1] = next[i];
    ++k;
  }
  return table;
}

Word ar_word_w0(const Quiver& q) {
  if (!q.dynkin) throw NotFiniteType("AR reading word needs Dynkin type");
  PreprojTable t = enumerate_preprojectives(q);
  Word w;
  w.reserve(t.rows.size());
  for (const auto& r : t.rows) w.push_back(r.j);
  return w;
}

std::vector<std::pair<int, int>> ar_arrows(const PreprojTable& table) {
  std::vector<std::pair<int, int>> out;
  auto index_of = [&](int j, int k) -> int {
    for (size_t r = 0; r < table.rows.size(); ++r)
      if (table.rows[r].j == j && table.rows[r].k == k)
        return static_cast<int>(r);
    return -1;
  };
  for (size_t r = 0; r < table.rows.size(); ++r) {
    int i = table.rows[r].j, k = table.rows[r].k;
    for (const auto& [s, t] : table.quiver.arrows) {
      // irreducible maps tau^{-k}P_i -> tau^{-k}P_t (arrow i->t)
      if (s == i) {
        int to = index_of(t, k);
        if (to >= 0) out.emplace_back(static_cast<int>(r), to);
      }
      // and tau^{-k}P_i -> tau^{-(k+1)}P_s (arrow s->i)
      if (t == i) {
        int to = index_of(s, k + 1);
        if (to >= 0) out.emplace_back(static_cast<int>(r), to);
      }
    }
  }
  return out;
}

std::string emit_dot(const PreprojTable& table,
                     const std::vector<std::pair<int, int>>& highlight) {
  auto marked = [&](int j, int k) {
    for (const auto& [hj, hk] : highlight)
      if (hj == j && hk == k) return true;
    return false;
  };
  std::ostringstream os;
  os << "digraph preprojective {\n  rankdir=LR;\n  node [shape=box];\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    os << "  m" << r << " [label=\"";
    if (row.k == 0)
      os << "P" << row.j;
    else
      os << "t-" << row.k << " P" << row.j;
    os << "\\n(";
    for (size_t c = 0; c < row.dim.size(); ++c)
      os << (c ? "," : "") << row.dim[c];
    os << ")\"";
    if (marked(row.j, row.k)) os << " style=filled fillcolor=lightgrey";
    os << "];\n";
  }
  for (const auto& [from, to] : ar_arrows(table))
    os << "  m" << from << " -> m" << to << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qcat
