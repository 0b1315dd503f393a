#include "qcat/grassmann.hpp"

#include <algorithm>

namespace qcat {

Quiver linear_a_quiver(int n) {
  std::vector<Arrow> arrows;
  for (int i = 1; i < n; ++i) arrows.emplace_back(i, i + 1);
  return validate_quiver(n, arrows, "A" + std::to_string(n));
}

GridWord rectangle_word(int n, int k) {
  if (k < 1 || k > n) throw InvalidIndex("need 1 <= k <= n");
  GridWord g;
  g.n = n;
  g.k = k;
  return g;
}

std::vector<Partition> partitions_in_rectangle(int n, int k) {
  rectangle_word(n, k);  // validate range
  int width = n - k + 1;
  std::vector<Partition> out;
  Partition cur;
  cur.n = n;
  cur.k = k;
  // enumerate weakly decreasing part lists, shortest first
  auto rec = [&](auto&& self, int max_part) -> void {
    out.push_back(cur);
    if (cur.rows() == k) return;
    for (int p = max_part; p >= 1; --p) {
      cur.parts.push_back(p);
      self(self, p);
      cur.parts.pop_back();
    }
  };
  rec(rec, width);
  return out;
}

Word word_of_partition(const Partition& lambda) {
  GridWord g = rectangle_word(lambda.n, lambda.k);
  Word w;
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda.parts[r - 1]; ++c)
      w.push_back(g.generator(r, c));
  return w;
}

bool has_bad_le(const Partition& lambda, const CellSelection& used) {
  auto is_used = [&](int r, int c) {
    for (const auto& [ur, uc] : used)
      if (ur == r && uc == c) return true;
    return false;
  };
  for (const auto& [r, c] : used) {
    if (!lambda.contains(r, c)) throw InvalidIndex("selected cell outside partition");
    bool unused_above = false, unused_left = false;
    for (int r2 = 1; r2 < r && !unused_above; ++r2)
      if (lambda.contains(r2, c) && !is_used(r2, c)) unused_above = true;
    for (int c2 = 1; c2 < c && !unused_left; ++c2)
      if (lambda.contains(r, c2) && !is_used(r, c2)) unused_left = true;
    if (unused_above && unused_left) return true;
  }
  return false;
}

bool verify_le_theorem(int n, int k,
                       std::optional<LeCounterexample>* counterexample) {
  WeylGroup g(linear_a_quiver(n));
  for (const Partition& lambda : partitions_in_rectangle(n, k)) {
    Word base = word_of_partition(lambda);
    int cells = lambda.cells();
    std::vector<std::pair<int, int>> cell_list;
    for (int r = 1; r <= lambda.rows(); ++r)
      for (int c = 1; c <= lambda.parts[r - 1]; ++c)
        cell_list.emplace_back(r, c);
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      CellSelection sel;
      PositionList positions;
      Word subword;
      for (int b = 0; b < cells; ++b)
        if (mask & (1u << b)) {
          sel.push_back(cell_list[b]);
          positions.push_back(b + 1);
          subword.push_back(base[b]);
        }
      // the statement quantifies over reduced subwords; selections that are
      // not even reduced are excluded from the iff
      if (!g.is_reduced(subword)) continue;
      bool leftmost = is_leftmost(g, base, positions);
      bool bad = has_bad_le(lambda, sel);
      if (leftmost == bad) {
        if (counterexample)
          *counterexample = LeCounterexample{lambda, sel, leftmost, bad};
        return false;
      }
    }
  }
  return true;
}

std::vector<WeylElement> grassmannian_permutations(const WeylGroup& g, int k) {
  if (k < 1 || k > g.rank()) throw InvalidIndex("need 1 <= k <= n");
  std::vector<WeylElement> out;
  for (const WeylElement& w : g.enumerate_group()) {
    bool minimal = true;
    for (int i = 1; i <= g.rank() && minimal; ++i)
      if (i != k && g.left_descent(w, i)) minimal = false;
    if (minimal) out.push_back(w);
  }
  return out;
}

}  // namespace qcat
