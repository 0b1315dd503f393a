#pragma once

#include <optional>

#include "qcat/leftmost.hpp"
#include "qcat/weyl.hpp"

namespace qcat {

/// Partition inside the k x (n-k+1) rectangle, parts weakly decreasing,
/// English notation (row 1 on top).
struct Partition {
  int n = 0, k = 0;
  std::vector<int> parts;  // at most k entries, each <= n-k+1

  int rows() const { return static_cast<int>(parts.size()); }
  int cells() const {
    int c = 0;
    for (int p : parts) c += p;
    return c;
  }
  bool contains(int r, int c) const {  // 1-based
    return r >= 1 && r <= rows() && c >= 1 && c <= parts[r - 1];
  }
};

/// The rectangle word: cell (r, c) carries generator k - r + c;
/// row r reads s_{k-r+1} ... s_{n-r+1}.
struct GridWord {
  int n = 0, k = 0;
  int generator(int r, int c) const { return k - r + c; }
  int cols() const { return n - k + 1; }
};

using CellSelection = std::vector<std::pair<int, int>>;  // (row, col), 1-based

GridWord rectangle_word(int n, int k);

std::vector<Partition> partitions_in_rectangle(int n, int k);

/// Row-reading word of the cells of lambda (top row first, left to right).
Word word_of_partition(const Partition& lambda);

/// A used cell with an unused cell above it in its column and an unused cell
/// to its left in its row.
bool has_bad_le(const Partition& lambda, const CellSelection& used);

struct LeCounterexample {
  Partition lambda;
  CellSelection selection;
  bool leftmost = false, bad = false;
};

/// Exhaustive check that reduced cell selections are leftmost subwords of
/// the partition word exactly when they have no bad pattern.
bool verify_le_theorem(int n, int k,
                       std::optional<LeCounterexample>* counterexample = nullptr);

/// Minimal length coset representatives with no left descent off s_k,
/// in bijection with the partitions in the rectangle.
std::vector<WeylElement> grassmannian_permutations(const WeylGroup& g, int k);

/// Linear A_n quiver (used by all the type-A specializations here).
Quiver linear_a_quiver(int n);

}  // namespace qcat
