#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/intmat.hpp"

namespace qcat {

using Arrow = std::pair<int, int>;  // (source, target), 1-based vertices

/// Acyclic quiver with admissible numbering: every arrow i -> j has i < j.
/// Vertices are 1-based throughout, matching the generator indices s_1..s_n.
struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;
  std::string name;

  bool dynkin = false;
  std::string dynkin_label;  // "A3", "D4", ... when dynkin

  int arrow_count(int i, int j) const {
    int c = 0;
    for (const auto& [s, t] : arrows)
      if (s == i && t == j) ++c;
    return c;
  }
  int edge_count(int i, int j) const {
    return arrow_count(i, j) + arrow_count(j, i);
  }
};

/// Validates and classifies a raw quiver description.
/// Throws CycleError, NumberingError or DisconnectedError, in that priority.
Quiver validate_quiver(int n, const std::vector<Arrow>& arrows,
                       const std::string& name = "");

/// For quivers rejected by NumberingError: a topological renumbering
/// old-vertex -> new-vertex that would make the numbering admissible.
/// We never renumber silently, since that changes the Coxeter element.
std::vector<int> suggest_renumbering(int n, const std::vector<Arrow>& arrows);

/// Symmetric Cartan matrix: A_ii = 2, A_ij = -(edges between i and j).
IntMatrix cartan_matrix(const Quiver& q);

/// Upper triangular Euler matrix: E_ii = 1, E_ij = -(arrows i -> j).
/// cartan_matrix(q) == E + E^T.
IntMatrix euler_matrix(const Quiver& q);

using Word = std::vector<int>;  // generator indices in 1..n

/// The Coxeter word (1, 2, ..., n) of the admissible numbering.
Word coxeter_word(const Quiver& q);

struct DoubleQuiver {
  Quiver base;
  // base.arrows followed by one reversed arrow a* per arrow a, in order.
  std::vector<Arrow> all_arrows;
};

DoubleQuiver double_quiver(const Quiver& q);

}  // namespace qcat
