#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/quiver.hpp"
#include "qcat/weyl.hpp"

namespace qcat {

using DimVector = Vec;

/// Ordered table of preprojective indecomposables P_1..P_n, tau^{-1}P_1, ...
/// with zero modules dropped.  In Dynkin type the table is complete (one row
/// per positive root); otherwise it is cut off at k_max.
struct PreprojTable {
  Quiver quiver;
  struct Row {
    int j;  // vertex
    int k;  // tau^{-k}
    DimVector dim;
  };
  std::vector<Row> rows;
  // per-vertex first power k with tau^{-k} P_j == 0; unset for non-Dynkin
  std::vector<std::optional<int>> vanish;  // index 1..n (0 unused)

  bool is_zero(int j, int k) const {
    return vanish[j].has_value() && k >= *vanish[j];
  }
  const Row* find(int j, int k) const {
    for (const auto& r : rows)
      if (r.j == j && r.k == k) return &r;
    return nullptr;
  }
};

/// dim(P_i)_j = number of directed paths j -> i; under the admissible
/// numbering P_1 is the simple projective at the source vertex 1.
std::vector<DimVector> projective_dim_vectors(const Quiver& q);

/// Matrix Phi with dim tau(M) = Phi . dim M for non-projective M (so
/// tau^{-1} is Phi^{-1}).  Phi is minus E^{-T} E for the Euler matrix E of
/// this project's module convention; it equals the matrix of c^{-1} in the
/// geometric representation and is validated against the knitting oracle.
IntMatrix coxeter_matrix(const Quiver& q);

/// dim tau^{-k} P_j, or nullopt once the iteration leaves the positive cone
/// (Dynkin vanishing).  Non-Dynkin quivers never vanish.
std::optional<DimVector> preproj_dim(const Quiver& q, int j, int k);

/// Build the ordered table; for Dynkin input the bound is ignored and the
/// enumeration runs until a whole tau-slice vanishes.
PreprojTable enumerate_preprojectives(const Quiver& q, int k_max = 50);

/// Independent mesh-recursion oracle for the same table:
/// dim tau^{-1} M = sum of mesh middle terms - dim M.
PreprojTable enumerate_preprojectives_knitting(const Quiver& q,
                                               int k_max = 50);

/// Reading word of the full table (Dynkin): reduced, evaluates to w_0.
Word ar_word_w0(const Quiver& q);

/// Irreducible-map arrows of the preprojective component (mesh structure):
/// pairs of row indices (from, to).
std::vector<std::pair<int, int>> ar_arrows(const PreprojTable& table);

/// DOT rendering; rows listed in `highlight` (by (j,k)) are filled.
std::string emit_dot(const PreprojTable& table,
                     const std::vector<std::pair<int, int>>& highlight = {});

}  // namespace qcat
