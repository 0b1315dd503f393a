#pragma once

#include <optional>

#include "qcat/arquiver.hpp"
#include "qcat/weyl.hpp"

namespace qcat {

/// tau^{-k} P_j; k = 0 is the projective itself.
struct PreprojIndex {
  int j = 0;  // vertex, 1-based
  int k = 0;  // power of tau^{-1}

  bool operator==(const PreprojIndex& o) const { return j == o.j && k == o.k; }
  // canonical order on indecomposables: by (k, j)
  bool operator<(const PreprojIndex& o) const {
    return k != o.k ? k < o.k : j < o.j;
  }
};

/// A cofinite subcategory given by its finite missing set, kept in the
/// canonical (k, j)-lexicographic order.
struct SubcategorySpec {
  Quiver quiver;
  std::vector<PreprojIndex> missing;
};

using PositionList = std::vector<int>;  // strictly increasing, 1-based

/// Marker base word: scan the infinite word c c c ... instead of a finite one.
struct CInfinity {};
inline constexpr CInfinity C_INFINITY{};

/// Greedy leftmost reduced subword of `target` inside the infinite word
/// c^infty.  Exactly l(target) positions are returned; each full copy of c
/// strictly lowers the remainder's length, which bounds the scan.
PositionList leftmost_positions(const WeylGroup& g, const WeylElement& target,
                                CInfinity);

/// Same scan over a finite base word; throws NotASubword if the base is
/// exhausted before the remainder reaches the identity.
PositionList leftmost_positions(const WeylGroup& g, const WeylElement& target,
                                const Word& base);

/// Position p of c^infty corresponds to tau^{-k} P_j with j = ((p-1) mod n)+1
/// and k = (p-1) div n.  In Dynkin type every returned index must denote a
/// nonzero module; a violation would contradict the bijection and is thrown
/// as ZeroModuleHit, never skipped.
std::vector<PreprojIndex> positions_to_indices(const Quiver& q,
                                               const PositionList& positions);

/// Read off the word of a missing set in canonical order (no validity check
/// of quotient-closedness; that is a representation-theoretic question).
Word word_from_missing(const SubcategorySpec& spec);

/// The missing set of the cofinite quotient-closed subcategory attached
/// to w: leftmost positions in c^infty, translated to module indices.
SubcategorySpec category_of(const WeylGroup& g, const WeylElement& w);

/// True iff `positions` select a reduced subword of `base` whose greedy
/// leftmost scan reproduces exactly these positions.
bool is_leftmost(const WeylGroup& g, const Word& base,
                 const PositionList& positions);

}  // namespace qcat
