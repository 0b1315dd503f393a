#pragma once

#include <set>

#include "qcat/leftmost.hpp"
#include "qcat/preproj.hpp"
#include "qcat/rep.hpp"
#include "qcat/weyl.hpp"

namespace qcat {

/// Support blocks of the sorting word of w: the leftmost positions of w in
/// c^infty grouped by copy of c.  `order` is the Coxeter word used (the
/// natural one, or its reverse for c^{-1}-sortability).
struct CSortingBlocks {
  std::vector<std::set<int>> blocks;
};

CSortingBlocks c_sorting_blocks(const WeylGroup& g, const WeylElement& w,
                                const Word& order);
CSortingBlocks c_sorting_blocks(const WeylGroup& g, const WeylElement& w);

/// Nested-support test on the sorting blocks.
bool is_c_sortable(const WeylGroup& g, const WeylElement& w);
bool is_sortable_for_order(const WeylGroup& g, const WeylElement& w,
                           const Word& order);

/// Longest c-sortable element below w in right weak order (finite type).
/// A tie at maximal length would falsify the lattice-homomorphism property
/// and throws AmbiguousMaximum.
WeylElement sort_c(const WeylGroup& g, const WeylElement& w);

/// The torsion-class criterion: sort_c(w s_i) gets strictly longer for every
/// ascent s_i of w.  Evaluated together with its finite-type reformulation
/// (w w_0 is c^{-1}-sortable); a disagreement throws CriterionMismatch.
bool is_torsion_candidate(const WeylGroup& g, const WeylElement& w);

/// Inversion set { s_{i_1}..s_{i_{t-1}} alpha_{i_t} } of a reduced word;
/// reduced-word independent.
std::vector<Root> inversion_set(const WeylGroup& g, const WeylElement& w);

/// Dimension vectors of the finite torsion-free class attached to a
/// c-sortable w are exactly Inv(w); cross-checked against C(Pi/I_w).
IndecSet torsion_free_of(const WeylGroup& g, const PreprojAlgebra& pi,
                         IdealCache& ideals, const Catalogue& cat,
                         const WeylElement& w, unsigned seed = 0);

/// Full torsion-pair audit for a torsion candidate w: the cofinite class of
/// w and the torsion-free class of sort_c(w) must be Hom-orthogonal
/// complements of each other in the catalogue.
bool verify_torsion_pair(const WeylGroup& g, const PreprojAlgebra& pi,
                         IdealCache& ideals, const Catalogue& cat,
                         const WeylElement& w, unsigned seed = 0);

}  // namespace qcat
