#pragma once

#include <map>
#include <mutex>
#include <random>
#include <set>
#include <vector>

#include "qcat/arquiver.hpp"
#include "qcat/fp.hpp"
#include "qcat/quiver.hpp"

namespace qcat {

/// Explicit quiver representation over F_p.
///
/// Convention (applied globally): `mats[a]` for the arrow a: i -> j is a
/// (dim_i x dim_j) matrix for the linear map X_j -> X_i, i.e. module maps run
/// against the arrow orientation.  This is the convention in which P_1 is the
/// simple projective at the source vertex 1 and dim(P_i)_j counts paths
/// j -> i, matching the rest of the project.
struct Rep {
  int p = 5;
  DimVector dim;
  std::vector<FpMat> mats;  // one per quiver arrow, in arrow order
};

Rep rep_zero(const Quiver& q, int p);
Rep rep_simple(const Quiver& q, int j, int p);
Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts);

/// One morphism X -> Y: a matrix (Ydim_i x Xdim_i) per vertex satisfying all
/// commuting squares.
using Morphism = std::vector<FpMat>;
using HomBasis = std::vector<Morphism>;

HomBasis hom_space(const Quiver& q, const Rep& x, const Rep& y);
int hom_dim(const Quiver& q, const Rep& x, const Rep& y);

/// Euler pairing <dim X, dim Y> = dim Hom(X,Y) - dim Ext^1(X,Y) for this
/// module convention.
i64 euler_pairing(const Quiver& q, const DimVector& x, const DimVector& y);

/// The unique indecomposable with the given positive-root dimension vector,
/// built by inverse reflection functors from a simple.  Throws NotARoot, and
/// NotDynkin for non-Dynkin input.
Rep build_indecomposable(const Quiver& q, const DimVector& root, int p);

/// All indecomposables of a Dynkin quiver, ordered like the preprojective
/// table (the canonical linear order used everywhere in this project).
class Catalogue {
 public:
  Catalogue(const Quiver& q, int p);

  const Quiver& quiver() const { return q_; }
  int p() const { return p_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const Rep& rep(int idx) const { return reps_[idx]; }
  const DimVector& root(int idx) const { return reps_[idx].dim; }
  int index_of(const DimVector& d) const;  // -1 if not a root

  const HomBasis& hom(int x, int y) const;  // cached

 private:
  Quiver q_;
  int p_;
  std::vector<Rep> reps_;
  std::map<DimVector, int> index_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, HomBasis> hom_cache_;
};

/// A subcategory of mod kQ given by its set of indecomposables
/// (catalogue indices).
using IndecSet = std::set<int>;

IndecSet full_set(const Catalogue& cat);
IndecSet complement(const Catalogue& cat, const IndecSet& s);

/// N is a quotient of an object of add S iff the trace of S in N is all
/// of N.
bool is_generated(const Catalogue& cat, const IndecSet& s, int n_idx);

/// N embeds into an object of add S iff the common kernel of all morphisms
/// N -> S vanishes.
bool is_cogenerated(const Catalogue& cat, const IndecSet& s, int n_idx);

bool is_quotient_closed(const Catalogue& cat, const IndecSet& s);
bool is_subclosed(const Catalogue& cat, const IndecSet& s);

/// Checks closure under extensions between indecomposables of S by explicit
/// middle-term search: every monomorphism X -> M with cokernel isomorphic to
/// Z forces all summands of M into S.  Enumeration of Hom(X, M) is capped;
/// beyond the cap this throws FieldTooLargeForEnumeration.
bool is_extension_closed(const Catalogue& cat, const IndecSet& s,
                         unsigned seed = 0);

/// True iff some short exact sequence 0 -> X -> E -> Z -> 0 has a middle
/// term not isomorphic to X (+) Z; equivalent to Ext^1(Z, X) != 0, which the
/// tests assert against the Euler form.
bool exists_nonsplit_extension(const Catalogue& cat, int x_idx, int z_idx,
                               unsigned seed = 0);

bool is_torsion_class(const Catalogue& cat, const IndecSet& s,
                      unsigned seed = 0);

/// Krull-Schmidt decomposition by random-endomorphism Fitting splitting.
/// Deterministic for a fixed seed; retry budget guards small fields.
std::vector<DimVector> decompose(const Quiver& q, const Rep& m,
                                 unsigned seed = 0);

/// decompose() of a catalogue member set, as indices.
IndecSet decompose_to_set(const Catalogue& cat, const Rep& m,
                          unsigned seed = 0);

/// The quiver with all arrows reversed and vertices relabelled i -> n+1-i so
/// the numbering stays admissible; used to express duality statements.
Quiver opposite_quiver(const Quiver& q);
DimVector reverse_coords(const DimVector& d);
Rep dualize(const Quiver& q, const Rep& m);  // rep of opposite_quiver(q)

}  // namespace qcat
