#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "qcat/fp.hpp"
#include "qcat/rep.hpp"
#include "qcat/weyl.hpp"

namespace qcat {

/// The preprojective algebra Pi of a Dynkin quiver over F_p, as an explicit
/// basis-and-structure-constants algebra.
///
/// Pi is the path algebra of the doubled quiver modulo the ideal generated
/// by rho = sum_a (a a* - a* a).  The basis is built degree by degree: the
/// degree d+1 part is spanned by (degree-d basis element) * (arrow of the
/// double quiver), modulo the relation vectors b * rho_v coming from the
/// degree d-1 basis.  Products are composed function-style (x*y = "first y,
/// then x"), so right multiplication by an original arrow a: i -> j maps the
/// e_j-component to the e_i-component; restricting a right-closed subspace
/// to kQ therefore lands exactly in this project's module convention.
///
/// Basis vectors are canonical: within each degree the surviving coordinates
/// of the reduced row echelon form of the relation space, ordered by
/// (predecessor index, arrow index).
class PreprojAlgebra {
 public:
  PreprojAlgebra(const Quiver& q, int p);

  const Quiver& quiver() const { return q_; }
  int p() const { return p_; }
  int dim() const { return dim_; }
  const std::vector<int>& graded_dims() const { return graded_dims_; }

  struct BasisElt {
    int src, tgt;   // x lies in e_tgt . Pi . e_src
    int deg;
    int prev;       // global index of the degree-(d-1) predecessor; -1 in deg 0
    int arrow;      // index into double-quiver arrows; -1 in degree 0
  };
  const BasisElt& basis(int idx) const { return basis_[idx]; }
  int idempotent(int v) const { return v - 1; }  // e_v is basis element v-1

  /// Element of Pi as a coordinate vector over the global basis.
  using Elt = std::vector<int>;

  Elt zero() const { return Elt(dim_, 0); }
  Elt unit(int idx) const {
    Elt e = zero();
    e[idx] = 1;
    return e;
  }

  /// Product of basis elements, as a vector (memoized).
  const Elt& basis_product(int x, int y) const;
  Elt multiply(const Elt& x, const Elt& y) const;

  /// Right multiplication x * (arrow a of the base quiver); the degree rises
  /// by one.  Used for the kQ-module structure.
  Elt right_mul_arrow(const Elt& x, int arrow_idx) const;

 private:
  void build();

  Quiver q_;
  int p_;
  Fp f_;
  std::vector<Arrow> darrows_;        // double quiver arrows; first the
                                      // originals, then the reversed ones
  std::vector<BasisElt> basis_;       // global, ordered by degree
  std::vector<int> degree_offset_;    // degree -> first global index
  std::vector<int> graded_dims_;
  int dim_ = 0;

  // per degree d >= 1: formal pairs (prev, arrow) and the reduction of each
  // formal pair to the surviving basis of that degree
  struct DegreeData {
    std::vector<std::pair<int, int>> formal;   // (prev global idx, darrow)
    std::vector<std::vector<int>> reduce;      // formal idx -> coords in basis
    std::vector<int> basis_of_formal;          // formal idx of each basis elt
  };
  std::vector<DegreeData> degrees_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Elt> product_cache_;
};

/// Two-sided ideal (or any right-and-left closed subspace) of Pi, stored as
/// a reduced row echelon basis over the global coordinates.
struct IdealSubspace {
  FpMat basis;              // rref rows
  std::vector<int> pivots;

  int dim() const { return basis.rows; }
};

/// I_i = Pi (1 - e_i) Pi.
IdealSubspace ideal_Ii(const PreprojAlgebra& pi, int i);

IdealSubspace multiply_ideals(const PreprojAlgebra& pi, const IdealSubspace& x,
                              const IdealSubspace& y);

/// Full algebra and zero subspace as IdealSubspace values.
IdealSubspace ideal_full(const PreprojAlgebra& pi);
IdealSubspace ideal_zero(const PreprojAlgebra& pi);

bool ideal_contains_subspace(const PreprojAlgebra& pi, const IdealSubspace& big,
                             const IdealSubspace& small);

/// Cache of ideals I_w keyed by the group element (not the word).
class IdealCache {
 public:
  IdealCache(const PreprojAlgebra& pi, const WeylGroup& g);

  const PreprojAlgebra& algebra() const { return pi_; }
  const WeylGroup& group() const { return g_; }

  /// I_w for the element of a reduced word; throws NotReduced otherwise.
  const IdealSubspace& ideal_Iw(const Word& reduced_word);
  const IdealSubspace& ideal_Iw(const WeylElement& w);

  /// Lemma-level containment test I_v >= I_w.
  bool ideal_contains(const WeylElement& v, const WeylElement& w);

 private:
  const IdealSubspace& ideal_of_element(const WeylElement& w);

  const PreprojAlgebra& pi_;
  const WeylGroup& g_;
  std::vector<IdealSubspace> gens_;
  std::mutex mu_;
  std::map<std::string, IdealSubspace> cache_;
};

/// Restriction of a right-closed subspace of Pi to a kQ-module in this
/// project's representation convention.
Rep restrict_to_kQ(const PreprojAlgebra& pi, const IdealSubspace& sub);

/// Restriction of the quotient Pi / sub.
Rep restrict_quotient_to_kQ(const PreprojAlgebra& pi,
                            const IdealSubspace& sub);

/// C(I_w): indecomposable kQ-summands of I_w, as catalogue indices.
IndecSet C_of(const PreprojAlgebra& pi, IdealCache& ideals,
              const Catalogue& cat, const WeylElement& w, unsigned seed = 0);

/// C(Pi / I_w).
IndecSet C_of_quotient(const PreprojAlgebra& pi, IdealCache& ideals,
                       const Catalogue& cat, const WeylElement& w,
                       unsigned seed = 0);

/// Dimension shadow of the duality D I_w = Pi / I_{w_0 w^{-1}}: total and
/// vertex-graded dimensions must agree (right components of I_w against left
/// components of the quotient).
bool verify_duality(const PreprojAlgebra& pi, IdealCache& ideals,
                    const WeylElement& w);

/// Per-vertex dimensions of the right components (src grading) and left
/// components (tgt grading) of a subspace.
std::vector<int> right_component_dims(const PreprojAlgebra& pi,
                                      const IdealSubspace& sub);
std::vector<int> left_component_dims(const PreprojAlgebra& pi,
                                     const IdealSubspace& sub);

}  // namespace qcat
