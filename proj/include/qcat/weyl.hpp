#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "qcat/quiver.hpp"

namespace qcat {

/// Weyl group element in the geometric representation on the simple-root
/// basis: column j of `mat` holds the coordinates of w(alpha_j).  The inverse
/// matrix is carried along so that left and right descents are both sign
/// checks, and `len` caches the Coxeter length.
struct WeylElement {
  IntMatrix mat;
  IntMatrix inv;
  int len = 0;

  bool is_identity() const { return len == 0; }
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
  bool operator!=(const WeylElement& o) const { return mat != o.mat; }
  std::string key() const { return mat.key(); }
};

using Root = Vec;  // integer coordinates in the simple-root basis

/// Exact Weyl group engine attached to a quiver.  Elements are value types;
/// the group object owns the Cartan data and the Bruhat memo cache.
/// All element data is immutable once constructed; the memo cache is guarded
/// so concurrent queries agree and never deadlock.
class WeylGroup {
 public:
  explicit WeylGroup(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  int rank() const { return q_.n; }

  /// Matrix of the simple reflection s_i (1-based): s_i(a_j) = a_j - A_ij a_i.
  const IntMatrix& simple_reflection_matrix(int i) const;

  WeylElement identity() const;
  WeylElement evaluate_word(const Word& w) const;

  WeylElement mul_gen_left(int i, const WeylElement& w) const;   // s_i * w
  WeylElement mul_gen_right(const WeylElement& w, int i) const;  // w * s_i
  WeylElement mul(const WeylElement& v, const WeylElement& w) const;
  WeylElement inverse(const WeylElement& w) const;

  /// l(s_i w) < l(w)
  bool left_descent(const WeylElement& w, int i) const;
  /// l(w s_i) < l(w)
  bool right_descent(const WeylElement& w, int i) const;

  bool is_reduced(const Word& w) const;

  /// Canonical reduced word: peel the smallest left descent at each step.
  Word canonical_word(const WeylElement& w) const;

  /// All reduced words for w (exponential; desk-scale ranks only).
  std::vector<Word> reduced_words(const WeylElement& w) const;

  /// Bruhat order via the lifting recursion, memoized per group.
  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;

  /// Right weak order: l(v) + l(v^{-1} w) == l(w).
  bool weak_leq_right(const WeylElement& v, const WeylElement& w) const;

  /// Longest element; throws NotFiniteType unless the quiver is Dynkin.
  WeylElement longest_element() const;

  /// Full enumeration by BFS over generator multiplication (identity first,
  /// deterministic order).  Throws CapExceeded if more than `cap` elements
  /// are found.
  std::vector<WeylElement> enumerate_group(size_t cap = 2000000) const;

  /// Positive roots of the (finite) root system; throws NotFiniteType.
  std::vector<Root> positive_roots() const;

  static bool is_positive(const Vec& v);
  static bool is_negative(const Vec& v);

 private:
  int peel_length(IntMatrix m) const;  // descent peeling from scratch

  Quiver q_;
  IntMatrix cartan_;
  std::vector<IntMatrix> refl_;  // simple reflection matrices

  mutable std::mutex bruhat_mu_;
  mutable std::unordered_map<std::string, bool> bruhat_memo_;
};

}  // namespace qcat
