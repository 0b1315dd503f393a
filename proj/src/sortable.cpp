#include "qcat/sortable.hpp"

#include <algorithm>

namespace qcat {

CSortingBlocks c_sorting_blocks(const WeylGroup& g, const WeylElement& w,
                                const Word& order) {
  int n = g.rank();
  CSortingBlocks out;
  WeylElement r = w;
  long long max_pos = static_cast<long long>(n) * (w.len + 1);
  long long p = 0;
  while (!r.is_identity()) {
    if (p >= max_pos) throw InternalError("sorting scan failed to terminate");
    int copy = static_cast<int>(p / n);
    int s = order[static_cast<size_t>(p % n)];
    ++p;
    if (g.left_descent(r, s)) {
      while (static_cast<int>(out.blocks.size()) <= copy)
        out.blocks.emplace_back();
      out.blocks[copy].insert(s);
      r = g.mul_gen_left(s, r);
    }
  }
  return out;
}

CSortingBlocks c_sorting_blocks(const WeylGroup& g, const WeylElement& w) {
  return c_sorting_blocks(g, w, coxeter_word(g.quiver()));
}

namespace {

bool nested(const CSortingBlocks& b) {
  for (size_t i = 1; i < b.blocks.size(); ++i)
    if (!std::includes(b.blocks[i - 1].begin(), b.blocks[i - 1].end(),
                       b.blocks[i].begin(), b.blocks[i].end()))
      return false;
  return true;
}

}  // namespace

bool is_sortable_for_order(const WeylGroup& g, const WeylElement& w,
                           const Word& order) {
  return nested(c_sorting_blocks(g, w, order));
}

bool is_c_sortable(const WeylGroup& g, const WeylElement& w) {
  return nested(c_sorting_blocks(g, w));
}

WeylElement sort_c(const WeylGroup& g, const WeylElement& w) {
  if (!g.quiver().dynkin)
    throw NotFiniteType("sort_c is defined here in finite type only");
  std::vector<WeylElement> best;
  int best_len = -1;
  for (const WeylElement& u : g.enumerate_group()) {
    if (u.len < best_len || !is_c_sortable(g, u)) continue;
    if (!g.weak_leq_right(u, w)) continue;
    if (u.len > best_len) {
      best_len = u.len;
      best.clear();
    }
    best.push_back(u);
  }
  if (best.size() != 1)
    throw AmbiguousMaximum("longest c-sortable prefix is not unique");
  return best.front();
}

bool is_torsion_candidate(const WeylGroup& g, const WeylElement& w) {
  if (!g.quiver().dynkin)
    throw NotFiniteType("torsion criterion is finite type only");
  int base = sort_c(g, w).len;
  bool by_prefixes = true;
  for (int i = 1; i <= g.rank() && by_prefixes; ++i) {
    if (g.right_descent(w, i)) continue;
    if (sort_c(g, g.mul_gen_right(w, i)).len <= base) by_prefixes = false;
  }
  // finite-type reformulation: w w_0 is c^{-1}-sortable
  Word reversed(coxeter_word(g.quiver()));
  std::reverse(reversed.begin(), reversed.end());
  WeylElement ww0 = g.mul(w, g.longest_element());
  bool by_w0 = is_sortable_for_order(g, ww0, reversed);
  if (by_prefixes != by_w0)
    throw CriterionMismatch(
        "prefix criterion and w w_0 sortability disagree");
  return by_prefixes;
}

std::vector<Root> inversion_set(const WeylGroup& g, const WeylElement& w) {
  std::vector<Root> out;
  Word word = g.canonical_word(w);
  WeylElement prefix = g.identity();
  for (size_t t = 0; t < word.size(); ++t) {
    Root a(g.rank(), 0);
    a[word[t] - 1] = 1;
    out.push_back(prefix.mat.apply(a));
    prefix = g.mul_gen_right(prefix, word[t]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndecSet torsion_free_of(const WeylGroup& g, const PreprojAlgebra& pi,
                         IdealCache& ideals, const Catalogue& cat,
                         const WeylElement& w, unsigned seed) {
  if (!is_c_sortable(g, w))
    throw NotSortable("torsion-free classes are indexed by c-sortable elements");
  IndecSet out;
  for (const Root& r : inversion_set(g, w)) {
    int idx = cat.index_of(r);
    if (idx < 0) throw InternalError("inversion is not a catalogue root");
    out.insert(idx);
  }
  IndecSet from_quotient = C_of_quotient(pi, ideals, cat, w, seed);
  if (out != from_quotient)
    throw CrossCheckMismatch("Inv(w) disagrees with C(Pi/I_w)");
  return out;
}

bool verify_torsion_pair(const WeylGroup& g, const PreprojAlgebra& pi,
                         IdealCache& ideals, const Catalogue& cat,
                         const WeylElement& w, unsigned seed) {
  SubcategorySpec spec = category_of(g, w);
  IndecSet torsion = full_set(cat);
  for (const PreprojIndex& idx : spec.missing) {
    auto dim = preproj_dim(g.quiver(), idx.j, idx.k);
    if (!dim) throw InternalError("missing index denotes the zero module");
    torsion.erase(cat.index_of(*dim));
  }
  IndecSet free = torsion_free_of(g, pi, ideals, cat, sort_c(g, w), seed);
  if (!is_torsion_class(cat, torsion, seed)) return false;
  for (int x : torsion)
    for (int y : free)
      if (!cat.hom(x, y).empty()) return false;
  // each side must be the full Hom-orthogonal of the other
  for (int n = 0; n < cat.size(); ++n) {
    bool killed_by_torsion = true;
    for (int x : torsion)
      if (!cat.hom(x, n).empty()) killed_by_torsion = false;
    if (killed_by_torsion != (free.count(n) > 0)) return false;
    bool kills_free = true;
    for (int y : free)
      if (!cat.hom(n, y).empty()) kills_free = false;
    if (kills_free != (torsion.count(n) > 0)) return false;
  }
  return true;
}

}  // namespace qcat
