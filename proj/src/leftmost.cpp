#include "qcat/leftmost.hpp"

#include <algorithm>

namespace qcat {

PositionList leftmost_positions(const WeylGroup& g, const WeylElement& target,
                                CInfinity) {
  int n = g.rank();
  PositionList out;
  out.reserve(target.len);
  WeylElement r = target;
  // each copy of c strictly lowers l(r) for r != e, so this cap is slack
  long long max_pos = static_cast<long long>(n) * (target.len + 1);
  long long p = 0;
  while (!r.is_identity()) {
    if (p >= max_pos)
      throw InternalError("c^infty scan exceeded its termination bound");
    ++p;
    int s = static_cast<int>((p - 1) % n) + 1;
    if (g.left_descent(r, s)) {
      out.push_back(static_cast<int>(p));
      r = g.mul_gen_left(s, r);
    }
  }
  return out;
}

PositionList leftmost_positions(const WeylGroup& g, const WeylElement& target,
                                const Word& base) {
  PositionList out;
  WeylElement r = target;
  for (size_t p = 0; p < base.size() && !r.is_identity(); ++p) {
    int s = base[p];
    if (g.left_descent(r, s)) {
      out.push_back(static_cast<int>(p) + 1);
      r = g.mul_gen_left(s, r);
    }
  }
  if (!r.is_identity())
    throw NotASubword("target is not a subword of the base word");
  return out;
}

std::vector<PreprojIndex> positions_to_indices(const Quiver& q,
                                               const PositionList& positions) {
  std::vector<PreprojIndex> out;
  out.reserve(positions.size());
  std::optional<PreprojTable> table;
  if (q.dynkin) table = enumerate_preprojectives(q);
  for (int p : positions) {
    if (p < 1) throw InvalidIndex("positions are 1-based");
    PreprojIndex idx;
    idx.j = (p - 1) % q.n + 1;
    idx.k = (p - 1) / q.n;
    if (table && table->is_zero(idx.j, idx.k))
      throw ZeroModuleHit("leftmost position " + std::to_string(p) +
                          " denotes the zero module tau^{-" +
                          std::to_string(idx.k) + "} P_" +
                          std::to_string(idx.j) +
                          "; this contradicts the bijection");
    out.push_back(idx);
  }
  return out;
}

Word word_from_missing(const SubcategorySpec& spec) {
  std::vector<PreprojIndex> sorted = spec.missing;
  std::sort(sorted.begin(), sorted.end());
  Word w;
  w.reserve(sorted.size());
  for (const auto& idx : sorted) w.push_back(idx.j);
  return w;
}

SubcategorySpec category_of(const WeylGroup& g, const WeylElement& w) {
  SubcategorySpec spec;
  spec.quiver = g.quiver();
  spec.missing =
      positions_to_indices(g.quiver(), leftmost_positions(g, w, C_INFINITY));
  return spec;
}

bool is_leftmost(const WeylGroup& g, const Word& base,
                 const PositionList& positions) {
  Word selected;
  selected.reserve(positions.size());
  int prev = 0;
  for (int p : positions) {
    if (p <= prev || p > static_cast<int>(base.size())) return false;
    prev = p;
    selected.push_back(base[p - 1]);
  }
  WeylElement w = g.evaluate_word(selected);
  if (w.len != static_cast<int>(selected.size())) return false;  // not reduced
  PositionList greedy = leftmost_positions(g, w, base);
  return greedy == positions;
}

}  // namespace qcat
