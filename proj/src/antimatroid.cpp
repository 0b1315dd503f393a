#include "qcat/antimatroid.hpp"

#include <algorithm>
#include <map>

#include "qcat/leftmost.hpp"

namespace qcat {

bool SetSystem::contains(std::uint32_t s) const {
  return std::binary_search(feasible.begin(), feasible.end(), s);
}

SetSystem feasible_sets_from_word(const WeylGroup& g, const Word& base) {
  if (base.size() > 32) throw CapExceeded("base word longer than 32 letters");
  // elements expressible as a subword of base[0..p)
  std::map<std::string, WeylElement> reachable;
  WeylElement e = g.identity();
  reachable.emplace(e.key(), e);
  for (int letter : base) {
    std::vector<WeylElement> grown;
    for (const auto& [key, v] : reachable)
      grown.push_back(g.mul_gen_right(v, letter));
    for (WeylElement& v : grown) reachable.emplace(v.key(), std::move(v));
  }
  SetSystem out;
  out.ground_size = static_cast<int>(base.size());
  for (const auto& [key, v] : reachable) {
    PositionList positions = leftmost_positions(g, v, base);
    std::uint32_t mask = 0;
    for (int p : positions) mask |= 1u << (p - 1);
    out.feasible.push_back(mask);
  }
  std::sort(out.feasible.begin(), out.feasible.end());
  out.feasible.erase(std::unique(out.feasible.begin(), out.feasible.end()),
                     out.feasible.end());
  return out;
}

bool is_accessible(const SetSystem& s,
                   std::optional<ExchangeCounterexample>* ce) {
  for (std::uint32_t a : s.feasible) {
    if (a == 0) continue;
    bool ok = false;
    for (int x = 0; x < s.ground_size && !ok; ++x)
      if ((a >> x & 1) && s.contains(a & ~(1u << x))) ok = true;
    if (!ok) {
      if (ce) *ce = ExchangeCounterexample{a, 0, "accessible"};
      return false;
    }
  }
  return true;
}

bool is_antimatroid(const SetSystem& s,
                    std::optional<ExchangeCounterexample>* ce) {
  if (!is_accessible(s, ce)) return false;
  for (std::uint32_t a : s.feasible)
    for (std::uint32_t b : s.feasible) {
      if ((b & ~a) == 0) continue;  // B subset of A
      bool ok = false;
      for (int x = 0; x < s.ground_size && !ok; ++x)
        if ((b >> x & 1) && !(a >> x & 1) && s.contains(a | (1u << x)))
          ok = true;
      if (!ok) {
        if (ce) *ce = ExchangeCounterexample{a, b, "exchange"};
        return false;
      }
    }
  return true;
}

bool is_supersolvable(const SetSystem& s, const std::vector<int>& order,
                      std::optional<ExchangeCounterexample>* ce) {
  if (!is_accessible(s, ce)) return false;
  std::vector<int> ranked(order);
  if (ranked.empty())
    for (int i = 1; i <= s.ground_size; ++i) ranked.push_back(i);
  if (static_cast<int>(ranked.size()) != s.ground_size)
    throw InvalidIndex("total order must cover the ground set");
  for (std::uint32_t a : s.feasible)
    for (std::uint32_t b : s.feasible) {
      if ((b & ~a) == 0) continue;
      int forced = -1;
      for (int rank = 0; rank < s.ground_size && forced < 0; ++rank) {
        int x = ranked[rank] - 1;
        if ((b >> x & 1) && !(a >> x & 1)) forced = x;
      }
      if (!s.contains(a | (1u << forced))) {
        if (ce) *ce = ExchangeCounterexample{a, b, "supersolvable"};
        return false;
      }
    }
  return true;
}

}  // namespace qcat
