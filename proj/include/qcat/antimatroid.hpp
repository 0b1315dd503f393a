#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcat/weyl.hpp"

namespace qcat {

/// Collection of feasible subsets of {1..N}, N <= 32, as bitmasks.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::uint32_t> feasible;  // sorted, deduplicated

  bool contains(std::uint32_t s) const;
};

struct ExchangeCounterexample {
  std::uint32_t a = 0, b = 0;
  std::string axiom;
};

/// Leftmost-position sets A_v of every element v expressible as a subword of
/// `base`, found by prefix dynamic programming.  Always contains the empty
/// set (A_e).
SetSystem feasible_sets_from_word(const WeylGroup& g, const Word& base);

bool is_accessible(const SetSystem& s,
                   std::optional<ExchangeCounterexample>* ce = nullptr);

bool is_antimatroid(const SetSystem& s,
                    std::optional<ExchangeCounterexample>* ce = nullptr);

/// Exchange with the forced minimum element of B \ A; `order` maps rank ->
/// ground element (1-based).  Defaults to the natural position order.
bool is_supersolvable(const SetSystem& s, const std::vector<int>& order = {},
                      std::optional<ExchangeCounterexample>* ce = nullptr);

}  // namespace qcat
