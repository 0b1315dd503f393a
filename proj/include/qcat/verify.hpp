#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcat/quiver.hpp"
#include "qcat/rep.hpp"

namespace qcat::verify {

/// All quotient-closed (resp. subclosed) subsets of the catalogue, as sorted
/// bitmasks over catalogue indices.  Exhaustive sweep; desk-scale ranks only.
std::vector<std::uint64_t> quotient_closed_masks(const Catalogue& cat);
std::vector<std::uint64_t> subclosed_masks(const Catalogue& cat);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample payload or counts
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct Options {
  int p = 5;
  unsigned seed = 0;
  int k_max = 50;
  int le_n = 0;  // 0: sweep 1 <= k <= n <= 4
  int le_k = 0;
  std::string word;  // optional base word for the antimatroid suite
};

/// suite in {bijection, ideals, duality, bruhat, sorting, le, antimatroid,
/// subclosed, oracles, all}.
Report run_suite(const std::string& suite, const Quiver& q,
                 const Options& opt = {});

std::vector<std::string> suite_names();

}  // namespace qcat::verify
