#include "qcat/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qcat/antimatroid.hpp"
#include "qcat/grassmann.hpp"
#include "qcat/io.hpp"
#include "qcat/leftmost.hpp"
#include "qcat/preproj.hpp"
#include "qcat/rep.hpp"
#include "qcat/sortable.hpp"
#include "qcat/weyl.hpp"

namespace qcat::verify {

namespace {

std::string set_to_string(const IndecSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << "}";
  return os.str();
}

struct Context {
  Quiver q;
  Options opt;
  WeylGroup group;
  std::optional<Catalogue> cat;
  std::optional<PreprojAlgebra> pi;
  std::optional<IdealCache> ideals;
  std::vector<WeylElement> elements;

  Context(const Quiver& quiver, const Options& options)
      : q(quiver), opt(options), group(quiver) {}

  const std::vector<WeylElement>& all_elements() {
    if (elements.empty()) elements = group.enumerate_group();
    return elements;
  }
  const Catalogue& catalogue() {
    if (!cat) cat.emplace(q, opt.p);
    return *cat;
  }
  const PreprojAlgebra& algebra() {
    if (!pi) pi.emplace(q, opt.p);
    return *pi;
  }
  IdealCache& ideal_cache() {
    if (!ideals) ideals.emplace(algebra(), group);
    return *ideals;
  }
};

}  // namespace

// All quotient-closed subsets of the catalogue, as bitmasks.
std::vector<std::uint64_t> quotient_closed_masks(const Catalogue& cat) {
  int k = cat.size();
  if (k > 20) throw CapExceeded("catalogue too large for subset sweep");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    IndecSet s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.insert(i);
    if (is_quotient_closed(cat, s)) out.push_back(mask);
  }
  return out;
}

std::vector<std::uint64_t> subclosed_masks(const Catalogue& cat) {
  int k = cat.size();
  if (k > 20) throw CapExceeded("catalogue too large for subset sweep");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    IndecSet s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.insert(i);
    if (is_subclosed(cat, s)) out.push_back(mask);
  }
  return out;
}

namespace {

std::uint64_t mask_of(const IndecSet& s) {
  std::uint64_t m = 0;
  for (int i : s) m |= 1ull << i;
  return m;
}

// missing set of w as catalogue indices
IndecSet missing_set(Context& ctx, const WeylElement& w) {
  SubcategorySpec spec = category_of(ctx.group, w);
  IndecSet out;
  for (const PreprojIndex& idx : spec.missing) {
    auto dim = preproj_dim(ctx.q, idx.j, idx.k);
    if (!dim) throw InternalError("missing index denotes zero module");
    int ci = ctx.catalogue().index_of(*dim);
    if (ci < 0) throw InternalError("missing index is not a root");
    out.insert(ci);
  }
  return out;
}

void check_bijection(Context& ctx, Report& report) {
  const auto& elements = ctx.all_elements();
  const Catalogue& cat = ctx.catalogue();
  std::vector<std::uint64_t> closed = quotient_closed_masks(cat);
  {
    std::ostringstream os;
    os << closed.size() << " quotient-closed sets, |W| = " << elements.size();
    report.checks.push_back({"count quotient-closed == |W|",
                             closed.size() == elements.size(), os.str()});
  }
  bool roundtrip = true, distinct = true, match = true;
  std::map<std::uint64_t, int> seen;
  std::vector<std::uint64_t> complements;
  for (const WeylElement& w : elements) {
    SubcategorySpec spec = category_of(ctx.group, w);
    Word word = word_from_missing(spec);
    if (ctx.group.evaluate_word(word) != w ||
        static_cast<int>(spec.missing.size()) != w.len)
      roundtrip = false;
    std::uint64_t m = mask_of(missing_set(ctx, w));
    if (!seen.emplace(m, 1).second) distinct = false;
    complements.push_back(~m & ((1ull << cat.size()) - 1));
  }
  std::sort(complements.begin(), complements.end());
  match = complements == closed;
  report.checks.push_back(
      {"round trip w -> missing -> w", roundtrip, ""});
  report.checks.push_back({"missing sets pairwise distinct", distinct, ""});
  report.checks.push_back(
      {"complements of missing sets == quotient-closed sets", match, ""});
}

void check_ideals(Context& ctx, Report& report) {
  const Catalogue& cat = ctx.catalogue();
  const PreprojAlgebra& pi = ctx.algebra();
  IdealCache& ideals = ctx.ideal_cache();
  bool c_of_matches = true;
  std::string detail;
  for (const WeylElement& w : ctx.all_elements()) {
    IndecSet expected = complement(cat, missing_set(ctx, w));
    IndecSet got = C_of(pi, ideals, cat, w, ctx.opt.seed);
    if (got != expected) {
      c_of_matches = false;
      detail = "w = " + word_to_string(ctx.group.canonical_word(w)) +
               ": C(I_w) = " + set_to_string(got) +
               " expected " + set_to_string(expected);
    }
  }
  report.checks.push_back(
      {"C(I_w) == complement of missing set, all w", c_of_matches, detail});
  // reduced-word independence: fold the ideal product along every reduced
  // word and compare echelon bases
  bool word_independent = true;
  for (const WeylElement& w : ctx.all_elements()) {
    const IdealSubspace& reference = ideals.ideal_Iw(w);
    for (const Word& word : ctx.group.reduced_words(w)) {
      IdealSubspace folded = ideal_full(pi);
      for (size_t i = 0; i < word.size(); ++i)
        folded = multiply_ideals(pi, ideal_Ii(pi, word[i]), folded);
      if (!(folded.basis == reference.basis)) word_independent = false;
    }
  }
  report.checks.push_back(
      {"I_w independent of the reduced word", word_independent, ""});
  bool dims_ok = true;
  for (const WeylElement& w : ctx.all_elements()) {
    const IdealSubspace& iw = ideals.ideal_Iw(w);
    Rep quot = restrict_quotient_to_kQ(pi, iw);
    i64 qd = 0;
    for (i64 d : quot.dim) qd += d;
    if (iw.dim() + qd != pi.dim()) dims_ok = false;
  }
  report.checks.push_back(
      {"dim I_w + dim Pi/I_w == dim Pi", dims_ok, ""});
}

void check_duality(Context& ctx, Report& report) {
  bool ok = true;
  std::string detail;
  for (const WeylElement& w : ctx.all_elements())
    if (!verify_duality(ctx.algebra(), ctx.ideal_cache(), w)) {
      ok = false;
      detail = "w = " + word_to_string(ctx.group.canonical_word(w));
      break;
    }
  report.checks.push_back(
      {"graded dims of D I_w and Pi/I_{w_0 w^{-1}} agree", ok, detail});
}

void check_bruhat(Context& ctx, Report& report) {
  bool ok = true;
  std::string detail;
  const auto& elements = ctx.all_elements();
  for (const WeylElement& v : elements) {
    for (const WeylElement& w : elements) {
      bool by_ideal = ctx.ideal_cache().ideal_contains(v, w);
      bool by_bruhat = ctx.group.bruhat_leq(v, w);
      if (by_ideal != by_bruhat) {
        ok = false;
        detail = "v = " + word_to_string(ctx.group.canonical_word(v)) +
                 ", w = " + word_to_string(ctx.group.canonical_word(w));
      }
    }
  }
  std::ostringstream os;
  os << elements.size() * elements.size() << " ordered pairs";
  report.checks.push_back({"I_v >= I_w iff v <= w in Bruhat order", ok,
                           ok ? os.str() : detail});
}

void check_sorting(Context& ctx, Report& report) {
  const Catalogue& cat = ctx.catalogue();
  bool criterion_matches_oracle = true;
  bool pairs_ok = true;
  std::string detail;
  for (const WeylElement& w : ctx.all_elements()) {
    bool candidate = is_torsion_candidate(ctx.group, w);
    IndecSet cofinite = complement(cat, missing_set(ctx, w));
    bool oracle = is_torsion_class(cat, cofinite, ctx.opt.seed);
    if (candidate != oracle) {
      criterion_matches_oracle = false;
      detail = "w = " + word_to_string(ctx.group.canonical_word(w));
    }
    if (candidate &&
        !verify_torsion_pair(ctx.group, ctx.algebra(), ctx.ideal_cache(), cat,
                             w, ctx.opt.seed))
      pairs_ok = false;
  }
  report.checks.push_back({"torsion criterion == brute-force torsion class",
                           criterion_matches_oracle, detail});
  report.checks.push_back(
      {"torsion pair verified for every candidate", pairs_ok, ""});
  bool inv_ok = true;
  for (const WeylElement& v : ctx.all_elements()) {
    auto iv = inversion_set(ctx.group, v);
    for (const WeylElement& w : ctx.all_elements()) {
      auto iw = inversion_set(ctx.group, w);
      bool contained = std::includes(iw.begin(), iw.end(), iv.begin(), iv.end());
      if (contained != ctx.group.weak_leq_right(v, w)) inv_ok = false;
    }
  }
  report.checks.push_back(
      {"Inv(v) subset of Inv(w) iff v <=_R w", inv_ok, ""});
}

void check_le(Context& ctx, Report& report) {
  auto run = [&](int n, int k) {
    std::optional<LeCounterexample> ce;
    bool ok = verify_le_theorem(n, k, &ce);
    std::ostringstream name;
    name << "leftmost iff no bad pattern, n=" << n << " k=" << k;
    std::string detail;
    if (!ok && ce) {
      std::ostringstream os;
      os << "lambda = (";
      for (size_t i = 0; i < ce->lambda.parts.size(); ++i)
        os << (i ? "," : "") << ce->lambda.parts[i];
      os << "), cells";
      for (auto& [r, c] : ce->selection) os << " (" << r << "," << c << ")";
      detail = os.str();
    }
    report.checks.push_back({name.str(), ok, detail});
  };
  if (ctx.opt.le_n > 0) {
    if (ctx.opt.le_k > 0)
      run(ctx.opt.le_n, ctx.opt.le_k);
    else
      for (int k = 1; k <= ctx.opt.le_n; ++k) run(ctx.opt.le_n, k);
  } else {
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) run(n, k);
  }
}

void check_antimatroid(Context& ctx, Report& report) {
  Word base = ctx.opt.word.empty() ? ar_word_w0(ctx.q)
                                   : parse_word(ctx.opt.word);
  SetSystem sys = feasible_sets_from_word(ctx.group, base);
  std::optional<ExchangeCounterexample> ce;
  bool acc = is_accessible(sys, &ce);
  bool anti = acc && is_antimatroid(sys, &ce);
  bool super = anti && is_supersolvable(sys, {}, &ce);
  std::ostringstream os;
  os << sys.feasible.size() << " feasible sets over " << sys.ground_size
     << " positions";
  report.checks.push_back({"accessible", acc, os.str()});
  report.checks.push_back({"antimatroid exchange", anti, ""});
  report.checks.push_back({"supersolvable exchange", super, ""});
}

void check_subclosed(Context& ctx, Report& report) {
  const Catalogue& cat = ctx.catalogue();
  std::vector<std::uint64_t> closed = subclosed_masks(cat);
  const auto& elements = ctx.all_elements();
  {
    std::ostringstream os;
    os << closed.size() << " subclosed sets, |W| = " << elements.size();
    report.checks.push_back({"count subclosed == |W|",
                             closed.size() == elements.size(), os.str()});
  }
  bool injective = true, image_ok = true;
  std::map<std::uint64_t, int> seen;
  for (const WeylElement& w : elements) {
    IndecSet c = C_of_quotient(ctx.algebra(), ctx.ideal_cache(), cat, w,
                               ctx.opt.seed);
    std::uint64_t m = mask_of(c);
    if (!seen.emplace(m, 1).second) injective = false;
    if (!std::binary_search(closed.begin(), closed.end(), m)) image_ok = false;
  }
  report.checks.push_back({"w -> C(Pi/I_w) injective", injective, ""});
  report.checks.push_back(
      {"every C(Pi/I_w) is subclosed", image_ok, ""});
}

void check_oracles(Context& ctx, Report& report) {
  // table dimension oracle: dim Pi == sum over table rows of |dim vector|
  PreprojTable table = enumerate_preprojectives(ctx.q, ctx.opt.k_max);
  PreprojTable knit = enumerate_preprojectives_knitting(ctx.q, ctx.opt.k_max);
  bool tables_agree = table.rows.size() == knit.rows.size();
  if (tables_agree)
    for (size_t r = 0; r < table.rows.size(); ++r)
      if (table.rows[r].j != knit.rows[r].j ||
          table.rows[r].k != knit.rows[r].k ||
          table.rows[r].dim != knit.rows[r].dim)
        tables_agree = false;
  report.checks.push_back(
      {"Coxeter iteration == knitting recursion", tables_agree, ""});
  if (ctx.q.dynkin) {
    i64 expected = 0;
    for (const auto& row : table.rows)
      for (i64 d : row.dim) expected += d;
    bool dim_ok = ctx.algebra().dim() == expected;
    std::ostringstream os;
    os << "dim Pi = " << ctx.algebra().dim() << ", oracle = " << expected;
    report.checks.push_back({"dim Pi == sum of tau^{-k}(kQ) dims", dim_ok,
                             os.str()});
    // characteristic independence: rerun the ideal dimensions at p = 3
    Options alt = ctx.opt;
    alt.p = (ctx.opt.p == 3) ? 5 : 3;
    Context other(ctx.q, alt);
    bool char_free = true;
    for (const WeylElement& w : ctx.all_elements()) {
      int d1 = ctx.ideal_cache().ideal_Iw(w).dim();
      int d2 = other.ideal_cache().ideal_Iw(w).dim();
      if (d1 != d2) char_free = false;
    }
    std::ostringstream os2;
    os2 << "p=" << ctx.opt.p << " vs p=" << alt.p;
    report.checks.push_back(
        {"ideal dimensions characteristic independent", char_free, os2.str()});
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bijection", "ideals",      "duality",   "bruhat", "sorting",
          "le",        "antimatroid", "subclosed", "oracles", "all"};
}

Report run_suite(const std::string& suite, const Quiver& q,
                 const Options& opt) {
  Report report;
  report.suite = suite;
  Context ctx(q, opt);
  bool all = suite == "all";
  bool known = all;
  auto want = [&](const char* name) {
    if (suite == name) known = true;
    return all || suite == name;
  };
  if (want("bijection")) check_bijection(ctx, report);
  if (want("ideals")) check_ideals(ctx, report);
  if (want("duality")) check_duality(ctx, report);
  if (want("bruhat")) check_bruhat(ctx, report);
  if (want("sorting")) check_sorting(ctx, report);
  if (want("le")) check_le(ctx, report);
  if (want("antimatroid")) check_antimatroid(ctx, report);
  if (want("subclosed")) check_subclosed(ctx, report);
  if (want("oracles")) check_oracles(ctx, report);
  if (!known) throw ParseError("unknown suite: " + suite);
  return report;
}

}  // namespace qcat::verify
