#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcat/antimatroid.hpp"
#include "qcat/grassmann.hpp"
#include "qcat/io.hpp"
#include "qcat/leftmost.hpp"
#include "qcat/preproj.hpp"
#include "qcat/rep.hpp"
#include "qcat/sortable.hpp"
#include "qcat/verify.hpp"
#include "qcat/weyl.hpp"

using nlohmann::json;
using namespace qcat;

namespace {

// exit codes: 0 pass, 1 mathematical counterexample, 2 usage error
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::string quiver = "A3";
  int p = 5;
  unsigned seed = 0;
  int kmax = 50;
  std::string format = "json";
};

Quiver load_quiver(const std::string& spec) {
  // a path wins over a builtin name when the file exists
  std::ifstream in(spec);
  if (in.good()) {
    std::stringstream ss;
    ss << in.rdbuf();
    return quiver_from_json(ss.str());
  }
  return named_quiver(spec);
}

json missing_to_json(const std::vector<PreprojIndex>& missing) {
  json arr = json::array();
  for (const auto& idx : missing) arr.push_back({{"j", idx.j}, {"k", idx.k}});
  return arr;
}

json roots_to_json(const Catalogue& cat, const IndecSet& s) {
  json arr = json::array();
  for (int i : s) arr.push_back(cat.root(i));
  return arr;
}

void emit(const json& j, const GlobalOpts& opts) {
  if (opts.format == "text") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

int cmd_element(const GlobalOpts& opts, const std::string& word_text) {
  Quiver q = load_quiver(opts.quiver);
  WeylGroup g(q);
  WeylElement w = g.evaluate_word(parse_word(word_text));
  json out;
  out["word"] = g.canonical_word(w);
  out["length"] = w.len;
  emit(out, opts);
  return 0;
}

int cmd_w2cat(const GlobalOpts& opts, const std::string& word_text) {
  Quiver q = load_quiver(opts.quiver);
  WeylGroup g(q);
  WeylElement w = g.evaluate_word(parse_word(word_text));
  PositionList positions = leftmost_positions(g, w, C_INFINITY);
  std::vector<PreprojIndex> missing = positions_to_indices(q, positions);
  if (opts.format == "dot") {
    PreprojTable table = enumerate_preprojectives(q, opts.kmax);
    std::vector<std::pair<int, int>> marks;
    for (const auto& idx : missing) marks.emplace_back(idx.j, idx.k);
    std::cout << emit_dot(table, marks);
    return 0;
  }
  json out;
  out["w"] = g.canonical_word(w);
  out["positions"] = positions;
  out["missing"] = missing_to_json(missing);
  emit(out, opts);
  return 0;
}

int cmd_cat2w(const GlobalOpts& opts, const std::string& missing_text) {
  Quiver q = load_quiver(opts.quiver);
  WeylGroup g(q);
  SubcategorySpec spec;
  spec.quiver = q;
  json arr = json::parse(missing_text);
  for (const auto& item : arr) {
    PreprojIndex idx;
    if (item.is_array()) {
      idx.j = item.at(0).get<int>();
      idx.k = item.at(1).get<int>();
    } else {
      idx.j = item.at("j").get<int>();
      idx.k = item.at("k").get<int>();
    }
    if (idx.j < 1 || idx.j > q.n || idx.k < 0)
      throw InvalidIndex("module index out of range");
    if (q.dynkin && !preproj_dim(q, idx.j, idx.k))
      throw InvalidIndex("module index denotes the zero module");
    spec.missing.push_back(idx);
  }
  Word word = word_from_missing(spec);
  json out;
  out["word"] = word;
  out["reduced"] = g.is_reduced(word);
  if (q.dynkin) {
    Catalogue cat(q, opts.p);
    IndecSet s = full_set(cat);
    for (const auto& idx : spec.missing) {
      auto dim = preproj_dim(q, idx.j, idx.k);
      s.erase(cat.index_of(*dim));
    }
    out["quotient_closed"] = is_quotient_closed(cat, s);
  }
  emit(out, opts);
  return 0;
}

int cmd_table(const GlobalOpts& opts) {
  Quiver q = load_quiver(opts.quiver);
  PreprojTable table = enumerate_preprojectives(q, opts.kmax);
  if (opts.format == "dot") {
    std::cout << emit_dot(table);
    return 0;
  }
  json rows = json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"j", r.j}, {"k", r.k}, {"dim", r.dim}});
  json out;
  out["rows"] = rows;
  emit(out, opts);
  return 0;
}

int cmd_ideal(const GlobalOpts& opts, const std::string& word_text) {
  Quiver q = load_quiver(opts.quiver);
  WeylGroup g(q);
  Word word = parse_word(word_text);
  if (!g.is_reduced(word)) throw NotReduced("word must be reduced");
  PreprojAlgebra pi(q, opts.p);
  IdealCache ideals(pi, g);
  Catalogue cat(q, opts.p);
  WeylElement w = g.evaluate_word(word);
  json out;
  out["w"] = word;
  out["dim_Iw"] = ideals.ideal_Iw(w).dim();
  out["C_of"] = roots_to_json(cat, C_of(pi, ideals, cat, w, opts.seed));
  out["C_of_quotient"] =
      roots_to_json(cat, C_of_quotient(pi, ideals, cat, w, opts.seed));
  emit(out, opts);
  return 0;
}

int cmd_sorting(const GlobalOpts& opts, const std::string& word_text) {
  Quiver q = load_quiver(opts.quiver);
  WeylGroup g(q);
  auto element_report = [&](const WeylElement& w) {
    json rep;
    rep["w"] = g.canonical_word(w);
    rep["c_sortable"] = is_c_sortable(g, w);
    WeylElement sorted = sort_c(g, w);
    rep["sort_c"] = g.canonical_word(sorted);
    rep["torsion"] = is_torsion_candidate(g, w);
    return rep;
  };
  if (!word_text.empty()) {
    emit(element_report(g.evaluate_word(parse_word(word_text))), opts);
    return 0;
  }
  json out = json::array();
  for (const WeylElement& w : g.enumerate_group())
    out.push_back(element_report(w));
  emit(out, opts);
  return 0;
}

int cmd_verify(const GlobalOpts& opts, const std::string& suite, int le_n,
               int le_k, const std::string& word_text) {
  Quiver q = load_quiver(opts.quiver);
  verify::Options vopt;
  vopt.p = opts.p;
  vopt.seed = opts.seed;
  vopt.k_max = opts.kmax;
  vopt.le_n = le_n;
  vopt.le_k = le_k;
  vopt.word = word_text;
  verify::Report report = verify::run_suite(suite, q, vopt);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  json out;
  out["suite"] = report.suite;
  out["quiver"] = q.name.empty() ? opts.quiver : q.name;
  out["checks"] = checks;
  out["pass"] = report.pass();
  emit(out, opts);
  return report.pass() ? 0 : kExitCounterexample;
}

int cmd_verify_le(const GlobalOpts& opts, int n, int k) {
  std::optional<LeCounterexample> ce;
  bool ok = verify_le_theorem(n, k, &ce);
  json out;
  out["n"] = n;
  out["k"] = k;
  out["pass"] = ok;
  if (!ok && ce) {
    json cells = json::array();
    for (auto& [r, c] : ce->selection) cells.push_back({r, c});
    out["counterexample"] = {{"partition", ce->lambda.parts},
                             {"cells", cells},
                             {"leftmost", ce->leftmost},
                             {"bad_le", ce->bad}};
  }
  emit(out, opts);
  return ok ? 0 : kExitCounterexample;
}

int cmd_verify_antimatroid(const GlobalOpts& opts,
                           const std::string& word_text) {
  Quiver q = load_quiver(opts.quiver);
  WeylGroup g(q);
  Word base =
      word_text.empty() ? ar_word_w0(q) : parse_word(word_text);
  SetSystem sys = feasible_sets_from_word(g, base);
  std::optional<ExchangeCounterexample> ce;
  bool acc = is_accessible(sys, &ce);
  bool anti = acc && is_antimatroid(sys, &ce);
  bool super = anti && is_supersolvable(sys, {}, &ce);
  json out;
  out["word"] = base;
  out["feasible_count"] = sys.feasible.size();
  out["accessible"] = acc;
  out["antimatroid"] = anti;
  out["supersolvable"] = super;
  if (ce) {
    auto expand = [&](std::uint32_t m) {
      json arr = json::array();
      for (int i = 0; i < sys.ground_size; ++i)
        if (m >> i & 1) arr.push_back(i + 1);
      return arr;
    };
    out["counterexample"] = {
        {"axiom", ce->axiom}, {"A", expand(ce->a)}, {"B", expand(ce->b)}};
  }
  emit(out, opts);
  return super ? 0 : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-group combinatorics of cofinite quotient-closed "
               "subcategories of quiver representations"};
  app.require_subcommand(1);
  GlobalOpts opts;
  app.add_option("--quiver", opts.quiver, "builtin name or JSON file");
  app.add_option("--p", opts.p, "field characteristic (prime)");
  app.add_option("--seed", opts.seed, "PRNG seed for decompositions");
  app.add_option("--kmax", opts.kmax, "tau^{-} cutoff for non-Dynkin quivers");
  app.add_option("--format", opts.format, "json|dot|text");

  std::string word_text, missing_text, suite = "all";
  int le_n = 0, le_k = 0;

  auto* element =
      app.add_subcommand("element", "normalize a word: canonical form, length");
  element->add_option("--word", word_text, "word, e.g. \"1 2 1 1\"");

  auto* w2cat = app.add_subcommand("w2cat", "missing set of a word");
  w2cat->add_option("--word", word_text, "word, e.g. \"1 2 3 2\"");

  auto* cat2w = app.add_subcommand("cat2w", "word of a missing set");
  cat2w
      ->add_option("--missing", missing_text,
                   "JSON list of {\"j\":..,\"k\":..} or [j,k]")
      ->required();

  auto* table = app.add_subcommand("table", "preprojective dimension table");

  auto* ideal = app.add_subcommand("ideal", "I_w and its categories");
  ideal->add_option("--word", word_text, "reduced word")->required();

  auto* sorting = app.add_subcommand("sorting", "c-sortability report");
  sorting->add_option("--word", word_text, "single element (default: all)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "bijection|ideals|duality|bruhat|"
                                       "sorting|le|antimatroid|subclosed|"
                                       "oracles|all");
  verify->add_option("--n", le_n, "rank for the le suite");
  verify->add_option("--k", le_k, "k for the le suite");
  verify->add_option("--word", word_text, "base word for antimatroid suite");

  auto* vle = app.add_subcommand("verify-le", "lattice word pattern check");
  vle->add_option("--n", le_n, "rank of the type-A group")->required();
  vle->add_option("--k", le_k, "Grassmannian parameter")->required();

  auto* vanti =
      app.add_subcommand("verify-antimatroid", "feasible-set axioms");
  vanti->add_option("--word", word_text,
                    "base word (default: AR reading word of the quiver)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (element->parsed()) return cmd_element(opts, word_text);
    if (w2cat->parsed()) return cmd_w2cat(opts, word_text);
    if (cat2w->parsed()) return cmd_cat2w(opts, missing_text);
    if (table->parsed()) return cmd_table(opts);
    if (ideal->parsed()) return cmd_ideal(opts, word_text);
    if (sorting->parsed()) return cmd_sorting(opts, word_text);
    if (verify->parsed())
      return cmd_verify(opts, suite, le_n, le_k, word_text);
    if (vle->parsed()) return cmd_verify_le(opts, le_n, le_k);
    if (vanti->parsed()) return cmd_verify_antimatroid(opts, word_text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumberingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisconnectedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotReduced& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFiniteType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotDynkin& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotARoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // anything else surviving to here is a falsified invariant
    std::cerr << "error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return kExitUsage;
}
