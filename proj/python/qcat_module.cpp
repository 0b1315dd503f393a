#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcat/antimatroid.hpp"
#include "qcat/grassmann.hpp"
#include "qcat/io.hpp"
#include "qcat/leftmost.hpp"
#include "qcat/preproj.hpp"
#include "qcat/rep.hpp"
#include "qcat/sortable.hpp"
#include "qcat/verify.hpp"
#include "qcat/weyl.hpp"

namespace py = pybind11;
using namespace qcat;

namespace {

std::vector<std::vector<i64>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<i64>> rows;
  for (int i = 0; i < m.n; ++i) {
    std::vector<i64> row;
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<int, int>> missing_pairs(const SubcategorySpec& spec) {
  std::vector<std::pair<int, int>> out;
  for (const auto& idx : spec.missing) out.emplace_back(idx.j, idx.k);
  return out;
}

}  // namespace

PYBIND11_MODULE(_qcat, m) {
  m.doc() = "Weyl-group indexing of cofinite quotient-closed subcategories "
            "of quiver representations";

  py::register_exception<Error>(m, "QcatError");

  py::class_<Quiver>(m, "Quiver")
      .def(py::init([](int n, const std::vector<Arrow>& arrows,
                       const std::string& name) {
             return validate_quiver(n, arrows, name);
           }),
           py::arg("n"), py::arg("arrows"), py::arg("name") = "")
      .def_readonly("n", &Quiver::n)
      .def_readonly("arrows", &Quiver::arrows)
      .def_readonly("name", &Quiver::name)
      .def_readonly("dynkin", &Quiver::dynkin)
      .def_readonly("dynkin_label", &Quiver::dynkin_label)
      .def("cartan_matrix",
           [](const Quiver& q) { return matrix_rows(cartan_matrix(q)); })
      .def("euler_matrix",
           [](const Quiver& q) { return matrix_rows(euler_matrix(q)); })
      .def("coxeter_word", [](const Quiver& q) { return coxeter_word(q); })
      .def("__repr__", [](const Quiver& q) {
        return "<Quiver " + (q.name.empty() ? std::to_string(q.n) + " vertices"
                                            : q.name) +
               ">";
      });

  m.def("named_quiver", &named_quiver, py::arg("name"));
  m.def("quiver_from_json", &quiver_from_json);
  m.def("quiver_to_json", &quiver_to_json);
  m.def("parse_word", &parse_word);

  py::class_<WeylElement>(m, "WeylElement")
      .def_readonly("length", &WeylElement::len)
      .def("__eq__", [](const WeylElement& a,
                        const WeylElement& b) { return a == b; })
      .def("__hash__",
           [](const WeylElement& w) { return py::hash(py::bytes(w.key())); })
      .def("__repr__", [](const WeylElement& w) {
        return "<WeylElement length " + std::to_string(w.len) + ">";
      });

  py::class_<WeylGroup>(m, "WeylGroup")
      .def(py::init<const Quiver&>())
      .def("rank", &WeylGroup::rank)
      .def("identity", &WeylGroup::identity)
      .def("evaluate_word", &WeylGroup::evaluate_word)
      .def("word", &WeylGroup::canonical_word)
      .def("is_reduced", &WeylGroup::is_reduced)
      .def("reduced_words", &WeylGroup::reduced_words)
      .def("bruhat_leq", &WeylGroup::bruhat_leq)
      .def("weak_leq_right", &WeylGroup::weak_leq_right)
      .def("longest_element", &WeylGroup::longest_element)
      .def("enumerate", &WeylGroup::enumerate_group,
           py::arg("cap") = size_t{2000000})
      .def("positive_roots", &WeylGroup::positive_roots)
      .def("multiply", &WeylGroup::mul)
      .def("inverse", &WeylGroup::inverse);

  m.def(
      "leftmost_positions",
      [](const WeylGroup& g, const Word& word,
         const std::optional<Word>& base) {
        WeylElement w = g.evaluate_word(word);
        return base ? leftmost_positions(g, w, *base)
                    : leftmost_positions(g, w, C_INFINITY);
      },
      py::arg("group"), py::arg("word"), py::arg("base") = py::none(),
      "Greedy leftmost positions of the word's element in c^infty (or a "
      "finite base word)");

  m.def(
      "category_of",
      [](const WeylGroup& g, const Word& word) {
        return missing_pairs(category_of(g, g.evaluate_word(word)));
      },
      "Missing (j, k) pairs of the quotient-closed subcategory of the word");

  m.def(
      "word_from_missing",
      [](const Quiver& q, const std::vector<std::pair<int, int>>& missing) {
        SubcategorySpec spec;
        spec.quiver = q;
        for (const auto& [j, k] : missing) spec.missing.push_back({j, k});
        return word_from_missing(spec);
      });

  m.def(
      "is_leftmost",
      [](const WeylGroup& g, const Word& base, const PositionList& positions) {
        return is_leftmost(g, base, positions);
      });

  m.def(
      "preprojective_table",
      [](const Quiver& q, int k_max) {
        std::vector<std::tuple<int, int, DimVector>> rows;
        for (const auto& r : enumerate_preprojectives(q, k_max).rows)
          rows.emplace_back(r.j, r.k, r.dim);
        return rows;
      },
      py::arg("quiver"), py::arg("k_max") = 50);
  m.def("ar_word_w0", &ar_word_w0);
  m.def(
      "ar_dot",
      [](const Quiver& q, int k_max) {
        return emit_dot(enumerate_preprojectives(q, k_max));
      },
      py::arg("quiver"), py::arg("k_max") = 50);

  m.def(
      "is_c_sortable",
      [](const WeylGroup& g, const Word& word) {
        return is_c_sortable(g, g.evaluate_word(word));
      });
  m.def(
      "sort_c",
      [](const WeylGroup& g, const Word& word) {
        return g.canonical_word(sort_c(g, g.evaluate_word(word)));
      });
  m.def(
      "is_torsion_candidate",
      [](const WeylGroup& g, const Word& word) {
        return is_torsion_candidate(g, g.evaluate_word(word));
      });
  m.def(
      "inversion_set",
      [](const WeylGroup& g, const Word& word) {
        return inversion_set(g, g.evaluate_word(word));
      });
  m.def(
      "torsion_free_of",
      [](const Quiver& q, const Word& word, int p, unsigned seed) {
        WeylGroup g(q);
        PreprojAlgebra pi(q, p);
        IdealCache ideals(pi, g);
        Catalogue cat(q, p);
        std::vector<DimVector> out;
        for (int i : torsion_free_of(g, pi, ideals, cat,
                                     g.evaluate_word(word), seed))
          out.push_back(cat.root(i));
        return out;
      },
      py::arg("quiver"), py::arg("word"), py::arg("p") = 5,
      py::arg("seed") = 0,
      "Dimension vectors of the torsion-free class of a c-sortable element");
  m.def(
      "verify_torsion_pair",
      [](const Quiver& q, const Word& word, int p, unsigned seed) {
        WeylGroup g(q);
        PreprojAlgebra pi(q, p);
        IdealCache ideals(pi, g);
        Catalogue cat(q, p);
        return verify_torsion_pair(g, pi, ideals, cat, g.evaluate_word(word),
                                   seed);
      },
      py::arg("quiver"), py::arg("word"), py::arg("p") = 5,
      py::arg("seed") = 0);

  m.def(
      "ideal_report",
      [](const Quiver& q, const Word& word, int p, unsigned seed) {
        WeylGroup g(q);
        if (!g.is_reduced(word)) throw NotReduced("word must be reduced");
        PreprojAlgebra pi(q, p);
        IdealCache ideals(pi, g);
        Catalogue cat(q, p);
        WeylElement w = g.evaluate_word(word);
        py::dict out;
        out["w"] = word;
        out["dim_pi"] = pi.dim();
        out["dim_Iw"] = ideals.ideal_Iw(w).dim();
        std::vector<DimVector> cof, sub;
        for (int i : C_of(pi, ideals, cat, w, seed)) cof.push_back(cat.root(i));
        for (int i : C_of_quotient(pi, ideals, cat, w, seed))
          sub.push_back(cat.root(i));
        out["C_of"] = cof;
        out["C_of_quotient"] = sub;
        return out;
      },
      py::arg("quiver"), py::arg("word"), py::arg("p") = 5,
      py::arg("seed") = 0);

  py::class_<Partition>(m, "Partition")
      .def_readonly("n", &Partition::n)
      .def_readonly("k", &Partition::k)
      .def_readonly("parts", &Partition::parts);
  m.def("partitions_in_rectangle", &partitions_in_rectangle);
  m.def("word_of_partition", &word_of_partition);
  m.def(
      "rectangle_word",
      [](int n, int k) {
        GridWord g = rectangle_word(n, k);
        std::vector<Word> rows;
        for (int r = 1; r <= k; ++r) {
          Word row;
          for (int c = 1; c <= g.cols(); ++c) row.push_back(g.generator(r, c));
          rows.push_back(std::move(row));
        }
        return rows;
      });
  m.def(
      "verify_le_theorem",
      [](int n, int k) { return verify_le_theorem(n, k); });

  m.def(
      "feasible_sets",
      [](const WeylGroup& g, const Word& base) {
        SetSystem s = feasible_sets_from_word(g, base);
        std::vector<std::vector<int>> out;
        for (std::uint32_t mask : s.feasible) {
          std::vector<int> set;
          for (int i = 0; i < s.ground_size; ++i)
            if (mask >> i & 1) set.push_back(i + 1);
          out.push_back(std::move(set));
        }
        return out;
      });
  m.def(
      "antimatroid_axioms",
      [](const WeylGroup& g, const Word& base) {
        SetSystem s = feasible_sets_from_word(g, base);
        py::dict out;
        out["accessible"] = is_accessible(s);
        out["antimatroid"] = is_antimatroid(s);
        out["supersolvable"] = is_supersolvable(s);
        return out;
      });

  m.def(
      "run_suite",
      [](const std::string& suite, const Quiver& q, int p, unsigned seed) {
        verify::Options opt;
        opt.p = p;
        opt.seed = seed;
        verify::Report rep = verify::run_suite(suite, q, opt);
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict jc;
          jc["name"] = c.name;
          jc["pass"] = c.pass;
          jc["detail"] = c.detail;
          checks.append(jc);
        }
        py::dict out;
        out["suite"] = rep.suite;
        out["pass"] = rep.pass();
        out["checks"] = checks;
        return out;
      },
      py::arg("suite"), py::arg("quiver"), py::arg("p") = 5,
      py::arg("seed") = 0);
}
