#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctab/errors.hpp"
#include "ctab/eval.hpp"
#include "ctab/laws.hpp"
#include "ctab/parser.hpp"
#include "ctab/render.hpp"
#include "ctab/transform.hpp"

namespace py = pybind11;
using namespace ctab;

namespace {

Variable var_of(const std::string& name) { return Variable::named(name); }

VarSet varset_of(const std::vector<std::string>& names) {
    std::vector<Variable> vars;
    vars.reserve(names.size());
    for (const auto& n : names) vars.push_back(var_of(n));
    return VarSet(std::move(vars));
}

Base base_of(const std::vector<std::string>& values) {
    std::vector<Value> elems;
    elems.reserve(values.size());
    for (const auto& v : values) elems.emplace_back(v);
    return Base(std::move(elems));
}

Table table_of(const std::vector<std::string>& schema,
               const std::vector<std::map<std::string, std::string>>& rows) {
    std::vector<NamedTuple> tuples;
    tuples.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<NamedTuple::Entry> entries;
        entries.reserve(row.size());
        for (const auto& [name, value] : row)
            entries.emplace_back(var_of(name), Value(value));
        tuples.push_back(NamedTuple::of(std::move(entries)));
    }
    return Table::make(varset_of(schema), std::move(tuples));
}

std::optional<std::vector<std::string>> schema_names(const Table& t) {
    if (t.is_empty()) return std::nullopt;  // the all-variables schema
    std::vector<std::string> out;
    for (Variable x : t.columns()) out.push_back(x.name());
    return out;
}

std::vector<std::map<std::string, std::string>> row_dicts(const Table& t) {
    std::vector<std::map<std::string, std::string>> out;
    for (const NamedTuple& row : t.rows()) {
        std::map<std::string, std::string> dict;
        for (const auto& [x, v] : row.entries()) dict[x.name()] = v.text();
        out.push_back(std::move(dict));
    }
    return out;
}

Mapping mapping_of(const std::map<std::string, std::string>& graph,
                   const std::vector<std::string>& dom,
                   const std::vector<std::string>& cod) {
    std::vector<VarPair> pairs;
    pairs.reserve(graph.size());
    for (const auto& [x, y] : graph) pairs.emplace_back(var_of(x), var_of(y));
    return Mapping::make(varset_of(dom), varset_of(cod), std::move(pairs));
}

FinPartialTransform fpt_of(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<VarPair> out;
    out.reserve(pairs.size());
    for (const auto& [x, y] : pairs)
        out.emplace_back(var_of(x), var_of(y));
    return FinPartialTransform::of(std::move(out));
}

Structure structure_of(
    const std::vector<std::string>& base,
    const std::map<std::string,
                   std::vector<std::vector<std::string>>>& relations) {
    std::map<std::string, Relation> rels;
    for (const auto& [name, tuples] : relations) {
        Relation rel;
        rel.arity = tuples.empty() ? 0 : tuples.front().size();
        for (const auto& tuple : tuples) {
            std::vector<Value> row;
            row.reserve(tuple.size());
            for (const auto& v : tuple) row.emplace_back(v);
            rel.tuples.push_back(std::move(row));
        }
        rels.emplace(name, std::move(rel));
    }
    return Structure::make(base_of(base), std::move(rels));
}

py::dict summary_dict(const laws::LawSummary& s) {
    py::dict d;
    d["law"] = s.id;
    d["cases"] = s.cases;
    d["passes"] = s.passes;
    d["failures"] = s.failures;
    d["side_unmet"] = s.side_unmet;
    d["first_witness"] = s.first_witness;
    return d;
}

py::dict check_axioms(const std::string& model_name, const std::string& base,
                      int cases, std::uint64_t seed,
                      const std::optional<std::string>& law) {
    laws::Model model = laws::Model::empty_base();
    if (model_name == "standard")
        model = laws::Model::standard(Base::letters(base));
    else if (model_name == "bogus")
        model = laws::Model::bogus_diagonal(Base::letters(base));
    else if (model_name != "empty-base")
        throw LawError("unknown model: " + model_name);

    std::vector<laws::LawSummary> summaries;
    if (law) {
        const laws::Law* found = laws::find_law(*law);
        if (found == nullptr) throw LawError("unknown law id: " + *law);
        summaries.push_back(laws::summarize(*found, model, cases, seed));
    } else {
        summaries = laws::check_all(model, cases, seed);
    }

    const auto& expected = laws::expected_failures(model.kind());
    int unexpected = 0;
    py::list law_list;
    for (const auto& s : summaries) {
        law_list.append(summary_dict(s));
        bool is_expected =
            std::find(expected.begin(), expected.end(), s.id) != expected.end();
        if (s.failures > 0 && !is_expected) ++unexpected;
    }
    py::dict out;
    out["model"] = model.name();
    out["laws"] = law_list;
    out["unexpected_failures"] = unexpected;
    out["expected_failures"] = expected;
    return out;
}

py::dict mapping_dict(const Mapping& m) {
    py::dict graph;
    for (const auto& [x, y] : m.graph()) graph[py::str(x.name())] = y.name();
    std::vector<std::string> dom, cod;
    for (Variable x : m.dom()) dom.push_back(x.name());
    for (Variable y : m.cod()) cod.push_back(y.name());
    py::dict out;
    out["graph"] = graph;
    out["dom"] = dom;
    out["cod"] = cod;
    return out;
}

}  // namespace

PYBIND11_MODULE(_ctab, m) {
    m.doc() = "conjunctive table algebra engine";

    py::register_exception<Error>(m, "CtabError");

    py::class_<Table>(m, "Table")
        .def_static("empty", &Table::empty)
        .def_static("unit", &Table::unit)
        .def_static("make", &table_of, py::arg("schema"), py::arg("rows"))
        .def("is_empty", &Table::is_empty)
        .def("is_unit", &Table::is_unit)
        .def("schema", &schema_names,
             "column names, or None for the empty table")
        .def("rows", &row_dicts)
        .def("to_tsv", [](const Table& t) { return to_tsv(t); })
        .def("to_pretty", [](const Table& t) { return to_pretty(t); })
        .def("__eq__", [](const Table& a, const Table& b) { return a == b; })
        .def("__repr__", &Table::to_string);

    m.def("parse_tsv", [](const std::string& text) { return parse_tsv(text); });

    py::class_<TableAlgebra>(m, "Algebra")
        .def(py::init([](const std::vector<std::string>& base) {
                 return TableAlgebra(base_of(base));
             }),
             py::arg("base"))
        .def("base",
             [](const TableAlgebra& alg) {
                 std::vector<std::string> out;
                 for (const Value& v : alg.base()) out.push_back(v.text());
                 return out;
             })
        .def(
            "equality_table",
            [](const TableAlgebra& alg, const std::string& x,
               const std::string& y) {
                return alg.equality_table(var_of(x), var_of(y));
            },
            py::arg("x"), py::arg("y"))
        .def("equality_table_gen",
             [](const TableAlgebra& alg,
                const std::vector<std::pair<std::string, std::string>>& rho) {
                 std::vector<VarPair> pairs;
                 for (const auto& [x, y] : rho)
                     pairs.emplace_back(var_of(x), var_of(y));
                 return alg.equality_table(pairs);
             })
        .def("duplicate",
             [](const TableAlgebra& alg, const std::string& x,
                const std::string& y, const Table& t) {
                 return alg.duplicate(var_of(x), var_of(y), t);
             })
        .def("rename",
             [](const TableAlgebra& alg, const std::string& x,
                const std::string& y, const Table& t) {
                 return alg.rename(var_of(x), var_of(y), t);
             })
        .def("select_const",
             [](const TableAlgebra& alg, const std::string& x,
                const std::string& g, const Table& t) {
                 return alg.select_const(var_of(x), Value(g), t);
             });

    m.def("join", &join);
    m.def("delete_column", [](const std::string& x, const Table& t) {
        return delete_column(var_of(x), t);
    });
    m.def("delete_columns",
          [](const std::vector<std::string>& names, const Table& t) {
              return delete_columns(varset_of(names), t);
          });
    m.def("project", [](const std::vector<std::string>& names, const Table& t) {
        return project(varset_of(names), t);
    });
    m.def("select_eq",
          [](const std::string& x, const std::string& y, const Table& t) {
              return select_eq(var_of(x), var_of(y), t);
          });
    m.def("table_leq", &table_leq);
    m.def("dim", [](const Table& t) {
        std::vector<std::string> out;
        for (Variable x : dim(t)) out.push_back(x.name());
        return out;
    });

    m.def(
        "table_compose",
        [](const Table& t, const std::map<std::string, std::string>& graph,
           const std::vector<std::string>& dom,
           const std::vector<std::string>& cod) {
            return table_compose(t, mapping_of(graph, dom, cod));
        },
        py::arg("table"), py::arg("graph"), py::arg("dom"), py::arg("cod"));

    m.def(
        "outer_compose",
        [](const Table& t, const std::map<std::string, std::string>& graph,
           const std::vector<std::string>& dom,
           const std::vector<std::string>& cod,
           const std::vector<std::string>& base) {
            return outer_compose(t, mapping_of(graph, dom, cod),
                                 TableAlgebra(base_of(base)));
        },
        py::arg("table"), py::arg("graph"), py::arg("dom"), py::arg("cod"),
        py::arg("base"));

    m.def(
        "act",
        [](const Table& t,
           const std::vector<std::pair<std::string, std::string>>& pairs,
           const std::vector<std::string>& base) {
            return act(t, fpt_of(pairs), TableAlgebra(base_of(base)));
        },
        py::arg("table"), py::arg("pairs"), py::arg("base"));

    m.def(
        "decompose",
        [](const std::map<std::string, std::string>& graph,
           const std::vector<std::string>& dom,
           const std::vector<std::string>& cod) {
            Decomposition d = decompose(mapping_of(graph, dom, cod));
            py::dict out;
            out["folding"] = mapping_dict(d.folding);
            out["bijection"] = mapping_dict(d.bijection);
            out["inclusion"] = mapping_dict(d.inclusion);
            return out;
        },
        py::arg("graph"), py::arg("dom"), py::arg("cod"));

    py::class_<Structure>(m, "Structure")
        .def_static("make", &structure_of, py::arg("base"),
                    py::arg("relations"))
        .def_static("from_file", &load_structure_file)
        .def_static(
            "from_text",
            [](const std::string& text) { return parse_structure(text); })
        .def("base", [](const Structure& s) {
            std::vector<std::string> out;
            for (const Value& v : s.base()) out.push_back(v.text());
            return out;
        });

    py::class_<Formula>(m, "Formula")
        .def("free",
             [](const Formula& f) {
                 std::vector<std::string> out;
                 for (Variable x : f.free_variables()) out.push_back(x.name());
                 return out;
             })
        .def("__eq__",
             [](const Formula& a, const Formula& b) { return a == b; })
        .def("__repr__", &Formula::to_string);

    m.def("parse_formula",
          [](const std::string& src) { return parse_formula(src); });

    m.def(
        "evaluate",
        [](const std::string& query, const Structure& s) {
            TableAlgebra alg(s.base());
            return evaluate(parse_formula(query), s, alg);
        },
        py::arg("query"), py::arg("structure"));

    m.def(
        "evaluate_oracle",
        [](const std::string& query, const Structure& s) {
            return evaluate_oracle(parse_formula(query), s);
        },
        py::arg("query"), py::arg("structure"));

    m.def("check_axioms", &check_axioms, py::arg("model") = "standard",
          py::arg("base") = "ab", py::arg("cases") = 50, py::arg("seed") = 1,
          py::arg("law") = std::nullopt);
}
