#include "axsel/embedding.hpp"
#include "axsel/engine.hpp"
#include "axsel/error.hpp"
#include "axsel/harness.hpp"
#include "axsel/mapping.hpp"
#include "axsel/symbol_stats.hpp"
#include "axsel/tptp.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace axsel;

namespace {

py::list selection_to_list(const KnowledgeBase& kb, const SelectionResult& r) {
    py::list out;
    for (const auto& a : r.axioms) {
        py::dict d;
        d["id"] = kb.axiom(a.axiom).id;
        d["index"] = a.axiom;
        d["step"] = a.step ? py::cast(*a.step) : py::none();
        d["score"] = a.score ? py::cast(*a.score) : py::none();
        d["origin"] = a.origin ? py::cast(std::string(to_string(*a.origin))) : py::none();
        out.append(std::move(d));
    }
    return out;
}

StrategyParams make_params(const std::string& strategy, int depth, double tolerance, std::size_t k) {
    StrategyParams p;
    p.strategy = parse_strategy(strategy);
    p.depth = depth;
    p.tolerance = tolerance;
    p.k = k;
    return p;
}

}  // namespace

PYBIND11_MODULE(_axsel, m) {
    m.doc() = "Axiom selection for first-order knowledge bases";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<KTooLarge>(m, "KTooLarge", base);

    py::class_<KnowledgeBase, std::shared_ptr<KnowledgeBase>>(m, "KnowledgeBase")
        .def_static("load", [](const std::filesystem::path& p) { return std::make_shared<KnowledgeBase>(load_kb(p)); })
        .def_static("parse", [](const std::string& text) { return std::make_shared<KnowledgeBase>(parse_kb(text)); })
        .def("__len__", &KnowledgeBase::size)
        .def_property_readonly("axiom_ids", [](const KnowledgeBase& kb) {
            std::vector<std::string> ids;
            for (const auto& a : kb.axioms()) ids.push_back(a.id);
            return ids;
        })
        .def_property_readonly("symbols", &KnowledgeBase::symbol_names)
        .def("symbols_of", [](const KnowledgeBase& kb, const std::string& id) {
            const auto index = kb.find_axiom(id);
            if (!index) throw py::key_error(id);
            std::vector<std::string> names;
            for (auto s : kb.axiom(*index).symbols) names.push_back(kb.symbol_name(s));
            return names;
        })
        .def("stats", [](const KnowledgeBase& kb) {
            const auto stats = compute_stats(kb);
            py::dict out;
            for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
                out[py::str(kb.symbol_name(s))] = py::make_tuple(stats.occ[s], stats.idf[s]);
            }
            return out;
        });

    py::class_<Goal>(m, "Goal")
        .def_static("load", &load_goal)
        .def_static("parse", [](const std::string& text) { return parse_goal(text); })
        .def_property_readonly("name", [](const Goal& g) { return g.query.name; })
        .def_readonly("symbols", &Goal::symbols)
        .def_property_readonly("premise_count", [](const Goal& g) { return g.premises.size(); });

    py::class_<EmbeddingStore, std::shared_ptr<EmbeddingStore>>(m, "EmbeddingStore")
        .def_static("load", [](const std::filesystem::path& p) {
            return std::make_shared<EmbeddingStore>(EmbeddingStore::load(p));
        })
        .def_static("from_rows", [](const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
            return std::make_shared<EmbeddingStore>(EmbeddingStore::from_rows(rows));
        })
        .def("__len__", &EmbeddingStore::size)
        .def("__contains__", [](const EmbeddingStore& s, const std::string& t) { return s.contains(t); })
        .def_property_readonly("dim", &EmbeddingStore::dim)
        .def("vector", [](const EmbeddingStore& s, const std::string& token) {
            const auto row = s.find(token);
            if (!row) throw py::key_error(token);
            const auto v = s.vector(*row);
            return std::vector<double>(v.begin(), v.end());
        })
        .def("simwords", [](const EmbeddingStore& s, const std::string& word, std::size_t k) {
            std::vector<std::pair<std::string, double>> out;
            for (const auto& hit : simwords(s, word, k)) out.emplace_back(hit.token, hit.score);
            return out;
        }, py::arg("word"), py::arg("k"));

    m.def("cos_sim", [](const std::vector<double>& u, const std::vector<double>& v) { return cos_sim(u, v); });
    m.def("normalize", [](const std::string& symbol) { return brute_force_normalize(symbol); },
          "Brute-force symbol normalization, e.g. c__SecondarySchool -> secondary_school");

    py::class_<SelectionEngine>(m, "Engine")
        .def(py::init([](std::shared_ptr<KnowledgeBase> kb, std::shared_ptr<EmbeddingStore> store,
                         std::optional<std::filesystem::path> mapping, std::optional<std::filesystem::path> cache_dir,
                         unsigned workers) {
                 std::optional<SymbolMapping> m;
                 if (mapping) {
                     if (!store) throw ConfigError("a mapping needs an embedding");
                     m = SymbolMapping::from_entries(*kb, *store, read_mapping_tsv(*mapping));
                 }
                 EngineOptions options;
                 options.cache_dir = cache_dir;
                 options.workers = workers;
                 return std::make_unique<SelectionEngine>(kb, store, std::move(m), options);
             }),
             py::arg("kb"), py::arg("embedding") = nullptr, py::arg("mapping") = std::nullopt,
             py::arg("cache_dir") = std::nullopt, py::arg("workers") = 1)
        .def("select", [](const SelectionEngine& e, const Goal& goal, const std::string& strategy, int depth,
                          double tolerance, std::size_t k) {
                 const auto params = make_params(strategy, depth, tolerance, k);
                 params.validate(e.store() != nullptr);
                 SelectionResult r;
                 {
                     py::gil_scoped_release release;
                     r = e.select(goal, params);
                 }
                 return selection_to_list(e.kb(), r);
             },
             py::arg("goal"), py::arg("strategy") = "sine", py::arg("depth") = 1, py::arg("tolerance") = 1.0,
             py::arg("k") = 0)
        .def("frat", [](const SelectionEngine& e, const std::filesystem::path& tasks, const std::string& strategy,
                        std::vector<std::size_t> values, double tolerance) {
                 auto params = make_params(strategy, 1, tolerance, 1);
                 params.validate(e.store() != nullptr);
                 FratReport report;
                 {
                     py::gil_scoped_release release;
                     report = run_frat(e, read_frat_tasks(tasks), params, std::move(values));
                 }
                 py::list rows;
                 for (const auto& row : report.rows) {
                     py::dict d;
                     d[py::str(report.parameter_name)] = row.parameter;
                     d["hit_rate"] = row.hit_rate;
                     d["hits"] = row.hits;
                     d["tasks"] = row.tasks;
                     d["avg_target_position"] =
                         row.avg_target_position ? py::cast(*row.avg_target_position) : py::none();
                     d["avg_selected"] = row.avg_selected;
                     rows.append(std::move(d));
                 }
                 return rows;
             },
             py::arg("tasks"), py::arg("strategy"), py::arg("values"), py::arg("tolerance") = 1.0);
}
