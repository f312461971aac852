// Command-line entry point: select, stats, map build, eval prove, eval frat.

#include "axsel/engine.hpp"
#include "axsel/error.hpp"
#include "axsel/harness.hpp"
#include "axsel/mapping.hpp"
#include "axsel/symbol_stats.hpp"
#include "axsel/tptp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace axsel;

struct CommonOptions {
    std::string kb_path;
    std::string embedding_path;
    std::string mapping_path;
    std::string cache_dir;
    unsigned workers = 1;
    std::vector<std::string> prefixes;
    std::vector<std::string> suffixes;
};

struct StrategyOptions {
    std::string strategy = "sine";
    int depth = 1;
    double tolerance = 1.0;
    std::size_t k = 0;
};

void add_common(CLI::App& cmd, CommonOptions& opts, bool with_embedding) {
    cmd.add_option("--kb", opts.kb_path, "Knowledge base in TPTP FOF syntax")->required()->check(CLI::ExistingFile);
    if (!with_embedding) return;
    cmd.add_option("--embedding", opts.embedding_path, "Word embedding, `token v1 ... vn` per line")
        ->check(CLI::ExistingFile);
    cmd.add_option("--mapping", opts.mapping_path,
                   "Mapping TSV (kb_symbol, token, source); replaces the brute-force mapping")
        ->check(CLI::ExistingFile);
    cmd.add_option("--cache-dir", opts.cache_dir, "Directory for cached axiom vectors");
    cmd.add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd.add_option("--prefix", opts.prefixes, "Symbol prefix stripped by normalization (repeatable)");
    cmd.add_option("--suffix", opts.suffixes, "Symbol suffix stripped by normalization (repeatable)");
}

void add_strategy(CLI::App& cmd, StrategyOptions& opts) {
    cmd.add_option("--strategy", opts.strategy, "sine, simsine, vector or vb-union")
        ->check(CLI::IsMember({"sine", "simsine", "vector", "vb-union"}));
    cmd.add_option("--depth", opts.depth, "SInE recursion depth");
    cmd.add_option("--tolerance", opts.tolerance, "SInE trigger tolerance (>= 1)");
    cmd.add_option("--k", opts.k, "Similar words (simsine) or selected axioms (vector, vb-union)");
}

NormalizerConfig normalizer_of(const CommonOptions& opts) {
    NormalizerConfig config;
    if (!opts.prefixes.empty()) config.prefixes = opts.prefixes;
    if (!opts.suffixes.empty()) config.suffixes = opts.suffixes;
    return config;
}

StrategyParams params_of(const StrategyOptions& opts) {
    StrategyParams params;
    params.strategy = parse_strategy(opts.strategy);
    params.depth = opts.depth;
    params.tolerance = opts.tolerance;
    params.k = opts.k;
    return params;
}

std::unique_ptr<SelectionEngine> make_engine(const CommonOptions& opts) {
    auto kb = std::make_shared<const KnowledgeBase>(load_kb(opts.kb_path));
    std::shared_ptr<const EmbeddingStore> store;
    std::optional<SymbolMapping> mapping;
    if (!opts.embedding_path.empty()) {
        store = std::make_shared<const EmbeddingStore>(EmbeddingStore::load(std::filesystem::path(opts.embedding_path)));
    }
    if (!opts.mapping_path.empty()) {
        if (!store) {
            throw ConfigError("--mapping requires --embedding");
        }
        mapping = SymbolMapping::from_entries(*kb, *store, read_mapping_tsv(std::filesystem::path(opts.mapping_path)));
        if (mapping->dropped()) {
            std::cerr << "warning: ignored " << mapping->dropped()
                      << " mapping rows whose symbol is not in the KB or whose token is not in the embedding\n";
        }
    }
    EngineOptions engine_options;
    if (!opts.cache_dir.empty()) engine_options.cache_dir = opts.cache_dir;
    engine_options.workers = opts.workers;
    engine_options.normalizer = normalizer_of(opts);
    return std::make_unique<SelectionEngine>(std::move(kb), std::move(store), std::move(mapping),
                                             std::move(engine_options));
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << content;
}

std::string selection_json(const KnowledgeBase& kb, const Goal& goal, const StrategyParams& params,
                            const SelectionResult& result) {
    nlohmann::json doc;
    doc["goal"] = goal.query.name;
    doc["strategy"] = to_string(params.strategy);
    nlohmann::json p = nlohmann::json::object();
    if (params.strategy != Strategy::vector) {
        p["depth"] = params.depth;
        p["tolerance"] = params.tolerance;
    }
    if (params.strategy != Strategy::sine) p["k"] = params.k;
    doc["params"] = p;
    doc["selected"] = result.ids(kb);
    auto scores = nlohmann::json::array();
    auto steps = nlohmann::json::array();
    auto origins = nlohmann::json::array();
    for (const auto& a : result.axioms) {
        scores.push_back(a.score ? nlohmann::json(*a.score) : nlohmann::json(nullptr));
        steps.push_back(a.step ? nlohmann::json(*a.step) : nlohmann::json(nullptr));
        if (a.origin) origins.push_back(to_string(*a.origin));
    }
    doc["scores"] = scores;
    doc["steps"] = steps;
    if (params.strategy == Strategy::vb_union) doc["origins"] = origins;
    return doc.dump(2) + "\n";
}

std::vector<std::size_t> parse_values(const std::string& text, const std::string& flag) {
    std::vector<std::size_t> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const auto v = std::stoull(item, &used);
            if (used != item.size() || v == 0) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError(flag + " expects positive integers, got '" + item + "'");
        }
    }
    if (values.empty()) {
        throw ConfigError(flag + " must list at least one value");
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Axiom selection for large first-order knowledge bases"};
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");
    app.require_subcommand(1);

    // select
    CommonOptions select_common;
    StrategyOptions select_strategy;
    std::string goal_path, select_output, select_format = "json";
    auto* select = app.add_subcommand("select", "Select axioms for one goal");
    add_common(*select, select_common, true);
    add_strategy(*select, select_strategy);
    select->add_option("--goal", goal_path, "Goal file (axioms as premises, one conjecture)")
        ->required()
        ->check(CLI::ExistingFile);
    select->add_option("--output,-o", select_output, "Output path (default: stdout)");
    select->add_option("--format", select_format, "tptp (prover-ready) or json")
        ->check(CLI::IsMember({"tptp", "json"}));

    // stats
    CommonOptions stats_common;
    std::string stats_output;
    auto* stats = app.add_subcommand("stats", "Symbol occurrence counts and idf as TSV");
    add_common(*stats, stats_common, false);
    stats->add_option("--output,-o", stats_output, "Output path (default: stdout)");

    // map build
    CommonOptions map_common;
    std::vector<std::string> table_paths;
    std::string map_output;
    auto* map = app.add_subcommand("map", "Symbol mapping tools");
    map->require_subcommand(1);
    auto* map_build = map->add_subcommand("build", "Build a KB-symbol to embedding-token mapping");
    add_common(*map_build, map_common, true);
    map_build->get_option("--embedding")->required();
    map_build->add_option("--table", table_paths, "Lexical table TSV (kb_symbol, token, synonym|hyponym|instance)")
        ->check(CLI::ExistingFile);
    map_build->add_option("--output,-o", map_output, "Output mapping TSV (default: stdout)");

    // eval prove / eval frat
    auto* eval = app.add_subcommand("eval", "Evaluation harnesses");
    eval->require_subcommand(1);

    CommonOptions prove_common;
    StrategyOptions prove_strategy;
    std::string problems_dir, out_dir = "selections", prover_cmd, prove_report, prove_format = "tsv", sweep_text;
    int timeout = 15;
    OutcomePatterns patterns;
    auto* prove = eval->add_subcommand("prove", "Select for every problem of a corpus and run a prover");
    add_common(*prove, prove_common, true);
    add_strategy(*prove, prove_strategy);
    prove->add_option("--problems", problems_dir, "Directory of problem files")->required()->check(CLI::ExistingDirectory);
    prove->add_option("--out-dir", out_dir, "Directory for prover input files");
    prove->add_option("--prover-cmd", prover_cmd, "Prover command template with {input} and {timeout}");
    prove->add_option("--timeout", timeout, "CPU seconds per prover run")->check(CLI::PositiveNumber);
    prove->add_option("--proof-pattern", patterns.proof, "Regex marking a proof");
    prove->add_option("--model-pattern", patterns.model, "Regex marking a model");
    prove->add_option("--timeout-pattern", patterns.timeout, "Regex marking a timeout");
    prove->add_option("--sweep", sweep_text,
                      "Comma-separated depths (sine, simsine) or k values (vector, vb-union); "
                      "each value is a separate run and a best-of summary is added");
    prove->add_option("--report", prove_report, "Report path (default: stdout)");
    prove->add_option("--report-format", prove_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    CommonOptions frat_common;
    StrategyOptions frat_strategy;
    std::string tasks_path, values_text, frat_report, frat_format = "tsv";
    auto* frat = eval->add_subcommand("frat", "Functional remote association task study");
    add_common(*frat, frat_common, true);
    add_strategy(*frat, frat_strategy);
    frat->add_option("--tasks", tasks_path, "CSV with w1,w2,w3,target per line")->required()->check(CLI::ExistingFile);
    frat->add_option("--values", values_text, "Comma-separated k values (vector, vb-union) or depths (sine, simsine)")
        ->required();
    frat->add_option("--report", frat_report, "Report path (default: stdout)");
    frat->add_option("--report-format", frat_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (select->parsed()) {
            auto engine = make_engine(select_common);
            const auto params = params_of(select_strategy);
            const auto goal = load_goal(goal_path);
            const auto result = engine->select(goal, params);
            if (select_format == "json") {
                write_output(select_output, selection_json(engine->kb(), goal, params, result));
            } else {
                write_output(select_output, prover_input(engine->kb(), result, goal));
            }
        } else if (stats->parsed()) {
            const auto kb = load_kb(stats_common.kb_path);
            std::ostringstream out;
            write_stats_tsv(out, kb, compute_stats(kb));
            write_output(stats_output, out.str());
        } else if (map_build->parsed()) {
            const auto kb = load_kb(map_common.kb_path);
            const auto store = EmbeddingStore::load(std::filesystem::path(map_common.embedding_path));
            std::vector<MappingEntry> rows;
            for (const auto& path : table_paths) {
                auto entries = read_mapping_tsv(std::filesystem::path(path));
                rows.insert(rows.end(), entries.begin(), entries.end());
            }
            const auto mapping = build_mapping(kb, store, tables_from_entries(rows), normalizer_of(map_common));
            std::ostringstream out;
            write_mapping_tsv(out, mapping);
            write_output(map_output, out.str());
            std::cerr << "coverage: " << mapping.size() << "/" << kb.symbol_count() << " symbols ("
                      << mapping.coverage() * 100.0 << "%)\n";
        } else if (prove->parsed()) {
            auto engine = make_engine(prove_common);
            CorpusOptions options;
            options.output_dir = out_dir;
            if (!prover_cmd.empty()) options.prover_command = prover_cmd;
            options.timeout_seconds = timeout;
            options.patterns = patterns;
            options.workers = prove_common.workers;
            std::vector<ProblemRun> runs;
            if (sweep_text.empty()) {
                runs = run_corpus(*engine, problems_dir, params_of(prove_strategy), options);
            } else {
                const auto values = parse_values(sweep_text, "--sweep");
                for (std::size_t value : values) {
                    auto params = params_of(prove_strategy);
                    if (params.strategy == Strategy::vector || params.strategy == Strategy::vb_union) {
                        params.k = value;
                    } else {
                        params.depth = static_cast<int>(value);
                    }
                    auto sweep_options = options;
                    auto label = params.describe();
                    std::replace(label.begin(), label.end(), ' ', '_');
                    sweep_options.output_dir = std::filesystem::path(out_dir) / label;
                    auto part = run_corpus(*engine, problems_dir, params, sweep_options);
                    runs.insert(runs.end(), part.begin(), part.end());
                }
                if (values.size() > 1) {
                    auto best = best_of(runs);
                    runs.insert(runs.end(), best.begin(), best.end());
                }
            }
            const auto format = parse_report_format(prove_format);
            if (prove_report.empty()) {
                std::ostringstream out;
                if (format == ReportFormat::json) {
                    out << runs_json(runs);
                } else {
                    write_runs_tsv(out, runs);
                }
                std::cout << out.str();
            } else {
                emit_report(prove_report, format, runs);
            }
            const auto counts = count_outcomes(sweep_text.empty() ? runs : best_of(runs));
            std::cerr << "proof " << counts.proof << ", model " << counts.model << ", timeout " << counts.timeout
                      << ", error " << counts.error << ", skipped " << counts.skipped << '\n';
        } else if (frat->parsed()) {
            auto engine = make_engine(frat_common);
            const auto tasks = read_frat_tasks(std::filesystem::path(tasks_path));
            auto params = params_of(frat_strategy);
            const auto values = parse_values(values_text, "--values");
            if (params.strategy == Strategy::vector || params.strategy == Strategy::vb_union) {
                params.k = values.front();
            } else {
                params.depth = static_cast<int>(values.front());
            }
            params.validate(engine->store() != nullptr);
            const auto report = run_frat(*engine, tasks, params, values);
            const auto format = parse_report_format(frat_format);
            if (frat_report.empty()) {
                std::ostringstream out;
                if (format == ReportFormat::json) {
                    out << frat_json(report);
                } else {
                    write_frat_tsv(out, report);
                }
                std::cout << out.str();
            } else {
                emit_report(frat_report, format, report);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
