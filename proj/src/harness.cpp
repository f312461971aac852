#include "axsel/harness.hpp"

#include "axsel/error.hpp"
#include "axsel/parallel.hpp"
#include "axsel/tptp.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csignal>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace axsel {

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::proof: return "proof";
        case Outcome::model: return "model";
        case Outcome::timeout: return "timeout";
        case Outcome::error: return "error";
        case Outcome::skipped: return "skipped";
    }
    return "?";
}

std::string prover_input(const KnowledgeBase& kb, const SelectionResult& selection, const Goal& goal) {
    std::ostringstream out;
    for (const auto& s : selection.axioms) {
        const auto& axiom = kb.axiom(s.axiom);
        out << format_annotated(axiom.id, "axiom", axiom.formula) << '\n';
    }
    write_tptp(out, goal);
    return out.str();
}

std::string expand_command(const std::string& command_template, const std::filesystem::path& input,
                           int timeout_seconds) {
    std::string quoted = "'";
    for (char c : input.string()) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += '\'';

    std::string out;
    for (std::size_t i = 0; i < command_template.size();) {
        if (command_template.compare(i, 7, "{input}") == 0) {
            out += quoted;
            i += 7;
        } else if (command_template.compare(i, 9, "{timeout}") == 0) {
            out += std::to_string(timeout_seconds);
            i += 9;
        } else {
            out += command_template[i++];
        }
    }
    return out;
}

Outcome classify_output(const ProcessResult& process, const OutcomePatterns& patterns, std::string* detail) {
    if (process.wall_timeout || process.signal == SIGXCPU) {
        return Outcome::timeout;
    }
    if (process.signal == SIGKILL) {
        return Outcome::timeout;  // hard RLIMIT_CPU
    }
    const std::pair<const std::string*, Outcome> checks[] = {
        {&patterns.proof, Outcome::proof}, {&patterns.model, Outcome::model}, {&patterns.timeout, Outcome::timeout}};
    for (const auto& [pattern, outcome] : checks) {
        if (!pattern->empty() && std::regex_search(process.output, std::regex(*pattern, std::regex::ECMAScript | std::regex::multiline))) {
            return outcome;
        }
    }
    if (detail) {
        if (process.exit_code == 127) {
            *detail = "prover command not found";
        } else if (process.signal) {
            *detail = "killed by signal " + std::to_string(process.signal);
        } else {
            *detail = "unclassifiable output (exit code " + std::to_string(process.exit_code) + ")";
        }
    }
    return Outcome::error;
}

std::vector<ProblemRun> run_corpus(const SelectionEngine& engine, const std::filesystem::path& problems_dir,
                                   const StrategyParams& params, const CorpusOptions& options) {
    if (options.prover_command && !command_exists(*options.prover_command)) {
        throw ProverNotFound(*options.prover_command);
    }
    params.validate(engine.store() != nullptr);

    std::vector<std::filesystem::path> problems;
    for (const auto& entry : std::filesystem::directory_iterator(problems_dir)) {
        if (entry.is_regular_file() && entry.path().filename().string().front() != '.') {
            problems.push_back(entry.path());
        }
    }
    std::sort(problems.begin(), problems.end());
    std::filesystem::create_directories(options.output_dir);

    std::vector<ProblemRun> runs(problems.size());
    parallel_for(problems.size(), options.workers, [&](std::size_t i) {
        ProblemRun& run = runs[i];
        run.problem_id = problems[i].stem().string();
        run.strategy = to_string(params.strategy);
        run.params = params.describe();
        Goal goal;
        SelectionResult selection;
        try {
            goal = load_goal(problems[i]);
            selection = engine.select(goal, params);
        } catch (const GoalNotVectorizable&) {
            selection = {};  // nothing selectable; the prover still sees the goal
        } catch (const Error& e) {
            run.outcome = Outcome::error;
            run.detail = e.what();
            return;
        }
        run.selected_count = selection.size();

        const auto input_path = options.output_dir / (run.problem_id + ".p");
        {
            std::ofstream out(input_path);
            out << prover_input(engine.kb(), selection, goal);
            if (!out) {
                run.outcome = Outcome::error;
                run.detail = "cannot write " + input_path.string();
                return;
            }
        }
        if (!options.prover_command) {
            run.outcome = Outcome::skipped;
            return;
        }
        const auto command = expand_command(*options.prover_command, input_path, options.timeout_seconds);
        const auto wall = std::chrono::seconds(options.timeout_seconds) + options.wall_grace;
        const auto process = run_shell(command, options.timeout_seconds, wall);
        run.wall_seconds = process.wall_seconds;
        run.cpu_seconds = process.cpu_seconds;
        run.outcome = classify_output(process, options.patterns, &run.detail);
    });
    return runs;
}

void OutcomeCounts::add(Outcome outcome) noexcept {
    switch (outcome) {
        case Outcome::proof: ++proof; break;
        case Outcome::model: ++model; break;
        case Outcome::timeout: ++timeout; break;
        case Outcome::error: ++error; break;
        case Outcome::skipped: ++skipped; break;
    }
}

std::vector<ProblemRun> best_of(const std::vector<ProblemRun>& runs) {
    // proof beats model beats timeout beats error beats skipped
    auto rank = [](Outcome o) { return static_cast<int>(o); };
    std::vector<ProblemRun> best;
    for (const auto& run : runs) {
        auto it = std::find_if(best.begin(), best.end(), [&](const ProblemRun& b) {
            return b.problem_id == run.problem_id && b.strategy == run.strategy;
        });
        if (it == best.end()) {
            best.push_back(run);
            best.back().params = "best-of";
        } else if (rank(run.outcome) < rank(it->outcome)) {
            *it = run;
            it->params = "best-of";
        }
    }
    return best;
}

OutcomeCounts count_outcomes(const std::vector<ProblemRun>& runs) {
    OutcomeCounts counts;
    for (const auto& run : runs) counts.add(run.outcome);
    return counts;
}

namespace {

std::string trim_lower(std::string_view text) {
    auto begin = text.find_first_not_of(" \t\r");
    auto end = text.find_last_not_of(" \t\r");
    std::string out = begin == std::string_view::npos ? std::string{} : std::string(text.substr(begin, end - begin + 1));
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::vector<FratTask> read_frat_tasks(std::istream& in) {
    std::vector<FratTask> tasks;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto trimmed = trim_lower(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        std::vector<std::string> fields;
        std::istringstream row(trimmed);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(trim_lower(field));
        if (fields.size() != 4) {
            throw ParseError("expected w1,w2,w3,target", line_no);
        }
        if (std::any_of(fields.begin(), fields.end(), [](const std::string& f) { return f.empty(); })) {
            throw ParseError("empty word", line_no);
        }
        tasks.push_back({{fields[0], fields[1], fields[2]}, fields[3]});
    }
    return tasks;
}

std::vector<FratTask> read_frat_tasks(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return read_frat_tasks(in);
}

Goal frat_goal(const FratTask& task) {
    const auto var = Term::variable("X");
    Formula body = Formula::atom(task.query_words[0], {var});
    for (std::size_t i = 1; i < task.query_words.size(); ++i) {
        body = Formula::binary(Connective::conjunction, std::move(body), Formula::atom(task.query_words[i], {var}));
    }
    AnnotatedFormula query{"frat_goal", "conjecture", Formula::quantified(Quantifier::forall, {"X"}, std::move(body))};
    return Goal::from_parts({}, std::move(query));
}

FratReport run_frat(const SelectionEngine& engine, const std::vector<FratTask>& tasks, const StrategyParams& base,
                    std::vector<std::size_t> values) {
    const auto& kb = engine.kb();
    const auto& normalizer = engine.options().normalizer;
    std::vector<std::string> normalized(kb.symbol_count());
    for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
        normalized[s] = brute_force_normalize(kb.symbol_name(s), normalizer);
    }

    FratReport report;
    report.strategy = to_string(base.strategy);
    const bool by_k = base.strategy == Strategy::vector || base.strategy == Strategy::vb_union;
    report.parameter_name = by_k ? "k" : "depth";
    if (tasks.empty()) {
        return report;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Goal> goals;
    std::vector<std::string> targets;
    for (const auto& task : tasks) {
        goals.push_back(frat_goal(task));
        targets.push_back(brute_force_normalize(task.target_word, normalizer));
    }

    for (std::size_t value : values) {
        StrategyParams params = base;
        if (by_k) {
            params.k = value;
        } else {
            params.depth = static_cast<int>(value);
        }

        std::vector<std::optional<std::size_t>> positions(tasks.size());
        std::vector<std::size_t> sizes(tasks.size(), 0);
        parallel_for(tasks.size(), engine.options().workers, [&](std::size_t t) {
            SelectionResult selection;
            try {
                selection = engine.select(goals[t], params);
            } catch (const GoalNotVectorizable&) {
                return;
            }
            sizes[t] = selection.size();
            for (std::size_t rank = 0; rank < selection.axioms.size(); ++rank) {
                const auto& symbols = kb.axiom(selection.axioms[rank].axiom).symbols;
                if (std::any_of(symbols.begin(), symbols.end(),
                                [&](SymbolId s) { return normalized[s] == targets[t]; })) {
                    positions[t] = rank + 1;
                    break;
                }
            }
        });

        FratRow row;
        row.parameter = value;
        row.tasks = tasks.size();
        double hit_positions = 0.0, all_positions = 0.0, selected = 0.0;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            selected += static_cast<double>(sizes[t]);
            if (positions[t]) {
                ++row.hits;
                hit_positions += static_cast<double>(*positions[t]);
                all_positions += static_cast<double>(*positions[t]);
            } else {
                all_positions += static_cast<double>(sizes[t] + 1);
            }
        }
        if (!tasks.empty()) {
            const double n = static_cast<double>(tasks.size());
            row.hit_rate = static_cast<double>(row.hits) / n;
            row.avg_selected = selected / n;
            row.avg_target_position_all = all_positions / n;
        }
        if (row.hits) {
            row.avg_target_position = hit_positions / static_cast<double>(row.hits);
        }
        report.rows.push_back(row);
    }
    return report;
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "json") return ReportFormat::json;
    if (text == "tsv") return ReportFormat::tsv;
    throw ConfigError("unknown report format '" + std::string(text) + "' (expected json or tsv)");
}

namespace {

std::string format_optional(const std::optional<double>& value) {
    if (!value) return "-";
    std::ostringstream out;
    out.precision(6);
    out << *value;
    return out.str();
}

std::vector<std::pair<std::pair<std::string, std::string>, OutcomeCounts>> summarize(
    const std::vector<ProblemRun>& runs) {
    std::vector<std::pair<std::pair<std::string, std::string>, OutcomeCounts>> groups;
    for (const auto& run : runs) {
        auto key = std::make_pair(run.strategy, run.params);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.emplace_back(key, OutcomeCounts{});
            it = std::prev(groups.end());
        }
        it->second.add(run.outcome);
    }
    return groups;
}

nlohmann::json optional_json(const std::optional<double>& value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace

void write_runs_tsv(std::ostream& out, const std::vector<ProblemRun>& runs) {
    out << "problem\tstrategy\tparams\tselected\toutcome\twall_s\tcpu_s\n";
    for (const auto& run : runs) {
        out << run.problem_id << '\t' << run.strategy << '\t' << run.params << '\t' << run.selected_count << '\t'
            << to_string(run.outcome) << '\t' << run.wall_seconds << '\t' << run.cpu_seconds << '\n';
    }
}

void write_summary_tsv(std::ostream& out, const std::vector<ProblemRun>& runs) {
    out << "strategy\tparams\tproof\tmodel\ttimeout\terror\tskipped\ttotal\n";
    for (const auto& [key, counts] : summarize(runs)) {
        out << key.first << '\t' << key.second << '\t' << counts.proof << '\t' << counts.model << '\t'
            << counts.timeout << '\t' << counts.error << '\t' << counts.skipped << '\t' << counts.total() << '\n';
    }
}

void write_frat_tsv(std::ostream& out, const FratReport& report) {
    const auto& name = report.parameter_name.empty() ? std::string("k") : report.parameter_name;
    out << name << "\ttarget_in_selection_pct\tavg_target_position\tavg_selected\thits\ttasks\n";
    for (const auto& row : report.rows) {
        std::ostringstream pct;
        pct.precision(6);
        pct << row.hit_rate * 100.0;
        out << row.parameter << '\t' << pct.str() << '\t' << format_optional(row.avg_target_position) << '\t'
            << format_optional(row.avg_selected) << '\t' << row.hits << '\t' << row.tasks << '\n';
    }
}

std::string runs_json(const std::vector<ProblemRun>& runs) {
    nlohmann::json doc;
    doc["runs"] = nlohmann::json::array();
    for (const auto& run : runs) {
        nlohmann::json r = {{"problem", run.problem_id},       {"strategy", run.strategy},
                            {"params", run.params},            {"selected", run.selected_count},
                            {"outcome", to_string(run.outcome)}, {"wall_s", run.wall_seconds},
                            {"cpu_s", run.cpu_seconds}};
        if (!run.detail.empty()) r["detail"] = run.detail;
        doc["runs"].push_back(std::move(r));
    }
    doc["summary"] = nlohmann::json::array();
    for (const auto& [key, counts] : summarize(runs)) {
        doc["summary"].push_back({{"strategy", key.first},
                                  {"params", key.second},
                                  {"proof", counts.proof},
                                  {"model", counts.model},
                                  {"timeout", counts.timeout},
                                  {"error", counts.error},
                                  {"skipped", counts.skipped},
                                  {"total", counts.total()}});
    }
    return doc.dump(2) + "\n";
}

std::string frat_json(const FratReport& report) {
    nlohmann::json doc = {{"strategy", report.strategy}, {"parameter", report.parameter_name}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        doc["rows"].push_back({{report.parameter_name.empty() ? "k" : report.parameter_name, row.parameter},
                               {"tasks", row.tasks},
                               {"hits", row.hits},
                               {"hit_rate", row.hit_rate},
                               {"avg_target_position", optional_json(row.avg_target_position)},
                               {"avg_target_position_all", optional_json(row.avg_target_position_all)},
                               {"avg_selected", row.avg_selected}});
    }
    return doc.dump(2) + "\n";
}

void emit_report(const std::filesystem::path& path, ReportFormat format, const std::vector<ProblemRun>& runs) {
    if (format == ReportFormat::json) {
        write_file(path, runs_json(runs));
        return;
    }
    std::ostringstream out;
    write_runs_tsv(out, runs);
    write_file(path, out.str());
    std::ostringstream summary;
    write_summary_tsv(summary, runs);
    auto summary_path = path;
    summary_path.replace_extension(".summary.tsv");
    write_file(summary_path, summary.str());
}

void emit_report(const std::filesystem::path& path, ReportFormat format, const FratReport& report) {
    if (format == ReportFormat::json) {
        write_file(path, frat_json(report));
        return;
    }
    std::ostringstream out;
    write_frat_tsv(out, report);
    write_file(path, out.str());
}

}  // namespace axsel
