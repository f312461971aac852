#pragma once

#include "axsel/engine.hpp"
#include "axsel/subprocess.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace axsel {

// ---------------------------------------------------------------------------
// Prover corpus runs

enum class Outcome { proof, model, timeout, error, skipped };

const char* to_string(Outcome outcome);

struct ProblemRun {
    std::string problem_id;
    std::string strategy;
    std::string params;
    std::size_t selected_count = 0;
    Outcome outcome = Outcome::skipped;
    double wall_seconds = 0.0;
    double cpu_seconds = 0.0;
    std::string detail;  // reason for `error` outcomes
};

/// ECMAScript regexes searched in the prover output. Defaults follow SZS statuses.
struct OutcomePatterns {
    std::string proof = "SZS status (Theorem|Unsatisfiable|ContradictoryAxioms)\\b";
    std::string model = "SZS status (CounterSatisfiable|Satisfiable)\\b";
    std::string timeout = "SZS status (Timeout|ResourceOut)\\b";
};

struct CorpusOptions {
    std::filesystem::path output_dir;
    /// `{input}` and `{timeout}` are substituted. No command: outcomes are `skipped`.
    std::optional<std::string> prover_command;
    int timeout_seconds = 15;
    /// Wall-clock allowance on top of the CPU limit before the prover is killed.
    std::chrono::milliseconds wall_grace{500};
    OutcomePatterns patterns;
    unsigned workers = 1;
};

/// Prover input: selected axioms in rank order, then the goal's premises
/// and its conjecture.
std::string prover_input(const KnowledgeBase& kb, const SelectionResult& selection, const Goal& goal);

std::string expand_command(const std::string& command_template, const std::filesystem::path& input,
                           int timeout_seconds);

/// Timeout when the process was killed for exceeding its limits, otherwise
/// the first matching pattern (proof, model, timeout); anything else is an error.
Outcome classify_output(const ProcessResult& process, const OutcomePatterns& patterns, std::string* detail = nullptr);

/// Problem files are the regular files of `problems_dir`, in name order;
/// each holds a goal with optional local axioms. Throws ProverNotFound when
/// the command's executable does not resolve. Results are in problem order.
std::vector<ProblemRun> run_corpus(const SelectionEngine& engine, const std::filesystem::path& problems_dir,
                                   const StrategyParams& params, const CorpusOptions& options);

struct OutcomeCounts {
    std::size_t proof = 0, model = 0, timeout = 0, error = 0, skipped = 0;
    std::size_t total() const noexcept { return proof + model + timeout + error + skipped; }
    void add(Outcome outcome) noexcept;
};

/// Per (problem, strategy), the run with the strongest outcome (proof, model,
/// timeout, error, skipped), relabelled with params "best-of".
std::vector<ProblemRun> best_of(const std::vector<ProblemRun>& runs);

OutcomeCounts count_outcomes(const std::vector<ProblemRun>& runs);

// ---------------------------------------------------------------------------
// Functional remote association tasks

struct FratTask {
    std::array<std::string, 3> query_words;
    std::string target_word;
};

/// `w1,w2,w3,target` per line; words are trimmed and lowercased. Blank lines
/// and `#` comments are skipped. Throws ParseError.
std::vector<FratTask> read_frat_tasks(std::istream& in);
std::vector<FratTask> read_frat_tasks(const std::filesystem::path& path);

/// Conjecture `![X]: (w1(X) & w2(X) & w3(X))`.
Goal frat_goal(const FratTask& task);

struct FratRow {
    std::size_t parameter = 0;  // k or depth
    std::size_t tasks = 0;
    std::size_t hits = 0;
    double hit_rate = 0.0;
    /// 1-based rank of the first axiom mentioning the target, averaged over hits.
    std::optional<double> avg_target_position;
    /// Same, counting a miss as one past the end of its selection.
    std::optional<double> avg_target_position_all;
    double avg_selected = 0.0;
};

struct FratReport {
    std::string strategy;
    std::string parameter_name;  // "k" or "depth"
    std::vector<FratRow> rows;   // ascending parameter
};

/// Runs every task once per value; values are k for vector and vb-union,
/// recursion depth for sine and simsine. A task hits when some selected
/// axiom has a symbol whose normalized form equals the normalized target.
FratReport run_frat(const SelectionEngine& engine, const std::vector<FratTask>& tasks, const StrategyParams& base,
                    std::vector<std::size_t> values);

// ---------------------------------------------------------------------------
// Reports

enum class ReportFormat { json, tsv };

/// Throws ConfigError.
ReportFormat parse_report_format(std::string_view text);

/// One row per run.
void write_runs_tsv(std::ostream& out, const std::vector<ProblemRun>& runs);
/// Proof/model/timeout/error/skipped counts per (strategy, params).
void write_summary_tsv(std::ostream& out, const std::vector<ProblemRun>& runs);
void write_frat_tsv(std::ostream& out, const FratReport& report);

std::string runs_json(const std::vector<ProblemRun>& runs);
std::string frat_json(const FratReport& report);

/// Throws IoError.
void emit_report(const std::filesystem::path& path, ReportFormat format, const std::vector<ProblemRun>& runs);
void emit_report(const std::filesystem::path& path, ReportFormat format, const FratReport& report);

}  // namespace axsel
