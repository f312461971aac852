#pragma once

// Independent reference implementations. They work on plain symbol sets and
// vectors and recompute everything from scratch, sharing no code with the
// library beyond the data they are handed.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using SymbolSets = std::vector<std::set<std::string>>;
using Vectors = std::vector<std::vector<double>>;

std::map<std::string, std::size_t> occurrences(const SymbolSets& axioms);

/// Per axiom, the symbols s with occ(s) <= t * occ(s') for every s' in the axiom.
std::vector<std::set<std::string>> trigger_sets(const SymbolSets& axioms, double tolerance);

/// Iterates the step rules to a fixpoint truncated at `depth`. `triggers[a]`
/// is the set of symbols allowed to trigger axiom a. Returns axiom -> first step.
std::map<std::size_t, int> trigger_fixpoint(const SymbolSets& axioms, const std::vector<std::set<std::string>>& triggers,
                                            const std::set<std::string>& goal, int depth);

std::map<std::size_t, int> sine(const SymbolSets& axioms, const std::set<std::string>& goal, double tolerance,
                                int depth);

double cosine(const std::vector<double>& u, const std::vector<double>& v);

/// Full cosine sort of every row (minus `exclude`), descending score, ties by
/// row index, truncated to k.
std::vector<std::pair<std::size_t, double>> top_k(const Vectors& rows, const std::vector<double>& query, std::size_t k,
                                                  std::optional<std::size_t> exclude = std::nullopt);

std::vector<std::pair<std::string, double>> simwords(const std::vector<std::string>& vocabulary, const Vectors& rows,
                                                     const std::string& word, std::size_t k);

/// Triggering sets widened by similar words: each base trigger s adds every
/// symbol whose token is among the k words most similar to s's token.
std::vector<std::set<std::string>> sim_trigger_sets(const SymbolSets& axioms, double tolerance,
                                                    const std::map<std::string, std::string>& forward,
                                                    const std::vector<std::string>& vocabulary, const Vectors& rows,
                                                    std::size_t k);

struct AxiomVector {
    std::optional<std::vector<double>> vector;
    bool fallback = false;
};

/// idf-weighted mean of f(rel(s)) over the mapped symbols of axiom `a`,
/// with idf = log(|KB| / occ(s)) / log(base) (natural log for base e).
AxiomVector axiom_vector(const SymbolSets& axioms, std::size_t a, const std::map<std::string, std::string>& forward,
                         const std::vector<std::string>& vocabulary, const Vectors& rows, double log_base = 0.0);

}  // namespace oracle
