#include "fixtures.hpp"

#include <algorithm>
#include <unistd.h>

namespace fixtures {

using namespace axsel;

KnowledgeBase kb_from_sets(const oracle::SymbolSets& axioms) {
    std::vector<AnnotatedFormula> formulas;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        std::optional<Formula> body;
        for (const auto& s : axioms[i]) {
            auto atom = Formula::atom(s, {Term::variable("X")});
            body = body ? Formula::binary(Connective::conjunction, std::move(*body), std::move(atom)) : std::move(atom);
        }
        auto formula = body ? Formula::quantified(Quantifier::forall, {"X"}, std::move(*body)) : Formula::truth(true);
        formulas.push_back({"a" + std::to_string(i + 1), "axiom", std::move(formula)});
    }
    return KnowledgeBase::from_formulas(std::move(formulas));
}

Goal goal_from_symbols(const std::set<std::string>& symbols) {
    std::optional<Formula> body;
    for (const auto& s : symbols) {
        auto atom = Formula::atom(s, {Term::variable("X")});
        body = body ? Formula::binary(Connective::conjunction, std::move(*body), std::move(atom)) : std::move(atom);
    }
    auto formula = body ? Formula::quantified(Quantifier::exists, {"X"}, std::move(*body)) : Formula::truth(true);
    return Goal::from_parts({}, {"goal", "conjecture", std::move(formula)});
}

oracle::SymbolSets random_symbol_sets(std::mt19937_64& rng, std::size_t max_axioms, std::size_t symbols,
                                      std::size_t max_per_axiom) {
    std::uniform_int_distribution<std::size_t> count(1, max_axioms);
    std::uniform_int_distribution<std::size_t> size(1, std::min(max_per_axiom, symbols));
    std::uniform_int_distribution<std::size_t> pick(0, symbols - 1);
    oracle::SymbolSets sets(count(rng));
    for (auto& set : sets) {
        const auto n = size(rng);
        while (set.size() < n) set.insert("s" + std::to_string(pick(rng)));
    }
    return sets;
}

std::set<std::string> random_goal(std::mt19937_64& rng, std::size_t symbols, std::size_t max_size) {
    // a few indices past the symbol range stand for goal symbols unknown to the KB
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<std::size_t> pick(0, symbols + 1);
    std::set<std::string> goal;
    const auto n = size(rng);
    while (goal.size() < n) goal.insert("s" + std::to_string(pick(rng)));
    return goal;
}

EmbeddingStore RandomEmbedding::store() const {
    std::vector<std::pair<std::string, std::vector<double>>> table;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) table.emplace_back(vocabulary[i], rows[i]);
    return EmbeddingStore::from_rows(table);
}

RandomEmbedding random_embedding(std::mt19937_64& rng, const std::vector<std::string>& vocabulary, std::size_t dim,
                                 bool integer_coordinates) {
    std::uniform_int_distribution<int> small(-2, 2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    RandomEmbedding out;
    out.vocabulary = vocabulary;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
        std::vector<double> v(dim);
        do {
            for (auto& x : v) x = integer_coordinates ? small(rng) : gauss(rng);
        } while (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; }));
        out.rows.push_back(std::move(v));
    }
    return out;
}

std::map<std::string, std::string> random_forward(std::mt19937_64& rng, const oracle::SymbolSets& axioms,
                                                  const std::vector<std::string>& vocabulary, double mapped_fraction) {
    std::bernoulli_distribution mapped(mapped_fraction);
    std::uniform_int_distribution<std::size_t> token(0, vocabulary.size() - 1);
    std::map<std::string, std::string> forward;
    for (const auto& [symbol, n] : oracle::occurrences(axioms)) {
        if (mapped(rng)) forward[symbol] = vocabulary[token(rng)];
    }
    return forward;
}

SymbolMapping mapping_from(const KnowledgeBase& kb, const EmbeddingStore& store,
                           const std::map<std::string, std::string>& forward) {
    std::vector<MappingEntry> entries;
    for (const auto& [symbol, token] : forward) entries.push_back({symbol, token, MappingSource::synonym});
    return SymbolMapping::from_entries(kb, store, entries);
}

std::filesystem::path fresh_temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("axsel-" + name + "-" + std::to_string(static_cast<long>(getpid())));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::filesystem::path data_dir() { return AXSEL_TEST_DATA; }

}  // namespace fixtures
