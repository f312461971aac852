#include "axsel/similarity_sine.hpp"

#include "axsel/error.hpp"
#include "axsel/parallel.hpp"

#include <algorithm>

namespace axsel {

void SimSineConfig::validate(const EmbeddingStore& store) const {
    SineConfig{depth, tolerance}.validate();
    if (k < 1) {
        throw ConfigError("k must be >= 1");
    }
    if (k >= store.size()) {
        throw KTooLarge(k, store.size() == 0 ? 0 : store.size() - 1);
    }
}

TriggerIndex build_sim_trigger_index(const KnowledgeBase& kb, const SymbolStats& stats, const EmbeddingStore& store,
                                     const SymbolMapping& mapping, double tolerance, std::size_t k, unsigned workers) {
    std::vector<std::vector<SymbolId>> triggers(kb.size());
    std::vector<char> is_trigger(kb.symbol_count(), 0);
    for (AxiomIndex a = 0; a < kb.size(); ++a) {
        triggers[a] = base_triggers(kb.axiom(a), stats, tolerance);
        for (SymbolId s : triggers[a]) is_trigger[s] = 1;
    }

    // Similar KB symbols per trigger symbol, computed once per symbol.
    std::vector<std::vector<SymbolId>> similar(kb.symbol_count());
    std::vector<SymbolId> todo;
    for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
        if (is_trigger[s] && mapping.lookup(kb.symbol_name(s))) todo.push_back(s);
    }
    parallel_for(todo.size(), workers, [&](std::size_t i) {
        const SymbolId s = todo[i];
        std::vector<SymbolId> out;
        for (const auto& hit : simwords(store, mapping.lookup(kb.symbol_name(s))->token, k)) {
            for (const auto& name : mapping.inverse_lookup(hit.token)) {
                if (auto id = kb.find_symbol(name)) out.push_back(*id);
            }
        }
        similar[s] = std::move(out);
    });

    TriggerIndex index;
    index.allowed.resize(kb.symbol_count());
    for (AxiomIndex a = 0; a < kb.size(); ++a) {
        for (SymbolId s : triggers[a]) {
            index.allowed[s].push_back(a);
            for (SymbolId t : similar[s]) index.allowed[t].push_back(a);
        }
    }
    for (auto& axioms : index.allowed) {
        std::sort(axioms.begin(), axioms.end());
        axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());
    }
    return index;
}

SelectionResult similarity_sine_select(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& sim_index,
                                       int depth) {
    auto result = trigger_select(kb, goal, sim_index, depth);
    result.strategy = "simsine";
    return result;
}

}  // namespace axsel
