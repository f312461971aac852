#include "axsel/sine.hpp"

#include "axsel/error.hpp"

#include <algorithm>
#include <limits>

namespace axsel {

void SineConfig::validate() const {
    if (depth < 1) {
        throw ConfigError("recursion depth must be >= 1");
    }
    if (!(tolerance >= 1.0)) {
        throw ConfigError("tolerance must be >= 1");
    }
}

std::vector<SymbolId> base_triggers(const Axiom& axiom, const SymbolStats& stats, double tolerance) {
    std::size_t rarest = std::numeric_limits<std::size_t>::max();
    for (SymbolId s : axiom.symbols) {
        rarest = std::min(rarest, stats.occ[s]);
    }
    const double limit = tolerance * static_cast<double>(rarest);
    std::vector<SymbolId> out;
    for (SymbolId s : axiom.symbols) {
        if (static_cast<double>(stats.occ[s]) <= limit) {
            out.push_back(s);
        }
    }
    return out;
}

TriggerIndex build_trigger_index(const KnowledgeBase& kb, const SymbolStats& stats, double tolerance) {
    TriggerIndex index;
    index.allowed.resize(kb.symbol_count());
    for (AxiomIndex a = 0; a < kb.size(); ++a) {
        for (SymbolId s : base_triggers(kb.axiom(a), stats, tolerance)) {
            index.allowed[s].push_back(a);
        }
    }
    return index;
}

SelectionResult trigger_select(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& index, int depth) {
    SelectionResult result;
    constexpr int unseen = -1;
    std::vector<int> symbol_step(kb.symbol_count(), unseen);
    std::vector<int> axiom_step(kb.size(), unseen);

    std::vector<SymbolId> frontier;
    for (const auto& name : goal.symbols) {
        if (auto id = kb.find_symbol(name)) {
            symbol_step[*id] = 0;
            frontier.push_back(*id);
        }
    }

    for (int step = 1; step <= depth && !frontier.empty(); ++step) {
        std::vector<AxiomIndex> layer;
        for (SymbolId s : frontier) {
            for (AxiomIndex a : index.triggered_by(s)) {
                if (axiom_step[a] == unseen) {
                    axiom_step[a] = step;
                    layer.push_back(a);
                }
            }
        }
        std::sort(layer.begin(), layer.end());

        frontier.clear();
        for (AxiomIndex a : layer) {
            result.axioms.push_back({a, step, std::nullopt, std::nullopt});
            for (SymbolId s : kb.axiom(a).symbols) {
                if (symbol_step[s] == unseen) {
                    symbol_step[s] = step;
                    frontier.push_back(s);
                }
            }
        }
    }
    return result;
}

SelectionResult sine_select(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& index, int depth) {
    auto result = trigger_select(kb, goal, index, depth);
    result.strategy = "sine";
    return result;
}

}  // namespace axsel
