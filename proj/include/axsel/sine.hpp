#pragma once

#include "axsel/knowledge_base.hpp"
#include "axsel/selection.hpp"
#include "axsel/symbol_stats.hpp"

#include <span>
#include <vector>

namespace axsel {

struct SineConfig {
    int depth = 1;
    double tolerance = 1.0;

    /// Throws ConfigError unless depth >= 1 and tolerance >= 1.
    void validate() const;
};

/// For each symbol, the axioms it is allowed to trigger (ascending).
struct TriggerIndex {
    std::vector<std::vector<AxiomIndex>> allowed;  // indexed by SymbolId

    std::span<const AxiomIndex> triggered_by(SymbolId s) const { return allowed.at(s); }
};

/// Symbols of `axiom` that may trigger it: occ(s) <= tolerance * occ(s') for every s' in the axiom.
std::vector<SymbolId> base_triggers(const Axiom& axiom, const SymbolStats& stats, double tolerance);

TriggerIndex build_trigger_index(const KnowledgeBase& kb, const SymbolStats& stats, double tolerance = 1.0);

/// Axioms that are m-step triggered for some m <= depth, ordered by
/// (first trigger step, source order). Works over any trigger index, so
/// Similarity SInE reuses it unchanged.
SelectionResult trigger_select(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& index, int depth);

SelectionResult sine_select(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& index, int depth);

}  // namespace axsel
