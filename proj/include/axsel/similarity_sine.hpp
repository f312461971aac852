#pragma once

#include "axsel/embedding.hpp"
#include "axsel/mapping.hpp"
#include "axsel/sine.hpp"

namespace axsel {

struct SimSineConfig {
    int depth = 1;
    double tolerance = 1.0;
    std::size_t k = 1;

    /// Throws ConfigError (depth, tolerance, k >= 1) or KTooLarge (k >= |V|).
    void validate(const EmbeddingStore& store) const;
};

/// Trigger index where every base trigger s of an axiom brings along the KB
/// symbols whose tokens are among the k words most similar to s's token.
/// Unmapped base triggers contribute only themselves.
TriggerIndex build_sim_trigger_index(const KnowledgeBase& kb, const SymbolStats& stats, const EmbeddingStore& store,
                                     const SymbolMapping& mapping, double tolerance, std::size_t k,
                                     unsigned workers = 1);

SelectionResult similarity_sine_select(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& sim_index,
                                       int depth);

}  // namespace axsel
