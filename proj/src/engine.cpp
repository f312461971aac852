#include "axsel/engine.hpp"

#include "axsel/error.hpp"
#include "axsel/similarity_sine.hpp"

#include <sstream>

namespace axsel {

const char* to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::sine: return "sine";
        case Strategy::simsine: return "simsine";
        case Strategy::vector: return "vector";
        case Strategy::vb_union: return "vb-union";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "sine") return Strategy::sine;
    if (text == "simsine") return Strategy::simsine;
    if (text == "vector") return Strategy::vector;
    if (text == "vb-union") return Strategy::vb_union;
    throw ConfigError("unknown strategy '" + std::string(text) + "' (expected sine, simsine, vector or vb-union)");
}

void StrategyParams::validate(bool have_embedding) const {
    const bool uses_depth = strategy != Strategy::vector;
    if (uses_depth) {
        SineConfig{depth, tolerance}.validate();
    }
    if (strategy != Strategy::sine && k == 0) {
        throw ConfigError(std::string("strategy ") + to_string(strategy) + " requires --k >= 1");
    }
    if (needs_embedding() && !have_embedding) {
        throw ConfigError(std::string("strategy ") + to_string(strategy) + " requires --embedding");
    }
}

std::string StrategyParams::describe() const {
    std::ostringstream out;
    switch (strategy) {
        case Strategy::sine: out << "depth=" << depth << " tolerance=" << tolerance; break;
        case Strategy::simsine: out << "depth=" << depth << " tolerance=" << tolerance << " k=" << k; break;
        case Strategy::vector: out << "k=" << k; break;
        case Strategy::vb_union: out << "depth=" << depth << " tolerance=" << tolerance << " k=" << k; break;
    }
    return out.str();
}

SelectionEngine::SelectionEngine(std::shared_ptr<const KnowledgeBase> kb, std::shared_ptr<const EmbeddingStore> store,
                                 std::optional<SymbolMapping> mapping, EngineOptions options)
    : kb_(std::move(kb)), store_(std::move(store)), mapping_(std::move(mapping)), options_(std::move(options)),
      stats_(compute_stats(*kb_)) {
    if (store_ && !mapping_) {
        mapping_ = build_mapping(*kb_, *store_, {}, options_.normalizer);
    }
}

std::shared_ptr<const TriggerIndex> SelectionEngine::trigger_index(double tolerance) const {
    std::lock_guard lock(mutex_);
    auto& slot = trigger_indexes_[tolerance];
    if (!slot) {
        slot = std::make_shared<const TriggerIndex>(build_trigger_index(*kb_, stats_, tolerance));
    }
    return slot;
}

std::shared_ptr<const TriggerIndex> SelectionEngine::sim_trigger_index(double tolerance, std::size_t k) const {
    if (!store_) {
        throw ConfigError("Similarity SInE requires an embedding");
    }
    std::lock_guard lock(mutex_);
    auto& slot = sim_indexes_[{tolerance, k}];
    if (!slot) {
        slot = std::make_shared<const TriggerIndex>(
            build_sim_trigger_index(*kb_, stats_, *store_, *mapping_, tolerance, k, options_.workers));
    }
    return slot;
}

std::shared_ptr<const KbVectorIndex> SelectionEngine::kb_vectors() const {
    if (!store_) {
        throw ConfigError("vector-based selection requires an embedding");
    }
    std::lock_guard lock(mutex_);
    if (!kb_vectors_) {
        kb_vectors_ = std::make_shared<const KbVectorIndex>(
            options_.cache_dir ? cached_vectorize_kb(*options_.cache_dir, *kb_, stats_, *store_, *mapping_)
                               : vectorize_kb(*kb_, stats_, *store_, *mapping_));
    }
    return kb_vectors_;
}

GoalVector SelectionEngine::goal_vector(const Goal& goal) const {
    if (!store_) {
        throw ConfigError("vector-based selection requires an embedding");
    }
    return vectorize_goal(goal, *kb_, stats_, *store_, *mapping_, options_.normalizer);
}

SelectionResult SelectionEngine::select(const Goal& goal, const StrategyParams& params) const {
    params.validate(store_ != nullptr);
    switch (params.strategy) {
        case Strategy::sine:
            return sine_select(*kb_, goal, *trigger_index(params.tolerance), params.depth);
        case Strategy::simsine:
            SimSineConfig{params.depth, params.tolerance, params.k}.validate(*store_);
            return similarity_sine_select(*kb_, goal, *sim_trigger_index(params.tolerance, params.k), params.depth);
        case Strategy::vector: {
            const auto gv = goal_vector(goal);
            return most_similar(*kb_vectors(), gv, params.k, options_.workers);
        }
        case Strategy::vb_union:
            return vb_union_sine(*kb_, goal, *trigger_index(params.tolerance), params.depth, *kb_vectors(),
                                 goal_vector(goal), params.k, options_.workers);
    }
    throw ConfigError("unhandled strategy");
}

}  // namespace axsel
