#pragma once

#include "axsel/embedding.hpp"
#include "axsel/mapping.hpp"
#include "axsel/selection.hpp"
#include "axsel/sine.hpp"
#include "axsel/symbol_stats.hpp"
#include "axsel/vector_select.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace axsel {

enum class Strategy { sine, simsine, vector, vb_union };

const char* to_string(Strategy strategy);
/// Accepts sine, simsine, vector, vb-union. Throws ConfigError.
Strategy parse_strategy(std::string_view text);

struct StrategyParams {
    Strategy strategy = Strategy::sine;
    int depth = 1;
    double tolerance = 1.0;
    std::size_t k = 0;

    bool needs_embedding() const noexcept { return strategy != Strategy::sine; }
    /// Throws ConfigError naming the missing or invalid parameter.
    void validate(bool have_embedding) const;
    /// e.g. "depth=3 tolerance=1" or "k=50".
    std::string describe() const;
};

struct EngineOptions {
    std::optional<std::filesystem::path> cache_dir;
    unsigned workers = 1;
    NormalizerConfig normalizer;
};

/// Owns the statistics and the per-parameter indexes for one KB, built on
/// first use. select() is safe to call concurrently.
class SelectionEngine {
public:
    /// Without an explicit mapping, a brute-force mapping is built when an
    /// embedding is given.
    SelectionEngine(std::shared_ptr<const KnowledgeBase> kb, std::shared_ptr<const EmbeddingStore> store = nullptr,
                    std::optional<SymbolMapping> mapping = std::nullopt, EngineOptions options = {});

    SelectionResult select(const Goal& goal, const StrategyParams& params) const;

    const KnowledgeBase& kb() const noexcept { return *kb_; }
    const SymbolStats& stats() const noexcept { return stats_; }
    const EmbeddingStore* store() const noexcept { return store_.get(); }
    const SymbolMapping* mapping() const noexcept { return mapping_ ? &*mapping_ : nullptr; }
    const EngineOptions& options() const noexcept { return options_; }

    std::shared_ptr<const TriggerIndex> trigger_index(double tolerance) const;
    std::shared_ptr<const TriggerIndex> sim_trigger_index(double tolerance, std::size_t k) const;
    std::shared_ptr<const KbVectorIndex> kb_vectors() const;
    GoalVector goal_vector(const Goal& goal) const;

private:
    std::shared_ptr<const KnowledgeBase> kb_;
    std::shared_ptr<const EmbeddingStore> store_;
    std::optional<SymbolMapping> mapping_;
    EngineOptions options_;
    SymbolStats stats_;

    mutable std::mutex mutex_;
    mutable std::map<double, std::shared_ptr<const TriggerIndex>> trigger_indexes_;
    mutable std::map<std::pair<double, std::size_t>, std::shared_ptr<const TriggerIndex>> sim_indexes_;
    mutable std::shared_ptr<const KbVectorIndex> kb_vectors_;
};

}  // namespace axsel
