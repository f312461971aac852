#pragma once

#include "axsel/embedding.hpp"
#include "axsel/mapping.hpp"
#include "axsel/selection.hpp"
#include "axsel/sine.hpp"
#include "axsel/symbol_stats.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace axsel {

/// idf-weighted mean of the embedding vectors of an axiom's mapped symbols,
/// one entry per KB axiom. Axioms without a representable vector are absent
/// and never selected.
class KbVectorIndex {
public:
    KbVectorIndex() = default;

    std::size_t size() const noexcept { return axiom_row_.size(); }
    std::size_t dim() const noexcept { return rows_.dim(); }
    std::size_t present_count() const noexcept { return rows_.size(); }
    std::size_t absent_count() const noexcept { return size() - present_count(); }

    bool present(AxiomIndex a) const { return axiom_row_.at(a) >= 0; }
    /// Empty span when absent.
    std::span<const double> vector(AxiomIndex a) const;
    /// True when every mapped symbol of the axiom has idf 0 and the
    /// unweighted mean was used instead.
    bool used_fallback(AxiomIndex a) const { return fallback_.at(a) != 0; }

    const DenseRows& rows() const noexcept { return rows_; }
    AxiomIndex axiom_of_row(std::size_t row) const { return row_axiom_.at(row); }

    /// Binary cache format; load throws IoError on malformed files.
    void save(const std::filesystem::path& path) const;
    static KbVectorIndex load(const std::filesystem::path& path);

private:
    friend KbVectorIndex vectorize_kb(const KnowledgeBase&, const SymbolStats&, const EmbeddingStore&,
                                      const SymbolMapping&);
    void append(std::optional<std::span<const double>> vector, bool fallback);

    DenseRows rows_;
    std::vector<AxiomIndex> row_axiom_;
    std::vector<std::int64_t> axiom_row_;
    std::vector<char> fallback_;
};

KbVectorIndex vectorize_kb(const KnowledgeBase& kb, const SymbolStats& stats, const EmbeddingStore& store,
                           const SymbolMapping& mapping);

/// Loads the index from `cache_dir` when a file keyed by the KB, embedding
/// and mapping digests exists, otherwise computes and stores it there.
KbVectorIndex cached_vectorize_kb(const std::filesystem::path& cache_dir, const KnowledgeBase& kb,
                                  const SymbolStats& stats, const EmbeddingStore& store, const SymbolMapping& mapping);

std::string cache_key(const KnowledgeBase& kb, const EmbeddingStore& store, const SymbolMapping& mapping);

struct GoalVector {
    std::optional<std::vector<double>> vector;
    std::size_t unknown_symbol_count = 0;  // goal symbols outside sym(KB)
    bool used_fallback = false;

    bool absent() const noexcept { return !vector.has_value(); }
};

/// Known symbols use the mapping and their KB idf. Symbols outside sym(KB)
/// are mapped by brute-force normalization and weighted by mean_idf;
/// unknown symbols that do not map are dropped.
GoalVector vectorize_goal(const Goal& goal, const KnowledgeBase& kb, const SymbolStats& stats,
                          const EmbeddingStore& store, const SymbolMapping& mapping,
                          const NormalizerConfig& normalizer = {});

/// The k present axioms most similar to the goal vector: descending cosine,
/// ties by source order. Throws GoalNotVectorizable or KTooLarge.
SelectionResult most_similar(const KbVectorIndex& index, const GoalVector& goal, std::size_t k, unsigned workers = 1);

/// Union of SInE at `depth` and most_similar with `k` (clamped to the
/// present count; empty when the goal has no vector). SInE hits come first
/// in step order, then the remaining vector hits by score.
SelectionResult vb_union_sine(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& trigger_index, int depth,
                              const KbVectorIndex& kb_vectors, const GoalVector& goal_vector, std::size_t k,
                              unsigned workers = 1);

}  // namespace axsel
