#pragma once

#include "oracles.hpp"

#include "axsel/embedding.hpp"
#include "axsel/knowledge_base.hpp"
#include "axsel/mapping.hpp"

#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

/// Axiom i is named `a<i+1>` and reads `![X]: (s1(X) & s2(X) & ...)` over its
/// symbols; an empty set gives `$true`.
axsel::KnowledgeBase kb_from_sets(const oracle::SymbolSets& axioms);

/// Conjecture `?[X]: (s1(X) & ...)` over `symbols`.
axsel::Goal goal_from_symbols(const std::set<std::string>& symbols);

/// Symbol sets over `s0 .. s<symbols-1>`, every axiom non-empty.
oracle::SymbolSets random_symbol_sets(std::mt19937_64& rng, std::size_t max_axioms, std::size_t symbols,
                                      std::size_t max_per_axiom = 5);

std::set<std::string> random_goal(std::mt19937_64& rng, std::size_t symbols, std::size_t max_size = 3);

struct RandomEmbedding {
    std::vector<std::string> vocabulary;
    oracle::Vectors rows;
    axsel::EmbeddingStore store() const;
};

/// Non-zero vectors. Small integer coordinates make exact cosine ties common.
RandomEmbedding random_embedding(std::mt19937_64& rng, const std::vector<std::string>& vocabulary, std::size_t dim,
                                 bool integer_coordinates);

/// Maps a random subset of KB symbols to random tokens (several symbols may
/// share a token).
std::map<std::string, std::string> random_forward(std::mt19937_64& rng, const oracle::SymbolSets& axioms,
                                                  const std::vector<std::string>& vocabulary, double mapped_fraction);

axsel::SymbolMapping mapping_from(const axsel::KnowledgeBase& kb, const axsel::EmbeddingStore& store,
                                  const std::map<std::string, std::string>& forward);

std::filesystem::path fresh_temp_dir(const std::string& name);

std::filesystem::path data_dir();

}  // namespace fixtures
