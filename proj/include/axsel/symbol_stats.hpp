#pragma once

#include "axsel/knowledge_base.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace axsel {

/// Document-frequency statistics: each axiom counts once per symbol.
struct SymbolStats {
    std::size_t kb_size = 0;
    std::vector<std::size_t> occ;  // indexed by SymbolId
    std::vector<double> idf;       // log(kb_size / occ)
};

/// Throws EmptyKnowledgeBase. Natural logarithm unless `log_base` is given;
/// the selection strategies always use the default.
SymbolStats compute_stats(const KnowledgeBase& kb, std::optional<double> log_base = std::nullopt);

/// Mean idf over sym(KB); the weight given to goal symbols unknown to the KB.
double mean_idf(const SymbolStats& stats);

/// `symbol<TAB>occ<TAB>idf`, descending occ, ties by name.
void write_stats_tsv(std::ostream& out, const KnowledgeBase& kb, const SymbolStats& stats);

}  // namespace axsel
