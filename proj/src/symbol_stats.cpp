#include "axsel/symbol_stats.hpp"

#include "axsel/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace axsel {

SymbolStats compute_stats(const KnowledgeBase& kb, std::optional<double> log_base) {
    if (kb.empty()) {
        throw EmptyKnowledgeBase();
    }
    SymbolStats stats;
    stats.kb_size = kb.size();
    stats.occ.resize(kb.symbol_count());
    stats.idf.resize(kb.symbol_count());
    const double n = static_cast<double>(kb.size());
    for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
        stats.occ[s] = kb.axioms_with(s).size();
        const double ratio = n / static_cast<double>(stats.occ[s]);
        // log(1) is exactly 0, so the occ == kb_size case stays exact.
        stats.idf[s] = log_base ? std::log(ratio) / std::log(*log_base) : std::log(ratio);
    }
    return stats;
}

double mean_idf(const SymbolStats& stats) {
    if (stats.idf.empty()) {
        return 0.0;
    }
    return std::accumulate(stats.idf.begin(), stats.idf.end(), 0.0) / static_cast<double>(stats.idf.size());
}

void write_stats_tsv(std::ostream& out, const KnowledgeBase& kb, const SymbolStats& stats) {
    std::vector<SymbolId> order(kb.symbol_count());
    std::iota(order.begin(), order.end(), SymbolId{0});
    std::sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
        if (stats.occ[a] != stats.occ[b]) return stats.occ[a] > stats.occ[b];
        return kb.symbol_name(a) < kb.symbol_name(b);
    });
    out << "symbol\tocc\tidf\n";
    const auto precision = out.precision(10);
    for (SymbolId s : order) {
        out << kb.symbol_name(s) << '\t' << stats.occ[s] << '\t' << stats.idf[s] << '\n';
    }
    out.precision(precision);
}

}  // namespace axsel
