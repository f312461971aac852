#pragma once

#include "axsel/knowledge_base.hpp"

#include <optional>
#include <string>
#include <vector>

namespace axsel {

enum class Origin { sine, vector, both };

const char* to_string(Origin origin);

struct SelectedAxiom {
    AxiomIndex axiom = 0;
    std::optional<int> step;      // minimal trigger step (SInE-based strategies)
    std::optional<double> score;  // cosine to the goal vector (vector-based strategies)
    std::optional<Origin> origin; // vb-union only
};

/// Selected axioms in rank order.
struct SelectionResult {
    std::string strategy;
    std::vector<SelectedAxiom> axioms;

    std::size_t size() const noexcept { return axioms.size(); }
    bool empty() const noexcept { return axioms.empty(); }
    std::vector<AxiomIndex> indices() const;
    std::vector<std::string> ids(const KnowledgeBase& kb) const;
};

}  // namespace axsel
