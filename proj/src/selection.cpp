#include "axsel/selection.hpp"

namespace axsel {

const char* to_string(Origin origin) {
    switch (origin) {
        case Origin::sine: return "sine";
        case Origin::vector: return "vector";
        case Origin::both: return "both";
    }
    return "?";
}

std::vector<AxiomIndex> SelectionResult::indices() const {
    std::vector<AxiomIndex> out;
    out.reserve(axioms.size());
    for (const auto& a : axioms) {
        out.push_back(a.axiom);
    }
    return out;
}

std::vector<std::string> SelectionResult::ids(const KnowledgeBase& kb) const {
    std::vector<std::string> out;
    out.reserve(axioms.size());
    for (const auto& a : axioms) {
        out.push_back(kb.axiom(a.axiom).id);
    }
    return out;
}

}  // namespace axsel
