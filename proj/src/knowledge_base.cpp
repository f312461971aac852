#include "axsel/knowledge_base.hpp"

#include "axsel/error.hpp"

#include <algorithm>

namespace axsel {

KnowledgeBase KnowledgeBase::from_formulas(std::vector<AnnotatedFormula> formulas) {
    KnowledgeBase kb;
    kb.axioms_.reserve(formulas.size());
    for (auto& annotated : formulas) {
        const auto index = static_cast<AxiomIndex>(kb.axioms_.size());
        if (!kb.axiom_ids_.emplace(annotated.name, index).second) {
            throw DuplicateAxiomId(annotated.name);
        }

        Axiom axiom;
        axiom.id = std::move(annotated.name);
        axiom.formula = std::move(annotated.formula);
        for (const auto& name : symbols_of(axiom.formula)) {
            auto [it, inserted] = kb.symbol_ids_.emplace(name, static_cast<SymbolId>(kb.symbol_names_.size()));
            if (inserted) {
                kb.symbol_names_.push_back(name);
                kb.symbol_index_.emplace_back();
            }
            axiom.symbols.push_back(it->second);
            kb.symbol_index_[it->second].push_back(index);
        }
        std::sort(axiom.symbols.begin(), axiom.symbols.end());
        kb.axioms_.push_back(std::move(axiom));
    }
    return kb;
}

std::optional<SymbolId> KnowledgeBase::find_symbol(std::string_view name) const {
    auto it = symbol_ids_.find(std::string(name));
    if (it == symbol_ids_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<AxiomIndex> KnowledgeBase::find_axiom(std::string_view id) const {
    auto it = axiom_ids_.find(std::string(id));
    if (it == axiom_ids_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Goal Goal::from_parts(std::vector<AnnotatedFormula> premises, AnnotatedFormula query) {
    Goal goal;
    goal.premises = std::move(premises);
    goal.query = std::move(query);
    std::set<std::string> symbols;
    for (const auto& premise : goal.premises) {
        collect_symbols(premise.formula, symbols);
    }
    collect_symbols(goal.query.formula, symbols);
    goal.symbols.assign(symbols.begin(), symbols.end());
    return goal;
}

Formula Goal::implication() const {
    if (premises.empty()) {
        return query.formula;
    }
    Formula antecedent = premises.front().formula;
    for (std::size_t i = 1; i < premises.size(); ++i) {
        antecedent = Formula::binary(Connective::conjunction, std::move(antecedent), premises[i].formula);
    }
    return Formula::binary(Connective::implication, std::move(antecedent), query.formula);
}

}  // namespace axsel
