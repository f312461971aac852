#pragma once

#include "axsel/formula.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace axsel {

using SymbolId = std::uint32_t;
using AxiomIndex = std::uint32_t;

/// A named formula as it appears in a TPTP file.
struct AnnotatedFormula {
    std::string name;
    std::string role;
    Formula formula;
};

struct Axiom {
    std::string id;
    Formula formula;
    std::vector<SymbolId> symbols;  // sorted, unique
};

/// Immutable indexed set of axioms. Symbol ids are dense and assigned in
/// order of first appearance; axiom order is source order.
class KnowledgeBase {
public:
    KnowledgeBase() = default;

    /// Throws DuplicateAxiomId.
    static KnowledgeBase from_formulas(std::vector<AnnotatedFormula> formulas);

    std::size_t size() const noexcept { return axioms_.size(); }
    bool empty() const noexcept { return axioms_.empty(); }
    const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
    const Axiom& axiom(AxiomIndex index) const { return axioms_.at(index); }

    std::size_t symbol_count() const noexcept { return symbol_names_.size(); }
    const std::vector<std::string>& symbol_names() const noexcept { return symbol_names_; }
    const std::string& symbol_name(SymbolId id) const { return symbol_names_.at(id); }
    std::optional<SymbolId> find_symbol(std::string_view name) const;

    /// Axioms containing `symbol`, ascending.
    std::span<const AxiomIndex> axioms_with(SymbolId symbol) const { return symbol_index_.at(symbol); }

    std::optional<AxiomIndex> find_axiom(std::string_view id) const;

private:
    std::vector<Axiom> axioms_;
    std::vector<std::string> symbol_names_;
    std::unordered_map<std::string, SymbolId> symbol_ids_;
    std::vector<std::vector<AxiomIndex>> symbol_index_;
    std::unordered_map<std::string, AxiomIndex> axiom_ids_;
};

/// F1 & ... & Fn => Q. Symbols are names because goal symbols need not occur in any KB.
struct Goal {
    std::vector<AnnotatedFormula> premises;
    AnnotatedFormula query;
    std::vector<std::string> symbols;  // sorted, unique

    static Goal from_parts(std::vector<AnnotatedFormula> premises, AnnotatedFormula query);

    /// The goal as a single implication (just Q when there are no premises).
    Formula implication() const;
};

}  // namespace axsel
