#pragma once

#include <set>
#include <string>
#include <vector>

namespace axsel {

struct Term {
    enum class Kind { variable, function };

    Kind kind = Kind::function;
    std::string name;
    std::vector<Term> args;  // empty for variables and constants

    static Term variable(std::string name) { return {Kind::variable, std::move(name), {}}; }
    static Term function(std::string name, std::vector<Term> args = {}) {
        return {Kind::function, std::move(name), std::move(args)};
    }

    friend bool operator==(const Term&, const Term&) = default;
};

enum class Connective { conjunction, disjunction, implication, reverse_implication, equivalence, exclusive_or, nor, nand };
enum class Quantifier { forall, exists };

/// First-order formula tree. Only the fields relevant to `kind` are populated.
struct Formula {
    enum class Kind { truth, atom, equality, negation, binary, quantified };

    Kind kind = Kind::truth;
    bool truth_value = true;                // truth
    std::string predicate;                  // atom
    std::vector<Term> args;                 // atom arguments; equality uses exactly two
    Connective connective = Connective::conjunction;  // binary
    Quantifier quantifier = Quantifier::forall;       // quantified
    std::vector<std::string> variables;               // quantified
    std::vector<Formula> children;  // negation: 1, binary: 2, quantified: 1

    static Formula truth(bool value);
    static Formula atom(std::string predicate, std::vector<Term> args = {});
    static Formula equality(Term lhs, Term rhs);
    static Formula negation(Formula operand);
    static Formula binary(Connective op, Formula lhs, Formula rhs);
    static Formula quantified(Quantifier q, std::vector<std::string> variables, Formula body);

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Predicate and function symbols of `formula`. Constants count as 0-ary
/// functions; variables, connectives, equality and $true/$false are excluded.
std::set<std::string> symbols_of(const Formula& formula);
void collect_symbols(const Formula& formula, std::set<std::string>& out);

/// Renders `formula` in TPTP FOF syntax, fully parenthesized.
std::string to_tptp(const Formula& formula);
std::string to_tptp(const Term& term);

/// Quotes `name` when it is not a plain TPTP lower word, number or distinct object.
std::string tptp_name(const std::string& name);

}  // namespace axsel
