#include "axsel/formula.hpp"

#include <cctype>

namespace axsel {

Formula Formula::truth(bool value) {
    Formula f;
    f.kind = Kind::truth;
    f.truth_value = value;
    return f;
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
    Formula f;
    f.kind = Kind::atom;
    f.predicate = std::move(predicate);
    f.args = std::move(args);
    return f;
}

Formula Formula::equality(Term lhs, Term rhs) {
    Formula f;
    f.kind = Kind::equality;
    f.args.push_back(std::move(lhs));
    f.args.push_back(std::move(rhs));
    return f;
}

Formula Formula::negation(Formula operand) {
    Formula f;
    f.kind = Kind::negation;
    f.children.push_back(std::move(operand));
    return f;
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
    Formula f;
    f.kind = Kind::binary;
    f.connective = op;
    f.children.push_back(std::move(lhs));
    f.children.push_back(std::move(rhs));
    return f;
}

Formula Formula::quantified(Quantifier q, std::vector<std::string> variables, Formula body) {
    Formula f;
    f.kind = Kind::quantified;
    f.quantifier = q;
    f.variables = std::move(variables);
    f.children.push_back(std::move(body));
    return f;
}

namespace {

void collect_term_symbols(const Term& term, std::set<std::string>& out) {
    if (term.kind == Term::Kind::variable) {
        return;
    }
    out.insert(term.name);
    for (const auto& arg : term.args) {
        collect_term_symbols(arg, out);
    }
}

const char* connective_text(Connective op) {
    switch (op) {
        case Connective::conjunction: return "&";
        case Connective::disjunction: return "|";
        case Connective::implication: return "=>";
        case Connective::reverse_implication: return "<=";
        case Connective::equivalence: return "<=>";
        case Connective::exclusive_or: return "<~>";
        case Connective::nor: return "~|";
        case Connective::nand: return "~&";
    }
    return "?";
}

bool is_lower_word(const std::string& name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
        return false;
    }
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

bool is_number(const std::string& name) {
    if (name.empty()) {
        return false;
    }
    for (char c : name) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

bool is_distinct_object(const std::string& name) {
    return name.size() >= 2 && name.front() == '"' && name.back() == '"';
}

void append_term(const Term& term, std::string& out) {
    if (term.kind == Term::Kind::variable) {
        out += term.name;
        return;
    }
    out += tptp_name(term.name);
    if (!term.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < term.args.size(); ++i) {
            if (i) out += ',';
            append_term(term.args[i], out);
        }
        out += ')';
    }
}

void append_formula(const Formula& f, std::string& out) {
    switch (f.kind) {
        case Formula::Kind::truth:
            out += f.truth_value ? "$true" : "$false";
            break;
        case Formula::Kind::atom:
            append_term(Term::function(f.predicate, f.args), out);
            break;
        case Formula::Kind::equality:
            append_term(f.args[0], out);
            out += " = ";
            append_term(f.args[1], out);
            break;
        case Formula::Kind::negation:
            out += "~ (";
            append_formula(f.children[0], out);
            out += ')';
            break;
        case Formula::Kind::binary:
            out += '(';
            append_formula(f.children[0], out);
            out += ' ';
            out += connective_text(f.connective);
            out += ' ';
            append_formula(f.children[1], out);
            out += ')';
            break;
        case Formula::Kind::quantified:
            out += f.quantifier == Quantifier::forall ? "! [" : "? [";
            for (std::size_t i = 0; i < f.variables.size(); ++i) {
                if (i) out += ',';
                out += f.variables[i];
            }
            out += "] : (";
            append_formula(f.children[0], out);
            out += ')';
            break;
    }
}

}  // namespace

void collect_symbols(const Formula& formula, std::set<std::string>& out) {
    switch (formula.kind) {
        case Formula::Kind::truth:
            return;
        case Formula::Kind::atom:
            out.insert(formula.predicate);
            [[fallthrough]];
        case Formula::Kind::equality:
            for (const auto& arg : formula.args) {
                collect_term_symbols(arg, out);
            }
            return;
        case Formula::Kind::negation:
        case Formula::Kind::binary:
        case Formula::Kind::quantified:
            for (const auto& child : formula.children) {
                collect_symbols(child, out);
            }
            return;
    }
}

std::set<std::string> symbols_of(const Formula& formula) {
    std::set<std::string> out;
    collect_symbols(formula, out);
    return out;
}

std::string tptp_name(const std::string& name) {
    if (is_lower_word(name) || is_number(name) || is_distinct_object(name) ||
        (name.size() > 1 && name[0] == '$' && is_lower_word(name.substr(1)))) {
        return name;
    }
    std::string quoted = "'";
    for (char c : name) {
        if (c == '\'' || c == '\\') {
            quoted += '\\';
        }
        quoted += c;
    }
    quoted += '\'';
    return quoted;
}

std::string to_tptp(const Term& term) {
    std::string out;
    append_term(term, out);
    return out;
}

std::string to_tptp(const Formula& formula) {
    std::string out;
    append_formula(formula, out);
    return out;
}

}  // namespace axsel
