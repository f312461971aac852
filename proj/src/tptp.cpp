#include "axsel/tptp.hpp"

#include "axsel/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

namespace axsel {

namespace {

enum class TokenKind { lower_word, upper_word, dollar_word, single_quoted, distinct_object, number, punct, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        Token token;
        token.line = line_;
        token.column = column_;
        if (pos_ >= text_.size()) {
            return token;
        }

        const char c = text_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            token.kind = TokenKind::lower_word;
            token.text = take_word();
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            token.kind = TokenKind::upper_word;
            token.text = take_word();
        } else if (c == '$') {
            advance();
            token.kind = TokenKind::dollar_word;
            token.text = "$" + take_word();
            if (token.text.size() == 1) {
                throw SyntaxError("expected word after '$'", token.line, token.column);
            }
        } else if (c == '\'' || c == '"') {
            token.kind = c == '\'' ? TokenKind::single_quoted : TokenKind::distinct_object;
            token.text = take_quoted(c, token);
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   ((c == '+' || c == '-') && pos_ + 1 < text_.size() &&
                    std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            token.kind = TokenKind::number;
            token.text = take_number();
        } else {
            static constexpr std::array<std::string_view, 20> punctuation = {
                "<=>", "<~>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[", "]", ",", ".", ":", "!", "?", "~", "&", "|", "="};
            for (auto p : punctuation) {
                if (text_.substr(pos_, p.size()) == p) {
                    token.kind = TokenKind::punct;
                    token.text = std::string(p);
                    for (std::size_t i = 0; i < p.size(); ++i) advance();
                    return token;
                }
            }
            throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        return token;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                const auto line = line_, column = column_;
                advance();
                advance();
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
                if (pos_ + 1 >= text_.size()) {
                    throw SyntaxError("unterminated block comment", line, column);
                }
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    std::string take_word() {
        const auto start = pos_;
        while (pos_ < text_.size() && is_alnum(text_[pos_])) advance();
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string take_quoted(char quote, const Token& token) {
        std::string out;
        if (quote == '"') out += '"';
        advance();
        while (true) {
            if (pos_ >= text_.size() || text_[pos_] == '\n') {
                throw SyntaxError("unterminated quoted name", token.line, token.column);
            }
            char c = text_[pos_];
            if (c == quote) {
                advance();
                break;
            }
            if (c == '\\') {
                advance();
                if (pos_ >= text_.size()) {
                    throw SyntaxError("unterminated quoted name", token.line, token.column);
                }
                c = text_[pos_];
            }
            out += c;
            advance();
        }
        if (quote == '"') out += '"';
        if (quote == '\'' && out.empty()) {
            throw SyntaxError("empty quoted name", token.line, token.column);
        }
        return out;
    }

    std::string take_number() {
        const auto start = pos_;
        if (text_[pos_] == '+' || text_[pos_] == '-') advance();
        auto digits = [this] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        };
        auto digit_at = [this](std::size_t p) {
            return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '/' && digit_at(pos_ + 1)) {
            advance();
            digits();
        } else {
            if (pos_ < text_.size() && text_[pos_] == '.' && digit_at(pos_ + 1)) {
                advance();
                digits();
            }
            if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                auto p = pos_ + 1;
                if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
                if (digit_at(p)) {
                    while (pos_ < p) advance();
                    digits();
                }
            }
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

    TptpDocument parse_document() {
        TptpDocument doc;
        while (current_.kind != TokenKind::end) {
            if (current_.kind != TokenKind::lower_word) {
                fail("expected an annotated formula");
            }
            const Token keyword = current_;
            if (keyword.text == "include") {
                doc.includes.push_back(parse_include());
            } else if (keyword.text == "fof" || keyword.text == "cnf") {
                doc.formulas.push_back(parse_annotated());
            } else if (keyword.text == "tff" || keyword.text == "thf" || keyword.text == "tcf" ||
                       keyword.text == "tpi") {
                throw UnsupportedConstruct("'" + keyword.text + "' formulas are not supported", keyword.line,
                                           keyword.column);
            } else {
                fail("unknown statement '" + keyword.text + "'");
            }
        }
        return doc;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message + (current_.kind == TokenKind::end ? " at end of input" : " near '" + current_.text + "'"),
                          current_.line, current_.column);
    }

    bool at(std::string_view punct) const { return current_.kind == TokenKind::punct && current_.text == punct; }

    Token take() {
        Token t = std::move(current_);
        current_ = lexer_.next();
        return t;
    }

    void expect(std::string_view punct) {
        if (!at(punct)) {
            fail("expected '" + std::string(punct) + "'");
        }
        take();
    }

    IncludeDirective parse_include() {
        IncludeDirective inc;
        inc.line = current_.line;
        inc.column = current_.column;
        take();
        expect("(");
        if (current_.kind != TokenKind::single_quoted) {
            fail("expected quoted file name");
        }
        inc.path = take().text;
        if (at(",")) {
            take();
            expect("[");
            while (!at("]")) {
                inc.names.push_back(parse_name());
                if (!at("]")) expect(",");
            }
            take();
        }
        expect(")");
        expect(".");
        return inc;
    }

    std::string parse_name() {
        if (current_.kind == TokenKind::lower_word || current_.kind == TokenKind::single_quoted ||
            current_.kind == TokenKind::number) {
            return take().text;
        }
        fail("expected a formula name");
    }

    AnnotatedFormula parse_annotated() {
        take();
        expect("(");
        AnnotatedFormula out;
        out.name = parse_name();
        expect(",");
        if (current_.kind != TokenKind::lower_word) {
            fail("expected a formula role");
        }
        out.role = take().text;
        expect(",");
        out.formula = parse_formula();
        if (at(",")) {
            skip_annotations();
        }
        expect(")");
        expect(".");
        return out;
    }

    // Skips source/useful-info annotations up to the closing parenthesis.
    void skip_annotations() {
        int depth = 0;
        while (current_.kind != TokenKind::end) {
            if (at("(") || at("[")) {
                ++depth;
            } else if (at(")") || at("]")) {
                if (depth == 0) return;
                --depth;
            }
            take();
        }
        fail("unterminated annotations");
    }

    Formula parse_formula() {
        Formula lhs = parse_disjunction();
        static constexpr std::array<std::pair<std::string_view, Connective>, 6> nonassoc = {{
            {"<=>", Connective::equivalence},
            {"=>", Connective::implication},
            {"<=", Connective::reverse_implication},
            {"<~>", Connective::exclusive_or},
            {"~|", Connective::nor},
            {"~&", Connective::nand},
        }};
        for (const auto& [text, op] : nonassoc) {
            if (at(text)) {
                take();
                Formula rhs = parse_disjunction();
                return Formula::binary(op, std::move(lhs), std::move(rhs));
            }
        }
        return lhs;
    }

    Formula parse_disjunction() {
        Formula lhs = parse_conjunction();
        while (at("|")) {
            take();
            lhs = Formula::binary(Connective::disjunction, std::move(lhs), parse_conjunction());
        }
        return lhs;
    }

    Formula parse_conjunction() {
        Formula lhs = parse_unary();
        while (at("&")) {
            take();
            lhs = Formula::binary(Connective::conjunction, std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_unary() {
        if (at("~")) {
            take();
            return Formula::negation(parse_unary());
        }
        if (at("!") || at("?")) {
            const auto q = take().text == "!" ? Quantifier::forall : Quantifier::exists;
            expect("[");
            std::vector<std::string> variables;
            while (true) {
                if (current_.kind != TokenKind::upper_word) {
                    fail("expected a variable");
                }
                variables.push_back(take().text);
                if (at(":")) {
                    throw UnsupportedConstruct("typed variables are not supported", current_.line, current_.column);
                }
                if (at("]")) break;
                expect(",");
            }
            take();
            expect(":");
            return Formula::quantified(q, std::move(variables), parse_unary());
        }
        if (at("(")) {
            take();
            Formula inner = parse_formula();
            expect(")");
            return inner;
        }
        return parse_atomic();
    }

    Formula parse_atomic() {
        if (current_.kind == TokenKind::dollar_word && (current_.text == "$true" || current_.text == "$false")) {
            return Formula::truth(take().text == "$true");
        }
        const Token start = current_;
        Term lhs = parse_term();
        if (at("=") || at("!=")) {
            const bool negated = take().text == "!=";
            Formula eq = Formula::equality(std::move(lhs), parse_term());
            return negated ? Formula::negation(std::move(eq)) : eq;
        }
        if (lhs.kind == Term::Kind::variable) {
            throw SyntaxError("variable '" + lhs.name + "' used as a formula", start.line, start.column);
        }
        if (start.kind == TokenKind::number || start.kind == TokenKind::distinct_object) {
            throw SyntaxError("'" + lhs.name + "' cannot be a predicate", start.line, start.column);
        }
        return Formula::atom(std::move(lhs.name), std::move(lhs.args));
    }

    Term parse_term() {
        switch (current_.kind) {
            case TokenKind::upper_word:
                return Term::variable(take().text);
            case TokenKind::number:
            case TokenKind::distinct_object:
                return Term::function(take().text);
            case TokenKind::lower_word:
            case TokenKind::single_quoted:
            case TokenKind::dollar_word: {
                Term term = Term::function(take().text);
                if (at("(")) {
                    take();
                    while (true) {
                        term.args.push_back(parse_term());
                        if (at(")")) break;
                        expect(",");
                    }
                    take();
                }
                return term;
            }
            default:
                fail("expected a term");
        }
    }

    Lexer lexer_;
    Token current_;
};

const std::set<std::string_view>& axiom_roles() {
    static const std::set<std::string_view> roles = {"axiom",   "hypothesis", "definition", "assumption",
                                                      "lemma",   "theorem",    "corollary",  "plain"};
    return roles;
}

std::vector<AnnotatedFormula> kb_formulas(std::vector<AnnotatedFormula> formulas) {
    for (const auto& f : formulas) {
        if (f.role == "conjecture") {
            throw UnexpectedConjecture(f.name);
        }
        if (!is_axiom_role(f.role)) {
            throw Error("formula '" + f.name + "' has unsupported role '" + f.role + "'");
        }
    }
    return formulas;
}

std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TptpDocument parse_tptp(std::string_view text) { return Parser(text).parse_document(); }

bool is_axiom_role(std::string_view role) { return axiom_roles().contains(role); }

KnowledgeBase parse_kb(std::string_view text) {
    auto doc = parse_tptp(text);
    if (!doc.includes.empty()) {
        const auto& inc = doc.includes.front();
        throw UnsupportedConstruct("include directives need a file path; use load_kb", inc.line, inc.column);
    }
    return KnowledgeBase::from_formulas(kb_formulas(std::move(doc.formulas)));
}

KnowledgeBase parse_kb(std::istream& in) { return parse_kb(slurp(in)); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return slurp(in);
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
    auto doc = parse_tptp(read_file(path));
    std::vector<AnnotatedFormula> formulas;
    for (const auto& inc : doc.includes) {
        auto included = parse_tptp(read_file(path.parent_path() / inc.path));
        if (!included.includes.empty()) {
            const auto& nested = included.includes.front();
            throw UnsupportedConstruct("nested include in " + inc.path, nested.line, nested.column);
        }
        for (auto& f : included.formulas) {
            if (inc.names.empty() || std::find(inc.names.begin(), inc.names.end(), f.name) != inc.names.end()) {
                formulas.push_back(std::move(f));
            }
        }
    }
    for (auto& f : doc.formulas) {
        formulas.push_back(std::move(f));
    }
    return KnowledgeBase::from_formulas(kb_formulas(std::move(formulas)));
}

Goal parse_goal(std::string_view text) {
    auto doc = parse_tptp(text);
    if (!doc.includes.empty()) {
        const auto& inc = doc.includes.front();
        throw UnsupportedConstruct("include directives are not supported in goals", inc.line, inc.column);
    }
    std::vector<AnnotatedFormula> premises;
    std::optional<AnnotatedFormula> query;
    for (auto& f : doc.formulas) {
        if (f.role == "conjecture") {
            if (query) {
                throw MultipleConjectures();
            }
            query = std::move(f);
        } else if (is_axiom_role(f.role)) {
            premises.push_back(std::move(f));
        } else {
            throw Error("formula '" + f.name + "' has unsupported role '" + f.role + "'");
        }
    }
    if (!query) {
        throw NoConjecture();
    }
    return Goal::from_parts(std::move(premises), std::move(*query));
}

Goal parse_goal(std::istream& in) { return parse_goal(slurp(in)); }

Goal load_goal(const std::filesystem::path& path) { return parse_goal(read_file(path)); }

std::string format_annotated(const std::string& name, const std::string& role, const Formula& formula) {
    return "fof(" + tptp_name(name) + ", " + role + ", " + to_tptp(formula) + ").";
}

void write_tptp(std::ostream& out, const KnowledgeBase& kb) {
    for (const auto& axiom : kb.axioms()) {
        out << format_annotated(axiom.id, "axiom", axiom.formula) << '\n';
    }
}

void write_tptp(std::ostream& out, const Goal& goal) {
    for (const auto& premise : goal.premises) {
        out << format_annotated(premise.name, premise.role, premise.formula) << '\n';
    }
    out << format_annotated(goal.query.name, "conjecture", goal.query.formula) << '\n';
}

}  // namespace axsel
