#pragma once

#include "axsel/knowledge_base.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace axsel {

/// An `include('file', [names])` directive. `names` is empty when the
/// directive imports every formula.
struct IncludeDirective {
    std::string path;
    std::vector<std::string> names;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct TptpDocument {
    std::vector<AnnotatedFormula> formulas;
    std::vector<IncludeDirective> includes;
};

/// Parses the supported FOF subset. `%` line comments and `/* */` blocks are
/// skipped. Throws SyntaxError or UnsupportedConstruct (tff/thf input).
TptpDocument parse_tptp(std::string_view text);

bool is_axiom_role(std::string_view role);

/// One Axiom per axiom-like formula in source order. Throws UnexpectedConjecture
/// for conjectures and UnsupportedConstruct for include directives, which need
/// a base directory (see load_kb).
KnowledgeBase parse_kb(std::string_view text);
KnowledgeBase parse_kb(std::istream& in);

/// Reads a KB file and resolves its include directives one level deep,
/// relative to the file's directory.
KnowledgeBase load_kb(const std::filesystem::path& path);

/// Axiom-role formulas become premises; exactly one conjecture is required.
Goal parse_goal(std::string_view text);
Goal parse_goal(std::istream& in);
Goal load_goal(const std::filesystem::path& path);

std::string format_annotated(const std::string& name, const std::string& role, const Formula& formula);

void write_tptp(std::ostream& out, const KnowledgeBase& kb);
void write_tptp(std::ostream& out, const Goal& goal);

std::string read_file(const std::filesystem::path& path);

}  // namespace axsel
