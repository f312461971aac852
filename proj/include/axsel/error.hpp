#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace axsel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnsupportedConstruct : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class DuplicateAxiomId : public Error {
public:
    explicit DuplicateAxiomId(const std::string& id) : Error("duplicate axiom id '" + id + "'") {}
};

/// A `conjecture` appeared where only axioms are allowed.
class UnexpectedConjecture : public Error {
public:
    explicit UnexpectedConjecture(const std::string& id)
        : Error("formula '" + id + "' has role conjecture; knowledge bases may only contain axioms") {}
};

class NoConjecture : public Error {
public:
    NoConjecture() : Error("goal contains no conjecture") {}
};

class MultipleConjectures : public Error {
public:
    MultipleConjectures() : Error("goal contains more than one conjecture") {}
};

class EmptyKnowledgeBase : public Error {
public:
    EmptyKnowledgeBase() : Error("knowledge base has no axioms") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual, std::size_t line = 0)
        : Error((line ? "line " + std::to_string(line) + ": " : std::string{}) + "expected dimension " +
                std::to_string(expected) + ", got " + std::to_string(actual)),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateToken : public Error {
public:
    explicit DuplicateToken(const std::string& token) : Error("duplicate token '" + token + "'") {}
};

class ZeroVector : public Error {
public:
    explicit ZeroVector(const std::string& what = "zero vector") : Error(what) {}
};

class KTooLarge : public Error {
public:
    KTooLarge(std::size_t k, std::size_t limit)
        : Error("k=" + std::to_string(k) + " exceeds the admissible maximum " + std::to_string(limit)) {}
};

class UnknownSource : public Error {
public:
    explicit UnknownSource(const std::string& source) : Error("unknown mapping source '" + source + "'") {}
};

class GoalNotVectorizable : public Error {
public:
    GoalNotVectorizable() : Error("no goal symbol maps to the embedding vocabulary") {}
};

class ProverNotFound : public Error {
public:
    explicit ProverNotFound(const std::string& command) : Error("prover executable not found: " + command) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace axsel
