#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctab {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A tuple was asked for variables outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An operation's schema precondition was violated (extra/missing columns,
/// codomain mismatch, ...).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A table, mapping or structure was built from inconsistent parts.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A value does not belong to the algebra's base.
class ValueError : public Error {
public:
    using Error::Error;
};

/// Mapping composition with mismatched domain/codomain.
class ComposeError : public Error {
public:
    using Error::Error;
};

/// Lexical or syntax error; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Formula evaluation failed (unknown relation, arity mismatch, base mismatch).
class EvalError : public Error {
public:
    using Error::Error;
};

/// Unknown law id passed to the law harness.
class LawError : public Error {
public:
    using Error::Error;
};

}  // namespace ctab
