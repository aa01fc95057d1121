#pragma once

#include <stdexcept>
#include <string>

namespace jetsym {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 0^0, division by an exactly-zero expression.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A jet variable above the available prolongation or rewrite order.
class OrderError : public Error {
public:
    using Error::Error;
};

class SubstitutionError : public Error {
public:
    using Error::Error;
};

class NotSolvableError : public Error {
public:
    using Error::Error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

/// Two rules for the same jet variable whose normal forms disagree.
class InconsistentSystemError : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t column, const std::string& message)
        : Error("column " + std::to_string(column) + ": " + message), column_(column)
    {
    }
    /// 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

class UnknownIdentifierError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace jetsym
