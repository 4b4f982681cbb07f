#pragma once

#include <stdexcept>
#include <string>

namespace zmx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularError : public Error {
public:
    SingularError() : Error("matrix is singular") {}
    explicit SingularError(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Exhaustive minor or path enumeration was requested above the configured order cap.
class OrderCapExceeded : public Error {
public:
    OrderCapExceeded(int order, int cap)
        : Error("matrix order " + std::to_string(order) + " exceeds the enumeration cap " +
                std::to_string(cap)) {}
};

class OrderTooSmall : public Error {
public:
    OrderTooSmall(int order, int minimum)
        : Error("matrix order " + std::to_string(order) + " is below the required minimum " +
                std::to_string(minimum)) {}
};

class NotZMatrix : public Error {
public:
    NotZMatrix() : Error("matrix has a positive off-diagonal entry (not a Z-matrix)") {}
};

class TTooSmall : public Error {
public:
    explicit TTooSmall(const std::string& what) : Error(what) {}
};

class NotInverseCyclic : public Error {
public:
    NotInverseCyclic() : Error("matrix does not have the inverse cyclic property") {}
};

/// A constructor received parameters outside its domain.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

class NotStrictlyIncreasing : public InvalidParameters {
public:
    NotStrictlyIncreasing() : InvalidParameters("type-D parameters must be strictly increasing") {}
};

class ZeroA1 : public InvalidParameters {
public:
    ZeroA1() : InvalidParameters("type-D parameter a_1 must be nonzero") {}
};

class ZeroDiagonal : public InvalidParameters {
public:
    ZeroDiagonal() : InvalidParameters("inverse cyclic diagonal entries must be nonzero") {}
};

class ZeroParameter : public InvalidParameters {
public:
    ZeroParameter() : InvalidParameters("bdsw parameters must all be nonzero") {}
};

class SignViolation : public InvalidParameters {
public:
    explicit SignViolation(const std::string& what) : InvalidParameters(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class UnknownTheorem : public Error {
public:
    explicit UnknownTheorem(const std::string& id) : Error("unknown theorem suite '" + id + "'") {}
};

}  // namespace zmx
