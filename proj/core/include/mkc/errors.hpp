#ifndef MKC_ERRORS_HPP
#define MKC_ERRORS_HPP

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace mkc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex or matrix index outside its valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// A documented precondition on the arguments was violated.
class ContractError : public Error {
public:
    using Error::Error;
};

/// A size or shape parameter is outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but outside what the operation supports
/// (weighted input to complement, negative weights to a graph bound, ...).
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The exhaustive oracle refused to run; `required()` is the number of
/// block assignments the search would have needed.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(double required, double budget)
        : Error("search needs " + whole(required) + " assignments, budget is " + whole(budget)),
          required_(required), budget_(budget) {}

    double required() const noexcept { return required_; }
    double budget() const noexcept { return budget_; }

private:
    static std::string whole(double x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }

    double required_;
    double budget_;
};

}  // namespace mkc

#endif  // MKC_ERRORS_HPP
