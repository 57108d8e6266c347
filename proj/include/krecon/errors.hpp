#pragma once

#include <stdexcept>
#include <string>

namespace krecon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A documented precondition or internal invariant does not hold.
class ContractError : public Error {
public:
    using Error::Error;
};

/// The instance is well-formed but outside what the algorithm handles (e.g. n < k).
class UnsupportedInstance : public Error {
public:
    using Error::Error;
};

/// Layering could not reach every vertex: no connected supergraph exists.
class NoConnectedCompletion : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace krecon
