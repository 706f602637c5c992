#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctrlmode {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A removal plan's guarantee did not hold on the mutated graph.
/// Carries the node ids witnessing the violation.
class VerificationError : public Error {
public:
    VerificationError(const std::string& what, std::vector<std::int32_t> witnesses = {})
        : Error(what), witnesses_(std::move(witnesses)) {}

    const std::vector<std::int32_t>& witnesses() const { return witnesses_; }

private:
    std::vector<std::int32_t> witnesses_;
};

}  // namespace ctrlmode
