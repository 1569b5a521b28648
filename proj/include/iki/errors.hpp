#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iki {

// Precondition violated by the caller (out-of-range vertex, malformed
// ordering, invalid decomposition, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exponential routine refused an input above its configured cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bag of a tree decomposition holds more pairwise nonadjacent vertices
// than the declared bound.
class AlphaViolation : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// Malformed instance / solution / decomposition text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An instance's cluster/chordal witness is inconsistent. `witness` holds
// an offending induced path or chordless cycle when one was found.
class WitnessError : public std::runtime_error {
public:
    WitnessError(const std::string& what, std::vector<int> witness = {})
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

// A result failed its own post-condition check. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace iki
