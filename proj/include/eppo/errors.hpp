#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eppo {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated a documented precondition.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// An operation refused to enumerate past its configured threshold.
class ThresholdError : public Error {
public:
    ThresholdError(uint64_t group_order, uint64_t threshold, const std::string& context)
        : Error(context + ": group order " + std::to_string(group_order) +
                " exceeds the enumeration threshold " + std::to_string(threshold)),
          group_order(group_order),
          threshold(threshold) {}

    uint64_t group_order;
    uint64_t threshold;
};

/// A multiplicative closure grew beyond the requested cap.
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

/// Malformed input text (group files, spec strings, CLI arguments).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace eppo
