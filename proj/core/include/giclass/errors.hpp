#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace giclass {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad value passed to a constructor or operation (duplicate vertex ids,
// loops, out-of-range ids, empty class specs, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Malformed textual input. `offset` is the byte offset (graph6, expressions)
// or the line number (edge lists, table files) of the first bad position;
// `unit` says which, and the message spells it out.
struct ParseError : Error {
    enum class Unit { Byte, Line };

    ParseError(const std::string& what, std::size_t offset, Unit unit = Unit::Byte)
        : Error(what + (unit == Unit::Byte ? " (at offset " : " (at line ") +
                std::to_string(offset) + ")"),
          offset(offset),
          unit(unit) {}

    std::size_t offset;
    Unit unit;
};

// Operation only defined up to a size bound (exact canonization, prime
// quotient canonization).
struct UnsupportedSize : Error {
    explicit UnsupportedSize(const std::string& what) : Error(what) {}
};

// A documented precondition was violated. When the violation has a concrete
// certificate (an induced P4, a forbidden induced subgraph), the vertex ids
// are carried along so callers can report it.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what,
                               std::optional<std::vector<int>> witness = std::nullopt)
        : Error(what), witness(std::move(witness)) {}
    std::optional<std::vector<int>> witness;
};

// A specialized algorithm was asked about a pair it does not cover.
struct DispatchError : Error {
    explicit DispatchError(const std::string& what) : Error(what) {}
};

}  // namespace giclass
