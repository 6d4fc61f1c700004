#pragma once

#include <stdexcept>
#include <string>

namespace gk {

/// Malformed input data: bad JSON, invalid Cayley table, non-associative
/// structure constants, unparsable scalars.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on valid data that does not satisfy the
/// operation's precondition (non-unit where a unit is required, element
/// outside the maximal ideal, insufficient depth, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A Hopf-algebra axiom gate failed (used by the CLI front end).
class HopfAxiomError : public std::runtime_error {
public:
    explicit HopfAxiomError(const std::string& what) : std::runtime_error(what) {}
};

/// A verified identity that must hold by construction failed; indicates a
/// bug, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gk
