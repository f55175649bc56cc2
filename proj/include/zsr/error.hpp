#pragma once

#include <stdexcept>
#include <string>

namespace zsr {

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Cayley table that is not a group. Carries the offending triple when
/// the failure is associativity (or the row/column for Latin-square failures).
class GroupAxiomError : public InputError {
public:
    GroupAxiomError(const std::string& what, int a = -1, int b = -1, int c = -1)
        : InputError(what), a_(a), b_(b), c_(c) {}

    int a() const { return a_; }
    int b() const { return b_; }
    int c() const { return c_; }

private:
    int a_, b_, c_;
};

/// A complex or map lacks a structural property an operation requires
/// (purity, pseudomanifold condition, simpliciality of a vertex map).
class StructureError : public InputError {
public:
    using InputError::InputError;
};

class NonOrientableError : public StructureError {
public:
    using StructureError::StructureError;
};

/// Every target facet has a degenerate preimage, so no degree can be read off.
class DegenerateMapError : public StructureError {
public:
    using StructureError::StructureError;
};

/// A search came back empty where an existence theorem guarantees a witness.
/// This always indicates a bug; the CLI maps it to exit code 3.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace zsr
