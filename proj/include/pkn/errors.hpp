#pragma once

#include <stdexcept>
#include <string>

namespace pkn {

struct PknError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Statement violates a model invariant (variable in a fact, empty or
/// duplicated referent, ...).
struct InvalidStatement : PknError {
    using PknError::PknError;
};

/// Property pattern with both descriptor and argument variable; the caller
/// must enumerate instead.
struct UnindexablePattern : PknError {
    using PknError::PknError;
};

struct MissingTermBounds : PknError {
    using PknError::PknError;
};

struct NonContiguousRange : PknError {
    using PknError::PknError;
};

struct OutOfRange : PknError {
    using PknError::PknError;
};

struct DegenerateVector : PknError {
    using PknError::PknError;
};

struct UnknownTerm : PknError {
    using PknError::PknError;
};

struct EmptyReferenceClass : PknError {
    using PknError::PknError;
};

/// Comparison condition over a variable no earlier condition or index can bind.
struct UnboundComparison : PknError {
    using PknError::PknError;
};

struct LexError : PknError {
    int line;
    int column;
    LexError(const std::string& msg, int l, int c)
        : PknError(msg), line(l), column(c) {}
};

}  // namespace pkn
