#pragma once

#include <stdexcept>
#include <string>

namespace symcoh {

/// Base class for all engine errors. Input validation failures and
/// resource-guard refusals both derive from it so the CLI can map them
/// to distinct exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input (bad tables, bad catalog, bad dimensions).
struct ValidationError : Error {
    using Error::Error;
};

// group construction
struct NotAssociative : ValidationError {
    using ValidationError::ValidationError;
};
struct NoIdentityAtZero : ValidationError {
    using ValidationError::ValidationError;
};
struct MissingInverse : ValidationError {
    using ValidationError::ValidationError;
};
struct NotASubgroup : ValidationError {
    using ValidationError::ValidationError;
};
struct SubgroupNotContained : ValidationError {
    using ValidationError::ValidationError;
};

// module construction
struct IllDefinedAction : ValidationError {
    using ValidationError::ValidationError;
};
struct NotHomomorphic : ValidationError {
    using ValidationError::ValidationError;
};
struct IdentityActsNontrivially : ValidationError {
    using ValidationError::ValidationError;
};

// linear algebra
struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct NotASubgroupOf : ValidationError {
    using ValidationError::ValidationError;
};
struct ArithmeticOverflow : Error {
    using Error::Error;
};

// cochain / cohomology
struct DegreeTooLow : ValidationError {
    using ValidationError::ValidationError;
};
struct NotACocycle : ValidationError {
    using ValidationError::ValidationError;
};
struct ArgumentNotInSubgroup : Error {
    using Error::Error;
};

/// Resource guards: degree cap and ambient-coordinate cap.
struct ResourceGuard : Error {
    using Error::Error;
};
struct DegreeCapExceeded : ResourceGuard {
    using ResourceGuard::ResourceGuard;
};
struct MemoryGuard : ResourceGuard {
    using ResourceGuard::ResourceGuard;
};

// catalog / cli
struct CatalogError : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace symcoh
