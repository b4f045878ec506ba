#pragma once

#include <stdexcept>
#include <string>

namespace smc {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An expression failed to type-check. `path` locates the offending
// sub-expression as a /-separated trail of child slots from the root
// (e.g. "/outer/left").
struct IllTyped : Error {
    std::string path;
    IllTyped(const std::string& msg, std::string path_)
        : Error(msg + " (at " + (path_.empty() ? std::string("/") : path_) + ")"),
          path(std::move(path_)) {}
};

struct EndpointMismatch : Error {
    using Error::Error;
};

// Two-cell paths or constructors whose boundaries do not line up.
struct BoundaryMismatch : Error {
    using Error::Error;
};

// A free-semantics operation was applied to a cell containing a Gen2.
struct NotStructural : Error {
    using Error::Error;
};

struct MissingAssignment : Error {
    using Error::Error;
};

// In a discrete-hom instance, a structural cell whose endpoints evaluate
// to different values. Signals an ill-formed cell, not a model defect.
struct NonDegenerate : Error {
    using Error::Error;
};

struct InvalidFunctor : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    std::string expected;
    ParseError(const std::string& msg, int line_, int column_, std::string expected_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_) +
                (expected_.empty() ? "" : ", expected " + expected_)),
          line(line_), column(column_), expected(std::move(expected_)) {}
};

struct ResolveError : Error {
    using Error::Error;
};

}  // namespace smc
