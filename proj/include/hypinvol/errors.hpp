#pragma once

#include <stdexcept>
#include <string>

namespace hypinvol {

// Error taxonomy. Each one signals a distinct kind of inconsistent or
// unreachable geometric input rather than a programming bug.

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A trig relation has no solution (e.g. no pentagon/hexagon with the given sides).
struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix with |trace| <= 2 where a hyperbolic element was required.
struct NotHyperbolic : std::runtime_error {
    explicit NotHyperbolic(const std::string& what) : std::runtime_error(what) {}
};

// Gluing data fails its residual checks.
struct GluingError : std::runtime_error {
    explicit GluingError(const std::string& what) : std::runtime_error(what) {}
};

struct NoRealSolution : std::runtime_error {
    explicit NoRealSolution(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver failed from all deterministic restarts.
struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

struct AlignmentError : std::runtime_error {
    explicit AlignmentError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidGenus : std::runtime_error {
    explicit InvalidGenus(const std::string& what) : std::runtime_error(what) {}
};

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypinvol
