#pragma once

#include <stdexcept>
#include <string>

namespace qvp {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// symbolic layer
struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};
struct NegativeIndex : Error {
    NegativeIndex() : Error("negative residue index") {}
};
struct HigherOrderPole : Error {
    explicit HigherOrderPole(const std::string& w = "higher-order pole") : Error(w) {}
};
struct NoPole : Error {
    explicit NoPole(const std::string& w = "no pole at requested position") : Error(w) {}
};
struct UnmatchedGamma : Error {
    explicit UnmatchedGamma(const std::string& w = "gamma factors do not cancel") : Error(w) {}
};

// K-theory layer
struct PoleAtZeroWeight : Error {
    PoleAtZeroWeight() : Error("negative multiplicity at a zero-weight character") {}
};
struct UnknownBasisCharacter : Error {
    UnknownBasisCharacter() : Error("character basis element has no weight assignment") {}
};

// combinatorics layer
struct InconsistentWeights : Error {
    InconsistentWeights() : Error("generating paths disagree on a stone weight") {}
};

// vertex layer
struct NonReducedFixedPoint : Error {
    NonReducedFixedPoint() : Error("fixed point is not reduced (pole at zero weight)") {}
};
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& w) : Error(w) {}
};

// bethe layer
struct VariableMismatch : Error {
    VariableMismatch() : Error("saddle systems use different variables") {}
};
struct NonIntegerExponent : Error {
    NonIntegerExponent() : Error("factor exponent is not an integer") {}
};
struct NoConvergence : Error {
    NoConvergence() : Error("no seed converged") {}
};
struct DegenerateJacobian : Error {
    DegenerateJacobian() : Error("singular Jacobian in Newton step") {}
};

}  // namespace qvp
