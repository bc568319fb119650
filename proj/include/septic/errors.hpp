#pragma once

#include <stdexcept>
#include <string>

namespace septic {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// unit_part(0, p) has no meaning
struct UndefinedUnitPart : Error {
    UndefinedUnitPart() : Error("unit part of zero is undefined") {}
};

// phi-bar does not divide F-bar mod p
struct NotAFactor : Error {
    explicit NotAFactor(const std::string& msg) : Error(msg) {}
};

// residual field degree > 3, p > 100, and similar out-of-range requests
struct Unsupported : Error {
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};

// a non-regular configuration outside the handled second-order cases
struct UnsupportedSecondOrder : Error {
    explicit UnsupportedSecondOrder(const std::string& msg) : Error(msg) {}
};

// two congruence rows of a classification table matched the same input
struct TableAmbiguity : Error {
    explicit TableAmbiguity(const std::string& msg) : Error(msg) {}
};

// tame different formula requested at a wildly ramified prime
struct WildRamification : Error {
    explicit WildRamification(const std::string& msg) : Error(msg) {}
};

// splitting type absent from the index table
struct NotTabulated : Error {
    explicit NotTabulated(const std::string& msg) : Error(msg) {}
};

// two exact sources disagree; indicates a bug or a table defect
struct InconsistencyDetected : Error {
    explicit InconsistencyDetected(const std::string& msg) : Error(msg) {}
};

// input breaks the standing hypothesis nu_p(a) <= 5 or nu_p(b) <= 6
struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& msg) : Error(msg) {}
};

// F reducible where irreducibility is required
struct ReducibleInput : Error {
    explicit ReducibleInput(const std::string& msg) : Error(msg) {}
};

} // namespace septic
