#pragma once

#include <stdexcept>
#include <string>

namespace cycloperm {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ffield
struct NotPrime : Error {
    explicit NotPrime(unsigned long long p) : Error("NotPrime: " + std::to_string(p)) {}
};
struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& msg) : Error("ReducibleModulus: " + msg) {}
};
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error("DegreeMismatch: " + msg) {}
};
struct ZeroInverse : Error {
    ZeroInverse() : Error("ZeroInverse: inverse of zero") {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error("FieldMismatch: " + msg) {}
};
struct NotPrimitive : Error {
    explicit NotPrimitive(const std::string& msg) : Error("NotPrimitive: " + msg) {}
};
struct FieldTooLarge : Error {
    explicit FieldTooLarge(const std::string& msg) : Error("FieldTooLarge: " + msg) {}
};
struct ZeroElement : Error {
    ZeroElement() : Error("ZeroElement: nonzero element required") {}
};

// cyclopoly
struct NotADivisor : Error {
    explicit NotADivisor(const std::string& msg) : Error("NotADivisor: " + msg) {}
};
struct ZeroConstantViolation : Error {
    ZeroConstantViolation() : Error("ZeroConstantViolation: P(0) != 0") {}
};
struct NotFactorable : Error {
    explicit NotFactorable(const std::string& msg) : Error("NotFactorable: " + msg) {}
};
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg) : Error("MalformedInput: " + msg) {}
};

// criteria
struct ZeroCoefficient : Error {
    explicit ZeroCoefficient(const std::string& msg) : Error("ZeroCoefficient: " + msg) {}
};
struct PreconditionUnmet : Error {
    explicit PreconditionUnmet(const std::string& msg) : Error("PreconditionUnmet: " + msg) {}
};
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg) : Error("ZeroDenominator: " + msg) {}
};
struct HypothesisFails : Error {
    explicit HypothesisFails(const std::string& msg) : Error("HypothesisFails: " + msg) {}
};

}  // namespace cycloperm
