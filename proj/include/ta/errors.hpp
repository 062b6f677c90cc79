#pragma once

#include <stdexcept>
#include <string>

namespace ta {

/// Base class for all checked kernel errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MixedFields : public Error {
public:
    explicit MixedFields(const std::string& what = "operands belong to different fields")
        : Error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what = "shape mismatch") : Error(what) {}
};

class SubspaceNotInAmbient : public Error {
public:
    explicit SubspaceNotInAmbient(const std::string& what = "subspace not contained in ambient space")
        : Error(what) {}
};

class KernelConditionViolated : public Error {
public:
    explicit KernelConditionViolated(const std::string& what = "manifold is not contained in the kernel")
        : Error(what) {}
};

class MixedCarriers : public Error {
public:
    explicit MixedCarriers(const std::string& what = "free vectors over different carrier products")
        : Error(what) {}
};

class DependentInput : public Error {
public:
    explicit DependentInput(const std::string& what = "input vectors are linearly dependent")
        : Error(what) {}
};

class FactorSpaceMismatch : public Error {
public:
    explicit FactorSpaceMismatch(const std::string& what = "realizations have different factor spaces")
        : Error(what) {}
};

class NonRealField : public Error {
public:
    explicit NonRealField(const std::string& what = "operation requires the rational field")
        : Error(what) {}
};

class UnsupportedTag : public Error {
public:
    explicit UnsupportedTag(const std::string& what = "unsupported norm tag") : Error(what) {}
};

class Overflow : public Error {
public:
    explicit Overflow(const std::string& what = "enumeration limit exceeded") : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what = "malformed input") : Error(what) {}
};

} // namespace ta
