#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ta/errors.hpp"
#include "ta/field.hpp"

namespace ta {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact field element. Rational payloads are kept in lowest terms with
/// positive denominator; prime-field payloads are reduced residues in [0,p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()), rat_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(long long v, const Field& f);
    static Scalar rational(Rational v);
    /// num/den with sign normalization; throws DivisionByZero on den = 0.
    static Scalar fraction(BigInt num, BigInt den);
    static Scalar residue(std::uint64_t v, const Field& f); // reduces mod p

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational payload (rational field only).
    const Rational& rat() const { return rat_; }
    /// Residue payload (prime field only).
    std::uint64_t res() const { return res_; }

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const; // throws DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    Scalar inverse() const; // throws DivisionByZero on 0

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Canonical text form: "a" or "a/b" for rationals, the reduced
    /// residue digits for prime fields. Equal scalars print equally.
    std::string str() const;
    static Scalar parse(const std::string& text, const Field& f); // throws ParseError

    /// Value as a double (rational: exact conversion then rounding;
    /// prime field: the residue). Used only by the floating-point layer.
    double to_double() const;

private:
    Scalar(const Field& f) : field_(f), rat_(0) {}
    void check_same_field(const Scalar& rhs) const;

    Field field_;
    Rational rat_;
    std::uint64_t res_ = 0;
};

} // namespace ta
