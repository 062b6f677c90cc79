#pragma once

#include <cstdint>
#include <string>

namespace ta {

/// Coefficient field: the rationals, or integers modulo a prime p.
/// Prime moduli are restricted to machine words; primality is checked
/// on construction.
class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rationals() { return Field(Kind::Rational, 0); }
    static Field prime(std::uint64_t p); // throws ParseError if p is not prime

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::uint64_t modulus() const { return p_; }

    std::string name() const; // "Q" or "GF(p)"
    static Field parse(const std::string& name);

    bool operator==(const Field& other) const = default;

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

} // namespace ta
