#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ta/space.hpp"

namespace ta {

/// Canonical byte encoding of an ordered pair of exact vectors. Scalars
/// print canonically, so two keys compare equal exactly when the underlying
/// coordinate pairs do.
class CarrierKey {
public:
    static CarrierKey of(const Vector& x, const Vector& y);
    const std::string& bytes() const { return bytes_; }
    bool operator==(const CarrierKey& rhs) const = default;
    auto operator<=>(const CarrierKey& rhs) const = default;

private:
    explicit CarrierKey(std::string bytes) : bytes_(std::move(bytes)) {}
    std::string bytes_;
};

/// Element of the free linear space generated by the carrier set X x Y:
/// a finitely supported scalar function on ordered pairs. Stored support
/// never contains a zero coefficient.
class FreeVector {
public:
    struct Term {
        Vector x;
        Vector y;
        Scalar coeff;
    };

    FreeVector(VectorSpace x_space, VectorSpace y_space);

    const VectorSpace& x_space() const { return x_space_; }
    const VectorSpace& y_space() const { return y_space_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Terms in deterministic (key-sorted) order.
    std::vector<Term> terms() const;
    /// Coefficient at the carrier point (x, y); zero off the support.
    Scalar coeff_at(const Vector& x, const Vector& y) const;

    FreeVector operator+(const FreeVector& rhs) const;
    FreeVector operator-(const FreeVector& rhs) const;
    FreeVector scaled(const Scalar& a) const;
    bool operator==(const FreeVector& rhs) const;
    bool operator!=(const FreeVector& rhs) const { return !(*this == rhs); }

    void add_term(const Vector& x, const Vector& y, const Scalar& coeff);

private:
    void check_same_carrier(const FreeVector& rhs) const;
    VectorSpace x_space_;
    VectorSpace y_space_;
    std::map<CarrierKey, Term> terms_;
};

/// The characteristic function of the singleton {(x, y)}.
FreeVector free_embed(const Vector& x, const Vector& y);

/// Pointwise linear combination; zero coefficients are pruned.
FreeVector free_combine(const std::vector<std::pair<Scalar, FreeVector>>& terms);

} // namespace ta
