#pragma once

#include "ta/space.hpp"

namespace ta {

/// Linear transformation between coordinate spaces, stored as a
/// codomain-dim x domain-dim matrix.
class LinearMap {
public:
    LinearMap(VectorSpace domain, VectorSpace codomain, Matrix coeffs);
    static LinearMap identity(const VectorSpace& s);
    static LinearMap zero(const VectorSpace& domain, const VectorSpace& codomain);

    const VectorSpace& domain() const { return domain_; }
    const VectorSpace& codomain() const { return codomain_; }
    const Matrix& matrix() const { return coeffs_; }

    Vector apply(const Vector& x) const;
    LinearMap compose(const LinearMap& inner) const; // this after inner
    LinearMap operator+(const LinearMap& rhs) const;
    LinearMap scaled(const Scalar& a) const;
    bool operator==(const LinearMap& rhs) const;
    bool operator!=(const LinearMap& rhs) const { return !(*this == rhs); }

    bool is_invertible() const;
    LinearMap inverse_map() const;

private:
    VectorSpace domain_;
    VectorSpace codomain_;
    Matrix coeffs_;
};

class Subspace;

/// Basis of the null space N(L).
Subspace kernel_basis(const LinearMap& l);
/// Basis of the range R(L).
Subspace image_basis(const LinearMap& l);

/// Algebraic adjoint: the transpose matrix acting between the coordinate
/// duals (identified with the spaces themselves).
LinearMap adjoint(const LinearMap& l);

} // namespace ta
