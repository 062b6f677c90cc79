#pragma once

#include "ta/linear_map.hpp"
#include "ta/space.hpp"

namespace ta {

/// Linear manifold of a coordinate space, held by its canonical basis:
/// the reduced row-echelon form of any spanning set (rows = basis vectors).
class Subspace {
public:
    /// Span of the rows of `spanning`; rows are RREF-reduced and zero rows dropped.
    static Subspace span(const VectorSpace& ambient, const Matrix& spanning);
    static Subspace span_vectors(const VectorSpace& ambient, const std::vector<Vector>& vecs);
    static Subspace zero(const VectorSpace& ambient);
    static Subspace full(const VectorSpace& ambient);

    const VectorSpace& ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    /// Canonical RREF basis, one row per basis vector.
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const;
    std::vector<std::size_t> pivot_columns() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Equality of manifolds = equality of canonical bases.
    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

    /// Coordinates of v over the canonical basis; throws ShapeMismatch if
    /// v is outside the manifold.
    std::vector<Scalar> coordinates(const Vector& v) const;

    Subspace sum(const Subspace& other) const;
    std::size_t intersection_dim(const Subspace& other) const;

private:
    Subspace(VectorSpace ambient, Matrix basis)
        : ambient_(std::move(ambient)), basis_(std::move(basis)) {}
    VectorSpace ambient_;
    Matrix basis_;
};

/// Deterministic algebraic complement: the span of the standard basis
/// vectors at the non-pivot columns of M's canonical basis.
Subspace complement(const Subspace& m);

} // namespace ta
