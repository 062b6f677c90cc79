#pragma once

#include "ta/free_vector.hpp"
#include "ta/tensor.hpp"

namespace ta {

/// The quotient construction: the free linear space on X x Y modulo the
/// manifold spanned by the bilinearity differences. The relation manifold
/// is never materialized; coset equality is decided by reducing free
/// vectors to their normal form, the coefficient table obtained by
/// expanding every carrier point over the standard basis pairs.
class QuotientTensorSpace {
public:
    QuotientTensorSpace(VectorSpace x, VectorSpace y);

    const VectorSpace& x_space() const { return x_; }
    const VectorSpace& y_space() const { return y_; }

    /// Normal form N(f): linear, N(e_(x,y)) = outer(x, y), and N(f) = 0
    /// exactly when f lies in the relation manifold.
    Matrix normal_form(const FreeVector& f) const;
    /// Membership in the relation span: a vanishing normal form.
    bool member_relation_span(const FreeVector& f) const;

    /// theta(x, y) = [e_(x,y)], computed through the free-vector path.
    TensorElement theta(const Vector& x, const Vector& y) const;

    /// Phi with Phi(table) = sum_ij table_ij phi(e_i, d_j).
    LinearMap factorize(const BilinearMap& phi) const;

    /// The (T, theta) pair of this construction.
    const TensorRealization& realization() const { return *realization_; }
    std::shared_ptr<const TensorRealization> realization_ptr() const { return realization_; }

private:
    VectorSpace x_;
    VectorSpace y_;
    std::shared_ptr<const TensorRealization> realization_;
};

/// Generators of the relation manifold, for tests and fixtures: the four
/// difference families instantiated at given vectors and scalar.
FreeVector relation_additive_left(const Vector& x1, const Vector& x2, const Vector& y);
FreeVector relation_additive_right(const Vector& x, const Vector& y1, const Vector& y2);
FreeVector relation_scalar_left(const Scalar& alpha, const Vector& x, const Vector& y);
FreeVector relation_scalar_right(const Scalar& alpha, const Vector& x, const Vector& y);

/// Single tensor of the dual construction: a linear functional on bilinear
/// maps, stored as the coefficient table C acting by
/// psi |-> sum_ij C_ij psi(e_i, d_j).
class DualTensor {
public:
    DualTensor(VectorSpace x, VectorSpace y, Matrix table);

    const VectorSpace& x_space() const { return x_; }
    const VectorSpace& y_space() const { return y_; }
    const Matrix& table() const { return table_; }

    /// Action on a bilinear map into any codomain.
    Vector action(const BilinearMap& psi) const;
    /// Evaluation against a pair of coordinate functionals: mu^T C nu.
    Scalar apply_form(const Vector& mu, const Vector& nu) const;
    /// Euclidean pairing over the rationals: for a single tensor x (x) y
    /// this is <x; u> <y; v>. Prime fields are rejected.
    Scalar inner_eval(const Vector& u, const Vector& v) const;

    DualTensor operator+(const DualTensor& rhs) const;
    DualTensor scaled(const Scalar& a) const;
    bool operator==(const DualTensor& rhs) const;
    bool operator!=(const DualTensor& rhs) const { return !(*this == rhs); }

private:
    VectorSpace x_;
    VectorSpace y_;
    Matrix table_;
};

/// theta'(x, y): the functional psi |-> psi(x, y); outer-product table.
DualTensor theta_dual(const Vector& x, const Vector& y);

/// Factorization through the dual construction; same contract as the
/// quotient one, built from the single-tensor sums of the dual space.
LinearMap factorize_dual(const VectorSpace& x, const VectorSpace& y, const BilinearMap& phi);

/// The (T, theta) pairs of the two constructions, in matched basis-pair
/// coordinates (row-major).
TensorRealization quotient_realization(const VectorSpace& x, const VectorSpace& y);
TensorRealization dual_realization(const VectorSpace& x, const VectorSpace& y);

} // namespace ta
