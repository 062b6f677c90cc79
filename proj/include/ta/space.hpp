#pragma once

#include <string>
#include <vector>

#include "ta/matrix.hpp"

namespace ta {

/// Finite-dimensional coordinate space over an exact field, with an
/// ordered basis of labelled directions.
class VectorSpace {
public:
    VectorSpace(const Field& f, std::size_t dim, std::string label_prefix = "e");
    VectorSpace(const Field& f, std::vector<std::string> labels);

    const Field& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const VectorSpace& rhs) const = default;

private:
    Field field_;
    std::vector<std::string> labels_;
};

class Vector {
public:
    Vector(VectorSpace space, std::vector<Scalar> coords);
    static Vector zero(const VectorSpace& s);
    static Vector basis(const VectorSpace& s, std::size_t i);
    static Vector from_ints(const VectorSpace& s, std::initializer_list<long long> coords);

    const VectorSpace& space() const { return space_; }
    std::size_t dim() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    Vector operator+(const Vector& rhs) const;
    Vector operator-(const Vector& rhs) const;
    Vector scaled(const Scalar& a) const;
    Vector operator-() const;
    bool is_zero() const;
    bool operator==(const Vector& rhs) const;
    bool operator!=(const Vector& rhs) const { return !(*this == rhs); }

    Scalar dot(const Vector& rhs) const;

    /// 1 x dim row matrix of the coordinates.
    Matrix as_row() const;
    /// dim x 1 column matrix of the coordinates.
    Matrix as_col() const;
    static Vector from_col(const VectorSpace& s, const Matrix& col);

private:
    VectorSpace space_;
    std::vector<Scalar> coords_;
};

/// Outer product table x y^T (dim X rows, dim Y columns).
Matrix outer(const Vector& x, const Vector& y);

} // namespace ta
