#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ta/scalar.hpp"

namespace ta {

/// Dense matrix of exact scalars over a single field. Zero row or column
/// counts are legal (empty bases, zero maps onto trivial spaces).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f);
    static Matrix identity(std::size_t n, const Field& f);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f);
    static Matrix from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                            const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(const Scalar& a) const;
    Matrix operator-() const { return scaled(-Scalar::one(field_)); }
    Matrix transpose() const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> col(std::size_t c) const;
    void set_row(std::size_t r, const std::vector<Scalar>& v);

    /// Rows stacked on top of each other.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    /// Columns side by side.
    static Matrix hstack(const Matrix& left, const Matrix& right);
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

    std::string str() const; // debugging aid

private:
    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix echelon;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

/// Exact Gauss-Jordan elimination. Row space is preserved; pivots are
/// normalized to 1 with zeros above and below.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Inverse of a square full-rank matrix; throws ShapeMismatch if singular
/// or non-square.
Matrix inverse(const Matrix& m);

struct SolveResult {
    Matrix solution;  // one column per right-hand-side column; free variables set to 0
    bool consistent;  // false if any right-hand side was unreachable
};

/// Particular solution of A X = B (column-wise). Inconsistent columns get a
/// best-effort solution of the consistent subsystem and clear the flag.
SolveResult solve_particular(const Matrix& a, const Matrix& b);

} // namespace ta
