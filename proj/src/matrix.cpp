#include "ta/matrix.hpp"

#include <sstream>

namespace ta {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeMismatch("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].field() != f) throw MixedFields();
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                         const Field& f) {
    std::vector<std::vector<Scalar>> conv;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (long long v : row) r.push_back(Scalar::from_int(v, f));
        conv.push_back(std::move(r));
    }
    return from_rows(conv, f);
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw MixedFields();
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix addition shape");
    Matrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + rhs.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw MixedFields();
    if (cols_ != rhs.rows_) throw ShapeMismatch("matrix product shape");
    Matrix m(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                m.at(i, j) += aik * rhs.at(k, j);
        }
    return m;
}

Matrix Matrix::scaled(const Scalar& a) const {
    if (a.field() != field_) throw MixedFields();
    Matrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * a;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
    if (v.size() != cols_) throw ShapeMismatch("row length");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.field_ != bottom.field_) throw MixedFields();
    if (top.cols_ != bottom.cols_) throw ShapeMismatch("vstack column counts");
    Matrix m(top.rows_ + bottom.rows_, top.cols_, top.field_);
    for (std::size_t i = 0; i < top.rows_; ++i)
        for (std::size_t j = 0; j < top.cols_; ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows_; ++i)
        for (std::size_t j = 0; j < top.cols_; ++j) m.at(top.rows_ + i, j) = bottom.at(i, j);
    return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.field_ != right.field_) throw MixedFields();
    if (left.rows_ != right.rows_) throw ShapeMismatch("hstack row counts");
    Matrix m(left.rows_, left.cols_ + right.cols_, left.field_);
    for (std::size_t i = 0; i < left.rows_; ++i) {
        for (std::size_t j = 0; j < left.cols_; ++j) m.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, left.cols_ + j) = right.at(i, j);
    }
    return m;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw ShapeMismatch("submatrix bounds");
    Matrix m(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
        const Scalar inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            const Scalar factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - factor * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), std::move(pivots), row};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RrefResult r = rref(Matrix::hstack(m, Matrix::identity(n, m.field())));
    if (r.rank != n || (n > 0 && r.pivots.back() >= n)) throw ShapeMismatch("singular matrix");
    return r.echelon.submatrix(0, n, n, n);
}

SolveResult solve_particular(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw MixedFields();
    if (a.rows() != b.rows()) throw ShapeMismatch("solve shapes");
    RrefResult r = rref(Matrix::hstack(a, b));
    Matrix x(a.cols(), b.cols(), a.field());
    bool consistent = true;
    std::size_t prow = 0;
    for (std::size_t p : r.pivots) {
        if (p >= a.cols()) {
            consistent = false; // pivot in the augmented block: unreachable RHS
            break;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(p, j) = r.echelon.at(prow, a.cols() + j);
        ++prow;
    }
    return SolveResult{std::move(x), consistent};
}

} // namespace ta
