#include "ta/subspace.hpp"

namespace ta {

Subspace Subspace::span(const VectorSpace& ambient, const Matrix& spanning) {
    if (spanning.field() != ambient.field()) throw MixedFields();
    if (spanning.rows() == 0) return zero(ambient);
    if (spanning.cols() != ambient.dim())
        throw ShapeMismatch("spanning rows vs ambient dimension");
    RrefResult r = rref(spanning);
    return Subspace(ambient, r.echelon.submatrix(0, 0, r.rank, spanning.cols()));
}

Subspace Subspace::span_vectors(const VectorSpace& ambient, const std::vector<Vector>& vecs) {
    Matrix m(vecs.size(), ambient.dim(), ambient.field());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i].space() != ambient) throw SubspaceNotInAmbient("spanning vector outside ambient");
        m.set_row(i, vecs[i].coords());
    }
    return span(ambient, m);
}

Subspace Subspace::zero(const VectorSpace& ambient) {
    return Subspace(ambient, Matrix(0, ambient.dim(), ambient.field()));
}

Subspace Subspace::full(const VectorSpace& ambient) {
    return Subspace(ambient, Matrix::identity(ambient.dim(), ambient.field()));
}

Vector Subspace::basis_vector(std::size_t i) const { return Vector(ambient_, basis_.row(i)); }

std::vector<std::size_t> Subspace::pivot_columns() const {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j)
            if (!basis_.at(i, j).is_zero()) {
                pivots.push_back(j);
                break;
            }
    return pivots;
}

bool Subspace::contains(const Vector& v) const {
    if (v.space() != ambient_) return false;
    if (v.is_zero()) return true;
    return rank(Matrix::vstack(basis_, v.as_row())) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    return rank(Matrix::vstack(basis_, other.basis_)) == dim();
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

std::vector<Scalar> Subspace::coordinates(const Vector& v) const {
    if (v.space() != ambient_) throw ShapeMismatch("vector outside ambient space");
    SolveResult s = solve_particular(basis_.transpose(), v.as_col());
    if (!s.consistent) throw ShapeMismatch("vector outside the manifold");
    return s.solution.col(0);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw SubspaceNotInAmbient();
    return span(ambient_, Matrix::vstack(basis_, other.basis_));
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw SubspaceNotInAmbient();
    const std::size_t s = rank(Matrix::vstack(basis_, other.basis_));
    return dim() + other.dim() - s;
}

Subspace complement(const Subspace& m) {
    const VectorSpace& ambient = m.ambient();
    const std::vector<std::size_t> pivots = m.pivot_columns();
    std::vector<Vector> comp;
    std::size_t pidx = 0;
    for (std::size_t j = 0; j < ambient.dim(); ++j) {
        if (pidx < pivots.size() && pivots[pidx] == j) {
            ++pidx;
            continue;
        }
        comp.push_back(Vector::basis(ambient, j));
    }
    return Subspace::span_vectors(ambient, comp);
}

} // namespace ta
