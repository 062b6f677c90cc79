#include "ta/quotient.hpp"

namespace ta {

SplitCoordinates split_coordinates(const Subspace& m) {
    const VectorSpace& ambient = m.ambient();
    const Subspace comp = complement(m);
    const std::size_t k = m.dim();
    const std::size_t q = comp.dim();

    // Columns of b are the M basis followed by the complement basis; the
    // inverse rows read off the two coordinate blocks.
    Matrix b = Matrix::hstack(m.basis().transpose(), comp.basis().transpose());
    Matrix binv = inverse(b);

    VectorSpace m_coords(ambient.field(), k, "m");
    VectorSpace c_coords(ambient.field(), q, "q");
    return SplitCoordinates{
        LinearMap(ambient, m_coords, binv.submatrix(0, 0, k, ambient.dim())),
        LinearMap(ambient, c_coords, binv.submatrix(k, 0, q, ambient.dim())),
    };
}

QuotientSpace quotient(const VectorSpace& x, const Subspace& m) {
    if (m.ambient() != x) throw SubspaceNotInAmbient("manifold lives in a different space");
    SplitCoordinates split = split_coordinates(m);
    const Subspace comp = complement(m);
    VectorSpace q = split.in_complement.codomain();
    return QuotientSpace(x, m, comp, q, split.in_complement);
}

bool QuotientSpace::same_coset(const Vector& x, const Vector& y) const {
    return project(x) == project(y);
}

Vector QuotientSpace::representative(const Vector& x) const {
    return Vector::from_col(ambient_, complement_.basis().transpose() * project(x).as_col());
}

LinearMap QuotientSpace::section() const {
    return LinearMap(quotient_, ambient_, complement_.basis().transpose());
}

LinearMap factor_through_quotient(const LinearMap& l, const QuotientSpace& q) {
    if (l.domain() != q.ambient()) throw ShapeMismatch("map domain vs quotient ambient");
    for (std::size_t i = 0; i < q.manifold().dim(); ++i) {
        if (!l.apply(q.manifold().basis_vector(i)).is_zero())
            throw KernelConditionViolated("manifold basis vector " + std::to_string(i) +
                                          " is not annihilated by the map");
    }
    return l.compose(q.section());
}

} // namespace ta
