#include "ta/bilinear.hpp"

#include "ta/quotient.hpp"

namespace ta {

BilinearMap::BilinearMap(VectorSpace x, VectorSpace y, VectorSpace z, std::vector<Matrix> slices)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), slices_(std::move(slices)) {
    if (x_.field() != y_.field() || x_.field() != z_.field()) throw MixedFields();
    if (slices_.size() != z_.dim()) throw ShapeMismatch("slice count vs codomain dimension");
    for (const Matrix& s : slices_) {
        if (s.rows() != x_.dim() || s.cols() != y_.dim() || s.field() != x_.field())
            throw ShapeMismatch("slice shape vs factor dimensions");
    }
}

BilinearMap BilinearMap::zero(const VectorSpace& x, const VectorSpace& y, const VectorSpace& z) {
    return BilinearMap(x, y, z, std::vector<Matrix>(z.dim(), Matrix(x.dim(), y.dim(), x.field())));
}

Vector BilinearMap::at_basis(std::size_t i, std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(z_.dim());
    for (std::size_t k = 0; k < z_.dim(); ++k) v.push_back(slices_[k].at(i, j));
    return Vector(z_, std::move(v));
}

Vector BilinearMap::eval(const Vector& x, const Vector& y) const {
    if (x.space() != x_ || y.space() != y_) throw ShapeMismatch("bilinear arguments vs factors");
    std::vector<Scalar> out;
    out.reserve(z_.dim());
    for (std::size_t k = 0; k < z_.dim(); ++k) {
        Scalar acc = Scalar::zero(x_.field());
        for (std::size_t i = 0; i < x_.dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < y_.dim(); ++j)
                acc += x[i] * y[j] * slices_[k].at(i, j);
        }
        out.push_back(acc);
    }
    return Vector(z_, std::move(out));
}

BilinearMap BilinearMap::operator+(const BilinearMap& rhs) const {
    if (x_ != rhs.x_ || y_ != rhs.y_ || z_ != rhs.z_) throw ShapeMismatch("bilinear map sum");
    std::vector<Matrix> slices;
    slices.reserve(slices_.size());
    for (std::size_t k = 0; k < slices_.size(); ++k) slices.push_back(slices_[k] + rhs.slices_[k]);
    return BilinearMap(x_, y_, z_, std::move(slices));
}

BilinearMap BilinearMap::scaled(const Scalar& a) const {
    std::vector<Matrix> slices;
    slices.reserve(slices_.size());
    for (const Matrix& s : slices_) slices.push_back(s.scaled(a));
    return BilinearMap(x_, y_, z_, std::move(slices));
}

bool BilinearMap::operator==(const BilinearMap& rhs) const {
    return x_ == rhs.x_ && y_ == rhs.y_ && z_ == rhs.z_ && slices_ == rhs.slices_;
}

LinearMap section_left(const BilinearMap& phi, const Vector& y) {
    if (y.space() != phi.y_space()) throw ShapeMismatch("section argument vs factor");
    Matrix m(phi.z_space().dim(), phi.x_space().dim(), phi.x_space().field());
    for (std::size_t k = 0; k < phi.z_space().dim(); ++k)
        for (std::size_t i = 0; i < phi.x_space().dim(); ++i) {
            Scalar acc = Scalar::zero(phi.x_space().field());
            for (std::size_t j = 0; j < phi.y_space().dim(); ++j)
                acc += phi.slice(k).at(i, j) * y[j];
            m.at(k, i) = acc;
        }
    return LinearMap(phi.x_space(), phi.z_space(), std::move(m));
}

LinearMap section_right(const BilinearMap& phi, const Vector& x) {
    if (x.space() != phi.x_space()) throw ShapeMismatch("section argument vs factor");
    Matrix m(phi.z_space().dim(), phi.y_space().dim(), phi.x_space().field());
    for (std::size_t k = 0; k < phi.z_space().dim(); ++k)
        for (std::size_t j = 0; j < phi.y_space().dim(); ++j) {
            Scalar acc = Scalar::zero(phi.x_space().field());
            for (std::size_t i = 0; i < phi.x_space().dim(); ++i)
                acc += x[i] * phi.slice(k).at(i, j);
            m.at(k, j) = acc;
        }
    return LinearMap(phi.y_space(), phi.z_space(), std::move(m));
}

BilinearMap compose(const LinearMap& l, const BilinearMap& phi) {
    if (l.domain() != phi.z_space()) throw ShapeMismatch("composition with bilinear map");
    return BilinearMap::from_basis_values(
        phi.x_space(), phi.y_space(), l.codomain(),
        [&](std::size_t i, std::size_t j) { return l.apply(phi.at_basis(i, j)); });
}

BilinearMap restrict_bilinear(const BilinearMap& phi, const Subspace& m, const Subspace& n) {
    if (m.ambient() != phi.x_space() || n.ambient() != phi.y_space())
        throw SubspaceNotInAmbient("restriction manifolds vs factors");
    VectorSpace mc(m.ambient().field(), m.dim(), "m");
    VectorSpace nc(n.ambient().field(), n.dim(), "n");
    return BilinearMap::from_basis_values(mc, nc, phi.z_space(), [&](std::size_t a, std::size_t b) {
        return phi.eval(m.basis_vector(a), n.basis_vector(b));
    });
}

BilinearMap extend_bilinear(const BilinearMap& phi, const Subspace& m, const Subspace& n,
                            const VectorSpace& x, const VectorSpace& y) {
    if (m.ambient() != x || n.ambient() != y)
        throw SubspaceNotInAmbient("extension manifolds vs ambient factors");
    if (phi.x_space().dim() != m.dim() || phi.y_space().dim() != n.dim())
        throw ShapeMismatch("bilinear map vs manifold coordinates");

    // Coordinates over the manifold bases, zero along the complements.
    const Matrix a = split_coordinates(m).in_m.matrix();
    const Matrix b = split_coordinates(n).in_m.matrix();

    std::vector<Matrix> slices;
    slices.reserve(phi.z_space().dim());
    for (std::size_t k = 0; k < phi.z_space().dim(); ++k)
        slices.push_back(a.transpose() * phi.slice(k) * b);
    return BilinearMap(x, y, phi.z_space(), std::move(slices));
}

BilinearMap matrix_unit_bilinear(const std::vector<Vector>& e_family,
                                 const std::vector<Vector>& d_family) {
    if (e_family.empty() || d_family.empty()) throw DependentInput("empty basis candidate family");
    const VectorSpace& x = e_family.front().space();
    const VectorSpace& y = d_family.front().space();

    Subspace m = Subspace::span_vectors(x, e_family);
    Subspace n = Subspace::span_vectors(y, d_family);
    if (m.dim() != e_family.size()) throw DependentInput("left family is linearly dependent");
    if (n.dim() != d_family.size()) throw DependentInput("right family is linearly dependent");

    // Coefficient extraction over the given families (not the canonical
    // RREF basis): solve E^T c = x for the unique expansion.
    Matrix e_cols(x.dim(), e_family.size(), x.field());
    for (std::size_t j = 0; j < e_family.size(); ++j)
        for (std::size_t i = 0; i < x.dim(); ++i) e_cols.at(i, j) = e_family[j][i];
    Matrix d_cols(y.dim(), d_family.size(), y.field());
    for (std::size_t j = 0; j < d_family.size(); ++j)
        for (std::size_t i = 0; i < y.dim(); ++i) d_cols.at(i, j) = d_family[j][i];

    VectorSpace mc(x.field(), e_family.size(), "m");
    VectorSpace nc(y.field(), d_family.size(), "n");
    VectorSpace z(x.field(), e_family.size() * d_family.size(), "u");

    // Change of coordinates: canonical manifold basis -> the given family.
    Matrix m_in_family = solve_particular(e_cols, m.basis().transpose()).solution;
    Matrix n_in_family = solve_particular(d_cols, n.basis().transpose()).solution;

    BilinearMap canonical = BilinearMap::from_basis_values(mc, nc, z, [&](std::size_t a, std::size_t b) {
        // Expand the a-th canonical basis vector of M over E, the b-th of N
        // over D, and form the flattened product table.
        std::vector<Scalar> out(z.dim(), Scalar::zero(x.field()));
        for (std::size_t p = 0; p < e_family.size(); ++p)
            for (std::size_t q = 0; q < d_family.size(); ++q)
                out[p * d_family.size() + q] = m_in_family.at(p, a) * n_in_family.at(q, b);
        return Vector(z, std::move(out));
    });

    return extend_bilinear(canonical, m, n, x, y);
}

} // namespace ta
