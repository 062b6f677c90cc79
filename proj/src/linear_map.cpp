#include "ta/linear_map.hpp"

#include "ta/subspace.hpp"

namespace ta {

LinearMap::LinearMap(VectorSpace domain, VectorSpace codomain, Matrix coeffs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), coeffs_(std::move(coeffs)) {
    if (domain_.field() != codomain_.field() || coeffs_.field() != domain_.field())
        throw MixedFields();
    if (coeffs_.rows() != codomain_.dim() || coeffs_.cols() != domain_.dim())
        throw ShapeMismatch("linear map matrix vs spaces");
}

LinearMap LinearMap::identity(const VectorSpace& s) {
    return LinearMap(s, s, Matrix::identity(s.dim(), s.field()));
}

LinearMap LinearMap::zero(const VectorSpace& domain, const VectorSpace& codomain) {
    return LinearMap(domain, codomain, Matrix(codomain.dim(), domain.dim(), domain.field()));
}

Vector LinearMap::apply(const Vector& x) const {
    if (x.space() != domain_) throw ShapeMismatch("argument outside the domain");
    return Vector::from_col(codomain_, coeffs_ * x.as_col());
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.codomain_ != domain_) throw ShapeMismatch("composition domains");
    return LinearMap(inner.domain_, codomain_, coeffs_ * inner.coeffs_);
}

LinearMap LinearMap::operator+(const LinearMap& rhs) const {
    if (domain_ != rhs.domain_ || codomain_ != rhs.codomain_)
        throw ShapeMismatch("sum of maps between different spaces");
    return LinearMap(domain_, codomain_, coeffs_ + rhs.coeffs_);
}

LinearMap LinearMap::scaled(const Scalar& a) const {
    return LinearMap(domain_, codomain_, coeffs_.scaled(a));
}

bool LinearMap::operator==(const LinearMap& rhs) const {
    return domain_ == rhs.domain_ && codomain_ == rhs.codomain_ && coeffs_ == rhs.coeffs_;
}

bool LinearMap::is_invertible() const {
    return coeffs_.rows() == coeffs_.cols() && rank(coeffs_) == coeffs_.rows();
}

LinearMap LinearMap::inverse_map() const { return LinearMap(codomain_, domain_, inverse(coeffs_)); }

Subspace kernel_basis(const LinearMap& l) {
    const Matrix& a = l.matrix();
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    const Field& f = a.field();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(f));
        v[j] = Scalar::one(f);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.echelon.at(i, j);
        basis.emplace_back(l.domain(), std::move(v));
    }
    return Subspace::span_vectors(l.domain(), basis);
}

Subspace image_basis(const LinearMap& l) {
    return Subspace::span(l.codomain(), l.matrix().transpose());
}

LinearMap adjoint(const LinearMap& l) {
    return LinearMap(l.codomain(), l.domain(), l.matrix().transpose());
}

} // namespace ta
