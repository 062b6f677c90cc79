#include "ta/realizations.hpp"

namespace ta {

namespace {

// Phi(table) = sum_ij table_ij phi(e_i, d_j), as a matrix on flattened
// coordinates. Shared by both constructions: each one sends the class of
// e_(x,y) to the expansion of phi(x, y) over basis pairs.
LinearMap basis_pair_factorizer(const TensorRealization& r, const BilinearMap& phi) {
    const std::size_t m = r.x_space().dim();
    const std::size_t n = r.y_space().dim();
    Matrix coeffs(phi.z_space().dim(), m * n, r.space().field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = phi.at_basis(i, j);
            for (std::size_t k = 0; k < v.dim(); ++k) coeffs.at(k, i * n + j) = v[k];
        }
    return LinearMap(r.space(), phi.z_space(), std::move(coeffs));
}

TensorRealization basis_pair_realization(const std::string& name, const VectorSpace& x,
                                         const VectorSpace& y) {
    VectorSpace t = pair_space(x, y);
    BilinearMap theta = BilinearMap::from_basis_values(
        x, y, t, [&](std::size_t i, std::size_t j) { return Vector::basis(t, i * y.dim() + j); });
    return TensorRealization(name, std::move(theta), basis_pair_factorizer);
}

} // namespace

QuotientTensorSpace::QuotientTensorSpace(VectorSpace x, VectorSpace y)
    : x_(std::move(x)), y_(std::move(y)),
      realization_(std::make_shared<const TensorRealization>(quotient_realization(x_, y_))) {}

Matrix QuotientTensorSpace::normal_form(const FreeVector& f) const {
    if (f.x_space() != x_ || f.y_space() != y_) throw MixedCarriers("free vector over a different product");
    Matrix table(x_.dim(), y_.dim(), x_.field());
    // Each carrier point expands over basis pairs; the difference between
    // e_(x,y) and its expansion is a combination of the relation generators.
    for (const FreeVector::Term& term : f.terms())
        table = table + outer(term.x, term.y).scaled(term.coeff);
    return table;
}

bool QuotientTensorSpace::member_relation_span(const FreeVector& f) const {
    return normal_form(f).is_zero();
}

TensorElement QuotientTensorSpace::theta(const Vector& x, const Vector& y) const {
    return TensorElement(realization_, normal_form(free_embed(x, y)),
                         TensorElement::Rep{{x, y}});
}

LinearMap QuotientTensorSpace::factorize(const BilinearMap& phi) const {
    return realization_->factorize(phi);
}

FreeVector relation_additive_left(const Vector& x1, const Vector& x2, const Vector& y) {
    const Scalar one = Scalar::one(y.space().field());
    return free_combine({{one, free_embed(x1 + x2, y)},
                         {-one, free_embed(x1, y)},
                         {-one, free_embed(x2, y)}});
}

FreeVector relation_additive_right(const Vector& x, const Vector& y1, const Vector& y2) {
    const Scalar one = Scalar::one(x.space().field());
    return free_combine({{one, free_embed(x, y1 + y2)},
                         {-one, free_embed(x, y1)},
                         {-one, free_embed(x, y2)}});
}

FreeVector relation_scalar_left(const Scalar& alpha, const Vector& x, const Vector& y) {
    const Scalar one = Scalar::one(x.space().field());
    return free_combine({{one, free_embed(x.scaled(alpha), y)}, {-alpha, free_embed(x, y)}});
}

FreeVector relation_scalar_right(const Scalar& alpha, const Vector& x, const Vector& y) {
    const Scalar one = Scalar::one(x.space().field());
    return free_combine({{one, free_embed(x, y.scaled(alpha))}, {-alpha, free_embed(x, y)}});
}

DualTensor::DualTensor(VectorSpace x, VectorSpace y, Matrix table)
    : x_(std::move(x)), y_(std::move(y)), table_(std::move(table)) {
    if (x_.field() != y_.field() || table_.field() != x_.field()) throw MixedFields();
    if (table_.rows() != x_.dim() || table_.cols() != y_.dim())
        throw ShapeMismatch("dual tensor table vs factors");
}

Vector DualTensor::action(const BilinearMap& psi) const {
    if (psi.x_space() != x_ || psi.y_space() != y_)
        throw ShapeMismatch("bilinear argument vs dual tensor factors");
    Vector out = Vector::zero(psi.z_space());
    for (std::size_t i = 0; i < x_.dim(); ++i)
        for (std::size_t j = 0; j < y_.dim(); ++j) {
            if (table_.at(i, j).is_zero()) continue;
            out = out + psi.at_basis(i, j).scaled(table_.at(i, j));
        }
    return out;
}

Scalar DualTensor::apply_form(const Vector& mu, const Vector& nu) const {
    if (mu.dim() != x_.dim() || nu.dim() != y_.dim() || mu.space().field() != x_.field() ||
        nu.space().field() != x_.field())
        throw ShapeMismatch("functionals vs dual tensor factors");
    Scalar acc = Scalar::zero(x_.field());
    for (std::size_t i = 0; i < x_.dim(); ++i) {
        if (mu[i].is_zero()) continue;
        for (std::size_t j = 0; j < y_.dim(); ++j) acc += mu[i] * table_.at(i, j) * nu[j];
    }
    return acc;
}

Scalar DualTensor::inner_eval(const Vector& u, const Vector& v) const {
    if (!x_.field().is_rational())
        throw NonRealField("Euclidean pairing needs the rational field");
    return apply_form(u, v);
}

DualTensor DualTensor::operator+(const DualTensor& rhs) const {
    if (x_ != rhs.x_ || y_ != rhs.y_) throw FactorSpaceMismatch("dual tensor sum");
    return DualTensor(x_, y_, table_ + rhs.table_);
}

DualTensor DualTensor::scaled(const Scalar& a) const { return DualTensor(x_, y_, table_.scaled(a)); }

bool DualTensor::operator==(const DualTensor& rhs) const {
    return x_ == rhs.x_ && y_ == rhs.y_ && table_ == rhs.table_;
}

DualTensor theta_dual(const Vector& x, const Vector& y) {
    return DualTensor(x.space(), y.space(), outer(x, y));
}

LinearMap factorize_dual(const VectorSpace& x, const VectorSpace& y, const BilinearMap& phi) {
    return dual_realization(x, y).factorize(phi);
}

TensorRealization quotient_realization(const VectorSpace& x, const VectorSpace& y) {
    return basis_pair_realization("quotient", x, y);
}

TensorRealization dual_realization(const VectorSpace& x, const VectorSpace& y) {
    return basis_pair_realization("dual", x, y);
}

} // namespace ta
