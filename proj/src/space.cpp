#include "ta/space.hpp"

namespace ta {

VectorSpace::VectorSpace(const Field& f, std::size_t dim, std::string label_prefix) : field_(f) {
    labels_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back(label_prefix + std::to_string(i));
}

VectorSpace::VectorSpace(const Field& f, std::vector<std::string> labels)
    : field_(f), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw ParseError("duplicate basis label: " + labels_[i]);
}

Vector::Vector(VectorSpace space, std::vector<Scalar> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim()) throw ShapeMismatch("coordinate count vs space dimension");
    for (const auto& c : coords_)
        if (c.field() != space_.field()) throw MixedFields();
}

Vector Vector::zero(const VectorSpace& s) {
    return Vector(s, std::vector<Scalar>(s.dim(), Scalar::zero(s.field())));
}

Vector Vector::basis(const VectorSpace& s, std::size_t i) {
    Vector v = zero(s);
    v.coords_.at(i) = Scalar::one(s.field());
    return v;
}

Vector Vector::from_ints(const VectorSpace& s, std::initializer_list<long long> coords) {
    std::vector<Scalar> c;
    for (long long v : coords) c.push_back(Scalar::from_int(v, s.field()));
    return Vector(s, std::move(c));
}

Vector Vector::operator+(const Vector& rhs) const {
    if (space_ != rhs.space_) throw ShapeMismatch("vector addition across spaces");
    std::vector<Scalar> c;
    c.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) c.push_back(coords_[i] + rhs.coords_[i]);
    return Vector(space_, std::move(c));
}

Vector Vector::operator-(const Vector& rhs) const { return *this + (-rhs); }

Vector Vector::scaled(const Scalar& a) const {
    std::vector<Scalar> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(x * a);
    return Vector(space_, std::move(c));
}

Vector Vector::operator-() const { return scaled(-Scalar::one(space_.field())); }

bool Vector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Vector::operator==(const Vector& rhs) const {
    return space_ == rhs.space_ && coords_ == rhs.coords_;
}

Scalar Vector::dot(const Vector& rhs) const {
    if (space_.field() != rhs.space_.field() || dim() != rhs.dim())
        throw ShapeMismatch("dot product shapes");
    Scalar s = Scalar::zero(space_.field());
    for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * rhs.coords_[i];
    return s;
}

Matrix Vector::as_row() const {
    Matrix m(1, coords_.size(), space_.field());
    for (std::size_t j = 0; j < coords_.size(); ++j) m.at(0, j) = coords_[j];
    return m;
}

Matrix Vector::as_col() const { return as_row().transpose(); }

Vector Vector::from_col(const VectorSpace& s, const Matrix& col) {
    if (col.cols() != 1 || col.rows() != s.dim()) throw ShapeMismatch("column vector shape");
    return Vector(s, col.col(0));
}

Matrix outer(const Vector& x, const Vector& y) {
    if (x.space().field() != y.space().field()) throw MixedFields();
    Matrix m(x.dim(), y.dim(), x.space().field());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.dim(); ++j) m.at(i, j) = x[i] * y[j];
    }
    return m;
}

} // namespace ta
