#include "ta/free_vector.hpp"

#include <sstream>

namespace ta {

CarrierKey CarrierKey::of(const Vector& x, const Vector& y) {
    std::ostringstream os;
    os << "x:";
    for (std::size_t i = 0; i < x.dim(); ++i) os << (i ? "," : "") << x[i].str();
    os << ";y:";
    for (std::size_t j = 0; j < y.dim(); ++j) os << (j ? "," : "") << y[j].str();
    return CarrierKey(os.str());
}

FreeVector::FreeVector(VectorSpace x_space, VectorSpace y_space)
    : x_space_(std::move(x_space)), y_space_(std::move(y_space)) {
    if (x_space_.field() != y_space_.field()) throw MixedFields();
}

std::vector<FreeVector::Term> FreeVector::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, term] : terms_) out.push_back(term);
    return out;
}

Scalar FreeVector::coeff_at(const Vector& x, const Vector& y) const {
    auto it = terms_.find(CarrierKey::of(x, y));
    return it == terms_.end() ? Scalar::zero(x_space_.field()) : it->second.coeff;
}

void FreeVector::add_term(const Vector& x, const Vector& y, const Scalar& coeff) {
    if (x.space() != x_space_ || y.space() != y_space_)
        throw MixedCarriers("term outside the carrier product");
    if (coeff.field() != x_space_.field()) throw MixedFields();
    if (coeff.is_zero()) return;
    CarrierKey key = CarrierKey::of(x, y);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{x, y, coeff});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff.is_zero()) terms_.erase(it);
}

void FreeVector::check_same_carrier(const FreeVector& rhs) const {
    if (x_space_ != rhs.x_space_ || y_space_ != rhs.y_space_)
        throw MixedCarriers("free vectors over different carrier products");
}

FreeVector FreeVector::operator+(const FreeVector& rhs) const {
    check_same_carrier(rhs);
    FreeVector out = *this;
    for (const auto& [key, term] : rhs.terms_) out.add_term(term.x, term.y, term.coeff);
    return out;
}

FreeVector FreeVector::operator-(const FreeVector& rhs) const {
    return *this + rhs.scaled(-Scalar::one(x_space_.field()));
}

FreeVector FreeVector::scaled(const Scalar& a) const {
    FreeVector out(x_space_, y_space_);
    if (a.is_zero()) return out;
    for (const auto& [key, term] : terms_) out.add_term(term.x, term.y, term.coeff * a);
    return out;
}

bool FreeVector::operator==(const FreeVector& rhs) const {
    if (x_space_ != rhs.x_space_ || y_space_ != rhs.y_space_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second.coeff == jt->second.coeff)) return false;
    }
    return true;
}

FreeVector free_embed(const Vector& x, const Vector& y) {
    if (x.space().field() != y.space().field()) throw MixedFields();
    FreeVector f(x.space(), y.space());
    f.add_term(x, y, Scalar::one(x.space().field()));
    return f;
}

FreeVector free_combine(const std::vector<std::pair<Scalar, FreeVector>>& terms) {
    if (terms.empty()) throw MixedCarriers("free_combine needs at least one summand");
    FreeVector out(terms.front().second.x_space(), terms.front().second.y_space());
    for (const auto& [a, f] : terms) {
        FreeVector scaled = f.scaled(a);
        out = out + scaled;
    }
    return out;
}

} // namespace ta
