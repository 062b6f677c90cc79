#pragma once

#include "ta/linear_map.hpp"
#include "ta/subspace.hpp"

namespace ta {

/// Quotient of a space by a linear manifold, made concrete by the canonical
/// complement: every coset gets the unique representative lying in the
/// complement, and the natural projection becomes a plain matrix.
class QuotientSpace {
public:
    const VectorSpace& ambient() const { return ambient_; }
    const Subspace& manifold() const { return m_; }
    const Subspace& complement_basis() const { return complement_; }
    const VectorSpace& space() const { return quotient_; }
    std::size_t dim() const { return quotient_.dim(); }
    /// The natural projection pi as a map onto complement coordinates.
    const LinearMap& projection() const { return pi_; }

    Vector project(const Vector& x) const { return pi_.apply(x); }
    bool same_coset(const Vector& x, const Vector& y) const;
    /// Canonical coset representative (the complement component of x).
    Vector representative(const Vector& x) const;
    /// The inclusion of quotient coordinates back into the ambient space;
    /// pi composed with it is the identity.
    LinearMap section() const;

private:
    friend QuotientSpace quotient(const VectorSpace&, const Subspace&);
    QuotientSpace(VectorSpace ambient, Subspace m, Subspace comp, VectorSpace q, LinearMap pi)
        : ambient_(std::move(ambient)), m_(std::move(m)), complement_(std::move(comp)),
          quotient_(std::move(q)), pi_(std::move(pi)) {}

    VectorSpace ambient_;
    Subspace m_;
    Subspace complement_;
    VectorSpace quotient_;
    LinearMap pi_;
};

/// Decomposition maps for X = M (+) complement(M): `in_m` carries x to its
/// coordinates over M's basis, `in_complement` to coordinates over the
/// complement basis.
struct SplitCoordinates {
    LinearMap in_m;
    LinearMap in_complement;
};
SplitCoordinates split_coordinates(const Subspace& m);

QuotientSpace quotient(const VectorSpace& x, const Subspace& m);

/// Factors L through the quotient: the unique map with L = result * pi.
/// Requires the manifold to lie inside N(L), checked on its basis.
LinearMap factor_through_quotient(const LinearMap& l, const QuotientSpace& q);

} // namespace ta
