#pragma once

#include "ta/tensor.hpp"

namespace ta {

/// The coordinate space of L[domain, codomain]: matrices flattened
/// row-major (codomain index major).
VectorSpace map_space(const VectorSpace& domain, const VectorSpace& codomain);
/// Coordinates of a map in map_space(domain, codomain).
Vector map_coords(const LinearMap& a);
/// Inverse of map_coords.
LinearMap map_from_coords(const VectorSpace& domain, const VectorSpace& codomain, const Vector& v);

/// Tensor product of transformations, acting on flattened coefficient
/// tables. Built from factors it remembers them as provenance.
class KronMap {
public:
    KronMap(LinearMap map, std::optional<std::pair<LinearMap, LinearMap>> provenance);

    const LinearMap& map() const { return map_; }
    bool has_provenance() const { return provenance_.has_value(); }
    const LinearMap& left_factor() const { return provenance_->first; }
    const LinearMap& right_factor() const { return provenance_->second; }

    /// Apply to a tensor element over the domain factor pair.
    Vector apply_flat(const Vector& t) const { return map_.apply(t); }

private:
    LinearMap map_;
    std::optional<std::pair<LinearMap, LinearMap>> provenance_;
};

/// A (x) B: entry [(k,l),(i,j)] = A[k][i] B[l][j].
KronMap kron(const LinearMap& a, const LinearMap& b);

/// Basis-pair swap (i,j) -> (j,i) as a map between the two pair spaces;
/// conjugating A (x) B by the swaps yields B (x) A.
LinearMap shuffle_permutation(const VectorSpace& x, const VectorSpace& y);
LinearMap shuffle_permutation(std::size_t m, std::size_t n, const Field& f);

/// The realization of L[X,V] (x) L[Y,W] on the space of maps from the
/// tensor product of the domains to the tensor product of the codomains:
/// theta sends a pair of maps to their Kronecker product.
TensorRealization map_space_realization(const VectorSpace& x, const VectorSpace& v,
                                        const VectorSpace& y, const VectorSpace& w);

/// Factorizes a bilinear map of map spaces through the realization above:
/// the result satisfies Phi(sum A_i (x) B_i) = sum phi(A_i, B_i).
LinearMap map_tensor_factorize(const VectorSpace& x, const VectorSpace& v, const VectorSpace& y,
                               const VectorSpace& w, const BilinearMap& phi);

} // namespace ta
