#pragma once

#include "ta/linear_map.hpp"
#include "ta/subspace.hpp"

namespace ta {

/// Bilinear map X x Y -> Z, stored as the coefficient 3-tensor
/// T[k][i][j] = k-th coordinate of the value at the basis pair (e_i, d_j).
/// Values elsewhere follow by bilinear expansion.
class BilinearMap {
public:
    BilinearMap(VectorSpace x, VectorSpace y, VectorSpace z, std::vector<Matrix> slices);
    static BilinearMap zero(const VectorSpace& x, const VectorSpace& y, const VectorSpace& z);
    /// Builder over basis-pair values: value(i, j) must return phi(e_i, d_j).
    template <typename F>
    static BilinearMap from_basis_values(const VectorSpace& x, const VectorSpace& y,
                                         const VectorSpace& z, F&& value) {
        std::vector<Matrix> slices(z.dim(), Matrix(x.dim(), y.dim(), x.field()));
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < y.dim(); ++j) {
                Vector v = value(i, j);
                if (v.space() != z) throw ShapeMismatch("basis value outside the codomain");
                for (std::size_t k = 0; k < z.dim(); ++k) slices[k].at(i, j) = v[k];
            }
        return BilinearMap(x, y, z, std::move(slices));
    }

    const VectorSpace& x_space() const { return x_; }
    const VectorSpace& y_space() const { return y_; }
    const VectorSpace& z_space() const { return z_; }
    /// Slice k: the (dim X x dim Y) table of k-th coordinates.
    const Matrix& slice(std::size_t k) const { return slices_[k]; }
    Vector at_basis(std::size_t i, std::size_t j) const;

    Vector eval(const Vector& x, const Vector& y) const;

    BilinearMap operator+(const BilinearMap& rhs) const;
    BilinearMap scaled(const Scalar& a) const;
    bool operator==(const BilinearMap& rhs) const;
    bool operator!=(const BilinearMap& rhs) const { return !(*this == rhs); }

private:
    VectorSpace x_;
    VectorSpace y_;
    VectorSpace z_;
    std::vector<Matrix> slices_;
};

/// The y-section phi(., y) as a linear map X -> Z.
LinearMap section_left(const BilinearMap& phi, const Vector& y);
/// The x-section phi(x, .) as a linear map Y -> Z.
LinearMap section_right(const BilinearMap& phi, const Vector& x);

/// Composition l o phi, again bilinear.
BilinearMap compose(const LinearMap& l, const BilinearMap& phi);

/// Restriction of phi to M x N, expressed over the canonical bases of the
/// manifolds (a bilinear map of the coordinate spaces of M and N).
BilinearMap restrict_bilinear(const BilinearMap& phi, const Subspace& m, const Subspace& n);

/// Bilinear extension of a map given on M x N (coordinates over the
/// manifolds' canonical bases) to the whole product: inputs are split over
/// M (+) complement and N (+) complement, the M x N block reproduces phi,
/// and every block touching a complement direction is sent to zero.
BilinearMap extend_bilinear(const BilinearMap& phi, const Subspace& m, const Subspace& n,
                            const VectorSpace& x, const VectorSpace& y);

/// The coefficient-product map of Hamel-basis candidates: inputs expand
/// uniquely over the independent families E and D, and the value is the
/// flattened table of coefficient products (basis pairs map to matrix
/// units). Defined on all of X x Y by zero-fill extension off span E x span D.
BilinearMap matrix_unit_bilinear(const std::vector<Vector>& e_family,
                                 const std::vector<Vector>& d_family);

} // namespace ta
