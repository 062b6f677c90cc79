#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "ta/bilinear.hpp"
#include "ta/quotient.hpp"

namespace ta {

/// A tensor product pair (T, theta): a tensor space T together with the
/// natural bilinear map theta : X x Y -> T. Concrete constructions supply
/// their own factorization procedure; without one, factorization is solved
/// generically from the basis-pair images of theta.
///
/// Construction does not validate the axioms; check_axioms is the judge,
/// so deliberately broken candidates can be probed.
class TensorRealization {
public:
    using Factorizer =
        std::function<LinearMap(const TensorRealization&, const BilinearMap&)>;

    TensorRealization(std::string name, BilinearMap theta, Factorizer factorizer = nullptr);

    const std::string& name() const { return name_; }
    const VectorSpace& x_space() const { return theta_.x_space(); }
    const VectorSpace& y_space() const { return theta_.y_space(); }
    /// The tensor space T.
    const VectorSpace& space() const { return theta_.z_space(); }
    const BilinearMap& theta() const { return theta_; }

    /// T-coordinates of theta(e_i, d_j).
    Vector theta_at_basis(std::size_t i, std::size_t j) const { return theta_.at_basis(i, j); }
    /// dim T x (dim X * dim Y) matrix; column i*dimY+j holds theta(e_i, d_j).
    Matrix theta_matrix() const;

    /// The unique linear map with value phi at theta, solved on basis pairs.
    LinearMap factorize(const BilinearMap& phi) const;

private:
    std::string name_;
    BilinearMap theta_;
    Factorizer factorizer_;
};

/// The coordinate space whose indices are basis pairs of x and y,
/// row-major; the tensor space used by all shipped realizations.
VectorSpace pair_space(const VectorSpace& x, const VectorSpace& y);

/// The plain coordinate realization: T is indexed by basis pairs in
/// row-major order and theta(e_i, d_j) is the matching unit vector.
TensorRealization standard_realization(const VectorSpace& x, const VectorSpace& y);

/// Element of a tensor product space, held canonically as the coefficient
/// table over the basis tensors e_i (x) d_j, with an optional (non-unique)
/// list of single-tensor factors that recompute the table.
class TensorElement {
public:
    using Rep = std::vector<std::pair<Vector, Vector>>;

    TensorElement(std::shared_ptr<const TensorRealization> realization, Matrix table,
                  std::optional<Rep> rep = std::nullopt);

    const TensorRealization& realization() const { return *realization_; }
    std::shared_ptr<const TensorRealization> realization_ptr() const { return realization_; }
    const Matrix& table() const { return table_; }
    const std::optional<Rep>& rep() const { return rep_; }

    /// Coordinates in the realization's tensor space T.
    Vector to_ambient() const;
    /// Row-major flattening of the table.
    Vector flat() const;
    /// True when no representation list is present or it recomputes the table.
    bool rep_consistent() const;

    TensorElement operator+(const TensorElement& rhs) const;
    TensorElement operator-(const TensorElement& rhs) const;
    TensorElement scaled(const Scalar& a) const;
    /// Element equality: same factor spaces and equal coefficient tables.
    bool operator==(const TensorElement& rhs) const;
    bool operator!=(const TensorElement& rhs) const { return !(*this == rhs); }
    bool is_zero() const { return table_.is_zero(); }

private:
    std::shared_ptr<const TensorRealization> realization_;
    Matrix table_;
    std::optional<Rep> rep_;
};

/// theta(x, y): the single tensor x (x) y.
TensorElement single_tensor(const std::shared_ptr<const TensorRealization>& r, const Vector& x,
                            const Vector& y);
TensorElement single_tensor(const TensorRealization& r, const Vector& x, const Vector& y);
TensorElement zero_element(const std::shared_ptr<const TensorRealization>& r);

struct AxiomFailure {
    char axiom; // 'a' or 'b'
    std::string detail;
};

struct AxiomReport {
    bool pass = true;
    std::vector<AxiomFailure> failures;
};

/// Verifies axiom (a) on basis pairs (span of the theta images, and the
/// dimension identity it forces) and axiom (b) against each probe: the
/// factorized map must reproduce the probe at every basis pair.
AxiomReport check_axioms(const TensorRealization& r, const std::vector<BilinearMap>& probes);

LinearMap factorize(const TensorRealization& r, const BilinearMap& phi);

/// The unique isomorphism T2 -> T1 intertwining the natural maps.
LinearMap canonical_iso(const TensorRealization& r1, const TensorRealization& r2);

/// { x (x) y : x in E, y in D }, row-major over E then D.
std::vector<TensorElement> basis_tensors(const TensorRealization& r,
                                         const std::vector<Vector>& e_family,
                                         const std::vector<Vector>& d_family);

/// x (x) y -> y (x) x between a realization of (X, Y) and one of (Y, X);
/// table transposition in coefficient coordinates.
LinearMap commute_iso(const TensorRealization& r_xy, const TensorRealization& r_yx);

/// The tensor product of manifolds M (x) N: a realization of the pair
/// (M, N) in manifold coordinates, plus its embedding into the ambient
/// tensor space and the embedded span.
struct SubTensorProduct {
    TensorRealization product;
    Subspace embedded;     // span R(theta | M x N) inside T
    LinearMap embedding;   // product coordinates -> T coordinates
};
SubTensorProduct sub_tensor(const TensorRealization& r, const Subspace& m, const Subspace& n);

/// Smallest regular manifold M (x) N containing U, from the row/column
/// spans of the coefficient tables of U's basis; U is regular exactly when
/// the dimensions match.
struct RegularCover {
    Subspace left;   // M inside X
    Subspace right;  // N inside Y
    bool is_regular;
};
RegularCover minimal_regular_cover(const TensorRealization& r, const Subspace& u);

/// Left fold of pairwise products over a finite list of factors.
struct IteratedProduct {
    std::vector<TensorRealization> steps; // steps[k] multiplies the fold by factor k+2
    const TensorRealization& result() const { return steps.back(); }
};
IteratedProduct iterated_product(const std::vector<VectorSpace>& factors);

/// Index reshuffle matching ((A (x) B) (x) C) coordinates with
/// (A (x) (B (x) C)) coordinates; a permutation matrix.
Matrix rebracket_permutation(std::size_t da, std::size_t db, std::size_t dc, const Field& f);

} // namespace ta
