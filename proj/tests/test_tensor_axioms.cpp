#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ta/rng.hpp"
#include "ta/tensor.hpp"

using namespace ta;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

Scalar q(long long num, long long den = 1) { return Scalar::fraction(num, den); }

// A genuine but non-standard realization: T coordinates are an invertible
// scramble of the basis-pair coordinates.
TensorRealization scrambled_realization(const VectorSpace& x, const VectorSpace& y, Rng& rng) {
    const std::size_t d = x.dim() * y.dim();
    Matrix p(0, 0, x.field());
    for (;;) {
        p = random_matrix(d, d, x.field(), rng);
        if (rank(p) == d) break;
    }
    VectorSpace t(x.field(), d, "s");
    BilinearMap theta = BilinearMap::from_basis_values(x, y, t, [&](std::size_t i, std::size_t j) {
        return Vector(t, p.col(i * y.dim() + j));
    });
    return TensorRealization("scrambled", std::move(theta));
}

// Broken candidate: the tensor space is one dimension short, so the last
// basis pair collapses to zero.
TensorRealization truncated_realization(const VectorSpace& x, const VectorSpace& y) {
    const std::size_t d = x.dim() * y.dim() - 1;
    VectorSpace t(x.field(), d, "t");
    BilinearMap theta = BilinearMap::from_basis_values(x, y, t, [&](std::size_t i, std::size_t j) {
        const std::size_t idx = i * y.dim() + j;
        return idx < d ? Vector::basis(t, idx) : Vector::zero(t);
    });
    return TensorRealization("truncated", std::move(theta));
}

std::vector<Vector> random_independent_family(const VectorSpace& s, std::size_t count, Rng& rng) {
    for (;;) {
        std::vector<Vector> family;
        for (std::size_t i = 0; i < count; ++i) family.push_back(random_vector(s, rng));
        if (Subspace::span_vectors(s, family).dim() == count) return family;
    }
}

Matrix stack_tables(const std::vector<TensorElement>& elems) {
    Matrix out(elems.size(), elems.front().flat().dim(), elems.front().table().field());
    for (std::size_t r = 0; r < elems.size(); ++r) out.set_row(r, elems[r].flat().coords());
    return out;
}

} // namespace

TEST_CASE("single tensors are outer-product tables") {
    const VectorSpace x(Q, 2), y(Q, 2);
    const TensorRealization r = standard_realization(x, y);

    SUBCASE("basis pairs give matrix units") {
        const TensorElement t = single_tensor(r, Vector::basis(x, 0), Vector::basis(y, 1));
        Matrix unit(2, 2, Q);
        unit.at(0, 1) = q(1);
        CHECK(t.table() == unit);
        CHECK(t.to_ambient() == Vector::basis(r.space(), 1));
        CHECK(t.rep_consistent());
    }
    SUBCASE("hand-expanded table") {
        const TensorElement t =
            single_tensor(r, Vector::from_ints(x, {1, 1}), Vector::from_ints(y, {1, -1}));
        CHECK(t.table() == Matrix::from_ints({{1, -1}, {1, -1}}, Q));
    }
    SUBCASE("a multiple of a single tensor is again a single tensor") {
        Rng rng(61);
        for (const Field& f : {Q, F7}) {
            const VectorSpace xs(f, 3), ys(f, 2);
            const TensorRealization rf = standard_realization(xs, ys);
            auto shared = std::make_shared<const TensorRealization>(rf);
            for (int t = 0; t < 30; ++t) {
                const Vector u = random_vector(xs, rng);
                const Vector v = random_vector(ys, rng);
                const Scalar a = random_scalar(f, rng);
                const TensorElement left = single_tensor(shared, u, v).scaled(a);
                CHECK(left == single_tensor(shared, u.scaled(a), v));
                CHECK(left == single_tensor(shared, u, v.scaled(a)));
                CHECK(left.rep_consistent());
            }
        }
    }
}

TEST_CASE("axiom checks") {
    Rng rng(67);
    SUBCASE("standard realization passes with random probes") {
        for (const Field& f : {Q, F7}) {
            const VectorSpace x(f, 3), y(f, 2);
            const TensorRealization r = standard_realization(x, y);
            std::vector<BilinearMap> probes;
            for (int p = 0; p < 10; ++p)
                probes.push_back(random_bilinear(x, y, VectorSpace(f, 1 + rng.below(3), "z"), rng));
            const AxiomReport report = check_axioms(r, probes);
            CHECK(report.pass);
            CHECK(report.failures.empty());
        }
    }
    SUBCASE("a truncated tensor space fails axiom (a)") {
        const VectorSpace x(Q, 2), y(Q, 2);
        const AxiomReport report = check_axioms(truncated_realization(x, y), {});
        CHECK(!report.pass);
        bool found_a = false;
        for (const auto& fail : report.failures) found_a = found_a || fail.axiom == 'a';
        CHECK(found_a);
    }
    SUBCASE("matrix-unit probe factors injectively") {
        const VectorSpace x(Q, 2), y(Q, 2);
        const TensorRealization r = standard_realization(x, y);
        std::vector<Vector> e = {Vector::basis(x, 0), Vector::basis(x, 1)};
        std::vector<Vector> d = {Vector::basis(y, 0), Vector::basis(y, 1)};
        const BilinearMap probe = matrix_unit_bilinear(e, d);
        const AxiomReport report = check_axioms(r, {probe});
        CHECK(report.pass);
        const LinearMap factored = factorize(r, probe);
        CHECK(kernel_basis(factored).dim() == 0);
    }
    SUBCASE("scrambled realizations still pass") {
        for (const Field& f : {Q, F7}) {
            const VectorSpace x(f, 2), y(f, 3);
            const TensorRealization r = scrambled_realization(x, y, rng);
            std::vector<BilinearMap> probes;
            for (int p = 0; p < 5; ++p)
                probes.push_back(random_bilinear(x, y, VectorSpace(f, 2, "z"), rng));
            CHECK(check_axioms(r, probes).pass);
        }
    }
}

TEST_CASE("factorization through the tensor space") {
    const VectorSpace x(Q, 2), y(Q, 2);
    const TensorRealization r = standard_realization(x, y);

    SUBCASE("theta factors to the identity") {
        CHECK(factorize(r, r.theta()) == LinearMap::identity(r.space()));
    }
    SUBCASE("zero factors to zero") {
        const VectorSpace z(Q, 3, "z");
        CHECK(factorize(r, BilinearMap::zero(x, y, z)) == LinearMap::zero(r.space(), z));
    }
    SUBCASE("scalar pairing on the line factors to the identity") {
        const VectorSpace line(Q, 1);
        const TensorRealization rl = standard_realization(line, line);
        const BilinearMap pairing = BilinearMap::from_basis_values(
            line, line, line, [&](std::size_t, std::size_t) { return Vector::from_ints(line, {1}); });
        CHECK(factorize(rl, pairing).matrix() == Matrix::identity(1, Q));
    }
    SUBCASE("factored maps reproduce the probe everywhere") {
        Rng rng(71);
        for (const Field& f : {Q, F7}) {
            for (int t = 0; t < 25; ++t) {
                const VectorSpace xs(f, 1 + rng.below(4));
                const VectorSpace ys(f, 1 + rng.below(4));
                const VectorSpace z(f, 1 + rng.below(3), "z");
                const TensorRealization rr = t % 2 == 0 ? standard_realization(xs, ys)
                                                        : scrambled_realization(xs, ys, rng);
                const BilinearMap phi = random_bilinear(xs, ys, z, rng);
                const LinearMap factored = factorize(rr, phi);
                auto shared = std::make_shared<const TensorRealization>(rr);
                const Vector u = random_vector(xs, rng);
                const Vector v = random_vector(ys, rng);
                CHECK(factored.apply(single_tensor(shared, u, v).to_ambient()) == phi.eval(u, v));
            }
        }
    }
    SUBCASE("factorization is inverse to composition with theta") {
        Rng rng(73);
        for (int t = 0; t < 20; ++t) {
            const VectorSpace z(Q, 1 + rng.below(3), "z");
            const LinearMap phi0 = random_linear_map(r.space(), z, rng);
            CHECK(factorize(r, compose(phi0, r.theta())) == phi0);
        }
    }
    SUBCASE("nonzero maps factor to nonzero maps") {
        Rng rng(79);
        for (int t = 0; t < 20; ++t) {
            const VectorSpace z(Q, 2, "z");
            const BilinearMap phi = random_bilinear(x, y, z, rng);
            bool zero = true;
            for (std::size_t k = 0; k < z.dim(); ++k) zero = zero && phi.slice(k).is_zero();
            if (zero) continue;
            CHECK(!factorize(r, phi).matrix().is_zero());
        }
    }
}

TEST_CASE("uniqueness of the tensor product up to canonical isomorphism") {
    Rng rng(83);
    SUBCASE("a realization is isomorphic to itself by the identity") {
        const VectorSpace x(Q, 2), y(Q, 3);
        const TensorRealization r = standard_realization(x, y);
        CHECK(canonical_iso(r, r) == LinearMap::identity(r.space()));
    }
    SUBCASE("compositions both ways give the identity") {
        for (const Field& f : {Q, F7}) {
            for (std::size_t m = 1; m <= 4; ++m)
                for (std::size_t n = 1; n <= 4; ++n) {
                    const VectorSpace x(f, m), y(f, n);
                    const TensorRealization r1 = standard_realization(x, y);
                    const TensorRealization r2 = scrambled_realization(x, y, rng);
                    const LinearMap iso12 = canonical_iso(r1, r2);
                    const LinearMap iso21 = canonical_iso(r2, r1);
                    CHECK(iso12.compose(iso21) == LinearMap::identity(r1.space()));
                    CHECK(iso21.compose(iso12) == LinearMap::identity(r2.space()));
                    // intertwining: iso12 carries theta2 to theta1
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            CHECK(iso12.apply(r2.theta_at_basis(i, j)) == r1.theta_at_basis(i, j));
                }
        }
    }
    SUBCASE("different factor spaces are rejected") {
        const TensorRealization r1 = standard_realization(VectorSpace(Q, 2), VectorSpace(Q, 2));
        const TensorRealization r2 = standard_realization(VectorSpace(Q, 2), VectorSpace(Q, 3));
        CHECK_THROWS_AS(canonical_iso(r1, r2), FactorSpaceMismatch);
    }
}

TEST_CASE("basis tensors span and stay independent") {
    SUBCASE("full standard bases") {
        const VectorSpace x(Q, 3), y(Q, 4);
        const TensorRealization r = standard_realization(x, y);
        std::vector<Vector> e, d;
        for (std::size_t i = 0; i < 3; ++i) e.push_back(Vector::basis(x, i));
        for (std::size_t j = 0; j < 4; ++j) d.push_back(Vector::basis(y, j));
        const auto tensors = basis_tensors(r, e, d);
        CHECK(tensors.size() == 12);
        CHECK(rank(stack_tables(tensors)) == 12);
    }
    SUBCASE("a repeated vector breaks independence") {
        const VectorSpace x(Q, 2), y(Q, 2);
        const TensorRealization r = standard_realization(x, y);
        const std::vector<Vector> e = {Vector::basis(x, 0), Vector::basis(x, 0)};
        const std::vector<Vector> d = {Vector::basis(y, 0)};
        const auto tensors = basis_tensors(r, e, d);
        CHECK(rank(stack_tables(tensors)) < tensors.size());
    }
    SUBCASE("independent non-basis families stay independent") {
        const VectorSpace x(Q, 2), y(Q, 1);
        const TensorRealization r = standard_realization(x, y);
        const std::vector<Vector> e = {Vector::from_ints(x, {1, 0}), Vector::from_ints(x, {1, 1})};
        const std::vector<Vector> d = {Vector::from_ints(y, {1})};
        const auto tensors = basis_tensors(r, e, d);
        CHECK(tensors.size() == 2);
        CHECK(rank(stack_tables(tensors)) == 2);
    }
    SUBCASE("random independent families of product size up to 16") {
        Rng rng(89);
        for (const Field& f : {Q, F7}) {
            for (int t = 0; t < 25; ++t) {
                const VectorSpace x(f, 1 + rng.below(4));
                const VectorSpace y(f, 1 + rng.below(4));
                const std::size_t ne = 1 + rng.below(x.dim());
                const std::size_t nd = 1 + rng.below(y.dim());
                const auto e = random_independent_family(x, ne, rng);
                const auto d = random_independent_family(y, nd, rng);
                const TensorRealization r = standard_realization(x, y);
                CHECK(rank(stack_tables(basis_tensors(r, e, d))) == ne * nd);
            }
        }
    }
}

TEST_CASE("commutation isomorphism transposes tables") {
    const VectorSpace x(Q, 2), y(Q, 3);
    const TensorRealization r_xy = standard_realization(x, y);
    const TensorRealization r_yx = standard_realization(y, x);
    const LinearMap swap = commute_iso(r_xy, r_yx);
    const LinearMap swap_back = commute_iso(r_yx, r_xy);

    SUBCASE("applied twice gives the identity") {
        CHECK(swap_back.compose(swap) == LinearMap::identity(r_xy.space()));
        CHECK(swap.compose(swap_back) == LinearMap::identity(r_yx.space()));
    }
    SUBCASE("basis tensors swap") {
        const Vector t = single_tensor(r_xy, Vector::basis(x, 0), Vector::basis(y, 1)).to_ambient();
        const Vector expect =
            single_tensor(r_yx, Vector::basis(y, 1), Vector::basis(x, 0)).to_ambient();
        CHECK(swap.apply(t) == expect);
    }
    SUBCASE("coefficient tables transpose") {
        Rng rng(97);
        auto shared_xy = std::make_shared<const TensorRealization>(r_xy);
        auto shared_yx = std::make_shared<const TensorRealization>(r_yx);
        for (int t = 0; t < 20; ++t) {
            const Matrix c = random_matrix(2, 3, Q, rng);
            const TensorElement elem(shared_xy, c);
            const TensorElement swapped(shared_yx, c.transpose());
            CHECK(swap.apply(elem.to_ambient()) == swapped.to_ambient());
        }
    }
    SUBCASE("mismatched swaps are rejected") {
        CHECK_THROWS_AS(commute_iso(r_xy, r_xy), FactorSpaceMismatch);
    }
}

TEST_CASE("tensor products of manifolds") {
    const VectorSpace x(Q, 2), y(Q, 2);
    const TensorRealization r = standard_realization(x, y);

    SUBCASE("full manifolds recover the whole space") {
        const SubTensorProduct sub = sub_tensor(r, Subspace::full(x), Subspace::full(y));
        CHECK(sub.embedded == Subspace::full(r.space()));
        CHECK(sub.product.space().dim() == 4);
    }
    SUBCASE("basis lines give the matrix-unit line") {
        const Subspace m = Subspace::span_vectors(x, {Vector::basis(x, 0)});
        const Subspace n = Subspace::span_vectors(y, {Vector::basis(y, 1)});
        const SubTensorProduct sub = sub_tensor(r, m, n);
        CHECK(sub.embedded.dim() == 1);
        CHECK(sub.embedded.contains(Vector::basis(r.space(), 1)));
    }
    SUBCASE("zero manifold gives the zero space") {
        const SubTensorProduct sub = sub_tensor(r, Subspace::zero(x), Subspace::full(y));
        CHECK(sub.embedded.dim() == 0);
        CHECK(sub.product.space().dim() == 0);
    }
    SUBCASE("the product realization is itself a tensor product of the manifolds") {
        Rng rng(101);
        for (const Field& f : {Q, F7}) {
            const VectorSpace xs(f, 3), ys(f, 3);
            const TensorRealization rr = standard_realization(xs, ys);
            for (int t = 0; t < 10; ++t) {
                const Subspace m = random_subspace(xs, 3, rng);
                const Subspace n = random_subspace(ys, 3, rng);
                const SubTensorProduct sub = sub_tensor(rr, m, n);
                CHECK(sub.embedded.dim() == m.dim() * n.dim());
                std::vector<BilinearMap> probes;
                if (m.dim() > 0 && n.dim() > 0)
                    probes.push_back(random_bilinear(sub.product.x_space(), sub.product.y_space(),
                                                     VectorSpace(f, 2, "z"), rng));
                CHECK(check_axioms(sub.product, probes).pass);
            }
        }
    }
}

TEST_CASE("regularity via the minimal regular cover") {
    const VectorSpace x(Q, 2), y(Q, 2);
    const TensorRealization r = standard_realization(x, y);

    SUBCASE("products of manifolds are regular and recovered") {
        Rng rng(103);
        for (const Field& f : {Q, F7}) {
            const VectorSpace xs(f, 3), ys(f, 4);
            const TensorRealization rr = standard_realization(xs, ys);
            for (int t = 0; t < 15; ++t) {
                Subspace m0 = random_subspace(xs, 3, rng);
                Subspace n0 = random_subspace(ys, 4, rng);
                if (m0.dim() == 0 || n0.dim() == 0) continue;
                const SubTensorProduct sub = sub_tensor(rr, m0, n0);
                const RegularCover cover = minimal_regular_cover(rr, sub.embedded);
                CHECK(cover.is_regular);
                CHECK(cover.left == m0);
                CHECK(cover.right == n0);
            }
        }
    }
    SUBCASE("the diagonal element is irregular") {
        const Vector diag = Vector::from_ints(r.space(), {1, 0, 0, 1}); // identity table
        const Subspace u = Subspace::span_vectors(r.space(), {diag});
        const RegularCover cover = minimal_regular_cover(r, u);
        CHECK(!cover.is_regular);
        CHECK(cover.left.dim() == 2);
        CHECK(cover.right.dim() == 2);
    }
    SUBCASE("a single nonzero single tensor is regular") {
        const Vector t =
            single_tensor(r, Vector::from_ints(x, {1, 2}), Vector::from_ints(y, {3, 1})).to_ambient();
        const RegularCover cover = minimal_regular_cover(r, Subspace::span_vectors(r.space(), {t}));
        CHECK(cover.is_regular);
        CHECK(cover.left.dim() == 1);
        CHECK(cover.right.dim() == 1);
    }
}

TEST_CASE("iterated products fold pairwise") {
    SUBCASE("two factors reduce to the pairwise product") {
        const IteratedProduct p = iterated_product({VectorSpace(Q, 2), VectorSpace(Q, 3)});
        CHECK(p.steps.size() == 1);
        CHECK(p.result().space().dim() == 6);
    }
    SUBCASE("dimension identity for a triple product") {
        const IteratedProduct p =
            iterated_product({VectorSpace(Q, 2), VectorSpace(Q, 3), VectorSpace(Q, 4)});
        CHECK(p.result().space().dim() == 24);
    }
    SUBCASE("mixed fields are rejected") {
        CHECK_THROWS_AS(iterated_product({VectorSpace(Q, 2), VectorSpace(F7, 2)}), MixedFields);
    }
    SUBCASE("re-bracketing is an invertible index reshuffle") {
        const Matrix p = rebracket_permutation(2, 3, 4, Q);
        CHECK(p * p.transpose() == Matrix::identity(24, Q));

        // it carries ((x (x) y) (x) z) to (x (x) (y (x) z)) on single tensors
        Rng rng(107);
        const VectorSpace a(Q, 2), b(Q, 3), c(Q, 4);
        const TensorRealization ab = standard_realization(a, b);
        const TensorRealization ab_c = standard_realization(ab.space(), c);
        const TensorRealization bc = standard_realization(b, c);
        const TensorRealization a_bc = standard_realization(a.dim() == 2 ? a : a, bc.space());
        for (int t = 0; t < 10; ++t) {
            const Vector u = random_vector(a, rng);
            const Vector v = random_vector(b, rng);
            const Vector w = random_vector(c, rng);
            const Vector left =
                single_tensor(ab_c, single_tensor(ab, u, v).to_ambient(), w).to_ambient();
            const Vector right =
                single_tensor(a_bc, u, single_tensor(bc, v, w).to_ambient()).to_ambient();
            CHECK(Vector::from_col(a_bc.space(), p * left.as_col()) == right);
        }
    }
}

TEST_CASE("dimension identity holds for every constructed product") {
    Rng rng(109);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t m = 1 + rng.below(4);
            const std::size_t n = 1 + rng.below(4);
            const VectorSpace x(f, m), y(f, n);
            CHECK(standard_realization(x, y).space().dim() == m * n);
            CHECK(scrambled_realization(x, y, rng).space().dim() == m * n);
        }
    }
}

TEST_CASE("the factorization assignment is a linear isomorphism onto the map space") {
    // dim b[X x Y, Z] = dim L[T, Z] = (dim X)(dim Y)(dim Z), witnessed by
    // factorizing a basis of bilinear maps and checking independence.
    const VectorSpace x(Q, 2), y(Q, 2), z(Q, 2, "z");
    const TensorRealization r = standard_realization(x, y);
    std::vector<LinearMap> images;
    for (std::size_t k = 0; k < z.dim(); ++k)
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < y.dim(); ++j) {
                std::vector<Matrix> slices(z.dim(), Matrix(x.dim(), y.dim(), Q));
                slices[k].at(i, j) = Scalar::one(Q);
                images.push_back(factorize(r, BilinearMap(x, y, z, slices)));
            }
    // flatten each factored map and stack: must have full rank 8 = 2*2*2
    Matrix stacked(images.size(), r.space().dim() * z.dim(), Q);
    for (std::size_t row = 0; row < images.size(); ++row) {
        const Matrix& m = images[row].matrix();
        std::vector<Scalar> flat;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j));
        stacked.set_row(row, flat);
    }
    CHECK(rank(stacked) == x.dim() * y.dim() * z.dim());
}
