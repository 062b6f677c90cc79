#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ta/free_vector.hpp"
#include "ta/quotient.hpp"
#include "ta/rng.hpp"

using namespace ta;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

Scalar q(long long num, long long den = 1) { return Scalar::fraction(num, den); }

// Independent oracle: scan for the multiplicative inverse in GF(p).
std::uint64_t brute_force_inverse(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t k = 1; k < p; ++k)
        if ((a * k) % p == 1) return k;
    return 0;
}

} // namespace

TEST_CASE("field construction checks primality") {
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(7));
    CHECK_NOTHROW(Field::prime(1000003));
    CHECK_THROWS_AS(Field::prime(1), ParseError);
    CHECK_THROWS_AS(Field::prime(6), ParseError);
    CHECK_THROWS_AS(Field::prime(91), ParseError); // 7 * 13
}

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(2, 4)).str() == "1/2");
    CHECK((q(-3, -6)).str() == "1/2");
    CHECK(q(3, 4) * q(4, 3) == q(1));
    CHECK(q(1) / q(3) == q(1, 3));
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
}

TEST_CASE("prime field inverse agrees with the brute-force scan") {
    const Scalar three = Scalar::from_int(3, F7);
    CHECK(three.inverse().res() == brute_force_inverse(3, 7)); // = 5
    CHECK(three.inverse().res() == 5);

    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
        const Field f = Field::prime(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            const Scalar s = Scalar::residue(a, f);
            CHECK(s.inverse().res() == brute_force_inverse(a, p));
            CHECK(s * s.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("a * inv(a) = 1 for random nonzero rationals") {
    Rng rng(2024);
    for (int t = 0; t < 100; ++t) {
        const Scalar a = random_nonzero_scalar(Q, rng);
        CHECK(a * a.inverse() == Scalar::one(Q));
    }
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(q(1) + Scalar::from_int(1, F7), MixedFields);
    CHECK_THROWS_AS(Scalar::from_int(2, F7) * Scalar::from_int(2, Field::prime(5)), MixedFields);
}

TEST_CASE("scalar parsing round-trips canonically") {
    CHECK(Scalar::parse("5/6", Q) == q(5, 6));
    CHECK(Scalar::parse("-2/4", Q) == q(-1, 2));
    CHECK(Scalar::parse("7", Q) == q(7));
    CHECK(Scalar::parse("10", F7).res() == 3);
    CHECK(Scalar::parse("-1", F7).res() == 6);
    CHECK_THROWS_AS(Scalar::parse("x", Q), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0", Q), DivisionByZero);
}

TEST_CASE("rref on the spec fixtures") {
    SUBCASE("rank-deficient over Q") {
        RrefResult r = rref(Matrix::from_ints({{1, 2}, {2, 4}}, Q));
        CHECK(r.rank == 1);
        CHECK(r.pivots == std::vector<std::size_t>{0});
        CHECK(r.echelon.row(0) == std::vector<Scalar>{q(1), q(2)});
    }
    SUBCASE("identity is its own echelon form") {
        const Matrix id = Matrix::identity(4, Q);
        RrefResult r = rref(id);
        CHECK(r.echelon == id);
        CHECK(r.rank == 4);
    }
    SUBCASE("elimination over GF(2)") {
        const Field f2 = Field::prime(2);
        RrefResult r = rref(Matrix::from_ints({{1, 1}, {1, 2}}, f2));
        CHECK(r.rank == 2);
        CHECK(r.echelon == Matrix::identity(2, f2));
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    Rng rng(7);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t rows = 1 + rng.below(5);
            const std::size_t cols = 1 + rng.below(5);
            const Matrix m = random_matrix(rows, cols, f, rng);
            const Matrix e = rref(m).echelon;
            CHECK(rref(e).echelon == e);
        }
    }
}

TEST_CASE("kernel and image bases") {
    const VectorSpace q2(Q, 2);
    const VectorSpace q1(Q, 1);
    const VectorSpace q3(Q, 3);

    SUBCASE("difference functional") {
        const LinearMap l(q2, q1, Matrix::from_ints({{1, -1}}, Q));
        const Subspace k = kernel_basis(l);
        CHECK(k.dim() == 1);
        CHECK(k.basis_vector(0) == Vector::from_ints(q2, {1, 1}));
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(kernel_basis(LinearMap::identity(q3)).dim() == 0);
        CHECK(image_basis(LinearMap::identity(q3)) == Subspace::full(q3));
    }
    SUBCASE("zero map has full kernel") {
        CHECK(kernel_basis(LinearMap::zero(q3, q1)) == Subspace::full(q3));
    }
    SUBCASE("projections and dependent columns") {
        const LinearMap p(q2, q2, Matrix::from_ints({{1, 0}, {0, 0}}, Q));
        const Subspace im = image_basis(p);
        CHECK(im.dim() == 1);
        CHECK(im.basis_vector(0) == Vector::from_ints(q2, {1, 0}));

        const LinearMap d(q2, q2, Matrix::from_ints({{1, 2}, {2, 4}}, Q));
        const Subspace im_d = image_basis(d);
        CHECK(im_d.dim() == 1);
        CHECK(im_d.contains(Vector::from_ints(q2, {1, 2})));
    }
}

TEST_CASE("rank-nullity on random maps") {
    Rng rng(11);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 60; ++t) {
            const VectorSpace dom(f, 1 + rng.below(6));
            const VectorSpace cod(f, 1 + rng.below(6));
            const LinearMap l = random_linear_map(dom, cod, rng);
            CHECK(kernel_basis(l).dim() + image_basis(l).dim() == dom.dim());
            for (std::size_t i = 0; i < kernel_basis(l).dim(); ++i)
                CHECK(l.apply(kernel_basis(l).basis_vector(i)).is_zero());
        }
    }
}

TEST_CASE("complement at non-pivot columns") {
    const VectorSpace q2(Q, 2);
    SUBCASE("diagonal line") {
        const Subspace m = Subspace::span(q2, Matrix::from_ints({{1, 1}}, Q));
        const Subspace c = complement(m);
        CHECK(c.dim() == 1);
        CHECK(c.basis_vector(0) == Vector::from_ints(q2, {0, 1}));
        CHECK(m.intersection_dim(c) == 0);
    }
    SUBCASE("trivial cases") {
        CHECK(complement(Subspace::zero(q2)) == Subspace::full(q2));
        CHECK(complement(Subspace::full(q2)) == Subspace::zero(q2));
    }
}

TEST_CASE("complement is a true direct summand on random manifolds") {
    Rng rng(13);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 40; ++t) {
            const VectorSpace x(f, 1 + rng.below(6));
            const Subspace m = random_subspace(x, x.dim(), rng);
            const Subspace c = complement(m);
            CHECK(m.dim() + c.dim() == x.dim());
            CHECK(m.intersection_dim(c) == 0);
            CHECK(m.sum(c) == Subspace::full(x));
        }
    }
}

TEST_CASE("quotient space and the natural projection") {
    const VectorSpace q2(Q, 2);
    const Subspace diag = Subspace::span(q2, Matrix::from_ints({{1, 1}}, Q));

    SUBCASE("diagonal quotient of the plane") {
        const QuotientSpace qs = quotient(q2, diag);
        CHECK(qs.dim() == 1);
        const Vector a = qs.project(Vector::from_ints(q2, {1, 0}));
        const Vector b = qs.project(Vector::from_ints(q2, {0, 1}));
        CHECK(a == -b);
        CHECK(!a.is_zero());
        // pi annihilates exactly the manifold
        CHECK(qs.project(Vector::from_ints(q2, {2, 2})).is_zero());
    }
    SUBCASE("modding out zero is an isomorphism") {
        const QuotientSpace qs = quotient(q2, Subspace::zero(q2));
        CHECK(qs.dim() == 2);
        CHECK(qs.projection().is_invertible());
    }
    SUBCASE("modding out everything is the zero space") {
        const QuotientSpace qs = quotient(q2, Subspace::full(q2));
        CHECK(qs.dim() == 0);
    }
    SUBCASE("ambient mismatch is rejected") {
        const VectorSpace q3(Q, 3);
        CHECK_THROWS_AS(quotient(q3, diag), SubspaceNotInAmbient);
    }
}

TEST_CASE("coset equality is membership of the difference") {
    Rng rng(17);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 40; ++t) {
            const VectorSpace x(f, 1 + rng.below(5));
            const Subspace m = random_subspace(x, x.dim(), rng);
            const QuotientSpace qs = quotient(x, m);
            const Vector u = random_vector(x, rng);
            const Vector v = random_vector(x, rng);
            CHECK(qs.same_coset(u, v) == m.contains(u - v));
        }
    }
}

TEST_CASE("factoring a map through the quotient") {
    const VectorSpace q2(Q, 2);
    const VectorSpace q1(Q, 1);
    const Subspace diag = Subspace::span(q2, Matrix::from_ints({{1, 1}}, Q));
    const QuotientSpace qs = quotient(q2, diag);

    SUBCASE("difference functional factors") {
        const LinearMap l(q2, q1, Matrix::from_ints({{1, -1}}, Q));
        const LinearMap lhat = factor_through_quotient(l, qs);
        // evaluate on the complement representative of [(1,0)]
        CHECK(lhat.apply(qs.project(Vector::from_ints(q2, {1, 0}))) ==
              Vector::from_ints(q1, {1}));
        CHECK(lhat.compose(qs.projection()) == l);
    }
    SUBCASE("pi factors to the identity") {
        const LinearMap lhat = factor_through_quotient(qs.projection(), qs);
        CHECK(lhat == LinearMap::identity(qs.space()));
    }
    SUBCASE("kernel condition is enforced") {
        const LinearMap l(q2, q1, Matrix::from_ints({{1, 0}}, Q));
        CHECK_THROWS_AS(factor_through_quotient(l, qs), KernelConditionViolated);
    }
}

TEST_CASE("quotient universal property on random instances") {
    Rng rng(19);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 50; ++t) {
            const VectorSpace x(f, 1 + rng.below(5));
            const VectorSpace z(f, 1 + rng.below(4));
            const LinearMap l = random_linear_map(x, z, rng);
            const Subspace m = random_sub_of_kernel(l, rng);
            const QuotientSpace qs = quotient(x, m);
            const LinearMap lhat = factor_through_quotient(l, qs);

            CHECK(lhat.compose(qs.projection()) == l);
            CHECK(kernel_basis(lhat).dim() == kernel_basis(l).dim() - m.dim());
            CHECK(image_basis(lhat) == image_basis(l));
        }
    }
}

TEST_CASE("projected standard basis spans the quotient") {
    Rng rng(23);
    for (const Field& f : {Q, F7}) {
        for (int t = 0; t < 30; ++t) {
            const VectorSpace x(f, 1 + rng.below(5));
            const Subspace m = random_subspace(x, x.dim(), rng);
            const QuotientSpace qs = quotient(x, m);
            // image of the standard basis under pi has full rank in X/M
            CHECK(rank(qs.projection().matrix()) == qs.dim());
        }
    }
}

TEST_CASE("free vectors over the carrier product") {
    const VectorSpace q2(Q, 2);
    const Vector e0 = Vector::basis(q2, 0);
    const Vector e1 = Vector::basis(q2, 1);

    SUBCASE("embedding is a one-point characteristic function") {
        const FreeVector f = free_embed(Vector::from_ints(q2, {1, 0}), Vector::from_ints(q2, {0, 1}));
        CHECK(f.support_size() == 1);
        CHECK(f.coeff_at(Vector::from_ints(q2, {1, 0}), Vector::from_ints(q2, {0, 1})) == q(1));
    }
    SUBCASE("embedding twice and subtracting cancels") {
        const FreeVector f = free_embed(e0, e1);
        CHECK((f - f).is_zero());
    }
    SUBCASE("distinct carrier points are distinct basis functions") {
        const FreeVector a = free_embed(e0, e1);
        const FreeVector b = free_embed(e0 + e0, e1); // (2x, y) differs from (x, y)
        const FreeVector sum = a + b;
        CHECK(sum.support_size() == 2);
    }
    SUBCASE("combination merges coefficients and prunes zeros") {
        const FreeVector e_s = free_embed(e0, e1);
        const FreeVector two_plus_three = free_combine({{q(2), e_s}, {q(3), e_s}});
        CHECK(two_plus_three.support_size() == 1);
        CHECK(two_plus_three.coeff_at(e0, e1) == q(5));

        const FreeVector cancel = free_combine({{q(1), e_s}, {q(-1), e_s}});
        CHECK(cancel.is_zero());

        const FreeVector disjoint = free_combine({{q(1), e_s}, {q(1), free_embed(e1, e0)}});
        CHECK(disjoint.support_size() == 2);
    }
    SUBCASE("mixed carriers are rejected") {
        const VectorSpace q3(Q, 3);
        const FreeVector a = free_embed(e0, e1);
        const FreeVector b = free_embed(Vector::basis(q3, 0), e1);
        CHECK_THROWS_AS(a + b, MixedCarriers);
    }
}

TEST_CASE("carrier keys are injective on coordinate pairs") {
    Rng rng(29);
    const VectorSpace x(Q, 2);
    const VectorSpace y(Q, 3);
    for (int t = 0; t < 60; ++t) {
        const Vector x1 = random_vector(x, rng), x2 = random_vector(x, rng);
        const Vector y1 = random_vector(y, rng), y2 = random_vector(y, rng);
        const bool keys_equal = CarrierKey::of(x1, y1) == CarrierKey::of(x2, y2);
        CHECK(keys_equal == (x1 == x2 && y1 == y2));
    }
}

TEST_CASE("free vectors form a linear space pointwise") {
    Rng rng(31);
    const VectorSpace x(Q, 2);
    const VectorSpace y(Q, 2);
    auto random_free = [&](Rng& r) {
        FreeVector f(x, y);
        const std::size_t n = r.below(4);
        for (std::size_t i = 0; i < n; ++i)
            f.add_term(random_vector(x, r), random_vector(y, r), random_scalar(Q, r));
        return f;
    };
    for (int t = 0; t < 40; ++t) {
        const FreeVector a = random_free(rng), b = random_free(rng), c = random_free(rng);
        const Scalar alpha = random_scalar(Q, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a + b).scaled(alpha) == a.scaled(alpha) + b.scaled(alpha));
    }
}
