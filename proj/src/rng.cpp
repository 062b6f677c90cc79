#include "ta/rng.hpp"

namespace ta {

Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.is_prime()) return Scalar::residue(rng.below(f.modulus()), f);
    const long long num = rng.int_in(-9, 9);
    const long long den = rng.int_in(1, 9);
    return Scalar::fraction(num, den);
}

Scalar random_nonzero_scalar(const Field& f, Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(f, rng);
        if (!s.is_zero()) return s;
    }
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, Rng& rng) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

Vector random_vector(const VectorSpace& s, Rng& rng) {
    std::vector<Scalar> c;
    c.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) c.push_back(random_scalar(s.field(), rng));
    return Vector(s, std::move(c));
}

LinearMap random_linear_map(const VectorSpace& domain, const VectorSpace& codomain, Rng& rng) {
    return LinearMap(domain, codomain,
                     random_matrix(codomain.dim(), domain.dim(), domain.field(), rng));
}

BilinearMap random_bilinear(const VectorSpace& x, const VectorSpace& y, const VectorSpace& z,
                            Rng& rng) {
    std::vector<Matrix> slices;
    slices.reserve(z.dim());
    for (std::size_t k = 0; k < z.dim(); ++k)
        slices.push_back(random_matrix(x.dim(), y.dim(), x.field(), rng));
    return BilinearMap(x, y, z, std::move(slices));
}

Subspace random_subspace(const VectorSpace& ambient, std::size_t max_dim, Rng& rng) {
    const std::size_t r = rng.below(max_dim + 1);
    return Subspace::span(ambient, random_matrix(r, ambient.dim(), ambient.field(), rng));
}

Subspace random_sub_of_kernel(const LinearMap& l, Rng& rng) {
    Subspace k = kernel_basis(l);
    if (k.dim() == 0) return k;
    const std::size_t r = rng.below(k.dim() + 1);
    Matrix coeffs = random_matrix(r, k.dim(), l.domain().field(), rng);
    return Subspace::span(l.domain(), coeffs * k.basis());
}

} // namespace ta
