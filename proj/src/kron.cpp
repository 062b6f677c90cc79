#include "ta/kron.hpp"

namespace ta {

VectorSpace map_space(const VectorSpace& domain, const VectorSpace& codomain) {
    if (domain.field() != codomain.field()) throw MixedFields();
    std::vector<std::string> labels;
    labels.reserve(domain.dim() * codomain.dim());
    for (std::size_t k = 0; k < codomain.dim(); ++k)
        for (std::size_t i = 0; i < domain.dim(); ++i)
            labels.push_back(codomain.labels()[k] + "<-" + domain.labels()[i]);
    return VectorSpace(domain.field(), std::move(labels));
}

Vector map_coords(const LinearMap& a) {
    const VectorSpace space = map_space(a.domain(), a.codomain());
    std::vector<Scalar> coords;
    coords.reserve(space.dim());
    for (std::size_t k = 0; k < a.codomain().dim(); ++k)
        for (std::size_t i = 0; i < a.domain().dim(); ++i) coords.push_back(a.matrix().at(k, i));
    return Vector(space, std::move(coords));
}

LinearMap map_from_coords(const VectorSpace& domain, const VectorSpace& codomain,
                          const Vector& v) {
    if (v.dim() != domain.dim() * codomain.dim()) throw ShapeMismatch("map coordinates length");
    Matrix m(codomain.dim(), domain.dim(), domain.field());
    for (std::size_t k = 0; k < codomain.dim(); ++k)
        for (std::size_t i = 0; i < domain.dim(); ++i) m.at(k, i) = v[k * domain.dim() + i];
    return LinearMap(domain, codomain, std::move(m));
}

KronMap::KronMap(LinearMap map, std::optional<std::pair<LinearMap, LinearMap>> provenance)
    : map_(std::move(map)), provenance_(std::move(provenance)) {}

KronMap kron(const LinearMap& a, const LinearMap& b) {
    if (a.domain().field() != b.domain().field()) throw MixedFields();
    const std::size_t dx = a.domain().dim(), dv = a.codomain().dim();
    const std::size_t dy = b.domain().dim(), dw = b.codomain().dim();

    Matrix m(dv * dw, dx * dy, a.domain().field());
    for (std::size_t k = 0; k < dv; ++k)
        for (std::size_t l = 0; l < dw; ++l)
            for (std::size_t i = 0; i < dx; ++i) {
                const Scalar& aki = a.matrix().at(k, i);
                if (aki.is_zero()) continue;
                for (std::size_t j = 0; j < dy; ++j)
                    m.at(k * dw + l, i * dy + j) = aki * b.matrix().at(l, j);
            }
    LinearMap map(pair_space(a.domain(), b.domain()), pair_space(a.codomain(), b.codomain()),
                  std::move(m));
    return KronMap(std::move(map), std::make_pair(a, b));
}

LinearMap shuffle_permutation(const VectorSpace& x, const VectorSpace& y) {
    const std::size_t m = x.dim(), n = y.dim();
    Matrix p(n * m, m * n, x.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) p.at(j * m + i, i * n + j) = Scalar::one(x.field());
    return LinearMap(pair_space(x, y), pair_space(y, x), std::move(p));
}

LinearMap shuffle_permutation(std::size_t m, std::size_t n, const Field& f) {
    return shuffle_permutation(VectorSpace(f, m), VectorSpace(f, n));
}

TensorRealization map_space_realization(const VectorSpace& x, const VectorSpace& v,
                                        const VectorSpace& y, const VectorSpace& w) {
    const VectorSpace left = map_space(x, v);
    const VectorSpace right = map_space(y, w);
    const VectorSpace t = map_space(pair_space(x, y), pair_space(v, w));

    BilinearMap theta = BilinearMap::from_basis_values(
        left, right, t, [&](std::size_t a, std::size_t b) {
            // basis maps are matrix units: a = k*dimX+i in L[X,V], b = l*dimY+j
            const LinearMap ea = map_from_coords(x, v, Vector::basis(left, a));
            const LinearMap eb = map_from_coords(y, w, Vector::basis(right, b));
            return map_coords(kron(ea, eb).map());
        });
    return TensorRealization("map-space", std::move(theta));
}

LinearMap map_tensor_factorize(const VectorSpace& x, const VectorSpace& v, const VectorSpace& y,
                               const VectorSpace& w, const BilinearMap& phi) {
    return map_space_realization(x, v, y, w).factorize(phi);
}

} // namespace ta
