#pragma once

#include <cstdint>
#include <random>

#include "ta/bilinear.hpp"
#include "ta/linear_map.hpp"
#include "ta/subspace.hpp"

namespace ta {

/// Deterministic random source. Draws go through explicit reductions of the
/// raw mt19937_64 stream (never std::uniform_*_distribution), so identical
/// seeds give identical values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool flip() { return (next() & 1) != 0; }
    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double real_in(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Independent substream for a labelled part of a run.
    Rng fork(std::uint64_t stream) {
        std::uint64_t z = next() ^ (stream + 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return Rng(z ^ (z >> 31));
    }

private:
    std::mt19937_64 gen_;
};

/// Small random scalars: rationals with numerator in [-9, 9] and
/// denominator in [1, 9], or uniform residues.
Scalar random_scalar(const Field& f, Rng& rng);
Scalar random_nonzero_scalar(const Field& f, Rng& rng);
Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, Rng& rng);
Vector random_vector(const VectorSpace& s, Rng& rng);
LinearMap random_linear_map(const VectorSpace& domain, const VectorSpace& codomain, Rng& rng);
BilinearMap random_bilinear(const VectorSpace& x, const VectorSpace& y, const VectorSpace& z,
                            Rng& rng);
/// Random manifold of the ambient space with dimension at most max_dim.
Subspace random_subspace(const VectorSpace& ambient, std::size_t max_dim, Rng& rng);
/// Random manifold of the kernel of l.
Subspace random_sub_of_kernel(const LinearMap& l, Rng& rng);

} // namespace ta
