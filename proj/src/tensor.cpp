#include "ta/tensor.hpp"

#include <sstream>

namespace ta {

VectorSpace pair_space(const VectorSpace& x, const VectorSpace& y) {
    if (x.field() != y.field()) throw MixedFields();
    std::vector<std::string> labels;
    labels.reserve(x.dim() * y.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < y.dim(); ++j)
            labels.push_back(x.labels()[i] + "*" + y.labels()[j]);
    return VectorSpace(x.field(), std::move(labels));
}

TensorRealization::TensorRealization(std::string name, BilinearMap theta, Factorizer factorizer)
    : name_(std::move(name)), theta_(std::move(theta)), factorizer_(std::move(factorizer)) {}

Matrix TensorRealization::theta_matrix() const {
    const std::size_t m = x_space().dim();
    const std::size_t n = y_space().dim();
    Matrix out(space().dim(), m * n, space().field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = theta_at_basis(i, j);
            for (std::size_t k = 0; k < v.dim(); ++k) out.at(k, i * n + j) = v[k];
        }
    return out;
}

LinearMap TensorRealization::factorize(const BilinearMap& phi) const {
    if (phi.x_space() != x_space() || phi.y_space() != y_space())
        throw ShapeMismatch("bilinear map factors vs realization factors");
    if (factorizer_) return factorizer_(*this, phi);

    const std::size_t m = x_space().dim();
    const std::size_t n = y_space().dim();
    Matrix targets(phi.z_space().dim(), m * n, space().field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = phi.at_basis(i, j);
            for (std::size_t k = 0; k < v.dim(); ++k) targets.at(k, i * n + j) = v[k];
        }
    // Solve Phi * Theta = targets column-consistently; a candidate that
    // violates the axioms yields a best-effort map that check_axioms flags.
    SolveResult s = solve_particular(theta_matrix().transpose(), targets.transpose());
    return LinearMap(space(), phi.z_space(), s.solution.transpose());
}

TensorRealization standard_realization(const VectorSpace& x, const VectorSpace& y) {
    VectorSpace t = pair_space(x, y);
    BilinearMap theta = BilinearMap::from_basis_values(
        x, y, t, [&](std::size_t i, std::size_t j) { return Vector::basis(t, i * y.dim() + j); });
    return TensorRealization("standard", std::move(theta));
}

TensorElement::TensorElement(std::shared_ptr<const TensorRealization> realization, Matrix table,
                             std::optional<Rep> rep)
    : realization_(std::move(realization)), table_(std::move(table)), rep_(std::move(rep)) {
    if (!realization_) throw ShapeMismatch("tensor element without a realization");
    if (table_.rows() != realization_->x_space().dim() ||
        table_.cols() != realization_->y_space().dim() ||
        table_.field() != realization_->space().field())
        throw ShapeMismatch("coefficient table vs factor dimensions");
}

Vector TensorElement::flat() const {
    const std::size_t n = table_.cols();
    VectorSpace flat_space(table_.field(), table_.rows() * n, "c");
    std::vector<Scalar> coords;
    coords.reserve(table_.rows() * n);
    for (std::size_t i = 0; i < table_.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) coords.push_back(table_.at(i, j));
    return Vector(std::move(flat_space), std::move(coords));
}

Vector TensorElement::to_ambient() const {
    return Vector::from_col(realization_->space(), realization_->theta_matrix() * flat().as_col());
}

bool TensorElement::rep_consistent() const {
    if (!rep_) return true;
    Matrix acc(table_.rows(), table_.cols(), table_.field());
    for (const auto& [x, y] : *rep_) acc = acc + outer(x, y);
    return acc == table_;
}

TensorElement TensorElement::operator+(const TensorElement& rhs) const {
    if (realization_->x_space() != rhs.realization_->x_space() ||
        realization_->y_space() != rhs.realization_->y_space())
        throw FactorSpaceMismatch("sum of tensors over different factor pairs");
    std::optional<Rep> rep;
    if (rep_ && rhs.rep_) {
        rep = *rep_;
        rep->insert(rep->end(), rhs.rep_->begin(), rhs.rep_->end());
    }
    return TensorElement(realization_, table_ + rhs.table_, std::move(rep));
}

TensorElement TensorElement::operator-(const TensorElement& rhs) const {
    return *this + rhs.scaled(-Scalar::one(table_.field()));
}

TensorElement TensorElement::scaled(const Scalar& a) const {
    std::optional<Rep> rep;
    if (rep_) {
        rep = Rep{};
        rep->reserve(rep_->size());
        for (const auto& [x, y] : *rep_) rep->emplace_back(x.scaled(a), y);
    }
    return TensorElement(realization_, table_.scaled(a), std::move(rep));
}

bool TensorElement::operator==(const TensorElement& rhs) const {
    return realization_->x_space() == rhs.realization_->x_space() &&
           realization_->y_space() == rhs.realization_->y_space() && table_ == rhs.table_;
}

TensorElement single_tensor(const std::shared_ptr<const TensorRealization>& r, const Vector& x,
                            const Vector& y) {
    if (x.space() != r->x_space() || y.space() != r->y_space())
        throw ShapeMismatch("single tensor factors vs realization");
    return TensorElement(r, outer(x, y), TensorElement::Rep{{x, y}});
}

TensorElement single_tensor(const TensorRealization& r, const Vector& x, const Vector& y) {
    return single_tensor(std::make_shared<const TensorRealization>(r), x, y);
}

TensorElement zero_element(const std::shared_ptr<const TensorRealization>& r) {
    return TensorElement(r, Matrix(r->x_space().dim(), r->y_space().dim(), r->space().field()),
                         TensorElement::Rep{});
}

AxiomReport check_axioms(const TensorRealization& r, const std::vector<BilinearMap>& probes) {
    AxiomReport report;
    const std::size_t m = r.x_space().dim();
    const std::size_t n = r.y_space().dim();

    const std::size_t span_rank = rank(r.theta_matrix());
    if (span_rank != r.space().dim()) {
        std::ostringstream os;
        os << "basis-pair images of theta span a manifold of dimension " << span_rank
           << " inside a tensor space of dimension " << r.space().dim();
        report.failures.push_back({'a', os.str()});
    }
    if (r.space().dim() != m * n) {
        std::ostringstream os;
        os << "tensor space dimension " << r.space().dim() << " differs from dim X * dim Y = "
           << m * n << "; the basis-pair images cannot be independent and spanning";
        report.failures.push_back({'a', os.str()});
    }

    for (std::size_t p = 0; p < probes.size(); ++p) {
        const BilinearMap& phi = probes[p];
        const LinearMap factored = r.factorize(phi);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (factored.apply(r.theta_at_basis(i, j)) == phi.at_basis(i, j)) continue;
                std::ostringstream os;
                os << "probe " << p << ": factored map disagrees with the probe at basis pair ("
                   << i << "," << j << ")";
                report.failures.push_back({'b', os.str()});
            }
    }

    report.pass = report.failures.empty();
    return report;
}

LinearMap factorize(const TensorRealization& r, const BilinearMap& phi) { return r.factorize(phi); }

LinearMap canonical_iso(const TensorRealization& r1, const TensorRealization& r2) {
    if (r1.x_space() != r2.x_space() || r1.y_space() != r2.y_space())
        throw FactorSpaceMismatch();
    return r2.factorize(r1.theta());
}

std::vector<TensorElement> basis_tensors(const TensorRealization& r,
                                         const std::vector<Vector>& e_family,
                                         const std::vector<Vector>& d_family) {
    auto shared = std::make_shared<const TensorRealization>(r);
    std::vector<TensorElement> out;
    out.reserve(e_family.size() * d_family.size());
    for (const Vector& x : e_family)
        for (const Vector& y : d_family) out.push_back(single_tensor(shared, x, y));
    return out;
}

LinearMap commute_iso(const TensorRealization& r_xy, const TensorRealization& r_yx) {
    if (r_yx.x_space() != r_xy.y_space() || r_yx.y_space() != r_xy.x_space())
        throw FactorSpaceMismatch("swapped realization does not match");
    BilinearMap swapped = BilinearMap::from_basis_values(
        r_xy.x_space(), r_xy.y_space(), r_yx.space(),
        [&](std::size_t i, std::size_t j) { return r_yx.theta_at_basis(j, i); });
    return r_xy.factorize(swapped);
}

SubTensorProduct sub_tensor(const TensorRealization& r, const Subspace& m, const Subspace& n) {
    if (m.ambient() != r.x_space() || n.ambient() != r.y_space())
        throw SubspaceNotInAmbient("manifolds vs realization factors");

    VectorSpace mc(m.ambient().field(), m.dim(), "m");
    VectorSpace nc(n.ambient().field(), n.dim(), "n");
    TensorRealization product = standard_realization(mc, nc);

    auto shared = std::make_shared<const TensorRealization>(r);
    Matrix embed(r.space().dim(), m.dim() * n.dim(), r.space().field());
    for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < n.dim(); ++b) {
            const Vector t = single_tensor(shared, m.basis_vector(a), n.basis_vector(b)).to_ambient();
            for (std::size_t k = 0; k < t.dim(); ++k) embed.at(k, a * n.dim() + b) = t[k];
        }

    LinearMap embedding(product.space(), r.space(), embed);
    Subspace embedded = image_basis(embedding);
    return SubTensorProduct{std::move(product), std::move(embedded), std::move(embedding)};
}

RegularCover minimal_regular_cover(const TensorRealization& r, const Subspace& u) {
    if (u.ambient() != r.space()) throw SubspaceNotInAmbient("manifold vs tensor space");
    const std::size_t m = r.x_space().dim();
    const std::size_t n = r.y_space().dim();

    // Tables of u's basis in basis-tensor coordinates.
    SolveResult coords = solve_particular(r.theta_matrix(), u.basis().transpose());
    if (!coords.consistent)
        throw SubspaceNotInAmbient("manifold not inside the span of basis tensors");

    std::vector<Vector> column_vectors; // live in X
    std::vector<Vector> row_vectors;    // live in Y
    for (std::size_t v = 0; v < u.dim(); ++v) {
        Matrix table(m, n, r.space().field());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) table.at(i, j) = coords.solution.at(i * n + j, v);
        for (std::size_t j = 0; j < n; ++j) column_vectors.emplace_back(r.x_space(), table.col(j));
        for (std::size_t i = 0; i < m; ++i) row_vectors.emplace_back(r.y_space(), table.row(i));
    }

    Subspace left = Subspace::span_vectors(r.x_space(), column_vectors);
    Subspace right = Subspace::span_vectors(r.y_space(), row_vectors);
    const bool regular = u.dim() == left.dim() * right.dim();
    return RegularCover{std::move(left), std::move(right), regular};
}

IteratedProduct iterated_product(const std::vector<VectorSpace>& factors) {
    if (factors.size() < 2) throw ShapeMismatch("iterated product needs at least two factors");
    for (const VectorSpace& s : factors)
        if (s.field() != factors.front().field()) throw MixedFields();

    IteratedProduct out;
    out.steps.push_back(standard_realization(factors[0], factors[1]));
    for (std::size_t k = 2; k < factors.size(); ++k)
        out.steps.push_back(standard_realization(out.steps.back().space(), factors[k]));
    return out;
}

Matrix rebracket_permutation(std::size_t da, std::size_t db, std::size_t dc, const Field& f) {
    Matrix p(da * db * dc, da * db * dc, f);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < dc; ++k) {
                const std::size_t left = (i * db + j) * dc + k;   // ((a,b),c) coordinates
                const std::size_t right = i * (db * dc) + j * dc + k; // (a,(b,c)) coordinates
                p.at(right, left) = Scalar::one(f);
            }
    return p;
}

} // namespace ta
