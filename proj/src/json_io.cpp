#include "ta/json_io.hpp"

namespace ta {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t need_dim(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned()) throw ParseError(std::string(key) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string need_string(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a scalar string literal");
    return j.get<std::string>();
}

} // namespace

Json field_to_json(const Field& f) { return f.name(); }

Field field_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("field must be \"Q\" or \"GF(p)\"");
    return Field::parse(j.get<std::string>());
}

Json space_to_json(const VectorSpace& s) {
    return Json{{"field", field_to_json(s.field())}, {"dim", s.dim()}, {"labels", s.labels()}};
}

VectorSpace space_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    const std::size_t dim = need_dim(j, "dim");
    if (j.contains("labels")) {
        std::vector<std::string> labels;
        for (const Json& l : need(j, "labels")) labels.push_back(need_string(l));
        if (labels.size() != dim) throw ParseError("label count vs dim");
        return VectorSpace(f, std::move(labels));
    }
    return VectorSpace(f, dim);
}

std::vector<Scalar> scalar_row_from_json(const Json& j, const Field& f) {
    if (!j.is_array()) throw ParseError("expected an array of scalar strings");
    std::vector<Scalar> row;
    row.reserve(j.size());
    for (const Json& v : j) row.push_back(Scalar::parse(need_string(v), f));
    return row;
}

Json scalar_row_to_json(const std::vector<Scalar>& row) {
    Json out = Json::array();
    for (const Scalar& s : row) out.push_back(s.str());
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(scalar_row_to_json(m.row(i)));
    return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t expect_cols) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const Json& r : j) rows.push_back(scalar_row_from_json(r, f));
    if (rows.empty() && expect_cols == SIZE_MAX)
        throw ParseError("empty matrix needs an explicit column count");
    if (rows.empty()) return Matrix(0, expect_cols, f);
    Matrix m = Matrix::from_rows(rows, f);
    if (expect_cols != SIZE_MAX && m.cols() != expect_cols)
        throw ParseError("matrix column count mismatch");
    return m;
}

Json linear_map_to_json(const LinearMap& l) {
    return Json{{"field", field_to_json(l.domain().field())},
                {"rows", l.codomain().dim()},
                {"cols", l.domain().dim()},
                {"matrix", matrix_to_json(l.matrix())}};
}

LinearMap linear_map_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    std::size_t cols = j.contains("cols") ? need_dim(j, "cols") : SIZE_MAX;
    Matrix m = matrix_from_json(need(j, "matrix"), f, cols);
    const std::size_t rows = j.contains("rows") ? need_dim(j, "rows") : m.rows();
    if (rows != m.rows()) throw ParseError("matrix row count mismatch");
    return LinearMap(VectorSpace(f, m.cols()), VectorSpace(f, m.rows()), std::move(m));
}

Json subspace_to_json(const Subspace& s) {
    return Json{{"field", field_to_json(s.ambient().field())},
                {"ambient_dim", s.ambient().dim()},
                {"rows", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    const std::size_t ambient_dim = need_dim(j, "ambient_dim");
    Matrix rows = matrix_from_json(need(j, "rows"), f, ambient_dim);
    return Subspace::span(VectorSpace(f, ambient_dim), rows);
}

Json bilinear_to_json(const BilinearMap& b) {
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < b.z_space().dim(); ++k) coeffs.push_back(matrix_to_json(b.slice(k)));
    return Json{{"field", field_to_json(b.x_space().field())},
                {"Z_dim", b.z_space().dim()},
                {"X_dim", b.x_space().dim()},
                {"Y_dim", b.y_space().dim()},
                {"coeffs", coeffs}};
}

BilinearMap bilinear_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    const std::size_t zd = need_dim(j, "Z_dim");
    const std::size_t xd = need_dim(j, "X_dim");
    const std::size_t yd = need_dim(j, "Y_dim");
    const Json& coeffs = need(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != zd) throw ParseError("coeffs slice count vs Z_dim");
    std::vector<Matrix> slices;
    for (const Json& slice : coeffs) {
        Matrix m = matrix_from_json(slice, f, yd);
        if (m.rows() != xd) throw ParseError("slice row count vs X_dim");
        slices.push_back(std::move(m));
    }
    return BilinearMap(VectorSpace(f, xd), VectorSpace(f, yd), VectorSpace(f, zd, "z"),
                       std::move(slices));
}

Json tensor_element_to_json(const TensorElement& t) {
    Json out{{"field", field_to_json(t.table().field())},
             {"X_dim", t.table().rows()},
             {"Y_dim", t.table().cols()},
             {"coeffs", matrix_to_json(t.table())}};
    if (t.rep()) {
        Json rep = Json::array();
        for (const auto& [x, y] : *t.rep())
            rep.push_back(Json{{"x", scalar_row_to_json(x.coords())},
                               {"y", scalar_row_to_json(y.coords())}});
        out["rep"] = rep;
    }
    return out;
}

ParsedTensorElement tensor_element_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    const std::size_t xd = need_dim(j, "X_dim");
    const std::size_t yd = need_dim(j, "Y_dim");
    Matrix table = matrix_from_json(need(j, "coeffs"), f, yd);
    if (table.rows() != xd) throw ParseError("coeffs row count vs X_dim");
    std::optional<TensorElement::Rep> rep;
    if (j.contains("rep")) {
        rep = TensorElement::Rep{};
        const VectorSpace xs(f, xd), ys(f, yd);
        for (const Json& term : need(j, "rep")) {
            std::vector<Scalar> x = scalar_row_from_json(need(term, "x"), f);
            std::vector<Scalar> y = scalar_row_from_json(need(term, "y"), f);
            if (x.size() != xd || y.size() != yd) throw ParseError("rep coordinate lengths");
            rep->emplace_back(Vector(xs, std::move(x)), Vector(ys, std::move(y)));
        }
    }
    return ParsedTensorElement{f, std::move(table), std::move(rep)};
}

Json free_vector_to_json(const FreeVector& f) {
    Json terms = Json::array();
    for (const FreeVector::Term& term : f.terms())
        terms.push_back(Json{{"x", scalar_row_to_json(term.x.coords())},
                             {"y", scalar_row_to_json(term.y.coords())},
                             {"coeff", term.coeff.str()}});
    return Json{{"field", field_to_json(f.x_space().field())},
                {"x_dim", f.x_space().dim()},
                {"y_dim", f.y_space().dim()},
                {"terms", terms}};
}

FreeVector free_vector_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    const VectorSpace xs(f, need_dim(j, "x_dim"));
    const VectorSpace ys(f, need_dim(j, "y_dim"));
    FreeVector out(xs, ys);
    for (const Json& term : need(j, "terms")) {
        std::vector<Scalar> x = scalar_row_from_json(need(term, "x"), f);
        std::vector<Scalar> y = scalar_row_from_json(need(term, "y"), f);
        if (x.size() != xs.dim() || y.size() != ys.dim())
            throw ParseError("term coordinate lengths");
        const Scalar coeff = Scalar::parse(need_string(need(term, "coeff")), f);
        out.add_term(Vector(xs, std::move(x)), Vector(ys, std::move(y)), coeff);
    }
    return out;
}

namespace {

Json tag_to_json(PTag t) {
    if (t == PTag::Inf) return "inf";
    return t == PTag::One ? 1 : 2;
}

PTag tag_from_json(const Json& j) {
    if (j.is_string()) return parse_tag(j.get<std::string>());
    if (j.is_number_integer()) return parse_tag(std::to_string(j.get<int>()));
    throw ParseError("norm tag must be 1, 2 or \"inf\"");
}

} // namespace

Json real_tensor_to_json(const RealTensor& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(t.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"coeffs", rows}, {"px", tag_to_json(t.px())}, {"py", tag_to_json(t.py())}};
}

RealTensor real_tensor_from_json(const Json& j) {
    const PTag px = tag_from_json(need(j, "px"));
    const PTag py = tag_from_json(need(j, "py"));
    const Json& coeffs = need(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) throw ParseError("coeffs must be a non-empty array");
    std::vector<std::vector<double>> rows;
    for (const Json& r : coeffs) {
        if (!r.is_array()) throw ParseError("coeff rows must be arrays");
        std::vector<double> row;
        for (const Json& v : r) {
            if (!v.is_number()) throw ParseError("real tensor entries must be numbers");
            row.push_back(v.get<double>());
        }
        rows.push_back(std::move(row));
    }
    try {
        return RealTensor::from_rows(rows, px, py);
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }
}

Json norm_result_to_json(const NormResult& r) {
    return Json{{"lo", r.lo}, {"hi", r.hi}, {"method", method_name(r.method)}, {"tol", r.tol}};
}

Json axiom_report_to_json(const AxiomReport& r) {
    Json failures = Json::array();
    for (const AxiomFailure& f : r.failures)
        failures.push_back(Json{{"axiom", std::string(1, f.axiom)}, {"detail", f.detail}});
    return Json{{"pass", r.pass}, {"failures", failures}};
}

Json certify_report_to_json(const CertifyReport& r) {
    Json entries = Json::array();
    for (const CertifyEntry& e : r.entries)
        entries.push_back(Json{{"check", e.check},
                               {"applicable", e.applicable},
                               {"pass", e.pass},
                               {"detail", e.detail}});
    return Json{{"pass", r.pass()}, {"entries", entries}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace ta
