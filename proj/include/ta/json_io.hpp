#pragma once

#include <json.hpp>

#include "ta/crossnorm.hpp"
#include "ta/free_vector.hpp"
#include "ta/realizations.hpp"
#include "ta/tensor.hpp"

namespace ta {

using Json = nlohmann::json;

/// Shared scalar encoding: canonical strings ("a", "a/b", residue digits),
/// never floats, so parse -> print -> parse is the identity.

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json space_to_json(const VectorSpace& s);
VectorSpace space_from_json(const Json& j);

Json matrix_to_json(const Matrix& m); // rows of scalar strings
Matrix matrix_from_json(const Json& j, const Field& f, std::size_t expect_cols = SIZE_MAX);

std::vector<Scalar> scalar_row_from_json(const Json& j, const Field& f);
Json scalar_row_to_json(const std::vector<Scalar>& row);

/// {"field": ..., "matrix": [[...]]}, the shared map/subspace literal.
Json linear_map_to_json(const LinearMap& l);
LinearMap linear_map_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {"field", "Z_dim", "X_dim", "Y_dim", "coeffs": [[[...]]]} with
/// coeffs[k][i][j] the k-th coordinate at basis pair (i, j).
Json bilinear_to_json(const BilinearMap& b);
BilinearMap bilinear_from_json(const Json& j);

/// {"field", "X_dim", "Y_dim", "coeffs": [[...]], "rep": optional}.
Json tensor_element_to_json(const TensorElement& t);
struct ParsedTensorElement {
    Field field;
    Matrix table;
    std::optional<TensorElement::Rep> rep;
};
ParsedTensorElement tensor_element_from_json(const Json& j);

/// {"field", "x_dim", "y_dim", "terms": [{"x", "y", "coeff"}]}.
Json free_vector_to_json(const FreeVector& f);
FreeVector free_vector_from_json(const Json& j);

/// {"coeffs": [[numbers]], "px": 1|2|"inf", "py": ...,}.
Json real_tensor_to_json(const RealTensor& t);
RealTensor real_tensor_from_json(const Json& j);

Json norm_result_to_json(const NormResult& r);
Json axiom_report_to_json(const AxiomReport& r);
Json certify_report_to_json(const CertifyReport& r);

/// Parses text into JSON, converting library errors into ParseError.
Json parse_json_text(const std::string& text);

} // namespace ta
