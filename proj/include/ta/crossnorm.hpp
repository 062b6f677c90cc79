#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ta/errors.hpp"

namespace ta {

/// The three supported norm tags for a factor: l1, l2, or l-infinity.
enum class PTag { One, Two, Inf };

PTag conjugate_tag(PTag t);
std::string tag_name(PTag t);
PTag parse_tag(const std::string& name); // "1", "2", "inf"

struct NormedFactor {
    std::size_t dim;
    PTag tag;
};

/// Real coefficient table of a tensor over a pair of normed factors.
class RealTensor {
public:
    RealTensor(std::size_t rows, std::size_t cols, PTag px, PTag py);
    static RealTensor from_rows(const std::vector<std::vector<double>>& rows, PTag px, PTag py);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    PTag px() const { return px_; }
    PTag py() const { return py_; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<double>& data() const { return data_; }

    RealTensor scaled(double a) const;
    RealTensor operator+(const RealTensor& rhs) const;
    /// Transpose with swapped factor tags; both norms are invariant.
    RealTensor transposed() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    PTag px_;
    PTag py_;
    std::vector<double> data_;
};

enum class NormMethod { ClosedForm, Enumeration, Bound };
std::string method_name(NormMethod m);

/// Norm value or certified enclosure. Closed forms and finite enumerations
/// report lo = hi; Bound results carry a genuine interval whose endpoints
/// come from an explicit representation (hi) and an explicit dual witness
/// (lo). Never a silently approximate scalar.
struct NormResult {
    double lo;
    double hi;
    NormMethod method;
    double tol;
    double value() const { return hi; }
};

/// Injective norm: sup of |f^T C g| over the dual unit balls. Polyhedral
/// dual balls are enumerated over their extreme points; the (2,2) case is
/// the largest singular value.
NormResult injective_norm(const RealTensor& c);

/// Projective norm: inf of sum ||x_i|| ||y_i|| over finite representations.
/// Closed forms: (2,2) nuclear, (1,1) entrywise, (2,1)/(1,2) column/row
/// sums. Polyhedral pairs are solved exactly over extreme-dyad
/// representations; (2,inf)/(inf,2) report a certified interval.
NormResult projective_norm(const RealTensor& c);

/// Frobenius pairing; both tensors must carry (2,2) tags.
double hilbert_inner(const RealTensor& a, const RealTensor& b);

struct CertifyEntry {
    std::string check;
    bool applicable;
    bool pass;
    std::string detail;
};

struct CertifyReport {
    std::vector<CertifyEntry> entries;
    bool pass() const;
};

/// Reasonable-crossnorm consistency report: the injective/projective
/// sandwich, the single-tensor cross identity (when the input is rank one),
/// and absolute homogeneity. Violations indicate solver bugs.
CertifyReport crossnorm_certify(const RealTensor& c);

} // namespace ta
