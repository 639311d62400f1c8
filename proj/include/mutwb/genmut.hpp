#pragma once
// Mutation between arbitrary pairs of cluster-tilting objects:
// B' = T B T^t where T is read off approximation triangles.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutwb/errors.hpp"
#include "mutwb/exchange.hpp"
#include "mutwb/intlinalg.hpp"

namespace mutwb {

/// For each old summand M_j, a triangle
///     Sigma^-1 M_j -> (+) beta_ij M'_i -> (+) alpha_ij M'_i -> M_j
/// Rows of alpha/beta are indexed by the new summands, columns by the old.
/// Only non-projective indecomposables are indexed.
struct ApproxTriangleData {
    std::vector<std::string> new_labels;
    std::vector<std::string> old_labels;
    IntMatrix alpha;
    IntMatrix beta;
};

/// Matrix of the induced map on Grothendieck groups: rows are new summands,
/// columns old summands.
struct TMatrix {
    IntMatrix t;
    std::vector<std::string> new_labels;
    std::vector<std::string> old_labels;

    friend bool operator==(const TMatrix&, const TMatrix&) = default;
};

inline TMatrix t_from_triangles(const ApproxTriangleData& d) {
    const std::size_t m = d.new_labels.size();
    const std::size_t n = d.old_labels.size();
    for (const IntMatrix* mat : {&d.alpha, &d.beta}) {
        if (mat->rows() != m || mat->cols() != n)
            throw Error(Errc::DimensionMismatch, "multiplicity matrix is " + mat->shape_string() + ", expected " +
                                                     std::to_string(m) + "x" + std::to_string(n));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((*mat)(i, j) < 0)
                    throw Error(Errc::NegativeMultiplicity, "multiplicity " + (*mat)(i, j).str() + " of " +
                                                                d.new_labels[i] + " in the triangle of " +
                                                                d.old_labels[j]);
    }
    detail::require_distinct(d.new_labels, "new");
    detail::require_distinct(d.old_labels, "old");
    return {d.alpha - d.beta, d.new_labels, d.old_labels};
}

namespace detail {

inline void require_square_t(const TMatrix& t, std::size_t n) {
    if (!t.t.is_square() || t.t.rows() != n)
        throw Error(Errc::DimensionMismatch,
                    "T is " + t.t.shape_string() + " but the exchange matrix has " + std::to_string(n) + " vertices");
    if (t.new_labels.size() != n || t.old_labels.size() != n)
        throw Error(Errc::DimensionMismatch, "T labels do not match its shape");
}

}  // namespace detail

/// T B T^t, relabelled by the new summands. b must be labelled by T's old
/// summands.
inline ExchangeMatrix generalized_mutate(const ExchangeMatrix& b, const TMatrix& t) {
    detail::require_square_t(t, b.size());
    if (b.labels() != t.old_labels) throw Error(Errc::LabelMismatch, "exchange matrix labels differ from T's old labels");
    return ExchangeMatrix(t.t * b.matrix() * t.t.transpose(), t.new_labels);
}

/// The inverse map of T: t^-1 relabelled from new back to old.
inline TMatrix inverse(const TMatrix& t) {
    return {unimodular_inverse(t.t), t.old_labels, t.new_labels};
}

/// T^-1 B' T^-t: recovers the old exchange matrix from the new one.
inline ExchangeMatrix generalized_mutate_inverse(const ExchangeMatrix& b_new, const TMatrix& t) {
    return generalized_mutate(b_new, inverse(t));
}

/// T for replacing summand k by its exchange partner:
/// t_ik = -delta_ik + (|b_ik| + b_ik)/2 in column k, identity elsewhere.
inline TMatrix single_step_t(const ExchangeMatrix& b, std::size_t k) {
    if (k >= b.size())
        throw Error(Errc::IndexOutOfRange,
                    "vertex " + std::to_string(k) + " of a " + std::to_string(b.size()) + "-vertex matrix");
    IntMatrix t = IntMatrix::identity(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) t(i, k) = (i == k ? -1 : 0) + (abs(b(i, k)) + b(i, k)) / 2;
    return {std::move(t), b.labels(), b.labels()};
}

/// S = T^-t
inline IntMatrix s_from_t(const TMatrix& t) {
    if (!t.t.is_square()) throw Error(Errc::NotSquare, "T is " + t.t.shape_string());
    return unimodular_inverse(t.t.transpose());
}

struct FzCheckReport {
    struct Mismatch {
        std::size_t row;
        std::size_t col;
        Integer expected;  // Fomin-Zelevinsky
        Integer actual;    // T B T^t
    };

    std::size_t vertex = 0;
    std::optional<Mismatch> first_mismatch;

    bool passed() const { return !first_mismatch; }
    std::string describe() const {
        if (passed()) return "pass (k=" + std::to_string(vertex) + ")";
        const auto& m = *first_mismatch;
        return "fail (k=" + std::to_string(vertex) + "): entry (" + std::to_string(m.row) + "," +
               std::to_string(m.col) + ") expected " + m.expected.str() + ", got " + m.actual.str();
    }
};

/// Compares the generalized rule with the single-step T against the
/// Fomin-Zelevinsky formula. Mismatches are reported rather than thrown.
inline FzCheckReport fz_consistency_check(const ExchangeMatrix& b, std::size_t k) {
    FzCheckReport report;
    report.vertex = k;
    const ExchangeMatrix expected = fz_mutate(b, k);
    const ExchangeMatrix actual = generalized_mutate(b, single_step_t(b, k));
    for (std::size_t i = 0; i < b.size() && report.passed(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (expected(i, j) != actual(i, j)) {
                report.first_mismatch = FzCheckReport::Mismatch{i, j, expected(i, j), actual(i, j)};
                break;
            }
    return report;
}

}  // namespace mutwb
