#pragma once
// Exchange matrices, quivers and Fomin-Zelevinsky mutation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mutwb/errors.hpp"
#include "mutwb/intlinalg.hpp"

namespace mutwb {

inline std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

namespace detail {

inline void require_distinct(const std::vector<std::string>& labels, std::string_view what) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw Error(Errc::LabelMismatch, std::string(what) + " label '" + l + "' is repeated");
}

}  // namespace detail

/// Square skew-symmetric integer matrix whose rows/columns are named by
/// vertex labels. Row order is label order and no operation permutes it.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(IntMatrix b) : ExchangeMatrix(std::move(b), {}) {}
    ExchangeMatrix(IntMatrix b, std::vector<std::string> labels) : b_(std::move(b)), labels_(std::move(labels)) {
        if (!b_.is_square()) throw Error(Errc::NotSquare, "exchange matrix is " + b_.shape_string());
        if (!b_.is_skew_symmetric()) throw Error(Errc::NotSkewSymmetric, to_string(b_));
        if (labels_.empty() && b_.rows() > 0) labels_ = default_labels(b_.rows());
        if (labels_.size() != b_.rows())
            throw Error(Errc::DimensionMismatch, std::to_string(labels_.size()) + " labels for a " +
                                                     b_.shape_string() + " matrix");
        detail::require_distinct(labels_, "vertex");
    }

    const IntMatrix& matrix() const noexcept { return b_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return b_.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return b_(i, j); }

    std::size_t index_of(const std::string& label) const {
        const auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw Error(Errc::IndexOutOfRange, "no vertex labelled '" + label + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    IntMatrix b_;
    std::vector<std::string> labels_;
};

struct Arrow {
    std::string source;
    std::string target;
    Integer multiplicity;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver without loops or oriented 2-cycles, one record per ordered
/// pair of vertices. Equality ignores the order of the arrow list.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        validate();
        canonicalize();
    }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    std::size_t index_of(const std::string& v) const {
        const auto it = std::find(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end()) throw Error(Errc::InvalidQuiver, "unknown vertex '" + v + "'");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    /// Number of arrows source -> target (zero when absent).
    Integer arrows_between(const std::string& source, const std::string& target) const {
        for (const auto& a : arrows_)
            if (a.source == source && a.target == target) return a.multiplicity;
        return 0;
    }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    void validate() const {
        detail::require_distinct(vertices_, "vertex");
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& a : arrows_) {
            const std::size_t s = index_of(a.source);
            const std::size_t t = index_of(a.target);
            if (s == t) throw Error(Errc::InvalidQuiver, "loop at '" + a.source + "'");
            if (a.multiplicity < 1)
                throw Error(Errc::InvalidQuiver, "arrow " + a.source + "->" + a.target + " has multiplicity " +
                                                     a.multiplicity.str());
            if (!pairs.insert({s, t}).second)
                throw Error(Errc::InvalidQuiver, "duplicate arrow record " + a.source + "->" + a.target);
            if (pairs.contains({t, s}))
                throw Error(Errc::InvalidQuiver, "2-cycle between '" + a.source + "' and '" + a.target + "'");
        }
    }

    void canonicalize() {
        std::sort(arrows_.begin(), arrows_.end(), [this](const Arrow& x, const Arrow& y) {
            return std::pair(index_of(x.source), index_of(x.target)) <
                   std::pair(index_of(y.source), index_of(y.target));
        });
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// b_LN = a_LN - a_NL
inline ExchangeMatrix quiver_to_matrix(const Quiver& q) {
    const std::size_t n = q.vertices().size();
    IntMatrix b(n, n);
    for (const auto& a : q.arrows()) {
        const std::size_t s = q.index_of(a.source);
        const std::size_t t = q.index_of(a.target);
        b(s, t) += a.multiplicity;
        b(t, s) -= a.multiplicity;
    }
    return ExchangeMatrix(std::move(b), q.vertices());
}

/// One arrow u -> v of multiplicity b_uv for every positive entry.
inline Quiver matrix_to_quiver(const ExchangeMatrix& b) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b(i, j) > 0) arrows.push_back({b.labels()[i], b.labels()[j], b(i, j)});
    return Quiver(b.labels(), std::move(arrows));
}

namespace detail {

inline void require_vertex(const ExchangeMatrix& b, std::size_t k) {
    if (k >= b.size())
        throw Error(Errc::IndexOutOfRange,
                    "vertex " + std::to_string(k) + " of a " + std::to_string(b.size()) + "-vertex matrix");
}

}  // namespace detail

/// Fomin-Zelevinsky mutation in direction k.
inline ExchangeMatrix fz_mutate(const ExchangeMatrix& b, std::size_t k) {
    detail::require_vertex(b, k);
    const std::size_t n = b.size();
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            const Integer twice = abs(b(i, k)) * b(k, j) + b(i, k) * abs(b(k, j));
            if (twice % 2 != 0)
                throw std::logic_error("odd mutation correction term at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
            out(i, j) = b(i, j) + twice / 2;
        }
    return ExchangeMatrix(std::move(out), b.labels());
}

/// s_kj = -delta_kj + (|b_kj| - b_kj)/2 in row k, identity elsewhere.
inline IntMatrix s_matrix(const ExchangeMatrix& b, std::size_t k) {
    detail::require_vertex(b, k);
    IntMatrix s = IntMatrix::identity(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) s(k, j) = (j == k ? -1 : 0) + (abs(b(k, j)) - b(k, j)) / 2;
    return s;
}

/// S^t B S; agrees with fz_mutate for skew-symmetric B.
inline ExchangeMatrix mutate_via_s(const ExchangeMatrix& b, std::size_t k) {
    const IntMatrix s = s_matrix(b, k);
    return ExchangeMatrix(s.transpose() * b.matrix() * s, b.labels());
}

/// x^t B y. On standard basis vectors e_L, e_N this is b_LN.
inline Integer antisymmetric_pairing(const ExchangeMatrix& b, std::span<const Integer> x,
                                     std::span<const Integer> y) {
    return bilinear(b.matrix(), x, y);
}

/// Applies mutations in order.
inline ExchangeMatrix fz_mutate_sequence(ExchangeMatrix b, std::span<const std::size_t> ks) {
    for (const std::size_t k : ks) b = fz_mutate(b, k);
    return b;
}

}  // namespace mutwb
