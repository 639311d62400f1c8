#pragma once
// Exact integer matrices, Smith normal form and cokernels of integer maps.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mutwb/errors.hpp"

namespace mutwb {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Dense row-major matrix over Z. Shapes with zero rows or columns are legal.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw Error(Errc::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix diagonal(std::span<const Integer> d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const Integer& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw Error(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                   ") outside " + shape_string());
        return (*this)(i, j);
    }

    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::vector<Integer> column(std::size_t j) const {
        std::vector<Integer> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    const std::vector<Integer>& entries() const noexcept { return data_; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }
    bool is_identity() const { return is_square() && *this == identity(rows_); }
    bool is_skew_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }

    // Elementary operations, used by the reductions below.
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
    }
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(Errc::DimensionMismatch, "cannot multiply " + a.shape_string() + " by " + b.shape_string());
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend IntMatrix operator-(IntMatrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void require_same_shape(const IntMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw Error(Errc::DimensionMismatch, shape_string() + " vs " + b.shape_string());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

/// x^t * m * y
inline Integer bilinear(const IntMatrix& m, std::span<const Integer> x, std::span<const Integer> y) {
    if (x.size() != m.rows() || y.size() != m.cols())
        throw Error(Errc::DimensionMismatch, "vectors of length " + std::to_string(x.size()) + " and " +
                                                 std::to_string(y.size()) + " against " + m.shape_string());
    Integer sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        Integer inner = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) inner += m(i, j) * y[j];
        sum += x[i] * inner;
    }
    return sum;
}

/// Fraction-free (Bareiss) elimination; exact for any square integer matrix.
inline Integer determinant(const IntMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "determinant of " + a.shape_string());
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SnfResult {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // rows x cols, diagonal
    IntMatrix v;  // cols x cols, unimodular

    std::vector<Integer> diagonal() const {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
        return out;
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
            if (d(i, i) != 0) ++r;
        return r;
    }
};

namespace detail {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Smallest |entry| among nonzero entries of the trailing submatrix starting
// at (t, t); ties go to the lexicographically smallest (row, col).
inline std::optional<Position> smallest_nonzero(const IntMatrix& m, std::size_t t) {
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Integer& x = m(i, j);
            if (x == 0) continue;
            Integer ax = abs(x);
            if (!best || ax < best_abs) {
                best = Position{i, j};
                best_abs = std::move(ax);
            }
        }
    return best;
}

inline std::optional<std::size_t> row_with_indivisible_entry(const IntMatrix& m, std::size_t t) {
    const Integer& p = m(t, t);
    for (std::size_t i = t + 1; i < m.rows(); ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
            if (m(i, j) % p != 0) return i;
    return std::nullopt;
}

}  // namespace detail

/// Smith normal form: returns (U, D, V) with U*A*V = D, U and V unimodular,
/// and the diagonal of D non-negative with each entry dividing the next.
inline SnfResult snf(const IntMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    SnfResult r{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
    IntMatrix& d = r.d;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool finished = false;
        for (;;) {
            const auto pivot = detail::smallest_nonzero(d, t);
            if (!pivot) {
                finished = true;
                break;
            }
            d.swap_rows(t, pivot->row);
            r.u.swap_rows(t, pivot->row);
            d.swap_cols(t, pivot->col);
            r.v.swap_cols(t, pivot->col);

            bool cleared = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const Integer q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                r.u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) cleared = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const Integer q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                r.v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) cleared = false;
            }
            // Leftover remainders are strictly smaller than the pivot.
            if (!cleared) continue;

            if (const auto i = detail::row_with_indivisible_entry(d, t)) {
                d.add_row_multiple(t, *i, 1);
                r.u.add_row_multiple(t, *i, 1);
                continue;
            }
            break;
        }
        if (finished) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
    }
    return r;
}

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianGroupDescriptor {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// "0", "Z", "Z^3", "Z/2 ⊕ Z/2", "Z ⊕ Z/3", ...
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::vector<std::string> parts;
        if (free_rank == 1) parts.emplace_back("Z");
        else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
        for (const auto& t : torsion) parts.push_back("Z/" + t.str());
        std::string out = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
        return out;
    }

    friend bool operator==(const AbelianGroupDescriptor&, const AbelianGroupDescriptor&) = default;
};

/// Z^rows / Im(a)
inline AbelianGroupDescriptor cokernel(const IntMatrix& a) {
    const SnfResult s = snf(a);
    AbelianGroupDescriptor g;
    g.free_rank = a.rows() - s.rank();
    for (const auto& x : s.diagonal())
        if (x > 1) g.torsion.push_back(x);
    return g;
}

inline std::size_t rank(const IntMatrix& a) { return snf(a).rank(); }

/// Exact inverse of a matrix with determinant +-1.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "cannot invert " + a.shape_string());
    const SnfResult s = snf(a);
    for (const auto& x : s.diagonal())
        if (x != 1) throw Error(Errc::NotUnimodular, "determinant is not +-1 for " + to_string(a));
    // U A V = I  =>  A^-1 = V U
    return s.v * s.u;
}

inline bool is_unimodular(const IntMatrix& a) {
    return a.is_square() && abs(determinant(a)) == 1;
}

}  // namespace mutwb
