#pragma once
// Type A cluster combinatorics on a convex m-gon.
//
// Vertices 0..m-1 are placed counterclockwise. A triangulation (m-3
// pairwise non-crossing diagonals) models a basic cluster-tilting object of
// the cluster category of type A_{m-3}; each diagonal is an indecomposable
// summand and boundary edges are projective, so they never carry a class.
// Diagonals are always kept sorted lexicographically on (low, high); that
// order fixes every basis used below.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mutwb/errors.hpp"
#include "mutwb/exchange.hpp"
#include "mutwb/genmut.hpp"
#include "mutwb/intlinalg.hpp"

namespace mutwb::typea {

struct Diagonal {
    int low = 0;
    int high = 0;

    Diagonal() = default;
    Diagonal(int a, int b) : low(std::min(a, b)), high(std::max(a, b)) {}

    std::string label() const { return std::to_string(low) + "-" + std::to_string(high); }

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Strict interior intersection; diagonals sharing an endpoint do not cross.
inline bool crosses(const Diagonal& x, const Diagonal& y) {
    if (x.low == y.low || x.low == y.high || x.high == y.low || x.high == y.high) return false;
    const bool low_inside = x.low < y.low && y.low < x.high;
    const bool high_inside = x.low < y.high && y.high < x.high;
    return low_inside != high_inside;
}

class Triangulation;
Triangulation validate(int m, std::vector<Diagonal> diagonals);

class Triangulation {
public:
    int polygon_size() const noexcept { return m_; }
    const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }
    std::size_t rank() const noexcept { return diagonals_.size(); }

    bool contains(const Diagonal& d) const { return std::binary_search(diagonals_.begin(), diagonals_.end(), d); }

    std::optional<std::size_t> index_of(const Diagonal& d) const {
        const auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
        if (it == diagonals_.end() || *it != d) return std::nullopt;
        return static_cast<std::size_t>(it - diagonals_.begin());
    }

    bool is_boundary(int a, int b) const {
        const int gap = std::abs(a - b);
        return gap == 1 || gap == m_ - 1;
    }

    /// Boundary edge or diagonal of the triangulation.
    bool has_edge(int a, int b) const { return is_boundary(a, b) || contains(Diagonal(a, b)); }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& d : diagonals_) out.push_back(d.label());
        return out;
    }

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

private:
    friend Triangulation validate(int m, std::vector<Diagonal> diagonals);
    Triangulation(int m, std::vector<Diagonal> d) : m_(m), diagonals_(std::move(d)) {}

    int m_ = 0;
    std::vector<Diagonal> diagonals_;
};

inline Triangulation validate(int m, std::vector<Diagonal> diagonals) {
    if (m < 4) throw Error(Errc::PolygonTooSmall, "a triangulated polygon needs at least 4 vertices, got " + std::to_string(m));
    for (const auto& d : diagonals) {
        if (d.low < 0 || d.high >= m)
            throw Error(Errc::IndexOutOfRange, "diagonal " + d.label() + " of a " + std::to_string(m) + "-gon");
        const int gap = d.high - d.low;
        if (gap <= 1 || gap == m - 1) throw Error(Errc::BoundaryEdge, d.label() + " is not an interior diagonal");
    }
    std::sort(diagonals.begin(), diagonals.end());
    if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end())
        throw Error(Errc::WrongCount, "repeated diagonal");
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j)
            if (crosses(diagonals[i], diagonals[j]))
                throw Error(Errc::Crossing, diagonals[i].label() + " crosses " + diagonals[j].label());
    if (diagonals.size() != static_cast<std::size_t>(m - 3))
        throw Error(Errc::WrongCount, std::to_string(diagonals.size()) + " diagonals, a triangulation of the " +
                                          std::to_string(m) + "-gon has " + std::to_string(m - 3));
    return Triangulation(m, std::move(diagonals));
}

/// All diagonals from one apex.
inline Triangulation fan(int m, int apex = 0) {
    if (m < 4) throw Error(Errc::PolygonTooSmall, std::to_string(m) + "-gon");
    std::vector<Diagonal> d;
    for (int step = 2; step <= m - 2; ++step) d.emplace_back(apex, (apex + step) % m);
    return validate(m, std::move(d));
}

/// Triangles (a < b < c), listed counterclockwise.
inline std::vector<std::array<int, 3>> triangles(const Triangulation& tri) {
    std::vector<std::array<int, 3>> out;
    const int m = tri.polygon_size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!tri.has_edge(a, b)) continue;
            for (int c = b + 1; c < m; ++c)
                if (tri.has_edge(b, c) && tri.has_edge(a, c)) out.push_back({a, b, c});
        }
    return out;
}

/// Within each triangle, one arrow from every diagonal side to the diagonal
/// side that follows it counterclockwise.
inline Quiver quiver_of(const Triangulation& tri) {
    std::vector<Arrow> arrows;
    for (const auto& [a, b, c] : triangles(tri)) {
        const std::array<std::pair<int, int>, 3> sides{{{a, b}, {b, c}, {c, a}}};
        for (std::size_t s = 0; s < 3; ++s) {
            const auto& [x0, x1] = sides[s];
            const auto& [y0, y1] = sides[(s + 1) % 3];
            if (tri.is_boundary(x0, x1) || tri.is_boundary(y0, y1)) continue;
            arrows.push_back({Diagonal(x0, x1).label(), Diagonal(y0, y1).label(), 1});
        }
    }
    return Quiver(tri.labels(), std::move(arrows));
}

inline ExchangeMatrix exchange_matrix(const Triangulation& tri) { return quiver_to_matrix(quiver_of(tri)); }

/// Exchange matrix with rows ordered by `order` (a permutation of the
/// triangulation's diagonals).
inline ExchangeMatrix exchange_matrix(const Triangulation& tri, const std::vector<Diagonal>& order) {
    const ExchangeMatrix canonical = exchange_matrix(tri);
    if (order.size() != tri.rank()) throw Error(Errc::DimensionMismatch, "slot order has the wrong length");
    std::vector<std::size_t> pos;
    std::vector<std::string> labels;
    for (const auto& d : order) {
        const auto idx = tri.index_of(d);
        if (!idx) throw Error(Errc::NotADiagonal, d.label());
        pos.push_back(*idx);
        labels.push_back(d.label());
    }
    IntMatrix b(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) b(i, j) = canonical(pos[i], pos[j]);
    return ExchangeMatrix(std::move(b), std::move(labels));
}

/// Quadrilateral (a, b, c, e) around diagonal {a, c}, a < c, listed
/// counterclockwise starting from a.
inline std::array<int, 4> quadrilateral(const Triangulation& tri, const Diagonal& d) {
    if (!tri.contains(d)) throw Error(Errc::NotADiagonal, d.label() + " is not in the triangulation");
    const int m = tri.polygon_size();
    const int a = d.low;
    const int c = d.high;
    int b = -1;
    for (int v = a + 1; v < c && b < 0; ++v)
        if (tri.has_edge(a, v) && tri.has_edge(v, c)) b = v;
    int e = -1;
    for (int step = c + 1; step < a + m && e < 0; ++step) {
        const int v = step % m;
        if (tri.has_edge(c, v) && tri.has_edge(v, a)) e = v;
    }
    if (b < 0 || e < 0) throw std::logic_error("triangulation is missing a triangle next to " + d.label());
    return {a, b, c, e};
}

struct FlipMove {
    Diagonal removed;
    Diagonal inserted;

    friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

struct FlipResult {
    Triangulation triangulation;
    FlipMove move;
};

/// Replaces d by the other diagonal of its quadrilateral.
inline FlipResult flip(const Triangulation& tri, const Diagonal& d) {
    const auto [a, b, c, e] = quadrilateral(tri, d);
    const Diagonal inserted(b, e);
    std::vector<Diagonal> next;
    for (const auto& x : tri.diagonals())
        if (x != d) next.push_back(x);
    next.push_back(inserted);
    return {validate(tri.polygon_size(), std::move(next)), {d, inserted}};
}

/// Middle terms of the two exchange triangles of d, over the diagonal basis
/// of tri (the slot of d is 0). With quadrilateral sides s1..s4 in cyclic
/// order starting at the low endpoint of d, `b_m` collects the diagonals
/// among {s1, s3} and `b_mstar` those among {s2, s4}.
struct ExchangeMiddleTerms {
    std::vector<Integer> b_m;
    std::vector<Integer> b_mstar;
};

inline ExchangeMiddleTerms exchange_middle_terms(const Triangulation& tri, const Diagonal& d) {
    const auto q = quadrilateral(tri, d);
    ExchangeMiddleTerms out{std::vector<Integer>(tri.rank()), std::vector<Integer>(tri.rank())};
    for (std::size_t s = 0; s < 4; ++s) {
        const int x = q[s];
        const int y = q[(s + 1) % 4];
        if (tri.is_boundary(x, y)) continue;
        const auto idx = tri.index_of(Diagonal(x, y));
        auto& target = (s % 2 == 0) ? out.b_m : out.b_mstar;
        target[*idx] += 1;
    }
    return out;
}

/// [B_{M*}] - [B_M]: the relation d contributes to K_0.
inline std::vector<Integer> exchange_relation(const Triangulation& tri, const Diagonal& d) {
    auto terms = exchange_middle_terms(tri, d);
    for (std::size_t i = 0; i < terms.b_mstar.size(); ++i) terms.b_mstar[i] -= terms.b_m[i];
    return terms.b_mstar;
}

/// Approximation triangle data for replacing d by its flip, expressed over
/// the slot order of tri (the flipped diagonal inherits d's slot). With the
/// counterclockwise quiver convention the right approximation of d is the
/// middle term made of the arrows ending at d, i.e. the {s2, s4} term.
inline ApproxTriangleData flip_triangle_data(const Triangulation& tri, const Diagonal& d) {
    const FlipResult flipped = flip(tri, d);
    const std::size_t k = *tri.index_of(d);
    const std::size_t n = tri.rank();
    std::vector<std::string> new_labels = tri.labels();
    new_labels[k] = flipped.move.inserted.label();
    IntMatrix alpha = IntMatrix::identity(n);
    IntMatrix beta(n, n);
    const auto terms = exchange_middle_terms(tri, d);
    alpha(k, k) = 0;
    for (std::size_t i = 0; i < n; ++i) alpha(i, k) = terms.b_mstar[i];
    beta(k, k) = 1;
    return {std::move(new_labels), tri.labels(), std::move(alpha), std::move(beta)};
}

/// Default cap on visited states for flip_path; MUTWB_MAX_BFS overrides it.
inline std::size_t max_bfs_states() {
    constexpr std::size_t fallback = 1'000'000;
    if (const char* env = std::getenv("MUTWB_MAX_BFS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

/// Shortest flip sequence by breadth-first search. Neighbours are expanded
/// by flipping diagonals in canonical order, so the result is deterministic.
inline std::vector<FlipMove> flip_path(const Triangulation& from, const Triangulation& to,
                                       std::size_t max_states = max_bfs_states()) {
    if (from.polygon_size() != to.polygon_size())
        throw Error(Errc::PolygonMismatch, std::to_string(from.polygon_size()) + "-gon vs " +
                                               std::to_string(to.polygon_size()) + "-gon");
    if (from == to) return {};

    struct Visit {
        std::optional<Triangulation> parent;
        FlipMove move;
    };
    std::map<Triangulation, Visit> seen;
    seen.emplace(from, Visit{std::nullopt, {}});
    std::deque<Triangulation> frontier{from};
    while (!frontier.empty()) {
        const Triangulation cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& d : cur.diagonals()) {
            FlipResult next = flip(cur, d);
            if (seen.contains(next.triangulation)) continue;
            if (seen.size() >= max_states)
                throw Error(Errc::SearchLimitExceeded, "flip graph search visited " + std::to_string(max_states) + " states");
            seen.emplace(next.triangulation, Visit{cur, next.move});
            if (next.triangulation == to) {
                std::vector<FlipMove> path;
                for (auto it = seen.find(to); it->second.parent; it = seen.find(*it->second.parent))
                    path.push_back(it->second.move);
                std::reverse(path.begin(), path.end());
                return path;
            }
            frontier.push_back(std::move(next.triangulation));
        }
    }
    throw std::logic_error("flip graph of a polygon is connected");
}

/// T relating the exchange matrices of two triangulations, composed from
/// single-step T-matrices along flip_path. Columns follow `from`'s
/// diagonals, rows `to`'s, both in canonical order.
inline TMatrix composed_t(const Triangulation& from, const Triangulation& to) {
    const std::vector<FlipMove> path = flip_path(from, to);
    std::vector<Diagonal> slots = from.diagonals();
    Triangulation cur = from;
    IntMatrix t = IntMatrix::identity(from.rank());
    for (const auto& move : path) {
        const std::size_t k = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), move.removed) - slots.begin());
        t = single_step_t(exchange_matrix(cur, slots), k).t * t;
        cur = flip(cur, move.removed).triangulation;
        slots[k] = move.inserted;
    }
    // Reorder rows from slot order to the canonical order of `to`.
    IntMatrix perm(to.rank(), to.rank());
    for (std::size_t s = 0; s < slots.size(); ++s) perm(*to.index_of(slots[s]), s) = 1;
    return {perm * t, to.labels(), from.labels()};
}

/// Every triangulation of the m-gon, sorted.
inline std::vector<Triangulation> enumerate_triangulations(int m) {
    if (m < 4) throw Error(Errc::PolygonTooSmall, std::to_string(m) + "-gon");
    // Diagonal sets of the sub-polygon on vertices lo..hi (consecutive).
    std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>> memo;
    auto solve = [&](auto&& self, int lo, int hi) -> const std::vector<std::vector<Diagonal>>& {
        if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
        std::vector<std::vector<Diagonal>> out;
        if (hi - lo < 2) {
            out.emplace_back();
        } else {
            for (int apex = lo + 1; apex < hi; ++apex) {
                const auto& left = self(self, lo, apex);
                const auto& right = self(self, apex, hi);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        std::vector<Diagonal> d = l;
                        d.insert(d.end(), r.begin(), r.end());
                        if (apex - lo > 1) d.emplace_back(lo, apex);
                        if (hi - apex > 1) d.emplace_back(apex, hi);
                        out.push_back(std::move(d));
                    }
            }
        }
        return memo.emplace(std::pair{lo, hi}, std::move(out)).first->second;
    };
    std::vector<Triangulation> all;
    for (const auto& d : solve(solve, 0, m - 1)) all.push_back(validate(m, d));
    std::sort(all.begin(), all.end());
    return all;
}

/// Random walk of `steps` flips starting from the fan at 0.
template <class Rng>
Triangulation random_triangulation(int m, Rng& rng, std::size_t steps = 0) {
    Triangulation tri = fan(m);
    if (steps == 0) steps = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
    for (std::size_t s = 0; s < steps; ++s) {
        std::uniform_int_distribution<std::size_t> pick(0, tri.rank() - 1);
        tri = flip(tri, tri.diagonals()[pick(rng)]).triangulation;
    }
    return tri;
}

/// Grothendieck group Z^n / Im B of the cluster category of type A_{m-3}.
inline AbelianGroupDescriptor k0_of_type_a(int m) {
    if (m < 4) throw Error(Errc::PolygonTooSmall, "k0 needs m >= 4, got " + std::to_string(m));
    return cokernel(exchange_matrix(fan(m)).matrix());
}

}  // namespace mutwb::typea
