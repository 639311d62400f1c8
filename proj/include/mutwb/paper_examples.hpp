#pragma once
// The two worked examples of generalized mutation, as regression fixtures:
//
//  * a4:   cluster category of A_4 (1->2->3->4), T read off four
//          approximation triangles and checked against the printed B_M and
//          B_M'. The third printed triangle reads "Sigma^-1 M3 -> M'4 -> 0 ->
//          M4"; its column is taken as the one forced by the printed T, i.e.
//          the triangle of M3.
//  * wild: Kronecker-like quiver 0 => 1, 0 => 2 with three projective
//          resolutions of the new summands over the old ones. These give T in
//          the opposite direction, so the new matrix is T^-1 B_M T^-t.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutwb/exchange.hpp"
#include "mutwb/genmut.hpp"
#include "mutwb/intlinalg.hpp"
#include "mutwb/json_io.hpp"

namespace mutwb::paper {

struct A4Fixture {
    ApproxTriangleData triangles;  // new = M'_i, old = M_j
    IntMatrix expected_t;
    IntMatrix b_m_prime;
    IntMatrix b_m;
};

struct WildFixture {
    ApproxTriangleData resolutions;  // new = M_i, old = M'_j
    IntMatrix expected_t;
    IntMatrix b_m;
    std::vector<Arrow> expected_arrows;  // quiver of M'
};

struct Fixtures {
    A4Fixture a4;
    WildFixture wild;
};

inline Fixtures default_fixtures() {
    Fixtures f;
    f.a4.triangles = {
        {"M'1", "M'2", "M'3", "M'4"},
        {"M1", "M2", "M3", "M4"},
        // alpha: the third term of each triangle
        IntMatrix{{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
        // beta: the second term
        IntMatrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}},
    };
    f.a4.expected_t = {{1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, -1}};
    f.a4.b_m_prime = {{0, -1, 1, 0}, {1, 0, -1, 0}, {-1, 1, 0, -1}, {0, 0, 1, 0}};
    f.a4.b_m = {{0, 1, 0, 0}, {-1, 0, -1, 1}, {0, 1, 0, -1}, {0, -1, 1, 0}};

    // 0 -> 3M0 -> 2M1 -> M'0 -> 0,  0 -> 2M0 -> M1 -> M'1 -> 0,
    // 0 -> 8M0 -> M2 + 4M1 -> M'2 -> 0
    f.wild.resolutions = {
        {"M0", "M1", "M2"},
        {"M'0", "M'1", "M'2"},
        IntMatrix{{0, 0, 0}, {2, 1, 4}, {0, 0, 1}},
        IntMatrix{{3, 2, 8}, {0, 0, 0}, {0, 0, 0}},
    };
    f.wild.expected_t = {{-3, -2, -8}, {2, 1, 4}, {0, 0, 1}};
    f.wild.b_m = {{0, 2, 2}, {-2, 0, 0}, {-2, 0, 0}};
    f.wild.expected_arrows = {{"M'1", "M'0", 6}, {"M'0", "M'2", 2}, {"M'2", "M'1", 4}};
    return f;
}

inline nlohmann::json to_json(const Fixtures& f) {
    using json_io::to_json;
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : f.wild.expected_arrows)
        arrows.push_back(nlohmann::json::array({a.source, a.target, to_json(a.multiplicity)}));
    return {
        {"a4",
         {{"triangles", to_json(f.a4.triangles)},
          {"T", to_json(f.a4.expected_t)},
          {"B_M_prime", to_json(f.a4.b_m_prime)},
          {"B_M", to_json(f.a4.b_m)}}},
        {"wild",
         {{"resolutions", to_json(f.wild.resolutions)},
          {"T", to_json(f.wild.expected_t)},
          {"B_M", to_json(f.wild.b_m)},
          {"arrows", std::move(arrows)}}},
    };
}

inline Fixtures fixtures_from_json(const nlohmann::json& j) {
    using json_io::integer_from_json;
    using json_io::matrix_from_json;
    using json_io::triangles_from_json;
    Fixtures f;
    const auto& a4 = json_io::detail::field(j, "a4");
    f.a4.triangles = triangles_from_json(json_io::detail::field(a4, "triangles"));
    f.a4.expected_t = matrix_from_json(json_io::detail::field(a4, "T"));
    f.a4.b_m_prime = matrix_from_json(json_io::detail::field(a4, "B_M_prime"));
    f.a4.b_m = matrix_from_json(json_io::detail::field(a4, "B_M"));
    const auto& wild = json_io::detail::field(j, "wild");
    f.wild.resolutions = triangles_from_json(json_io::detail::field(wild, "resolutions"));
    f.wild.expected_t = matrix_from_json(json_io::detail::field(wild, "T"));
    f.wild.b_m = matrix_from_json(json_io::detail::field(wild, "B_M"));
    for (const auto& a : json_io::detail::field(wild, "arrows")) {
        if (!a.is_array() || a.size() != 3) throw Error(Errc::Parse, "arrow must be [source, target, multiplicity]");
        f.wild.expected_arrows.push_back({a[0].get<std::string>(), a[1].get<std::string>(), integer_from_json(a[2])});
    }
    return f;
}

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::string text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) os << " -- " << c.detail;
            os << '\n';
        }
        std::size_t ok = 0;
        for (const auto& c : checks) ok += c.passed ? 1 : 0;
        os << ok << "/" << checks.size() << " checks passed\n";
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return {{"passed", passed()}, {"checks", std::move(list)}};
    }
};

namespace detail {

/// Empty when equal, otherwise the first differing entry or the shape clash.
inline std::string matrix_diff(const IntMatrix& expected, const IntMatrix& actual) {
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
        return "shape " + actual.shape_string() + ", expected " + expected.shape_string();
    for (std::size_t i = 0; i < expected.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
            if (expected(i, j) != actual(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): expected " + expected(i, j).str() +
                       ", got " + actual(i, j).str();
    return {};
}

class Recorder {
public:
    explicit Recorder(Report& r) : report_(r) {}

    /// Runs `body`, which returns an empty string on success or a diff.
    template <class F>
    void check(std::string name, F&& body) {
        Check c{std::move(name), false, {}};
        try {
            c.detail = body();
            c.passed = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("error: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    Report& report_;
};

}  // namespace detail

inline Report verify(const Fixtures& f = default_fixtures()) {
    Report report;
    detail::Recorder rec(report);

    // A_4 example
    std::optional<TMatrix> t4;
    rec.check("a4: T from approximation triangles", [&] {
        t4 = t_from_triangles(f.a4.triangles);
        return detail::matrix_diff(f.a4.expected_t, t4->t);
    });
    rec.check("a4: T is unimodular", [&]() -> std::string {
        const Integer det = determinant(t4.value().t);
        return abs(det) == 1 ? "" : "det T = " + det.str();
    });
    rec.check("a4: T^-1 B_M' T^-t equals B_M", [&] {
        const ExchangeMatrix b_new(f.a4.b_m_prime, t4.value().new_labels);
        return detail::matrix_diff(f.a4.b_m, generalized_mutate_inverse(b_new, *t4).matrix());
    });
    rec.check("a4: T B_M T^t equals B_M'", [&] {
        const ExchangeMatrix b_old(f.a4.b_m, t4.value().old_labels);
        return detail::matrix_diff(f.a4.b_m_prime, generalized_mutate(b_old, *t4).matrix());
    });

    // wild example
    std::optional<TMatrix> tw;
    rec.check("wild: T from projective resolutions", [&] {
        tw = t_from_triangles(f.wild.resolutions);
        return detail::matrix_diff(f.wild.expected_t, tw->t);
    });
    rec.check("wild: T is unimodular", [&]() -> std::string {
        const Integer det = determinant(tw.value().t);
        return abs(det) == 1 ? "" : "det T = " + det.str();
    });
    rec.check("wild: quiver of M' from the generalized rule", [&]() -> std::string {
        const ExchangeMatrix b_m(f.wild.b_m, tw.value().new_labels);
        const Quiver got = matrix_to_quiver(generalized_mutate_inverse(b_m, *tw));
        const Quiver want(tw->old_labels, f.wild.expected_arrows);
        if (got == want) return {};
        std::string diff;
        for (const auto& s : want.vertices())
            for (const auto& t : want.vertices()) {
                const Integer w = want.arrows_between(s, t);
                const Integer g = got.arrows_between(s, t);
                if (w != g && diff.empty())
                    diff = "arrows " + s + "->" + t + ": expected " + w.str() + ", got " + g.str();
            }
        return diff;
    });
    return report;
}

}  // namespace mutwb::paper
