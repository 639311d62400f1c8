#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "mutwb/typea.hpp"
#include "oracles.hpp"

using namespace mutwb;
using namespace mutwb::typea;

namespace {

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::Parse;
}

std::vector<Integer> indicator(std::size_t n, std::size_t i) {
    std::vector<Integer> v(n);
    v[i] = 1;
    return v;
}

const Triangulation kHexFan = validate(6, {{0, 2}, {0, 3}, {0, 4}});

}  // namespace

TEST(Validate, AcceptsTriangulations) {
    EXPECT_EQ(validate(4, {{0, 2}}).rank(), 1u);
    EXPECT_EQ(kHexFan.rank(), 3u);
    // Input order and endpoint order do not matter.
    EXPECT_EQ(validate(6, {{4, 0}, {2, 0}, {3, 0}}), kHexFan);
}

TEST(Validate, Violations) {
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {1, 3}, {0, 4}}); }), Errc::Crossing);
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {0, 3}}); }), Errc::WrongCount);
    EXPECT_EQ(code_of([] { validate(6, {{0, 1}, {0, 3}, {0, 4}}); }), Errc::BoundaryEdge);
    EXPECT_EQ(code_of([] { validate(6, {{0, 5}, {0, 3}, {0, 4}}); }), Errc::BoundaryEdge);
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {0, 2}, {0, 4}}); }), Errc::WrongCount);
    EXPECT_EQ(code_of([] { validate(3, {}); }), Errc::PolygonTooSmall);
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {0, 3}, {0, 9}}); }), Errc::IndexOutOfRange);
}

TEST(Crosses, StrictInteriorOnly) {
    EXPECT_TRUE(crosses({0, 2}, {1, 3}));
    EXPECT_FALSE(crosses({0, 2}, {0, 3}));
    EXPECT_FALSE(crosses({0, 2}, {3, 5}));
    EXPECT_FALSE(crosses({1, 4}, {2, 3}));
}

TEST(QuiverOf, SmallCases) {
    const Quiver a1 = quiver_of(validate(4, {{0, 2}}));
    EXPECT_EQ(a1.vertices().size(), 1u);
    EXPECT_TRUE(a1.arrows().empty());

    // Shared triangle (0,2,3): sides 0-2, 2-3, 3-0 counterclockwise.
    const Quiver a2 = quiver_of(fan(5));
    ASSERT_EQ(a2.arrows().size(), 1u);
    EXPECT_EQ(a2.arrows()[0], (Arrow{"0-3", "0-2", 1}));
}

TEST(QuiverOf, HexagonFanIsLinearA3) {
    const IntMatrix b = exchange_matrix(kHexFan).matrix();
    const IntMatrix a3{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    EXPECT_EQ(b, -a3);
    EXPECT_EQ(exchange_matrix(kHexFan).labels(), (std::vector<std::string>{"0-2", "0-3", "0-4"}));
}

TEST(QuiverOf, InternalTriangleGivesOrientedCycle) {
    const Triangulation t = validate(6, {{0, 2}, {2, 4}, {0, 4}});
    const Quiver q = quiver_of(t);
    EXPECT_EQ(q.arrows().size(), 3u);
    const IntMatrix b = quiver_to_matrix(q).matrix();
    EXPECT_EQ(b * IntMatrix({{1}, {1}, {1}}), IntMatrix::zero(3, 1));
}

TEST(Flip, Examples) {
    const auto r4 = flip(validate(4, {{0, 2}}), {0, 2});
    EXPECT_EQ(r4.triangulation, validate(4, {{1, 3}}));
    EXPECT_EQ(r4.move, (FlipMove{{0, 2}, {1, 3}}));

    const auto r6 = flip(kHexFan, {0, 3});
    EXPECT_EQ(r6.triangulation, validate(6, {{0, 2}, {2, 4}, {0, 4}}));
    EXPECT_EQ(r6.move.inserted, (Diagonal{2, 4}));

    EXPECT_EQ(code_of([] { flip(kHexFan, {1, 3}); }), Errc::NotADiagonal);
}

TEST(Flip, InvolutionOnAllSmallTriangulations) {
    for (int m = 4; m <= 9; ++m)
        for (const auto& tri : enumerate_triangulations(m))
            for (const auto& d : tri.diagonals()) {
                const auto once = flip(tri, d);
                EXPECT_EQ(flip(once.triangulation, once.move.inserted).triangulation, tri);
            }
}

TEST(Enumerate, CatalanCountsAndCanonicalOrder) {
    for (int m = 4; m <= 10; ++m) {
        const auto all = enumerate_triangulations(m);
        EXPECT_EQ(all.size(), oracle::catalan_triangulations(m)) << m;
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        EXPECT_EQ(std::set<Triangulation>(all.begin(), all.end()).size(), all.size());
        for (const auto& t : all) EXPECT_EQ(t.rank(), static_cast<std::size_t>(m - 3));
    }
}

TEST(ExchangeMiddleTerms, Examples) {
    const auto sq = exchange_middle_terms(validate(4, {{0, 2}}), {0, 2});
    EXPECT_EQ(sq.b_m, std::vector<Integer>(1));
    EXPECT_EQ(sq.b_mstar, std::vector<Integer>(1));

    const auto pent = exchange_middle_terms(fan(5), {0, 3});
    EXPECT_EQ(pent.b_m, indicator(2, 0));
    EXPECT_EQ(pent.b_mstar, std::vector<Integer>(2));

    const auto hex = exchange_middle_terms(kHexFan, {0, 3});
    EXPECT_EQ(hex.b_m, indicator(3, 0));
    EXPECT_EQ(hex.b_mstar, indicator(3, 2));

    EXPECT_EQ(code_of([] { exchange_middle_terms(kHexFan, {2, 4}); }), Errc::NotADiagonal);
}

TEST(ExchangeRelation, Examples) {
    EXPECT_EQ(exchange_relation(validate(4, {{0, 2}}), {0, 2}), std::vector<Integer>(1));
    const auto rel = exchange_relation(kHexFan, {0, 3});
    EXPECT_EQ(rel, (std::vector<Integer>{-1, 0, 1}));
    const auto row = exchange_matrix(kHexFan).matrix().row(1);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rel[i], -row[i]);
}

TEST(ExchangeRelation, IsMinusRowOfExchangeMatrixExhaustively) {
    for (int m = 4; m <= 9; ++m)
        for (const auto& tri : enumerate_triangulations(m)) {
            const IntMatrix b = exchange_matrix(tri).matrix();
            for (std::size_t k = 0; k < tri.rank(); ++k) {
                const auto rel = exchange_relation(tri, tri.diagonals()[k]);
                for (std::size_t i = 0; i < tri.rank(); ++i) ASSERT_EQ(rel[i], -b(k, i));
            }
        }
}

TEST(FlipTriangleData, GivesSingleStepT) {
    for (int m = 4; m <= 8; ++m)
        for (const auto& tri : enumerate_triangulations(m))
            for (std::size_t k = 0; k < tri.rank(); ++k) {
                const TMatrix from_triangles = t_from_triangles(flip_triangle_data(tri, tri.diagonals()[k]));
                EXPECT_EQ(from_triangles.t, single_step_t(exchange_matrix(tri), k).t);
            }
}

TEST(FzCompatibility, FlipMatchesMutationExhaustively) {
    for (int m = 4; m <= 9; ++m)
        for (const auto& tri : enumerate_triangulations(m)) {
            const ExchangeMatrix b = exchange_matrix(tri);
            for (std::size_t k = 0; k < tri.rank(); ++k) {
                const auto r = flip(tri, tri.diagonals()[k]);
                std::vector<Diagonal> slots = tri.diagonals();
                slots[k] = r.move.inserted;
                ASSERT_EQ(exchange_matrix(r.triangulation, slots).matrix(), fz_mutate(b, k).matrix());
            }
        }
}

TEST(FlipPath, Examples) {
    EXPECT_TRUE(flip_path(kHexFan, kHexFan).empty());
    const auto one = flip_path(validate(4, {{0, 2}}), validate(4, {{1, 3}}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (FlipMove{{0, 2}, {1, 3}}));

    const Triangulation fan3 = validate(6, {{3, 5}, {1, 3}, {3, 0}});
    EXPECT_EQ(flip_path(kHexFan, fan3).size(), 2u);
    EXPECT_EQ(code_of([] { flip_path(fan(5), fan(6)); }), Errc::PolygonMismatch);
}

TEST(FlipPath, MinimalAgainstFloydWarshall) {
    for (int m = 4; m <= 8; ++m) {
        const auto all = enumerate_triangulations(m);
        const auto dist = oracle::flip_distances(all);
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = 0; j < all.size(); j += 5) {
                const auto path = flip_path(all[i], all[j]);
                EXPECT_EQ(static_cast<int>(path.size()), dist[i][j]);
                Triangulation cur = all[i];
                for (const auto& mv : path) {
                    const auto r = flip(cur, mv.removed);
                    EXPECT_EQ(r.move, mv);
                    cur = r.triangulation;
                }
                EXPECT_EQ(cur, all[j]);
            }
    }
}

TEST(FlipPath, Deterministic) {
    const auto a = fan(9, 0), b = fan(9, 4);
    EXPECT_EQ(flip_path(a, b), flip_path(a, b));
}

TEST(FlipPath, SearchCap) {
    EXPECT_EQ(code_of([] { flip_path(fan(9, 0), fan(9, 4), 3); }), Errc::SearchLimitExceeded);
    ::setenv("MUTWB_MAX_BFS", "3", 1);
    EXPECT_EQ(max_bfs_states(), 3u);
    EXPECT_EQ(code_of([] { flip_path(fan(9, 0), fan(9, 4)); }), Errc::SearchLimitExceeded);
    ::unsetenv("MUTWB_MAX_BFS");
    EXPECT_EQ(max_bfs_states(), 1'000'000u);
}

TEST(ComposedT, IdentityAndSingleFlip) {
    const TMatrix id = composed_t(kHexFan, kHexFan);
    EXPECT_TRUE(id.t.is_identity());

    // Flipping 0-3 to 2-4 moves the slot to the end of the canonical order.
    const auto r = flip(kHexFan, {0, 3});
    const TMatrix t = composed_t(kHexFan, r.triangulation);
    const IntMatrix step = single_step_t(exchange_matrix(kHexFan), 1).t;
    const IntMatrix to_canonical{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    EXPECT_EQ(t.t, to_canonical * step);
    EXPECT_EQ(t.old_labels, kHexFan.labels());
    EXPECT_EQ(t.new_labels, r.triangulation.labels());
}

TEST(ComposedT, RelatesExchangeMatricesOfRandomPairs) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> polygon(4, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = polygon(rng);
        const auto a = random_triangulation(m, rng);
        const auto b = random_triangulation(m, rng);
        const TMatrix t = composed_t(a, b);
        EXPECT_EQ(abs(oracle::cofactor_det(t.t)), 1);
        EXPECT_EQ(generalized_mutate(exchange_matrix(a), t), exchange_matrix(b));
    }
}

TEST(K0, TypeA) {
    EXPECT_EQ(k0_of_type_a(4).to_string(), "Z");
    EXPECT_TRUE(k0_of_type_a(5).is_trivial());
    EXPECT_EQ(k0_of_type_a(6), (AbelianGroupDescriptor{1, {}}));
    EXPECT_TRUE(k0_of_type_a(7).is_trivial());
    EXPECT_EQ(code_of([] { k0_of_type_a(3); }), Errc::PolygonTooSmall);
}

TEST(K0, ConstantOverFlipClass) {
    for (int m = 4; m <= 9; ++m) {
        const auto expected = k0_of_type_a(m);
        for (const auto& tri : enumerate_triangulations(m)) ASSERT_EQ(cokernel(exchange_matrix(tri).matrix()), expected);
    }
}
