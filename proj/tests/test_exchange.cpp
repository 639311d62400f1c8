#include <gtest/gtest.h>

#include <random>

#include "mutwb/exchange.hpp"
#include "oracles.hpp"

using namespace mutwb;

namespace {

const IntMatrix kA3Linear{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
const IntMatrix kWildBM{{0, 2, 2}, {-2, 0, 0}, {-2, 0, 0}};

template <class F>
void for_random_skew(unsigned seed, int count, F&& f) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int i = 0; i < count; ++i) f(ExchangeMatrix(oracle::random_skew(rng, dim(rng), 5)), rng);
}

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::Parse;
}

}  // namespace

TEST(ExchangeMatrix, RejectsBadInput) {
    EXPECT_EQ(code_of([] { ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}); }), Errc::NotSkewSymmetric);
    EXPECT_EQ(code_of([] { ExchangeMatrix(IntMatrix(2, 3)); }), Errc::NotSquare);
    EXPECT_EQ(code_of([] { ExchangeMatrix(IntMatrix(2, 2), {"a"}); }), Errc::DimensionMismatch);
    EXPECT_EQ(code_of([] { ExchangeMatrix(IntMatrix(2, 2), {"a", "a"}); }), Errc::LabelMismatch);
    EXPECT_EQ(ExchangeMatrix(IntMatrix(2, 2)).labels(), (std::vector<std::string>{"0", "1"}));
}

TEST(FzMutate, Examples) {
    EXPECT_TRUE(fz_mutate(ExchangeMatrix(IntMatrix::zero(3, 3)), 2).matrix().is_zero());
    EXPECT_EQ(fz_mutate(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}), 0).matrix(), (IntMatrix{{0, -1}, {1, 0}}));
    EXPECT_EQ(fz_mutate(ExchangeMatrix(kA3Linear), 1).matrix(), (IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST(FzMutate, KeepsLabelsAndRejectsBadIndex) {
    const ExchangeMatrix b(kA3Linear, {"x", "y", "z"});
    EXPECT_EQ(fz_mutate(b, 0).labels(), b.labels());
    EXPECT_EQ(code_of([&] { fz_mutate(b, 3); }), Errc::IndexOutOfRange);
    EXPECT_EQ(code_of([&] { s_matrix(b, 7); }), Errc::IndexOutOfRange);
    EXPECT_EQ(code_of([&] { mutate_via_s(b, 3); }), Errc::IndexOutOfRange);
}

TEST(FzMutate, InvolutionAndSkewClosure) {
    for_random_skew(21, 300, [](const ExchangeMatrix& b, auto&) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            const ExchangeMatrix once = fz_mutate(b, k);
            EXPECT_TRUE(once.matrix().is_skew_symmetric());
            EXPECT_EQ(fz_mutate(once, k), b);
        }
    });
}

TEST(SMatrix, Examples) {
    IntMatrix expected = IntMatrix::identity(4);
    expected(2, 2) = -1;
    EXPECT_EQ(s_matrix(ExchangeMatrix(IntMatrix::zero(4, 4)), 2), expected);
    EXPECT_EQ(s_matrix(ExchangeMatrix(kA3Linear), 1), (IntMatrix{{1, 0, 0}, {1, -1, 0}, {0, 0, 1}}));
}

TEST(SMatrix, SquaresToIdentityAndTransposeFormula) {
    for_random_skew(22, 300, [](const ExchangeMatrix& b, auto&) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            const IntMatrix s = s_matrix(b, k);
            EXPECT_TRUE((s * s).is_identity());
            const IntMatrix st = s.transpose();
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j) {
                    const Integer delta = i == j ? 1 : 0;
                    const Integer want = j == k ? Integer(-delta + (abs(b(i, j)) + b(i, j)) / 2) : delta;
                    EXPECT_EQ(st(i, j), want);
                }
        }
    });
}

TEST(MutateViaS, Examples) {
    EXPECT_TRUE(mutate_via_s(ExchangeMatrix(IntMatrix::zero(3, 3)), 0).matrix().is_zero());
    EXPECT_EQ(mutate_via_s(ExchangeMatrix(kA3Linear), 1).matrix(), (IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
    const ExchangeMatrix wild(kWildBM);
    const IntMatrix expected{{0, -2, -2}, {2, 0, 0}, {2, 0, 0}};
    EXPECT_EQ(fz_mutate(wild, 0).matrix(), expected);
    EXPECT_EQ(mutate_via_s(wild, 0).matrix(), expected);
}

TEST(MutateViaS, AgreesWithFormula) {
    for_random_skew(23, 300, [](const ExchangeMatrix& b, auto&) {
        for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(mutate_via_s(b, k), fz_mutate(b, k));
    });
}

TEST(Quiver, WildExampleQuiverToMatrix) {
    const Quiver q({"0", "1", "2"}, {{"1", "0", 6}, {"0", "2", 2}, {"2", "1", 4}});
    const ExchangeMatrix b = quiver_to_matrix(q);
    EXPECT_EQ(b.matrix(), (IntMatrix{{0, -6, 2}, {6, 0, -4}, {-2, 4, 0}}));
    EXPECT_EQ(matrix_to_quiver(b), q);
}

TEST(Quiver, EmptyQuiver) {
    EXPECT_TRUE(quiver_to_matrix(Quiver({"a", "b", "c"}, {})).matrix().is_zero());
}

TEST(Quiver, Validation) {
    EXPECT_EQ(code_of([] { Quiver({"a"}, {{"a", "a", 1}}); }), Errc::InvalidQuiver);
    EXPECT_EQ(code_of([] { Quiver({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}}); }), Errc::InvalidQuiver);
    EXPECT_EQ(code_of([] { Quiver({"a", "b"}, {{"a", "b", 1}, {"a", "b", 2}}); }), Errc::InvalidQuiver);
    EXPECT_EQ(code_of([] { Quiver({"a", "b"}, {{"a", "b", 0}}); }), Errc::InvalidQuiver);
    EXPECT_EQ(code_of([] { Quiver({"a", "b"}, {{"a", "c", 1}}); }), Errc::InvalidQuiver);
}

TEST(Quiver, RoundTripOnRandomMatrices) {
    for_random_skew(24, 200, [](const ExchangeMatrix& b, auto&) { EXPECT_EQ(quiver_to_matrix(matrix_to_quiver(b)), b); });
}

TEST(Pairing, BasisVectorsGiveEntries) {
    const ExchangeMatrix b(kWildBM);
    for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t n = 0; n < 3; ++n) {
            std::vector<Integer> el(3), en(3);
            el[l] = 1;
            en[n] = 1;
            EXPECT_EQ(antisymmetric_pairing(b, el, en), b(l, n));
        }
    std::vector<Integer> short_vec(2);
    EXPECT_EQ(code_of([&] { antisymmetric_pairing(b, short_vec, short_vec); }), Errc::DimensionMismatch);
}

TEST(Pairing, AntisymmetricAndBilinear) {
    for_random_skew(25, 200, [](const ExchangeMatrix& b, auto& rng) {
        std::uniform_int_distribution<int> entry(-7, 7);
        auto vec = [&] {
            std::vector<Integer> v(b.size());
            for (auto& x : v) x = entry(rng);
            return v;
        };
        const auto x = vec(), x2 = vec(), y = vec();
        std::vector<Integer> sum(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) sum[i] = x[i] + x2[i];
        EXPECT_EQ(antisymmetric_pairing(b, x, x), 0);
        EXPECT_EQ(antisymmetric_pairing(b, x, y), -antisymmetric_pairing(b, y, x));
        EXPECT_EQ(antisymmetric_pairing(b, sum, y), antisymmetric_pairing(b, x, y) + antisymmetric_pairing(b, x2, y));
    });
}
