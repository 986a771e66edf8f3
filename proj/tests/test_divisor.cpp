#include <gtest/gtest.h>

#include <fatpoints/divisor.hpp>

#include <random>

#include "oracles.hpp"

using namespace fatpoints;

TEST(Binomial, SmallValuesAndEdges) {
    EXPECT_EQ(binomial(5, 3), 10);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(3, 4), 0);
    EXPECT_EQ(binomial(-1, 0), 0);
    EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
}

TEST(VirtualDimension, QuotedValues) {
    EXPECT_EQ(virtual_dimension(uniform_class(4, 3, 2, 7)), -1);
    EXPECT_EQ(virtual_dimension(uniform_class(4, 8, 4, 14)), 4);
    EXPECT_EQ(virtual_dimension(uniform_class(3, 3, 3, 3)), -11);
    EXPECT_EQ(virtual_dimension(DivisorClass(3, 2)), 9);
    EXPECT_EQ(virtual_dimension(uniform_class(3, 4, 2, 9)), -2);
}

TEST(VirtualDimension, NonPositiveMultiplicitiesImposeNothing) {
    EXPECT_EQ(virtual_dimension(DivisorClass(2, 3, {0, -2, 1})), virtual_dimension(DivisorClass(2, 3, {1})));
}

TEST(VirtualDimension, RejectsBadAmbient) {
    EXPECT_THROW(virtual_dimension(DivisorClass(0, 2, {1})), std::invalid_argument);
}

TEST(VirtualDimension, MatchesEnumerationOracle) {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + rng() % 4, d = rng() % 7;
        std::vector<int> m(rng() % 5);
        for (auto& x : m) x = rng() % 5;
        DivisorClass D(n, d, std::vector<std::int64_t>(m.begin(), m.end()));
        EXPECT_EQ(virtual_dimension(D), oracle::virtual_dimension(n, d, m)) << n << " " << d;
    }
}

TEST(VirtualDimension, Monotonicity) {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + rng() % 5;
        DivisorClass D(n, rng() % 10, std::vector<std::int64_t>(1 + rng() % 6));
        for (auto& m : D.mults) m = 1 + rng() % 4;
        auto v = virtual_dimension(D);
        auto up = D;
        ++up.d;
        EXPECT_GT(virtual_dimension(up), v);
        auto heavier = D;
        ++heavier.mults[rng() % heavier.mults.size()];
        EXPECT_LT(virtual_dimension(heavier), v);
    }
}

TEST(VirtualDimension, ArbitraryPrecision) {
    // binom(260, 60) alone exceeds 2^64
    auto v = virtual_dimension(DivisorClass(60, 200));
    EXPECT_EQ(v, binomial(260, 60) - 1);
    EXPECT_GT(v, Integer(std::numeric_limits<std::uint64_t>::max()));
}

TEST(ExpectedDimension, ClampsAtMinusOne) {
    EXPECT_EQ(expected_dimension(uniform_class(3, 3, 3, 3)), -1);
    EXPECT_EQ(expected_dimension(uniform_class(4, 8, 4, 14)), 4);
    EXPECT_EQ(expected_dimension(uniform_class(3, 2, 1, 9)), 0);
    EXPECT_EQ(expected_dimension(uniform_class(3, 2, 1, 11)), -1);
}

TEST(Speciality, Values) {
    EXPECT_EQ(speciality(0, uniform_class(4, 3, 2, 7)), 1);
    EXPECT_EQ(speciality(0, uniform_class(3, 3, 3, 3)), 11);
    auto D = uniform_class(2, 5, 1, 4);
    EXPECT_EQ(speciality(virtual_dimension(D), D), 0);
}

TEST(Speciality, ExpectedIsNeverBelowVirtual) {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        DivisorClass D(1 + rng() % 4, rng() % 8, std::vector<std::int64_t>(rng() % 8));
        for (auto& m : D.mults) m = rng() % 5;
        auto s = speciality(expected_dimension(D), D);
        EXPECT_GE(s, 0);
        EXPECT_EQ(s == 0, virtual_dimension(D) >= -1);
    }
}

TEST(Intersect, QuotedPairings) {
    auto rnc = make_rational_normal_curve(4, 7, {0, 1, 2, 3, 4, 5, 6});
    EXPECT_EQ(intersect(uniform_class(4, 3, 2, 7), rnc), -2);
    EXPECT_EQ(intersect(uniform_class(3, 2, 1, 9), make_line(9, 0, 1)), 0);
    EXPECT_EQ(intersect(uniform_class(2, 4, 2, 5), make_conic(5, {0, 1, 2, 3, 4})), -2);
}

TEST(Intersect, LengthMismatch) {
    EXPECT_THROW(intersect(uniform_class(3, 2, 1, 4), make_line(5, 0, 1)), std::invalid_argument);
}

TEST(Intersect, Bilinear) {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t r = 2 + rng() % 6;
        auto rand_class = [&] {
            DivisorClass D(3, static_cast<std::int64_t>(rng() % 20) - 5, std::vector<std::int64_t>(r));
            for (auto& m : D.mults) m = static_cast<std::int64_t>(rng() % 9) - 3;
            return D;
        };
        auto D1 = rand_class(), D2 = rand_class();
        CurveClass C{static_cast<std::int64_t>(1 + rng() % 4), std::vector<std::int64_t>(r), CurveFamily::Line};
        for (auto& e : C.e) e = rng() % 3;
        DivisorClass sum(3, 2 * D1.d - 3 * D2.d, std::vector<std::int64_t>(r));
        for (std::size_t i = 0; i < r; ++i) sum.mults[i] = 2 * D1.mults[i] - 3 * D2.mults[i];
        EXPECT_EQ(intersect(sum, C), 2 * intersect(D1, C) - 3 * intersect(D2, C));
    }
}

TEST(Curves, ConstructorsValidate) {
    EXPECT_EQ(make_line(4, 1, 3).support(), (std::vector<std::size_t>{1, 3}));
    EXPECT_THROW(make_line(4, 1, 1), std::invalid_argument);
    EXPECT_THROW(make_line(4, 1, 4), std::out_of_range);
    EXPECT_THROW(make_conic(5, {0, 1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(make_rational_normal_curve(3, 6, {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST(SelfIntersection, Values) {
    EXPECT_EQ(self_intersection(uniform_class(4, 2, 1, 14)), 2);
    EXPECT_EQ(self_intersection(uniform_class(2, 2, 1, 5)), -1);
    for (int n = 1; n <= 8; ++n)
        for (int d = 0; d <= 20; ++d) {
            Integer expected = 1;
            for (int i = 0; i < n; ++i) expected *= d;
            EXPECT_EQ(self_intersection(DivisorClass(n, d)), expected);
        }
}

TEST(ClassifyAh, TableFixture) {
    struct Row {
        int n;
        std::int64_t d, r;
        std::optional<AhFamily> family;
    };
    const std::vector<Row> fixture = {
        {4, 3, 7, AhFamily::Cubic4Fold7},     {2, 4, 5, AhFamily::Quartic2Fold5},
        {3, 4, 9, AhFamily::Quartic3Fold9},   {4, 4, 14, AhFamily::Quartic4Fold14},
        {2, 2, 2, AhFamily::Quadrics},        {7, 2, 5, AhFamily::Quadrics},
        {2, 3, 5, std::nullopt},              {3, 2, 4, std::nullopt},
        {5, 2, 1, std::nullopt},              {4, 3, 8, std::nullopt},
        {1, 2, 1, std::nullopt},              {4, 4, 13, std::nullopt},
    };
    for (const auto& row : fixture) EXPECT_EQ(classify_ah(row.n, row.d, row.r).family, row.family);

    // exhaustive: listed iff one of the rows
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 6; ++d)
            for (int r = 0; r <= 20; ++r) {
                bool listed = (d == 2 && n >= 2 && r >= 2 && r <= n) || (d == 3 && n == 4 && r == 7) ||
                              (d == 4 && n == 2 && r == 5) || (d == 4 && n == 3 && r == 9) ||
                              (d == 4 && n == 4 && r == 14);
                EXPECT_EQ(classify_ah(n, d, r).special_listed(), listed);
            }
}

TEST(SecantDimension, DefectiveCases) {
    auto s = secant_dimension(2, 4, 5, 1);
    EXPECT_EQ(s.ambient, 14);
    EXPECT_EQ(s.actual, 13);
    EXPECT_EQ(s.expected, 14);
    EXPECT_EQ(s.defect, 1);

    s = secant_dimension(4, 3, 7, 1);
    EXPECT_EQ(s.actual, 33);
    EXPECT_EQ(s.expected, 34);
    EXPECT_EQ(s.defect, 1);
}

TEST(SecantDimension, FillingSecant) {
    auto s = secant_dimension(2, 3, 4, 0);
    EXPECT_EQ(s.actual, 9);
    EXPECT_EQ(s.expected, 9);
    EXPECT_EQ(s.defect, 0);
    EXPECT_THROW(secant_dimension(2, 3, 4, -1), std::invalid_argument);
}
