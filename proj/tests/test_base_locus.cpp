#include <gtest/gtest.h>

#include <fatpoints/base_locus.hpp>

using namespace fatpoints;

namespace {

HomogeneousPoly monomial_sum(int vars, int degree, const std::vector<std::pair<Exponent, Residue>>& terms) {
    HomogeneousPoly f(vars, degree);
    for (const auto& [e, c] : terms) f.coeffs[monomial_index(e)] = c;
    return f;
}

HomogeneousPoly random_poly(int vars, int degree, const PrimeField& F, Rng& rng) {
    HomogeneousPoly f(vars, degree);
    for (auto& c : f.coeffs) c = static_cast<Residue>(rng.below(F.modulus()));
    return f;
}

// Brute force over all normalized points of P^k(F_p).
std::uint64_t naive_zero_count(const std::vector<HomogeneousPoly>& polys, const PrimeField& F) {
    const int vars = polys.front().vars;
    const std::uint64_t p = F.modulus();
    std::uint64_t total = 1;
    for (int i = 0; i < vars; ++i) total *= p;
    std::uint64_t count = 0;
    Point x(vars);
    for (std::uint64_t code = 1; code < total; ++code) {
        auto c = code;
        for (int i = vars - 1; i >= 0; --i, c /= p) x[i] = static_cast<Residue>(c % p);
        if (normalize(x, F) != x) continue;
        bool all = true;
        for (const auto& f : polys) all = all && evaluate(f, x, F) == 0;
        count += all;
    }
    return count;
}

}  // namespace

TEST(Restriction, IdentitySectionIsANoOp) {
    PrimeField F(101);
    Rng rng(3);
    for (int n = 1; n <= 3; ++n) {
        std::vector<HomogeneousPoly> polys{random_poly(n + 1, 3, F, rng), random_poly(n + 1, 3, F, rng)};
        EXPECT_EQ(restrict_polys(polys, identity_section(n), F), polys);
    }
}

TEST(Restriction, ProductOfCoordinatesOnACoordinateLine) {
    PrimeField F(101);
    Section s{2, 1, Matrix(3, 2)};
    s.basis(0, 0) = 1;
    s.basis(1, 1) = 1;
    auto r = restrict_polys({monomial_sum(3, 2, {{{1, 1, 0}, 1}})}, s, F);
    EXPECT_EQ(r.front(), monomial_sum(2, 2, {{{1, 1}, 1}}));
}

TEST(Restriction, CommutesWithEvaluation) {
    PrimeField F(101);
    Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + iter % 3, k = 1 + iter % (n - 1), d = 1 + iter % 4;
        auto f = random_poly(n + 1, d, F, rng);
        auto sec = random_section(n, k, F, rng);
        auto g = restrict_polys({f}, sec, F).front();
        Point s(k + 1), x(n + 1, 0);
        for (auto& v : s) v = static_cast<Residue>(rng.below(101));
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= k; ++i) x[j] = F.add(x[j], F.mul(sec.basis(j, i), s[i]));
        EXPECT_EQ(evaluate(g, s, F), evaluate(f, x, F));
    }
}

TEST(RandomSection, AvoidsGivenPoints) {
    PrimeField F(5);
    Rng rng(1);
    std::vector<Point> avoid{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    for (int i = 0; i < 50; ++i) {
        auto s = random_section(2, 1, F, rng, avoid);
        for (const auto& q : avoid) EXPECT_FALSE(section_contains(s, q, F));
    }
    EXPECT_THROW(random_section(2, 2, F, rng), std::invalid_argument);
}

TEST(Enumeration, SmallCases) {
    PrimeField F(101);
    auto st = monomial_sum(2, 2, {{{1, 1}, 1}});
    auto z = enumerate_common_zeros({st}, F, true);
    EXPECT_EQ(z.count, 2u);
    EXPECT_EQ(z.visited, 102u);
    EXPECT_EQ(z.points, (std::vector<Point>{{1, 0}, {0, 1}}));

    // -1 is not a square mod 103
    PrimeField G(103);
    auto sum_sq = monomial_sum(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
    EXPECT_EQ(enumerate_common_zeros({sum_sq}, G).count, 0u);
    EXPECT_TRUE(binary_forms_share_root({sum_sq}, G));
    EXPECT_EQ(enumerate_common_zeros({sum_sq}, F).count, 2u);

    auto xyz = monomial_sum(3, 3, {{{1, 1, 1}, 1}});
    auto z2 = enumerate_common_zeros({xyz}, PrimeField(7));
    EXPECT_EQ(z2.count, 3u * 7u);
    EXPECT_EQ(z2.visited, 57u);
}

TEST(Enumeration, MatchesBruteForce) {
    Rng rng(5);
    for (std::uint32_t p : {5u, 7u, 11u})
        for (int k = 1; k <= 3; ++k) {
            PrimeField F(p);
            // products of linear forms so that zeros actually occur
            std::vector<HomogeneousPoly> polys;
            for (int j = 0; j < 2; ++j)
                polys.push_back(multiply(random_poly(k + 1, 1, F, rng), random_poly(k + 1, 1, F, rng), F));
            auto z = enumerate_common_zeros(polys, F, true);
            EXPECT_EQ(z.count, naive_zero_count(polys, F)) << "p=" << p << " k=" << k;
            EXPECT_EQ(z.points.size(), z.count);
            EXPECT_EQ(z.visited, *projective_point_count(p, k, ~0ull));
            for (const auto& q : z.points) {
                EXPECT_EQ(normalize(q, F), q);
                for (const auto& f : polys) EXPECT_EQ(evaluate(f, q, F), 0u);
            }
        }
}

TEST(Enumeration, InvariantUnderRescalingAndThreads) {
    PrimeField F(31);
    Rng rng(8);
    std::vector<HomogeneousPoly> polys{multiply(random_poly(4, 1, F, rng), random_poly(4, 2, F, rng), F)};
    auto base = enumerate_common_zeros(polys, F, true);
    auto scaled = polys;
    for (auto& c : scaled.front().coeffs) c = F.mul(c, 17);
    EXPECT_EQ(enumerate_common_zeros(scaled, F, true).points, base.points);
    auto threaded = enumerate_common_zeros(polys, F, true, default_enumeration_budget, Execution{4});
    EXPECT_EQ(threaded.points, base.points);
    EXPECT_EQ(threaded.visited, base.visited);
}

TEST(Enumeration, Errors) {
    PrimeField F(101);
    EXPECT_THROW(enumerate_common_zeros({}, F), std::invalid_argument);
    EXPECT_THROW(enumerate_common_zeros({HomogeneousPoly(5, 1)}, F), std::invalid_argument);
    EXPECT_THROW(enumerate_common_zeros({HomogeneousPoly(4, 1)}, F, false, 1000), std::invalid_argument);
    EXPECT_THROW(enumerate_common_zeros({HomogeneousPoly(2, 1), HomogeneousPoly(2, 2)}, F), std::invalid_argument);
    EXPECT_EQ(projective_point_count(101, 3, ~0ull), 101ull * 101 * 101 + 101 * 101 + 101 + 1);
    EXPECT_FALSE(projective_point_count(32003, 3, default_enumeration_budget).has_value());
}

TEST(BinaryForms, SharedRoots) {
    PrimeField F(103);
    auto s = monomial_sum(2, 1, {{{1, 0}, 1}});
    auto t = monomial_sum(2, 1, {{{0, 1}, 1}});
    auto sum_sq = monomial_sum(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
    EXPECT_FALSE(binary_forms_share_root({multiply(s, s, F), multiply(t, t, F)}, F));
    EXPECT_TRUE(binary_forms_share_root({multiply(s, sum_sq, F), multiply(t, sum_sq, F)}, F));
    EXPECT_TRUE(binary_forms_share_root({multiply(s, t, F), multiply(s, s, F)}, F));
}

TEST(Probe, QuarticsThroughFourteenFourfoldPointsHaveNoBaseCurve) {
    PrimeField F(101);
    auto pts = random_points(F, 4, 14, 7);
    auto reps = probe_dimension(uniform_class(4, 8, 4, 14), pts, {3}, 5);
    ASSERT_EQ(reps.size(), 1u);
    const auto& r = reps.front();
    EXPECT_EQ(r.verdict, ProbeVerdict::ConsistentWithDimAtMost);
    EXPECT_EQ(r.dimension_bound, 0);
    EXPECT_GE(std::count(r.zero_counts.begin(), r.zero_counts.end(), 0u), 4);
    EXPECT_EQ(r.verdict_string(), "ConsistentWithDimAtMost(0)");
}

TEST(Probe, DoubledQuadricContainsTheQuadric) {
    PrimeField F(101);
    for (int n : {3, 4}) {
        auto pts = random_points(F, n, n == 3 ? 9 : 14, 2);
        auto Q = quadric_through_points(pts);
        auto rep = probe_section_dim({power(Q, 2, F)}, n, F, 1, 5, pts.coords, ProbeOptions{});
        EXPECT_EQ(rep.verdict, ProbeVerdict::EvidenceOfDimAtLeast);
        EXPECT_EQ(rep.dimension_bound, n - 1);
        EXPECT_EQ(rep.verdict_string(), "EvidenceOfDimAtLeast(" + std::to_string(n - 1) + ")");
        for (bool h : rep.closure_hits) EXPECT_TRUE(h);
    }
}

TEST(Probe, PlaneConicIsABaseCurve) {
    PrimeField F(101);
    auto pts = random_points(F, 2, 5, 4);
    auto rep = probe_dimension(uniform_class(2, 4, 2, 5), pts, {1}, 5).front();
    EXPECT_EQ(rep.verdict, ProbeVerdict::EvidenceOfDimAtLeast);
    EXPECT_EQ(rep.dimension_bound, 1);
}

TEST(Probe, DumpAndDeterminism) {
    PrimeField F(101);
    auto pts = random_points(F, 3, 9, 5);
    ProbeOptions opt;
    opt.dump = true;
    opt.seed = 42;
    auto a = probe_dimension(uniform_class(3, 4, 2, 9), pts, {1, 2}, 3, opt);
    opt.exec = Execution{4};
    auto b = probe_dimension(uniform_class(3, 4, 2, 9), pts, {1, 2}, 3, opt);
    ASSERT_EQ(a.size(), 2u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].zero_counts, b[i].zero_counts);
        EXPECT_EQ(a[i].zeros, b[i].zeros);
        ASSERT_EQ(a[i].sections.size(), 3u);
        for (std::size_t t = 0; t < 3; ++t) {
            EXPECT_EQ(a[i].zeros[t].size(), a[i].zero_counts[t]);
            for (const auto& q : pts.coords) EXPECT_FALSE(section_contains(a[i].sections[t], q, F));
        }
    }
}

TEST(Probe, Errors) {
    PrimeField F(101);
    auto pts = random_points(F, 2, 5, 1);
    EXPECT_THROW(probe_section_dim({}, 2, F, 1, 3, {}, {}), std::invalid_argument);
    auto sys = kernel_polys(uniform_class(2, 4, 2, 5), pts);
    EXPECT_THROW(probe_section_dim(sys, 2, F, 1, 0, {}, {}), std::invalid_argument);
    EXPECT_THROW(probe_section_dim(sys, 2, F, 2, 3, {}, {}), std::invalid_argument);
    EXPECT_THROW(probe_dimension(uniform_class(2, 1, 1, 5), pts, {1}, 3), std::invalid_argument);
    auto big = random_points(PrimeField(32003), 4, 14, 1);
    EXPECT_THROW(probe_dimension(uniform_class(4, 8, 4, 14), big, {3}, 1), std::invalid_argument);
}

TEST(QuadricThroughPoints, UniqueQuadrics) {
    PrimeField F(101);
    for (auto [n, r] : {std::pair{3, 9}, std::pair{4, 14}, std::pair{2, 5}}) {
        auto pts = random_points(F, n, r, 3);
        auto Q = quadric_through_points(pts);
        EXPECT_FALSE(Q.is_zero());
        for (const auto& q : pts.coords) EXPECT_EQ(evaluate(Q, q, F), 0u);
    }
    EXPECT_THROW(quadric_through_points(random_points(F, 4, 13, 3)), std::invalid_argument);
}
