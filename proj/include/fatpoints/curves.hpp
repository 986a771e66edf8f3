#pragma once

// Speciality forced by rational curves C with D.C = -t <= -2: each such
// curve contributes binom(t+n-2, t-2) to h^1 (up to h^1/h^2 terms of the
// blow-up along C, which are not computed and end up in the residual).

#include <optional>
#include <vector>

#include "divisor.hpp"

namespace fatpoints {

inline Integer correction_term(std::int64_t t, int n) {
    if (t < 2) return 0;
    return binomial(t + n - 2, t - 2);
}

// h^1 of (r - t) H_1 [x] r H_{n-2} on P^1 x P^{n-2}.
inline Integer kunneth_h1(std::int64_t r, std::int64_t t, int n) {
    if (r < 0 || r >= t - 1) return 0;
    return Integer(t - r - 1) * binomial(n - 2 + r, r);
}

namespace detail {
template <class Fn>
void for_each_subset(std::size_t r, std::size_t k, Fn&& fn) {
    if (k > r) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == r - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}
}  // namespace detail

// Lines through 2 points, conics through 5 (plane only) and rational normal
// curves through n+3 points (n >= 3; in the plane those are the conics),
// each family in lexicographic order of the index sets.
inline std::vector<CurveClass> curve_catalog(int n, std::size_t r) {
    std::vector<CurveClass> out;
    detail::for_each_subset(r, 2, [&](const auto& idx) { out.push_back(make_line(r, idx[0], idx[1])); });
    if (n == 2) detail::for_each_subset(r, 5, [&](const auto& idx) { out.push_back(make_conic(r, idx)); });
    if (n >= 3)
        detail::for_each_subset(r, static_cast<std::size_t>(n) + 3,
                                [&](const auto& idx) { out.push_back(make_rational_normal_curve(n, r, idx)); });
    return out;
}

struct CurveContribution {
    CurveClass curve;
    std::int64_t t = 0;
    Integer correction;
};

struct SpecialityPrediction {
    std::vector<CurveContribution> contributions;
    Integer total;
    std::optional<Integer> actual;
    std::optional<Integer> residual;  // actual - total
};

// Lower-bound heuristic from the catalog above; curves outside the catalog
// and interactions between curves are not modelled.
inline SpecialityPrediction predicted_speciality(const DivisorClass& D, std::optional<Integer> actual = std::nullopt) {
    require_effective(D);
    SpecialityPrediction pred;
    for (auto& C : curve_catalog(D.n, D.mults.size())) {
        Integer t = -intersect(D, C);
        if (t < 2) continue;
        auto ti = static_cast<std::int64_t>(t);
        pred.contributions.push_back({std::move(C), ti, correction_term(ti, D.n)});
        pred.total += pred.contributions.back().correction;
    }
    if (actual) {
        pred.actual = actual;
        pred.residual = *actual - pred.total;
    }
    return pred;
}

}  // namespace fatpoints
