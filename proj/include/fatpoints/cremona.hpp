#pragma once

// Standard Cremona transformation of P^n based at n+1 of the blown-up points,
// acting on divisor classes, and reduction to Cremona-minimal form.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "divisor.hpp"
#include "monomials.hpp"

namespace fatpoints {

using IndexSet = std::vector<std::size_t>;

// k = (n-1) d - sum_{i in S} m_i
inline std::int64_t cremona_coefficient(const DivisorClass& D, const IndexSet& S) {
    std::int64_t k = static_cast<std::int64_t>(D.n - 1) * D.d;
    for (auto i : S) k -= D.mults.at(i);
    return k;
}

inline void validate_base_points(const DivisorClass& D, const IndexSet& S) {
    if (S.size() != static_cast<std::size_t>(D.n) + 1)
        throw std::invalid_argument("Cremona base must consist of exactly n+1 points");
    std::set<std::size_t> seen;
    for (auto i : S) {
        if (i >= D.mults.size()) throw std::out_of_range("Cremona base index out of range");
        if (!seen.insert(i).second) throw std::invalid_argument("duplicate Cremona base index");
    }
}

// D + k (H - sum_{i in S} E_i). No clamping.
inline DivisorClass cremona_transform(const DivisorClass& D, const IndexSet& S) {
    validate_base_points(D, S);
    auto k = cremona_coefficient(D, S);
    DivisorClass out = D;
    out.d += k;
    for (auto i : S) out.mults[i] += k;
    return out;
}

// Exponents of the monomials of degree d in |m| variables with a_i <= d - m_i:
// the monomials that survive multiplicity m_i at the i-th coordinate point.
inline std::vector<Exponent> enumerate_T(std::int64_t d, const std::vector<std::int64_t>& mults) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Exponent> out;
    const std::size_t vars = mults.size();
    if (vars == 0) return out;
    Exponent a(vars, 0);
    auto recurse = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        std::int64_t cap = d - mults[pos];
        if (pos + 1 == vars) {
            if (remaining >= 0 && remaining <= cap) {
                a[pos] = static_cast<int>(remaining);
                out.push_back(a);
            }
            return;
        }
        for (std::int64_t v = std::min(cap, remaining); v >= 0; --v) {
            a[pos] = static_cast<int>(v);
            self(self, pos + 1, remaining - v);
        }
    };
    recurse(recurse, 0, d);
    return out;
}

// a -> (d - a_i - m_i)_i, mapping T(d, m) onto T(d + k, m + k).
inline Exponent sigma_exponents(const Exponent& a, std::int64_t d, const std::vector<std::int64_t>& mults) {
    if (a.size() != mults.size()) throw std::invalid_argument("exponent and multiplicity lengths differ");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > d - mults[i])
            throw std::invalid_argument("exponent is not in T(d, m)");
        sum += a[i];
    }
    if (sum != d) throw std::invalid_argument("exponent is not in T(d, m)");
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<int>(d - a[i] - mults[i]);
    return out;
}

struct ReductionStep {
    IndexSet base_indices;
    std::int64_t k = 0;
    DivisorClass before;
    DivisorClass after;             // clamped
    std::vector<std::size_t> clamped;
};

enum class ReductionOutcome { Reduced, Empty };

inline const char* to_string(ReductionOutcome o) { return o == ReductionOutcome::Reduced ? "reduced" : "empty"; }

struct ReductionTrace {
    DivisorClass input;
    std::vector<ReductionStep> steps;
    DivisorClass final_class;  // zero multiplicities dropped
    ReductionOutcome outcome = ReductionOutcome::Reduced;
};

// Indices of the n+1 largest multiplicities; ties go to the lower index.
inline IndexSet largest_multiplicities(const DivisorClass& D) {
    IndexSet order(D.mults.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return D.mults[a] > D.mults[b]; });
    order.resize(static_cast<std::size_t>(D.n) + 1);
    return order;
}

inline DivisorClass drop_zero_multiplicities(DivisorClass D) {
    std::erase(D.mults, 0);
    return D;
}

// Applies Cremona transformations at the n+1 largest multiplicities while
// that lowers the degree. Zero multiplicities are dropped before every step
// and the reduction stops once fewer than n+1 points remain. Each step
// strictly decreases d, so this terminates.
inline ReductionTrace cremona_reduce(const DivisorClass& D) {
    require_effective(D);
    ReductionTrace trace;
    trace.input = D;
    DivisorClass current = D;
    while (true) {
        current = drop_zero_multiplicities(std::move(current));
        if (current.mults.size() < static_cast<std::size_t>(current.n) + 1) break;
        IndexSet S = largest_multiplicities(current);
        auto k = cremona_coefficient(current, S);
        if (k >= 0) break;
        ReductionStep step;
        step.base_indices = S;
        step.k = k;
        step.before = current;
        step.after = cremona_transform(current, S);
        for (std::size_t i = 0; i < step.after.mults.size(); ++i) {
            if (step.after.mults[i] < 0) {
                step.after.mults[i] = 0;
                step.clamped.push_back(i);
            }
        }
        current = step.after;
        trace.steps.push_back(std::move(step));
        if (current.d < 0) {
            trace.outcome = ReductionOutcome::Empty;
            break;
        }
    }
    trace.final_class = drop_zero_multiplicities(current);
    return trace;
}

}  // namespace fatpoints
