#pragma once

// Integer arithmetic on divisor classes dH - sum m_i E_i on the blow-up of
// P^n at r points, and on the rational curve classes that pair with them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatpoints {

using Integer = boost::multiprecision::cpp_int;

// binom(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

struct DivisorClass {
    int n = 1;
    std::int64_t d = 0;
    std::vector<std::int64_t> mults;

    DivisorClass() = default;
    DivisorClass(int n_, std::int64_t d_, std::vector<std::int64_t> m = {})
        : n(n_), d(d_), mults(std::move(m)) {}

    std::size_t points() const { return mults.size(); }

    bool effective_form() const {
        return d >= 0 && std::all_of(mults.begin(), mults.end(), [](auto m) { return m >= 0; });
    }

    bool operator==(const DivisorClass&) const = default;
};

// Class with `count` copies of multiplicity `m`.
inline DivisorClass uniform_class(int n, std::int64_t d, std::int64_t m, std::size_t count) {
    return DivisorClass(n, d, std::vector<std::int64_t>(count, m));
}

inline void require_ambient(const DivisorClass& D) {
    if (D.n < 1) throw std::invalid_argument("ambient dimension must be at least 1");
}

inline void require_effective(const DivisorClass& D) {
    require_ambient(D);
    if (!D.effective_form())
        throw std::invalid_argument("class must have d >= 0 and all multiplicities >= 0");
}

// Number of linear conditions imposed by a point of multiplicity m in P^n.
inline Integer point_conditions(int n, std::int64_t m) {
    return m <= 0 ? Integer(0) : binomial(n + m - 1, n);
}

inline Integer virtual_dimension(const DivisorClass& D) {
    require_ambient(D);
    Integer v = D.d < 0 ? Integer(0) : binomial(D.d + D.n, D.n);
    for (auto m : D.mults) v -= point_conditions(D.n, m);
    return v - 1;
}

inline Integer expected_dimension(const DivisorClass& D) {
    Integer v = virtual_dimension(D);
    return v < -1 ? Integer(-1) : v;
}

inline Integer speciality(const Integer& actual_dim, const DivisorClass& D) {
    return actual_dim - virtual_dimension(D);
}

enum class CurveFamily { Line, Conic, RationalNormalCurve };

inline const char* to_string(CurveFamily f) {
    switch (f) {
        case CurveFamily::Line: return "line";
        case CurveFamily::Conic: return "conic";
        case CurveFamily::RationalNormalCurve: return "rational_normal_curve";
    }
    return "?";
}

// Strict transform of a rational curve of degree `delta` with multiplicity
// e_i at the i-th blown-up point.
struct CurveClass {
    std::int64_t delta = 1;
    std::vector<std::int64_t> e;
    CurveFamily family = CurveFamily::Line;

    // Indices of the points the curve passes through, increasing.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) idx.push_back(i);
        return idx;
    }

    bool operator==(const CurveClass&) const = default;
};

namespace detail {
inline CurveClass through(std::size_t r, const std::vector<std::size_t>& idx, std::int64_t delta,
                          CurveFamily family) {
    CurveClass c{delta, std::vector<std::int64_t>(r, 0), family};
    for (auto i : idx) {
        if (i >= r) throw std::out_of_range("curve passes through a point index >= r");
        if (c.e[i] != 0) throw std::invalid_argument("duplicate point index in curve");
        c.e[i] = 1;
    }
    return c;
}
}  // namespace detail

inline CurveClass make_line(std::size_t r, std::size_t i, std::size_t j) {
    return detail::through(r, {i, j}, 1, CurveFamily::Line);
}

inline CurveClass make_conic(std::size_t r, const std::vector<std::size_t>& idx) {
    if (idx.size() != 5) throw std::invalid_argument("a conic is determined by 5 points");
    return detail::through(r, idx, 2, CurveFamily::Conic);
}

inline CurveClass make_rational_normal_curve(int n, std::size_t r, const std::vector<std::size_t>& idx) {
    if (idx.size() != static_cast<std::size_t>(n) + 3)
        throw std::invalid_argument("a rational normal curve of P^n passes through n+3 points");
    return detail::through(r, idx, n, CurveFamily::RationalNormalCurve);
}

inline Integer intersect(const DivisorClass& D, const CurveClass& C) {
    if (D.mults.size() != C.e.size())
        throw std::invalid_argument("divisor and curve are on blow-ups at different numbers of points");
    Integer result = Integer(D.d) * C.delta;
    for (std::size_t i = 0; i < D.mults.size(); ++i) result -= Integer(D.mults[i]) * C.e[i];
    return result;
}

// D^n = d^n - sum m_i^n.
inline Integer self_intersection(const DivisorClass& D) {
    require_ambient(D);
    Integer result = boost::multiprecision::pow(Integer(D.d), static_cast<unsigned>(D.n));
    for (auto m : D.mults) result -= boost::multiprecision::pow(Integer(m), static_cast<unsigned>(D.n));
    return result;
}

// Special double-point systems dH - 2E_1 - ... - 2E_r.
enum class AhFamily { Quadrics, Cubic4Fold7, Quartic2Fold5, Quartic3Fold9, Quartic4Fold14 };

inline const char* to_string(AhFamily f) {
    switch (f) {
        case AhFamily::Quadrics: return "(2,n,r) 2<=r<=n";
        case AhFamily::Cubic4Fold7: return "(3,4,7)";
        case AhFamily::Quartic2Fold5: return "(4,2,5)";
        case AhFamily::Quartic3Fold9: return "(4,3,9)";
        case AhFamily::Quartic4Fold14: return "(4,4,14)";
    }
    return "?";
}

struct AhCase {
    std::optional<AhFamily> family;  // empty: not on the list
    bool special_listed() const { return family.has_value(); }
};

inline AhCase classify_ah(int n, std::int64_t d, std::int64_t r) {
    if (d == 2 && n >= 2 && r >= 2 && r <= n) return {AhFamily::Quadrics};
    if (d == 3 && n == 4 && r == 7) return {AhFamily::Cubic4Fold7};
    if (d == 4 && n == 2 && r == 5) return {AhFamily::Quartic2Fold5};
    if (d == 4 && n == 3 && r == 9) return {AhFamily::Quartic3Fold9};
    if (d == 4 && n == 4 && r == 14) return {AhFamily::Quartic4Fold14};
    return {};
}

struct SecantDimension {
    Integer ambient;   // N = binom(n+d, n) - 1
    Integer actual;    // N - h0
    Integer expected;  // min(N, r(n+1) - 1)
    Integer defect;    // expected - actual
};

// Dimension of the (r-1)-secant variety of the d-th Veronese embedding of
// P^n, given h0 of dH - 2E_1 - ... - 2E_r at r general points.
inline SecantDimension secant_dimension(int n, std::int64_t d, std::int64_t r, const Integer& h0) {
    if (h0 < 0) throw std::invalid_argument("h0 must be non-negative");
    if (n < 1 || d < 0 || r < 0) throw std::invalid_argument("need n >= 1, d >= 0, r >= 0");
    SecantDimension s;
    s.ambient = binomial(n + d, n) - 1;
    s.actual = s.ambient - h0;
    Integer naive = Integer(r) * (n + 1) - 1;
    s.expected = naive < s.ambient ? naive : s.ambient;
    s.defect = s.expected - s.actual;
    return s;
}

}  // namespace fatpoints
