#pragma once

// Monte Carlo probes of the dimension of the base locus of a linear system:
// restrict the system to random k-planes and look for common zeros.
//
// A k-plane in P^n generically meets a closed set of dimension >= n-k and
// generically misses one of dimension <= n-k-1. Zeros on most sections are
// therefore evidence of dim >= n-k; no zeros is consistent with dim <= n-k-1.
// Only F_p-rational zeros are enumerated (plus, on lines, common roots over
// the algebraic closure via a gcd), so a component without rational points
// can go unseen. Rerunning at a second prime guards against that.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "interpolation.hpp"
#include "linalg.hpp"
#include "monomials.hpp"
#include "parallel.hpp"
#include "points.hpp"
#include "random.hpp"

namespace fatpoints {

// Columns span a k-plane: x_j = sum_i basis(j, i) s_i, an (n+1) x (k+1) matrix.
struct Section {
    int n = 1;
    int k = 0;
    Matrix basis;
};

inline Section identity_section(int n) {
    Section s{n, n, Matrix(n + 1, n + 1)};
    for (int i = 0; i <= n; ++i) s.basis(i, i) = 1;
    return s;
}

inline bool section_contains(const Section& s, const Point& q, const PrimeField& F) {
    Matrix m(0, s.basis.rows());
    for (int i = 0; i <= s.k; ++i) {
        std::vector<Residue> col(s.basis.rows());
        for (std::size_t j = 0; j < col.size(); ++j) col[j] = s.basis(j, i);
        m.append_row(col);
    }
    m.append_row(q);
    return rank(m, F) == static_cast<std::size_t>(s.k) + 1;
}

// Uniformly random k-plane of P^n; rank-deficient draws, and (if given)
// planes through any of the `avoid` points, are redrawn.
inline Section random_section(int n, int k, const PrimeField& F, Rng& rng, const std::vector<Point>& avoid = {}) {
    if (k < 0 || k >= n) throw std::invalid_argument("section dimension must satisfy 0 <= k < n");
    while (true) {
        Section s{n, k, Matrix(n + 1, k + 1)};
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= k; ++i) s.basis(j, i) = static_cast<Residue>(rng.below(F.modulus()));
        if (rank(s.basis, F) != static_cast<std::size_t>(k) + 1) continue;
        bool hits = false;
        for (const auto& q : avoid)
            if ((hits = section_contains(s, q, F))) break;
        if (!hits) return s;
    }
}

// Substitutes x = basis * s into degree-d forms in n+1 variables, giving
// degree-d forms in k+1 variables.
inline std::vector<HomogeneousPoly> restrict_polys(const std::vector<HomogeneousPoly>& polys, const Section& sec,
                                                   const PrimeField& F) {
    if (polys.empty()) return {};
    const int n = sec.n, k = sec.k, d = polys.front().degree;
    for (const auto& f : polys)
        if (f.vars != n + 1 || f.degree != d) throw std::invalid_argument("polynomials must share degree and ambient space");

    // L_j^e for every coordinate j and e <= d
    std::vector<std::vector<HomogeneousPoly>> lin_pow(n + 1);
    for (int j = 0; j <= n; ++j) {
        HomogeneousPoly L(k + 1, 1);
        for (int i = 0; i <= k; ++i) L.coeffs[i] = sec.basis(j, i);
        lin_pow[j].push_back(HomogeneousPoly(k + 1, 0, {1}));
        for (int e = 1; e <= d; ++e) lin_pow[j].push_back(multiply(lin_pow[j].back(), L, F));
    }

    std::vector<HomogeneousPoly> out(polys.size(), HomogeneousPoly(k + 1, d));
    const auto basis = monomial_basis(n, d);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        bool used = false;
        for (const auto& f : polys) used |= f.coeffs[b] != 0;
        if (!used) continue;
        HomogeneousPoly term(k + 1, 0, {1});
        for (int j = 0; j <= n; ++j)
            if (basis[b][j]) term = multiply(term, lin_pow[j][basis[b][j]], F);
        for (std::size_t f = 0; f < polys.size(); ++f) {
            const Residue c = polys[f].coeffs[b];
            if (!c) continue;
            for (std::size_t i = 0; i < term.coeffs.size(); ++i)
                out[f].coeffs[i] = F.add(out[f].coeffs[i], F.mul(c, term.coeffs[i]));
        }
    }
    return out;
}

inline std::vector<HomogeneousPoly> restrict_to_subspace(const std::vector<HomogeneousPoly>& polys, int n, int k,
                                                         const PrimeField& F, std::uint64_t seed,
                                                         Section* section_out = nullptr) {
    Rng rng(seed);
    auto sec = random_section(n, k, F, rng);
    auto out = restrict_polys(polys, sec, F);
    if (section_out) *section_out = std::move(sec);
    return out;
}

inline constexpr std::uint64_t default_enumeration_budget = 1u << 21;
inline constexpr int max_enumeration_dim = 3;

// (p^(k+1) - 1) / (p - 1), or nullopt if it exceeds `cap`.
inline std::optional<std::uint64_t> projective_point_count(std::uint64_t p, int k, std::uint64_t cap) {
    Integer total = 0, pw = 1;
    for (int i = 0; i <= k; ++i) {
        total += pw;
        pw *= p;
    }
    if (total > cap) return std::nullopt;
    return total.convert_to<std::uint64_t>();
}

struct ZeroSet {
    std::uint64_t visited = 0;
    std::uint64_t count = 0;
    std::vector<Point> points;  // filled when requested
};

// All points of P^k(F_p), normalized (first nonzero coordinate 1), where
// every polynomial vanishes. Points are visited ordered by pivot position,
// then lexicographically.
inline ZeroSet enumerate_common_zeros(const std::vector<HomogeneousPoly>& polys, const PrimeField& F,
                                      bool collect = false, std::uint64_t budget = default_enumeration_budget,
                                      const Execution& exec = {}) {
    if (polys.empty()) throw std::invalid_argument("no polynomials: every point would be a common zero");
    const int vars = polys.front().vars, d = polys.front().degree, k = vars - 1;
    for (const auto& f : polys)
        if (f.vars != vars || f.degree != d) throw std::invalid_argument("polynomials must share degree and variables");
    const std::uint64_t p = F.modulus();
    if (k > max_enumeration_dim)
        throw std::invalid_argument("enumeration over P^" + std::to_string(k) + " exceeds the supported dimension " +
                                    std::to_string(max_enumeration_dim));
    if (!projective_point_count(p, k, budget))
        throw std::invalid_argument("P^" + std::to_string(k) + "(F_" + std::to_string(p) +
                                    ") has more points than the enumeration budget of " + std::to_string(budget));

    const auto basis = monomial_basis(k, d);
    ZeroSet result;

    auto vanishes_everywhere = [&](const Point& x) {
        for (const auto& f : polys)
            if (evaluate(f, x, F)) return false;
        return true;
    };

    // point e_k
    {
        Point x(vars, 0);
        x[k] = 1;
        ++result.visited;
        if (vanishes_everywhere(x)) {
            ++result.count;
            if (collect) result.points.push_back(x);
        }
    }
    if (k == 0) return result;

    // Prefixes (x_0..x_{k-1}) with a leading 1; x_k then runs over F_p.
    std::vector<Point> prefixes;
    for (int j = 0; j < k; ++j) {
        const int free = k - 1 - j;
        std::uint64_t combos = 1;
        for (int i = 0; i < free; ++i) combos *= p;
        for (std::uint64_t c = 0; c < combos; ++c) {
            Point pre(k, 0);
            pre[j] = 1;
            std::uint64_t rest = c;
            for (int i = k - 1; i > j; --i) {
                pre[i] = static_cast<Residue>(rest % p);
                rest /= p;
            }
            prefixes.push_back(std::move(pre));
        }
    }

    struct Chunk {
        std::uint64_t visited = 0, count = 0;
        std::vector<Point> points;
    };
    const std::size_t chunks = std::min<std::size_t>(prefixes.size(), 64);
    std::vector<Chunk> parts(chunks);
    parallel_chunks(prefixes.size(), chunks, exec, [&](std::size_t b, std::size_t e, std::size_t c) {
        Chunk& out = parts[c];
        // univariate coefficients in x_k, per polynomial
        std::vector<std::vector<Residue>> uni(polys.size(), std::vector<Residue>(d + 1));
        Point x(vars);
        for (std::size_t i = b; i < e; ++i) {
            const Point& pre = prefixes[i];
            PowerTable pw(pre, d, F);
            for (std::size_t f = 0; f < polys.size(); ++f) {
                std::fill(uni[f].begin(), uni[f].end(), 0);
                for (std::size_t m = 0; m < basis.size(); ++m) {
                    Residue c0 = polys[f].coeffs[m];
                    if (!c0) continue;
                    for (int v = 0; v < k; ++v) c0 = F.mul(c0, pw(v, basis[m][v]));
                    auto& slot = uni[f][basis[m][k]];
                    slot = F.add(slot, c0);
                }
            }
            std::copy(pre.begin(), pre.end(), x.begin());
            for (Residue t = 0; t < p; ++t) {
                ++out.visited;
                bool zero = true;
                for (std::size_t f = 0; f < polys.size() && zero; ++f) {
                    Residue acc = 0;
                    for (int deg = d; deg >= 0; --deg) acc = F.add(F.mul(acc, t), uni[f][deg]);
                    zero = acc == 0;
                }
                if (!zero) continue;
                ++out.count;
                if (collect) {
                    x[k] = t;
                    out.points.push_back(x);
                }
            }
        }
    });
    // e_k comes last in the visiting order
    std::vector<Point> tail = std::move(result.points);
    result.points.clear();
    for (auto& part : parts) {
        result.visited += part.visited;
        result.count += part.count;
        for (auto& q : part.points) result.points.push_back(std::move(q));
    }
    for (auto& q : tail) result.points.push_back(std::move(q));
    return result;
}

namespace detail {
using UPoly = std::vector<Residue>;  // coefficient of x^i at index i

inline void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline UPoly poly_mod(UPoly a, const UPoly& b, const PrimeField& F) {
    const Residue lead_inv = F.inv(b.back());
    while (a.size() >= b.size()) {
        const Residue q = F.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
        trim(a);
    }
    return a;
}

inline UPoly poly_gcd(UPoly a, UPoly b, const PrimeField& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}
}  // namespace detail

// Whether binary forms of a common degree share a root in P^1 over the
// algebraic closure of F_p.
inline bool binary_forms_share_root(const std::vector<HomogeneousPoly>& polys, const PrimeField& F) {
    if (polys.empty()) throw std::invalid_argument("no polynomials");
    const int d = polys.front().degree;
    for (const auto& f : polys)
        if (f.vars != 2 || f.degree != d) throw std::invalid_argument("expected binary forms of one degree");
    // root (1:0) iff every coefficient of s^d vanishes
    bool at_infinity = true;
    for (const auto& f : polys) at_infinity &= f.coeffs[0] == 0;
    if (at_infinity) return true;
    // affine roots (x:1): f(x, 1) = sum_i c_i x^(d-i)
    detail::UPoly g;
    for (const auto& f : polys) {
        detail::UPoly u(d + 1);
        for (int i = 0; i <= d; ++i) u[d - i] = f.coeffs[i];
        g = detail::poly_gcd(std::move(g), std::move(u), F);
    }
    return g.empty() || g.size() > 1;
}

enum class ProbeVerdict { ConsistentWithDimAtMost, EvidenceOfDimAtLeast };

struct SectionProbeReport {
    int n = 1;
    int section_dim = 0;
    std::size_t trials = 0;
    std::vector<std::uint64_t> zero_counts;  // F_p-rational common zeros per trial
    std::vector<bool> closure_hits;          // lines only: common root over the closure
    std::vector<bool> hits;                  // trial found a common zero
    ProbeVerdict verdict = ProbeVerdict::ConsistentWithDimAtMost;
    int dimension_bound = 0;                 // n-k-1 or n-k, per verdict
    std::vector<Section> sections;           // when dumping
    std::vector<std::vector<Point>> zeros;   // when dumping, in plane coordinates

    std::string verdict_string() const {
        return std::string(verdict == ProbeVerdict::EvidenceOfDimAtLeast ? "EvidenceOfDimAtLeast("
                                                                          : "ConsistentWithDimAtMost(") +
               std::to_string(dimension_bound) + ")";
    }
};

inline constexpr const char* probe_semantics =
    "Monte Carlo: zeros on a strict majority of random k-planes are evidence that the base locus has "
    "dimension >= n-k; their absence is consistent with dimension <= n-k-1. Only F_p-rational zeros are "
    "enumerated (lines also test for common roots over the algebraic closure), so a component without "
    "rational points can be missed; rerun at a second prime. The assigned points themselves are base "
    "points, so sections through them are redrawn.";

struct ProbeOptions {
    std::uint64_t seed = 1;
    bool avoid_assigned_points = true;
    bool dump = false;
    std::uint64_t budget = default_enumeration_budget;
    Execution exec{};
};

inline SectionProbeReport probe_section_dim(const std::vector<HomogeneousPoly>& system, int n, const PrimeField& F,
                                            int k, std::size_t trials, const std::vector<Point>& assigned,
                                            const ProbeOptions& opt) {
    if (system.empty()) throw std::invalid_argument("the linear system is empty");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (k < 0 || k >= n) throw std::invalid_argument("section dimension must satisfy 0 <= k < n");
    if (k > max_enumeration_dim || !projective_point_count(F.modulus(), k, opt.budget))
        throw std::invalid_argument("sections of dimension " + std::to_string(k) + " over F_" +
                                    std::to_string(F.modulus()) + " exceed the enumeration budget");
    SectionProbeReport rep;
    rep.n = n;
    rep.section_dim = k;
    rep.trials = trials;
    std::size_t hit_count = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(k), t));
        auto sec = random_section(n, k, F, rng, opt.avoid_assigned_points ? assigned : std::vector<Point>{});
        auto restricted = restrict_polys(system, sec, F);
        auto zs = enumerate_common_zeros(restricted, F, opt.dump, opt.budget, opt.exec);
        bool hit = zs.count > 0;
        if (k == 1) {
            bool closure = binary_forms_share_root(restricted, F);
            rep.closure_hits.push_back(closure);
            hit = hit || closure;
        }
        rep.zero_counts.push_back(zs.count);
        rep.hits.push_back(hit);
        hit_count += hit;
        if (opt.dump) {
            rep.sections.push_back(std::move(sec));
            rep.zeros.push_back(std::move(zs.points));
        }
    }
    if (2 * hit_count > trials) {
        rep.verdict = ProbeVerdict::EvidenceOfDimAtLeast;
        rep.dimension_bound = n - k;
    } else {
        rep.verdict = ProbeVerdict::ConsistentWithDimAtMost;
        rep.dimension_bound = n - k - 1;
    }
    return rep;
}

inline std::vector<SectionProbeReport> probe_dimension(const DivisorClass& D, const PointSet& pts,
                                                       const std::vector<int>& section_dims, std::size_t trials,
                                                       const ProbeOptions& opt = {}) {
    auto system = kernel_polys(D, pts, opt.exec);
    if (system.empty()) throw std::invalid_argument("the linear system is empty (h0 = 0)");
    std::vector<SectionProbeReport> out;
    for (int k : section_dims) out.push_back(probe_section_dim(system, D.n, pts.field, k, trials, pts.coords, opt));
    return out;
}

// The unique quadric through the points.
inline HomogeneousPoly quadric_through_points(const PointSet& pts) {
    auto ker = kernel_basis(uniform_class(pts.n, 2, 1, pts.size()), pts);
    if (ker.size() != 1)
        throw std::invalid_argument("the points lie on " + std::to_string(ker.size()) +
                                    " independent quadrics, expected exactly one");
    return HomogeneousPoly(pts.n + 1, 2, std::move(ker.front()));
}

}  // namespace fatpoints
