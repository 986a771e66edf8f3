#pragma once

// h^0 of dH - sum m_i E_i at explicit points of P^n(F_p): the dimension of
// the degree-d forms vanishing to order m_i at the i-th point.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "divisor.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "monomials.hpp"
#include "parallel.hpp"
#include "points.hpp"

namespace fatpoints {

// Multi-indices in `vars` variables of total degree < m, by degree then lex.
inline std::vector<Exponent> taylor_indices(int vars, int m) {
    std::vector<Exponent> out;
    for (int deg = 0; deg < m; ++deg) {
        auto part = monomial_basis(vars - 1, deg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Rows asking a degree-d form to vanish to order m at q: for each Taylor
// multi-index alpha (|alpha| < m) in the affine chart x_chart = 1, the
// Hasse derivative D^alpha f(q) = sum_beta c_beta prod_j binom(beta_j, alpha_j) q_j^(beta_j - alpha_j).
// The chart defaults to the first nonzero coordinate of q.
inline std::vector<std::vector<Residue>> condition_rows(const Point& q, int m, int n, int d, const PrimeField& F,
                                                        std::optional<std::size_t> chart = std::nullopt) {
    if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (q.size() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("point has the wrong length");
    const std::size_t c = chart.value_or(pivot_coordinate(q));
    if (c > static_cast<std::size_t>(n) || q[c] == 0)
        throw std::invalid_argument("chart coordinate of the point must be nonzero");
    Point x = q;
    const Residue s = F.inv(q[c]);
    for (auto& v : x) v = F.mul(v, s);

    // affine coordinates: all j != c
    std::vector<std::size_t> affine;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
        if (j != c) affine.push_back(j);

    const auto basis = monomial_basis(n, d);
    const auto alphas = taylor_indices(n, m);
    const BinomialTable binom(F, d);
    const PowerTable pw(x, d, F);

    std::vector<std::vector<Residue>> rows(alphas.size(), std::vector<Residue>(basis.size(), 0));
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        const auto& alpha = alphas[a];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto& beta = basis[b];
            Residue entry = 1;
            for (std::size_t t = 0; t < affine.size() && entry; ++t) {
                const int bj = beta[affine[t]], aj = alpha[t];
                if (aj > bj) {
                    entry = 0;
                    break;
                }
                entry = F.mul(entry, F.mul(binom(bj, aj), pw(affine[t], bj - aj)));
            }
            rows[a][b] = entry;
        }
    }
    return rows;
}

inline void require_matching(const DivisorClass& D, const PointSet& pts) {
    require_effective(D);
    if (pts.n != D.n) throw std::invalid_argument("points live in a different projective space than the class");
    if (pts.size() != D.mults.size())
        throw std::invalid_argument("class has " + std::to_string(D.mults.size()) + " multiplicities but " +
                                    std::to_string(pts.size()) + " points were given");
}

inline constexpr std::uint64_t max_matrix_entries = 200'000'000;

inline Matrix conditions_matrix(const DivisorClass& D, const PointSet& pts, const Execution& exec = {}) {
    require_matching(D, pts);
    Integer entries = 0;
    for (auto m : D.mults) entries += point_conditions(D.n, m);
    entries *= binomial(D.d + D.n, D.n);
    if (entries > max_matrix_entries)
        throw std::invalid_argument("conditions matrix would have " + entries.str() + " entries, more than " +
                                    std::to_string(max_matrix_entries));
    const int n = D.n, d = static_cast<int>(D.d);
    const std::size_t cols = count_monomials(n + 1, d);
    std::vector<std::vector<std::vector<Residue>>> blocks(pts.size());
    parallel_chunks(pts.size(), pts.size(), exec, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i)
            if (D.mults[i] > 0) blocks[i] = condition_rows(pts.coords[i], static_cast<int>(D.mults[i]), n, d, pts.field);
    });
    Matrix m(0, cols);
    for (const auto& block : blocks)
        for (const auto& row : block) m.append_row(row);
    return m;
}

enum class Certification { CertifiedNonspecial, SpecialEvidence, Inconclusive };

inline const char* to_string(Certification c) {
    switch (c) {
        case Certification::CertifiedNonspecial: return "CertifiedNonspecial";
        case Certification::SpecialEvidence: return "SpecialEvidence";
        case Certification::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline constexpr const char* certification_semantics =
    "h0 is computed at specific points over F_p. Specializing the points or the characteristic can only "
    "raise h0 above its value at general points in characteristic zero, never lower it. h0 equal to "
    "max(v+1, 0) therefore certifies that the system is non-special; a larger h0 is evidence of "
    "speciality, not a proof.";

struct TrialResult {
    Residue prime = 0;
    std::optional<std::uint64_t> seed;
    std::size_t rank = 0;
    std::size_t h0 = 0;
};

struct SystemReport {
    DivisorClass divisor;
    std::size_t monomial_count = 0;
    std::size_t rank = 0;
    std::size_t h0 = 0;
    Integer v, e, dim, speciality;
    Certification status = Certification::Inconclusive;
    Residue prime = 0;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1;
    std::vector<TrialResult> trial_results;

    // max(v+1, 0): the value of h0 at which the system is non-special
    Integer expected_h0() const { return e + 1; }
};

inline Certification certify(std::size_t h0, const Integer& expected_h0) {
    if (Integer(h0) == expected_h0) return Certification::CertifiedNonspecial;
    if (Integer(h0) > expected_h0) return Certification::SpecialEvidence;
    return Certification::Inconclusive;
}

inline void fill_dimensions(SystemReport& rep) {
    rep.v = virtual_dimension(rep.divisor);
    rep.e = expected_dimension(rep.divisor);
    rep.dim = Integer(rep.h0) - 1;
    rep.speciality = rep.dim - rep.v;
}

inline SystemReport h0(const DivisorClass& D, const PointSet& pts, const Execution& exec = {}) {
    auto m = conditions_matrix(D, pts, exec);
    SystemReport rep;
    rep.divisor = D;
    rep.monomial_count = m.cols();
    rep.rank = rank(m, pts.field, exec);
    rep.h0 = rep.monomial_count - rep.rank;
    fill_dimensions(rep);
    rep.status = certify(rep.h0, rep.expected_h0());
    rep.prime = pts.field.modulus();
    rep.seed = pts.seed;
    rep.trials = 1;
    rep.trial_results = {{rep.prime, rep.seed, rep.rank, rep.h0}};
    return rep;
}

// Kernel of the conditions matrix: coefficient vectors over monomial_basis(n, d).
inline std::vector<std::vector<Residue>> kernel_basis(const DivisorClass& D, const PointSet& pts,
                                                      const Execution& exec = {}) {
    return kernel(conditions_matrix(D, pts, exec), pts.field, exec);
}

inline std::vector<HomogeneousPoly> kernel_polys(const DivisorClass& D, const PointSet& pts,
                                                 const Execution& exec = {}) {
    std::vector<HomogeneousPoly> out;
    for (auto& v : kernel_basis(D, pts, exec)) out.emplace_back(D.n + 1, static_cast<int>(D.d), std::move(v));
    return out;
}

// Whether Q^a belongs to the linear system |D| at the given points.
inline bool power_membership(const DivisorClass& D, const PointSet& pts, const HomogeneousPoly& Q, int a,
                             const Execution& exec = {}) {
    if (a < 1) throw std::invalid_argument("power must be at least 1");
    if (Q.vars != D.n + 1) throw std::invalid_argument("polynomial is in the wrong number of variables");
    if (static_cast<std::int64_t>(Q.degree) * a != D.d)
        throw std::invalid_argument("deg(Q) * a must equal the degree of the class");
    auto Qa = power(Q, a, pts.field);
    return in_span(kernel_basis(D, pts, exec), Qa.coeffs, pts.field);
}

struct Trial {
    Residue prime;
    std::uint64_t seed;
};

// Trial t uses primes[t mod |primes|] and seed + t.
inline std::vector<Trial> make_trial_plan(std::size_t trials, std::uint64_t seed, const std::vector<Residue>& primes) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (primes.empty()) throw std::invalid_argument("need at least one prime");
    std::vector<Trial> plan;
    for (std::size_t t = 0; t < trials; ++t) plan.push_back({primes[t % primes.size()], seed + t});
    return plan;
}

// Runs h0 at independent random point sets. The reported h0 (and its rank,
// prime and seed) is the smallest one observed.
inline SystemReport check_speciality(const DivisorClass& D, const std::vector<Trial>& plan, const Execution& exec = {}) {
    if (plan.empty()) throw std::invalid_argument("empty trial list");
    require_effective(D);
    std::vector<SystemReport> runs;
    for (const auto& t : plan) {
        PrimeField F(t.prime);
        runs.push_back(h0(D, random_points(F, D.n, D.mults.size(), t.seed), exec));
    }
    auto best = std::min_element(runs.begin(), runs.end(), [](auto& a, auto& b) { return a.h0 < b.h0; });
    SystemReport rep = *best;
    rep.trials = runs.size();
    rep.trial_results.clear();
    bool certified = false, below = false;
    for (const auto& r : runs) {
        rep.trial_results.push_back(r.trial_results.front());
        certified |= r.status == Certification::CertifiedNonspecial;
        below |= r.status == Certification::Inconclusive;
    }
    // an h0 below max(v+1, 0) contradicts the one-sided bound
    rep.status = below ? Certification::Inconclusive
                       : certified ? Certification::CertifiedNonspecial : Certification::SpecialEvidence;
    return rep;
}

}  // namespace fatpoints
