#pragma once

// Dense homogeneous polynomials over F_p, coefficients indexed by the
// degree-d monomials in `vars` variables ordered lexicographically with
// x_0 largest (x_0^d first, x_{vars-1}^d last).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace fatpoints {

using Exponent = std::vector<int>;

inline std::size_t count_monomials(int vars, int degree) {
    if (vars <= 0 || degree < 0) return 0;
    // binom(degree + vars - 1, vars - 1)
    std::uint64_t num = 1;
    for (int i = 1; i < vars; ++i) num = num * static_cast<std::uint64_t>(degree + i) / i;
    return static_cast<std::size_t>(num);
}

// All exponents of degree d in n+1 variables, x_0^d first.
inline std::vector<Exponent> monomial_basis(int n, int d) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    const int vars = n + 1;
    std::vector<Exponent> out;
    out.reserve(count_monomials(vars, d));
    Exponent a(vars, 0);
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos + 1 == vars) {
            a[pos] = remaining;
            out.push_back(a);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            a[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    recurse(recurse, 0, d);
    return out;
}

// Position of an exponent inside monomial_basis(vars - 1, |a|).
inline std::size_t monomial_index(std::span<const int> a) {
    int remaining = 0;
    for (int v : a) remaining += v;
    const int vars = static_cast<int>(a.size());
    std::size_t idx = 0;
    for (int j = 0; j + 1 < vars; ++j) {
        // monomials agreeing on x_0..x_{j-1} with a larger exponent of x_j
        for (int v = remaining; v > a[j]; --v) idx += count_monomials(vars - j - 1, remaining - v);
        remaining -= a[j];
    }
    return idx;
}

struct HomogeneousPoly {
    int vars = 1;
    int degree = 0;
    std::vector<Residue> coeffs;  // size count_monomials(vars, degree)

    HomogeneousPoly() = default;
    HomogeneousPoly(int vars_, int degree_)
        : vars(vars_), degree(degree_), coeffs(count_monomials(vars_, degree_), 0) {}
    HomogeneousPoly(int vars_, int degree_, std::vector<Residue> c)
        : vars(vars_), degree(degree_), coeffs(std::move(c)) {
        if (coeffs.size() != count_monomials(vars, degree))
            throw std::invalid_argument("coefficient vector has the wrong length");
    }

    bool is_zero() const {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }

    bool operator==(const HomogeneousPoly&) const = default;
};

inline HomogeneousPoly multiply(const HomogeneousPoly& f, const HomogeneousPoly& g, const PrimeField& F) {
    if (f.vars != g.vars) throw std::invalid_argument("polynomials in different numbers of variables");
    HomogeneousPoly out(f.vars, f.degree + g.degree);
    auto fb = monomial_basis(f.vars - 1, f.degree);
    auto gb = monomial_basis(g.vars - 1, g.degree);
    Exponent sum(f.vars);
    for (std::size_t i = 0; i < fb.size(); ++i) {
        if (!f.coeffs[i]) continue;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (!g.coeffs[j]) continue;
            for (int v = 0; v < f.vars; ++v) sum[v] = fb[i][v] + gb[j][v];
            auto& c = out.coeffs[monomial_index(sum)];
            c = F.add(c, F.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return out;
}

inline HomogeneousPoly power(const HomogeneousPoly& f, int a, const PrimeField& F) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    HomogeneousPoly result(f.vars, 0, {1});
    for (int i = 0; i < a; ++i) result = multiply(result, f, F);
    return result;
}

// Table pow[v][e] = x_v^e for a fixed point, e <= degree.
class PowerTable {
public:
    PowerTable(std::span<const Residue> x, int degree, const PrimeField& F)
        : stride_(degree + 1), table_(x.size() * stride_) {
        for (std::size_t v = 0; v < x.size(); ++v) {
            Residue p = 1;
            for (int e = 0; e <= degree; ++e) {
                table_[v * stride_ + e] = p;
                p = F.mul(p, x[v]);
            }
        }
    }
    Residue operator()(std::size_t v, int e) const { return table_[v * stride_ + e]; }

private:
    std::size_t stride_;
    std::vector<Residue> table_;
};

inline Residue evaluate(const HomogeneousPoly& f, std::span<const Residue> x, const PrimeField& F) {
    if (x.size() != static_cast<std::size_t>(f.vars)) throw std::invalid_argument("point has the wrong length");
    PowerTable pw(x, f.degree, F);
    auto basis = monomial_basis(f.vars - 1, f.degree);
    Residue acc = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!f.coeffs[i]) continue;
        Residue term = f.coeffs[i];
        for (int v = 0; v < f.vars; ++v) term = F.mul(term, pw(v, basis[i][v]));
        acc = F.add(acc, term);
    }
    return acc;
}

}  // namespace fatpoints
