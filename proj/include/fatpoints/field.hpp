#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

using Residue = std::uint32_t;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

// Arithmetic in Z/pZ for an odd prime p < 2^31.
class PrimeField {
public:
    static constexpr Residue default_prime = 101;
    static constexpr Residue alternate_prime = 32003;

    explicit PrimeField(std::uint64_t p = default_prime) : p_(static_cast<Residue>(p)) {
        if (p < 3 || p >= (1ULL << 31) || !is_prime(p))
            throw std::invalid_argument("modulus must be a prime in [3, 2^31): " + std::to_string(p));
    }

    Residue modulus() const { return p_; }

    Residue reduce(std::int64_t x) const {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    Residue add(Residue a, Residue b) const {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }

    Residue pow(Residue a, std::uint64_t e) const {
        Residue result = 1;
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    Residue inv(Residue a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField&) const = default;

private:
    Residue p_;
};

// Pascal triangle reduced mod p, rows 0..max_n.
class BinomialTable {
public:
    BinomialTable(const PrimeField& field, int max_n) : size_(max_n + 1), table_(size_ * size_, 0) {
        for (int i = 0; i <= max_n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= i; ++j)
                at(i, j) = field.add(at(i - 1, j - 1), j <= i - 1 ? at(i - 1, j) : 0);
        }
    }

    Residue operator()(int n, int k) const {
        if (k < 0 || k > n) return 0;
        return table_[static_cast<std::size_t>(n) * size_ + k];
    }

private:
    Residue& at(int n, int k) { return table_[static_cast<std::size_t>(n) * size_ + k]; }

    std::size_t size_;
    std::vector<Residue> table_;
};

}  // namespace fatpoints
