#pragma once

// Dense Gaussian elimination over F_p.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "parallel.hpp"

namespace fatpoints {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Residue> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Residue> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Residue> r) {
        if (r.size() != cols_) throw std::invalid_argument("row has the wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Residue> data_;
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form, first `rank` rows nonzero
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

// In-place reduction to RREF. The pivot in each column is the first row
// (from the current position down) with a nonzero entry.
inline Echelon row_reduce(Matrix m, const PrimeField& F, const Execution& exec = {}) {
    Echelon out;
    std::size_t pivot_row = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    // Parallel only pays off on large matrices; the result is the same either way.
    const Execution eff = rows * cols >= (1u << 16) ? exec : Execution{};
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && m(r, c) == 0) ++r;
        if (r == rows) continue;
        if (r != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
        Residue s = F.inv(m(pivot_row, c));
        for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) = F.mul(m(pivot_row, j), s);
        auto prow = m.row(pivot_row);
        parallel_chunks(rows, eff.threads * 4, eff, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t i = b; i < e; ++i) {
                if (i == pivot_row || m(i, c) == 0) continue;
                Residue f = m(i, c);
                auto ri = m.row(i);
                for (std::size_t j = c; j < cols; ++j)
                    if (prow[j]) ri[j] = F.sub(ri[j], F.mul(f, prow[j]));
            }
        });
        out.pivots.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m, const PrimeField& F, const Execution& exec = {}) {
    return row_reduce(m, F, exec).rank();
}

// Basis of {x : m x = 0}, one vector per free column, in increasing order of
// the free column; each vector has a 1 in its free column.
inline std::vector<std::vector<Residue>> kernel(const Matrix& m, const PrimeField& F, const Execution& exec = {}) {
    auto ech = row_reduce(m, F, exec);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<Residue>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Residue> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < ech.rank(); ++i) v[ech.pivots[i]] = F.neg(ech.reduced(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Whether v lies in the span of the given vectors.
inline bool in_span(const std::vector<std::vector<Residue>>& vectors, std::span<const Residue> v,
                    const PrimeField& F) {
    Matrix m(0, v.size());
    for (const auto& row : vectors) m.append_row(row);
    const auto base = rank(m, F);
    m.append_row(v);
    return rank(m, F) == base;
}

}  // namespace fatpoints
