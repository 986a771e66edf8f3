#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "field.hpp"
#include "random.hpp"

namespace fatpoints {

using Point = std::vector<Residue>;

// Scales q so its first nonzero coordinate is 1.
inline Point normalize(Point q, const PrimeField& F) {
    auto pivot = std::find_if(q.begin(), q.end(), [](Residue x) { return x != 0; });
    if (pivot == q.end()) throw std::invalid_argument("the zero vector is not a projective point");
    Residue s = F.inv(*pivot);
    for (auto& x : q) x = F.mul(x, s);
    return q;
}

inline std::size_t pivot_coordinate(const Point& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i]) return i;
    throw std::invalid_argument("the zero vector is not a projective point");
}

// r distinct normalized points of P^n(F_p).
struct PointSet {
    PrimeField field;
    int n = 1;
    std::vector<Point> coords;
    std::optional<std::uint64_t> seed;  // absent for user-supplied points

    std::size_t size() const { return coords.size(); }
};

inline PointSet make_point_set(const PrimeField& F, int n, const std::vector<std::vector<std::int64_t>>& rows) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    PointSet pts{F, n, {}, std::nullopt};
    std::set<Point> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("point " + std::to_string(i + 1) + " needs " + std::to_string(n + 1) +
                                        " coordinates, has " + std::to_string(row.size()));
        Point q(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) q[j] = F.reduce(row[j]);
        if (std::all_of(q.begin(), q.end(), [](Residue x) { return x == 0; }))
            throw std::invalid_argument("point " + std::to_string(i + 1) + " is zero mod p");
        q = normalize(std::move(q), F);
        if (!seen.insert(q).second)
            throw std::invalid_argument("point " + std::to_string(i + 1) + " repeats an earlier point mod p");
        pts.coords.push_back(std::move(q));
    }
    return pts;
}

// r uniformly random pairwise distinct points of P^n(F_p).
inline PointSet random_points(const PrimeField& F, int n, std::size_t r, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    const std::uint64_t p = F.modulus();
    // number of points of P^n(F_p), saturating
    std::uint64_t total = 0, pw = 1;
    for (int i = 0; i <= n && total < r; ++i) {
        total += pw;
        pw = pw > UINT64_MAX / p ? UINT64_MAX : pw * p;
    }
    if (total < r) throw std::invalid_argument("P^n(F_p) has fewer than r points");
    PointSet pts{F, n, {}, seed};
    Rng rng(seed);
    std::set<Point> seen;
    Point q(n + 1);
    while (pts.coords.size() < r) {
        for (auto& x : q) x = static_cast<Residue>(rng.below(p));
        if (std::all_of(q.begin(), q.end(), [](Residue x) { return x == 0; })) continue;
        auto nq = normalize(q, F);
        if (seen.insert(nq).second) pts.coords.push_back(std::move(nq));
    }
    return pts;
}

// Points file: either JSON (an array of rows, or {"points": [...]}) or plain
// text with one point per line, coordinates separated by whitespace or
// commas, '#' starting a comment.
inline std::vector<std::vector<std::int64_t>> parse_points(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto first = text.find_first_not_of(" \t\r\n");
    std::vector<std::vector<std::int64_t>> rows;
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("points file: ") + e.what());
        }
        const auto& arr = doc.is_object() ? doc.at("points") : doc;
        if (!arr.is_array()) throw std::invalid_argument("points file: expected an array of points");
        for (const auto& row : arr) {
            if (!row.is_array()) throw std::invalid_argument("points file: each point must be an array");
            std::vector<std::int64_t> r;
            for (const auto& x : row) {
                if (!x.is_number_integer()) throw std::invalid_argument("points file: coordinates must be integers");
                r.push_back(x.get<std::int64_t>());
            }
            rows.push_back(std::move(r));
        }
        return rows;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = line.substr(0, line.find('#'));
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::vector<std::int64_t> row;
        std::string tok;
        while (fields >> tok) {
            std::size_t used = 0;
            std::int64_t v;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw std::invalid_argument("points file: not an integer: " + tok);
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fatpoints
