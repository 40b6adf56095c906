#pragma once

// Integral GT-patterns: the bijection with semistandard Young tableaux,
// lattice-point enumeration and Kostka numbers.

#include "gtpoly/pattern.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace gtpoly {

/// Semistandard Young tableau; rows[r] is row r+1 from the top. Only
/// nonempty rows are stored.
struct Tableau {
    std::vector<std::vector<std::int64_t>> rows;

    std::vector<std::int64_t> shape() const {
        std::vector<std::int64_t> s;
        for (const auto &r : rows)
            s.push_back(static_cast<std::int64_t>(r.size()));
        return s;
    }

    /// content[v-1] = number of entries equal to v, for v = 1..n.
    std::vector<std::int64_t> content(int n) const {
        std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
        for (const auto &r : rows)
            for (auto v : r)
                if (v >= 1 && v <= n)
                    ++c[static_cast<std::size_t>(v - 1)];
        return c;
    }

    friend bool operator==(const Tableau &, const Tableau &) = default;
};

inline bool is_semistandard(const Tableau &t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto &row = t.rows[r];
        if (row.empty())
            return false;
        if (r > 0 && row.size() > t.rows[r - 1].size())
            return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                return false;
            if (c > 0 && row[c] < row[c - 1])
                return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c])
                return false;
        }
    }
    return true;
}

/// Fills the skew shape row(j) / row(j-1) with j's, for j = 1..n.
inline Tableau pattern_to_tableau(const GTPattern &x) {
    require_gt_pattern(x);
    if (!is_integral(x))
        throw validation_error("tableau bijection needs an integral pattern");
    const int n = x.n();
    auto part = [&](int r, int j) -> std::int64_t {
        return r <= j ? to_int64(x.at(r, j).get_num()) : 0;
    };
    Tableau t;
    for (int r = 1; r <= n; ++r) {
        std::vector<std::int64_t> row;
        for (int j = r; j <= n; ++j) {
            const auto count = part(r, j) - (j > 1 ? part(r, j - 1) : 0);
            row.insert(row.end(), static_cast<std::size_t>(count), j);
        }
        if (row.empty())
            break;
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// x_{ij} = number of entries <= j in row i of t.
inline GTPattern tableau_to_pattern(const Tableau &t, int n) {
    if (n < 1)
        throw validation_error("n must be positive");
    if (!is_semistandard(t))
        throw validation_error("tableau is not semistandard");
    if (static_cast<int>(t.rows.size()) > n)
        throw validation_error("tableau has more than n rows");
    for (const auto &row : t.rows)
        for (auto v : row)
            if (v > n)
                throw validation_error("tableau entry " + std::to_string(v) + " exceeds n = " +
                                       std::to_string(n));
    GTPattern x(n);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const int i = static_cast<int>(r) + 1;
        for (int j = i; j <= n; ++j) {
            const auto &row = t.rows[r];
            auto count = std::upper_bound(row.begin(), row.end(), static_cast<std::int64_t>(j)) - row.begin();
            x.at(i, j) = Rational(static_cast<long>(count));
        }
    }
    return x;
}

/// Calls visit(rows) for each integral point of GT(spec), where rows[j-1]
/// is row j. Returning false from visit stops the walk. Rows are generated
/// from the top down, each interlacing the row above with its prescribed sum.
inline void for_each_lattice_point(
    const PolytopeSpec &spec,
    const std::function<bool(const std::vector<std::vector<std::int64_t>> &)> &visit) {
    const int n = spec.n();
    for (auto v : spec.lambda)
        if (v < 0)
            return;
    if (std::accumulate(spec.lambda.begin(), spec.lambda.end(), std::int64_t{0}) !=
        spec.row_sum_target(n))
        return;
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n));
    rows[static_cast<std::size_t>(n - 1)] = spec.lambda;
    for (int j = 1; j < n; ++j)
        rows[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0);

    bool stop = false;
    // fill(j, i, remaining): entries i..j of row j remain, summing to `remaining`.
    std::function<void(int, int, std::int64_t)> fill = [&](int j, int i, std::int64_t remaining) {
        if (stop)
            return;
        if (j == 0) {
            stop = !visit(rows);
            return;
        }
        const auto &above = rows[static_cast<std::size_t>(j)];
        auto &row = rows[static_cast<std::size_t>(j - 1)];
        auto lo = [&](int c) { return std::max<std::int64_t>(above[static_cast<std::size_t>(c)], 0); };
        auto hi = [&](int c) { return above[static_cast<std::size_t>(c - 1)]; };
        // Sum bounds of the cells after i.
        std::int64_t rest_lo = 0, rest_hi = 0;
        for (int c = i + 1; c <= j; ++c) {
            rest_lo += lo(c);
            rest_hi += hi(c);
        }
        const std::int64_t from = std::max(lo(i), remaining - rest_hi);
        const std::int64_t to = std::min(hi(i), remaining - rest_lo);
        for (std::int64_t v = from; v <= to && !stop; ++v) {
            row[static_cast<std::size_t>(i - 1)] = v;
            if (i == j)
                fill(j - 1, 1, j - 1 >= 1 ? spec.row_sum_target(j - 1) : 0);
            else
                fill(j, i + 1, remaining - v);
        }
    };
    if (n == 1) {
        if (spec.lambda[0] == spec.mu[0])
            visit(rows);
        return;
    }
    fill(n - 1, 1, spec.row_sum_target(n - 1));
}

inline GTPattern pattern_from_int_rows(const std::vector<std::vector<std::int64_t>> &rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto &row : rows) {
        std::vector<Rational> v;
        for (auto e : row)
            v.emplace_back(static_cast<long>(e));
        r.push_back(std::move(v));
    }
    return GTPattern::from_rows(r);
}

/// All integral points of GT(spec), sorted lexicographically (bottom row first).
inline std::vector<GTPattern> enumerate_lattice_points(const PolytopeSpec &spec) {
    std::vector<GTPattern> out;
    for_each_lattice_point(spec, [&](const auto &rows) {
        out.push_back(pattern_from_int_rows(rows));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer kostka(const PolytopeSpec &spec) {
    std::uint64_t count = 0;
    for_each_lattice_point(spec, [&](const auto &) {
        ++count;
        return true;
    });
    return Integer(static_cast<unsigned long>(count));
}

inline Integer kostka(const std::vector<std::int64_t> &lambda, const std::vector<std::int64_t> &mu) {
    return kostka(PolytopeSpec(lambda, mu));
}

struct EhrhartSample {
    std::int64_t dilation = 0;
    Integer count;
};

/// f(m) = #(GT(m lambda, m mu) cap Z^N) for m = 1..m_max.
inline std::vector<EhrhartSample> ehrhart_values(const PolytopeSpec &spec, std::int64_t m_max) {
    if (m_max < 1)
        throw validation_error("m_max must be at least 1");
    std::vector<EhrhartSample> out;
    for (std::int64_t m = 1; m <= m_max; ++m)
        out.push_back({m, kostka(spec.dilate(m))});
    return out;
}

} // namespace gtpoly
