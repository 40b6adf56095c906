#pragma once

// Gelfand-Tsetlin patterns and polytopes.
//
// Indexing follows the usual convention: entry (i, j) with 1 <= i <= j <= n
// is the i-th entry (left to right) of row j, and rows are counted from the
// bottom, so row 1 is the single entry x_{11} and row n is the top row.

#include "gtpoly/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace gtpoly {

struct Cell {
    int i = 0;
    int j = 0;
    friend bool operator==(const Cell &, const Cell &) = default;
    friend auto operator<=>(const Cell &, const Cell &) = default;
};

inline std::string to_string(const Cell &c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

inline constexpr std::size_t triangle_size(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

/// Dense index of (i, j), scanning rows bottom-up and each row left to right.
inline constexpr std::size_t cell_index(int i, int j) {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 +
           static_cast<std::size_t>(i - 1);
}

/// Cells of X_n in scan order (bottom to top, left to right).
inline std::vector<Cell> cells_of(int n) {
    std::vector<Cell> out;
    out.reserve(triangle_size(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
            out.push_back({i, j});
    return out;
}

/// Triangular array of exact rationals, an element of X_n. Holding one does
/// not imply the GT inequalities hold; see validate_pattern.
class GTPattern {
  public:
    GTPattern() = default;

    /// All-zero array in X_n.
    explicit GTPattern(int n) : n_(n) {
        if (n < 1)
            throw validation_error("pattern size must be positive, got " + std::to_string(n));
        entries_.assign(triangle_size(n), Rational(0));
    }

    /// rows[0] is row 1 (bottom), rows[n-1] is the top row.
    static GTPattern from_rows(const std::vector<std::vector<Rational>> &rows) {
        const int n = static_cast<int>(rows.size());
        if (n < 1)
            throw validation_error("pattern has no rows");
        GTPattern x(n);
        for (int j = 1; j <= n; ++j) {
            const auto &row = rows[static_cast<std::size_t>(j - 1)];
            if (static_cast<int>(row.size()) != j)
                throw validation_error("row " + std::to_string(j) + " has " +
                                       std::to_string(row.size()) + " entries, expected " +
                                       std::to_string(j));
            for (int i = 1; i <= j; ++i)
                x.at(i, j) = row[static_cast<std::size_t>(i - 1)];
        }
        return x;
    }

    template <class T>
    static GTPattern from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        std::vector<std::vector<Rational>> r;
        for (const auto &row : rows) {
            std::vector<Rational> v;
            for (const auto &e : row)
                v.emplace_back(e);
            r.push_back(std::move(v));
        }
        return from_rows(r);
    }

    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }

    const Rational &at(int i, int j) const { return entries_[checked(i, j)]; }
    Rational &at(int i, int j) { return entries_[checked(i, j)]; }
    const Rational &at(const Cell &c) const { return at(c.i, c.j); }
    Rational &at(const Cell &c) { return at(c.i, c.j); }

    std::span<const Rational> row(int j) const {
        if (j < 1 || j > n_)
            throw validation_error("row index out of range");
        return {entries_.data() + cell_index(1, j), static_cast<std::size_t>(j)};
    }

    std::vector<Rational> top_row() const {
        auto r = row(n_);
        return {r.begin(), r.end()};
    }

    std::span<const Rational> entries() const { return entries_; }

    friend bool operator==(const GTPattern &, const GTPattern &) = default;

    /// Lexicographic comparison of entries in scan order (bottom-up rows).
    friend bool operator<(const GTPattern &a, const GTPattern &b) {
        if (a.n_ != b.n_)
            return a.n_ < b.n_;
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }

  private:
    std::size_t checked(int i, int j) const {
        if (i < 1 || j > n_ || i > j)
            throw validation_error("index (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") outside X_" + std::to_string(n_));
        return cell_index(i, j);
    }

    int n_ = 0;
    std::vector<Rational> entries_;
};

inline GTPattern operator+(const GTPattern &a, const GTPattern &b) {
    if (a.n() != b.n())
        throw validation_error("size mismatch in pattern addition");
    GTPattern out(a.n());
    for (const auto &c : cells_of(a.n()))
        out.at(c) = a.at(c) + b.at(c);
    return out;
}

inline GTPattern operator-(const GTPattern &a, const GTPattern &b) {
    if (a.n() != b.n())
        throw validation_error("size mismatch in pattern subtraction");
    GTPattern out(a.n());
    for (const auto &c : cells_of(a.n()))
        out.at(c) = a.at(c) - b.at(c);
    return out;
}

inline GTPattern operator*(const Rational &s, const GTPattern &a) {
    GTPattern out(a.n());
    for (const auto &c : cells_of(a.n()))
        out.at(c) = s * a.at(c);
    return out;
}

inline bool is_integral(const GTPattern &x) {
    return std::all_of(x.entries().begin(), x.entries().end(),
                       [](const Rational &r) { return is_integral(r); });
}

/// Least common multiple of the (reduced) entry denominators.
inline Integer denominator_lcm(const GTPattern &x) {
    Integer l = 1;
    for (const auto &e : x.entries())
        l = lcm_of(l, e.get_den());
    return l;
}

/// Triangular text layout with the top row first, as patterns are drawn.
inline std::string render_triangle(const GTPattern &x) {
    const int n = x.n();
    std::size_t width = 1;
    for (const auto &e : x.entries())
        width = std::max(width, to_string(e).size());
    // Entry (i, j) sits in grid column 2(i-1) + (n-j); every column is width+1 wide.
    std::ostringstream os;
    const std::string blank(width + 1, ' ');
    for (int j = n; j >= 1; --j) {
        std::string line;
        for (int k = 0; k < n - j; ++k)
            line += blank;
        for (int i = 1; i <= j; ++i) {
            auto s = to_string(x.at(i, j));
            line += std::string(width + 1 - s.size(), ' ') + s;
            if (i < j)
                line += blank;
        }
        os << line << '\n';
    }
    return os.str();
}

/// The pair (lambda, mu) cutting out GT(lambda, mu) inside X_n.
struct PolytopeSpec {
    std::vector<std::int64_t> lambda;
    std::vector<std::int64_t> mu;

    PolytopeSpec() = default;
    PolytopeSpec(std::vector<std::int64_t> l, std::vector<std::int64_t> m)
        : lambda(std::move(l)), mu(std::move(m)) {
        if (lambda.size() != mu.size())
            throw validation_error("lambda and mu must have equal length");
        if (lambda.empty())
            throw validation_error("lambda and mu must be nonempty");
    }

    int n() const { return static_cast<int>(lambda.size()); }

    /// Target sum of row j, i.e. mu_1 + ... + mu_j.
    std::int64_t row_sum_target(int j) const {
        return std::accumulate(mu.begin(), mu.begin() + j, std::int64_t{0});
    }

    /// The dilation GT(m lambda, m mu).
    PolytopeSpec dilate(std::int64_t m) const {
        PolytopeSpec out = *this;
        for (auto &v : out.lambda)
            v *= m;
        for (auto &v : out.mu)
            v *= m;
        return out;
    }

    friend bool operator==(const PolytopeSpec &, const PolytopeSpec &) = default;
};

inline std::string to_string(const std::vector<std::int64_t> &v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

inline std::string to_string(const PolytopeSpec &spec) {
    return "GT(" + to_string(spec.lambda) + "," + to_string(spec.mu) + ")";
}

enum class ViolationKind {
    negative_entry,   // x_{ij} < 0
    above_upper_left, // x_{ij} > x_{i,j+1}
    below_upper_right // x_{ij} < x_{i+1,j+1}
};

struct Violation {
    ViolationKind kind;
    Cell cell;
    Cell other; // the compared neighbour; equals cell for negative_entry
};

inline std::string to_string(const Violation &v) {
    switch (v.kind) {
    case ViolationKind::negative_entry:
        return "negative entry at " + to_string(v.cell);
    case ViolationKind::above_upper_left:
        return "interlacing " + to_string(v.cell) + "-" + to_string(v.other) +
               ": entry exceeds its upper-left neighbour";
    case ViolationKind::below_upper_right:
        return "interlacing " + to_string(v.cell) + "-" + to_string(v.other) +
               ": entry is below its upper-right neighbour";
    }
    return "unknown violation";
}

/// Every violated GT inequality; empty iff x is a GT-pattern.
inline std::vector<Violation> validate_pattern(const GTPattern &x) {
    std::vector<Violation> out;
    const int n = x.n();
    for (const auto &c : cells_of(n))
        if (x.at(c) < 0)
            out.push_back({ViolationKind::negative_entry, c, c});
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i <= j; ++i) {
            if (x.at(i, j) > x.at(i, j + 1))
                out.push_back({ViolationKind::above_upper_left, {i, j}, {i, j + 1}});
            if (x.at(i, j) < x.at(i + 1, j + 1))
                out.push_back({ViolationKind::below_upper_right, {i, j}, {i + 1, j + 1}});
        }
    }
    return out;
}

inline bool is_gt_pattern(const GTPattern &x) { return validate_pattern(x).empty(); }

inline void require_gt_pattern(const GTPattern &x) {
    auto report = validate_pattern(x);
    if (report.empty())
        return;
    std::string msg = "not a GT-pattern:";
    for (const auto &v : report)
        msg += " [" + to_string(v) + "]";
    throw validation_error(msg);
}

inline std::vector<Rational> row_sums(const GTPattern &x) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(x.n()));
    for (int j = 1; j <= x.n(); ++j) {
        Rational s = 0;
        for (const auto &e : x.row(j))
            s += e;
        out.push_back(s);
    }
    return out;
}

/// mu_1 = x_{11}, mu_j = rowsum(j) - rowsum(j-1).
inline std::vector<Rational> weight_of(const GTPattern &x) {
    auto sums = row_sums(x);
    std::vector<Rational> mu(sums.size());
    for (std::size_t j = 0; j < sums.size(); ++j)
        mu[j] = j == 0 ? sums[0] : Rational(sums[j] - sums[j - 1]);
    return mu;
}

/// Why x fails to lie in GT(spec); empty iff it is a member.
inline std::vector<std::string> membership_report(const GTPattern &x, const PolytopeSpec &spec) {
    if (x.n() != spec.n())
        throw validation_error("pattern has n=" + std::to_string(x.n()) + " but spec has n=" +
                               std::to_string(spec.n()));
    std::vector<std::string> out;
    for (const auto &v : validate_pattern(x))
        out.push_back(to_string(v));
    const int n = x.n();
    for (int i = 1; i <= n; ++i)
        if (x.at(i, n) != spec.lambda[static_cast<std::size_t>(i - 1)])
            out.push_back("top-row entry " + to_string(Cell{i, n}) + " = " +
                          to_string(x.at(i, n)) + " differs from lambda_" + std::to_string(i));
    auto mu = weight_of(x);
    for (int j = 1; j <= n; ++j)
        if (mu[static_cast<std::size_t>(j - 1)] != spec.mu[static_cast<std::size_t>(j - 1)])
            out.push_back("weight component " + std::to_string(j) + " = " +
                          to_string(mu[static_cast<std::size_t>(j - 1)]) + " differs from mu_" +
                          std::to_string(j));
    return out;
}

inline bool membership(const GTPattern &x, const PolytopeSpec &spec) {
    return membership_report(x, spec).empty();
}

inline void require_member(const GTPattern &x, const PolytopeSpec &spec) {
    auto report = membership_report(x, spec);
    if (report.empty())
        return;
    std::string msg = "pattern is not in " + to_string(spec) + ":";
    for (const auto &r : report)
        msg += " [" + r + "]";
    throw validation_error(msg);
}

/// (top row, weight) of x. Throws unless both are integral.
inline PolytopeSpec spec_of(const GTPattern &x) {
    std::vector<std::int64_t> lambda, mu;
    for (const auto &e : x.top_row()) {
        if (!is_integral(e))
            throw validation_error("top row is not integral");
        lambda.push_back(to_int64(e.get_num()));
    }
    for (const auto &e : weight_of(x)) {
        if (!is_integral(e))
            throw validation_error("weight is not integral");
        mu.push_back(to_int64(e.get_num()));
    }
    return {std::move(lambda), std::move(mu)};
}

/// X_n -> X_{n+1}: zeros on the diagonal, x_{i,j-1} at (i, j) for i < j.
inline GTPattern embed(const GTPattern &x) {
    require_gt_pattern(x);
    const int n = x.n();
    GTPattern out(n + 1);
    for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i < j; ++i)
            out.at(i, j) = x.at(i, j - 1);
    return out;
}

/// Spec of the embedded polytope: GT((lambda, 0), (0, mu)).
inline PolytopeSpec embed(const PolytopeSpec &spec) {
    auto lambda = spec.lambda;
    lambda.push_back(0);
    std::vector<std::int64_t> mu{0};
    mu.insert(mu.end(), spec.mu.begin(), spec.mu.end());
    return {std::move(lambda), std::move(mu)};
}

} // namespace gtpoly
