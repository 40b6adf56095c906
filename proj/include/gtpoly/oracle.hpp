#pragma once

// Brute-force polyhedral computations on the inequality description of
// GT(lambda, mu). Nothing here looks at tilings; these routines exist to
// cross-check the tiling-based results in faces.hpp.

#include "gtpoly/combinatorics.hpp"
#include "gtpoly/linalg.hpp"
#include "gtpoly/pattern.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gtpoly {

/// a . x >= rhs (inequality) or a . x = rhs (equality) over the
/// n(n+1)/2 coordinates in scan order.
struct LinearConstraint {
    std::vector<Integer> coeffs;
    Integer rhs;
    std::string label;
};

struct ConstraintSystem {
    int n = 0;
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> inequalities;
};

inline ConstraintSystem constraint_system(const PolytopeSpec &spec) {
    const int n = spec.n();
    const std::size_t dim = triangle_size(n);
    ConstraintSystem sys;
    sys.n = n;
    auto unit = [&](int i, int j) {
        std::vector<Integer> a(dim, Integer(0));
        a[cell_index(i, j)] = 1;
        return a;
    };
    for (int i = 1; i <= n; ++i)
        sys.equalities.push_back({unit(i, n), Integer(static_cast<long>(spec.lambda[static_cast<std::size_t>(i - 1)])),
                                  "x" + to_string(Cell{i, n}) + " = lambda_" + std::to_string(i)});
    sys.equalities.push_back({unit(1, 1), Integer(static_cast<long>(spec.mu[0])), "x(1,1) = mu_1"});
    for (int j = 2; j <= n; ++j) {
        std::vector<Integer> a(dim, Integer(0));
        for (int i = 1; i <= j; ++i)
            a[cell_index(i, j)] += 1;
        for (int i = 1; i < j; ++i)
            a[cell_index(i, j - 1)] -= 1;
        sys.equalities.push_back({std::move(a), Integer(static_cast<long>(spec.mu[static_cast<std::size_t>(j - 1)])),
                                  "row " + std::to_string(j) + " increment = mu_" + std::to_string(j)});
    }
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i <= j; ++i) {
            auto a = unit(i, j + 1);
            a[cell_index(i, j)] -= 1;
            sys.inequalities.push_back({std::move(a), Integer(0),
                                        "x" + to_string(Cell{i, j + 1}) + " >= x" + to_string(Cell{i, j})});
            auto b = unit(i, j);
            b[cell_index(i + 1, j + 1)] -= 1;
            sys.inequalities.push_back({std::move(b), Integer(0),
                                        "x" + to_string(Cell{i, j}) + " >= x" + to_string(Cell{i + 1, j + 1})});
        }
    }
    for (const auto &c : cells_of(n))
        sys.inequalities.push_back({unit(c.i, c.j), Integer(0), "x" + to_string(c) + " >= 0"});
    return sys;
}

inline Rational evaluate(const LinearConstraint &con, const GTPattern &x) {
    Rational s = 0;
    const auto e = x.entries();
    for (std::size_t k = 0; k < e.size(); ++k)
        if (con.coeffs[k] != 0)
            s += Rational(con.coeffs[k]) * e[k];
    return s;
}

/// Dimension of {equalities} together with the inequalities tight at x.
inline std::size_t face_dimension_oracle(const GTPattern &x, const PolytopeSpec &spec) {
    require_member(x, spec);
    const auto sys = constraint_system(spec);
    std::vector<const LinearConstraint *> rows;
    for (const auto &e : sys.equalities)
        rows.push_back(&e);
    for (const auto &ineq : sys.inequalities)
        if (evaluate(ineq, x) == ineq.rhs)
            rows.push_back(&ineq);
    const std::size_t dim = triangle_size(x.n());
    RationalMatrix m(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c)
            m(r, c) = rows[r]->coeffs[c];
    return dim - rank(m);
}

inline constexpr int default_scale_guard = 6;

namespace detail {

/// x = base + sum_k y_k * direction_k over the cells (i, j) with
/// 2 <= j <= n-1, i < j; the last entry of each such row absorbs the row sum.
struct AffineChart {
    std::vector<Integer> base;
    std::vector<std::vector<Integer>> directions; // each of length n(n+1)/2
};

inline AffineChart chart_of(const PolytopeSpec &spec) {
    const int n = spec.n();
    const std::size_t dim = triangle_size(n);
    AffineChart ch;
    ch.base.assign(dim, Integer(0));
    for (int i = 1; i <= n; ++i)
        ch.base[cell_index(i, n)] = static_cast<long>(spec.lambda[static_cast<std::size_t>(i - 1)]);
    if (n >= 2)
        ch.base[cell_index(1, 1)] = static_cast<long>(spec.mu[0]);
    for (int j = 2; j <= n - 1; ++j) {
        ch.base[cell_index(j, j)] = static_cast<long>(spec.row_sum_target(j));
        for (int i = 1; i < j; ++i) {
            std::vector<Integer> d(dim, Integer(0));
            d[cell_index(i, j)] = 1;
            d[cell_index(j, j)] = -1;
            ch.directions.push_back(std::move(d));
        }
    }
    return ch;
}

inline Integer dot(const std::vector<Integer> &a, const std::vector<Integer> &b) {
    Integer s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && b[k] != 0)
            s += a[k] * b[k];
    return s;
}

inline void make_primitive(std::vector<Integer> &v) {
    Integer g = 0;
    for (const auto &e : v)
        g = gcd_of(g, e);
    if (g > 1)
        for (auto &e : v)
            e /= g;
}

struct Ray {
    std::vector<Integer> z;
    boost::dynamic_bitset<> zeros; // constraints processed so far that vanish on z
};

/// Extreme rays of the pointed cone {z : a . z >= 0 for all a in rows} by
/// the double description method (combinatorial adjacency test).
inline std::vector<std::vector<Integer>> extreme_rays(const std::vector<std::vector<Integer>> &rows,
                                                      std::size_t dim) {
    const std::size_t m = rows.size();
    std::vector<std::vector<Integer>> lineality;
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Integer> e(dim, Integer(0));
        e[k] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    for (std::size_t idx = 0; idx < m; ++idx) {
        const auto &a = rows[idx];
        std::size_t pick = lineality.size();
        for (std::size_t l = 0; l < lineality.size(); ++l)
            if (dot(a, lineality[l]) != 0) {
                pick = l;
                break;
            }
        if (pick < lineality.size()) {
            // Split off one lineality direction; everything else is projected
            // into the hyperplane a . z = 0.
            auto l0 = lineality[pick];
            Integer s0 = dot(a, l0);
            if (s0 < 0) {
                for (auto &e : l0)
                    e = -e;
                s0 = -s0;
            }
            std::vector<std::vector<Integer>> rest;
            for (std::size_t l = 0; l < lineality.size(); ++l) {
                if (l == pick)
                    continue;
                auto v = lineality[l];
                const Integer sv = dot(a, v);
                if (sv != 0) {
                    for (std::size_t k = 0; k < dim; ++k)
                        v[k] = s0 * v[k] - sv * l0[k];
                    make_primitive(v);
                }
                rest.push_back(std::move(v));
            }
            lineality = std::move(rest);
            for (auto &r : rays) {
                const Integer sr = dot(a, r.z);
                if (sr != 0) {
                    for (std::size_t k = 0; k < dim; ++k)
                        r.z[k] = s0 * r.z[k] - sr * l0[k];
                    make_primitive(r.z);
                }
                r.zeros.resize(m);
                r.zeros.set(idx);
            }
            Ray nr{l0, boost::dynamic_bitset<>(m)};
            for (std::size_t p = 0; p < idx; ++p)
                nr.zeros.set(p);
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(a, rays[r].z);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] < 0)
                continue;
            Ray kept = rays[r];
            kept.zeros.resize(m);
            if (value[r] == 0)
                kept.zeros.set(idx);
            next.push_back(std::move(kept));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                auto common = rays[p].zeros & rays[q].zeros;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                std::vector<Integer> z(dim);
                for (std::size_t k = 0; k < dim; ++k)
                    z[k] = value[p] * rays[q].z[k] - value[q] * rays[p].z[k];
                make_primitive(z);
                common.resize(m);
                common.set(idx);
                next.push_back({std::move(z), std::move(common)});
            }
        }
        rays = std::move(next);
    }
    if (!lineality.empty())
        throw verification_error("constraint cone is not pointed");
    std::vector<std::vector<Integer>> out;
    for (auto &r : rays)
        out.push_back(std::move(r.z));
    return out;
}

} // namespace detail

/// All vertices of GT(spec), exact, sorted lexicographically. Empty if the
/// polytope is empty.
inline std::vector<GTPattern> enumerate_vertices(const PolytopeSpec &spec,
                                                 int max_n = default_scale_guard) {
    const int n = spec.n();
    if (n > max_n)
        throw scale_guard_error("vertex enumeration is limited to n <= " + std::to_string(max_n) +
                                " (got n = " + std::to_string(n) + ")");
    const auto sys = constraint_system(spec);
    const auto chart = detail::chart_of(spec);
    const std::size_t d = chart.directions.size();

    // Equalities must hold on the whole chart.
    for (const auto &eq : sys.equalities) {
        for (const auto &dir : chart.directions)
            if (detail::dot(eq.coeffs, dir) != 0)
                throw verification_error("affine chart violates " + eq.label);
        if (detail::dot(eq.coeffs, chart.base) != eq.rhs)
            return {};
    }

    // Homogenised inequality rows over z = (t, y): (a.base - b) t + (a.D) y >= 0.
    std::vector<std::vector<Integer>> rows;
    {
        std::vector<Integer> t_row(d + 1, Integer(0));
        t_row[0] = 1;
        rows.push_back(std::move(t_row));
    }
    for (const auto &ineq : sys.inequalities) {
        std::vector<Integer> row(d + 1);
        row[0] = detail::dot(ineq.coeffs, chart.base) - ineq.rhs;
        bool constant = true;
        for (std::size_t k = 0; k < d; ++k) {
            row[k + 1] = detail::dot(ineq.coeffs, chart.directions[k]);
            constant = constant && row[k + 1] == 0;
        }
        if (constant) {
            if (row[0] < 0)
                return {};
            continue;
        }
        detail::make_primitive(row);
        if (std::find(rows.begin(), rows.end(), row) == rows.end())
            rows.push_back(std::move(row));
    }

    std::vector<GTPattern> out;
    for (const auto &z : detail::extreme_rays(rows, d + 1)) {
        if (z[0] <= 0)
            throw verification_error("unbounded direction in a GT-polytope");
        GTPattern x(n);
        const auto cells = cells_of(n);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            Rational v(chart.base[c]);
            for (std::size_t k = 0; k < d; ++k)
                if (chart.directions[k][c] != 0)
                    v += Rational(chart.directions[k][c]) * make_rational(z[k + 1], z[0]);
            x.at(cells[c]) = v;
        }
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Affine dimension of GT(spec) from its vertices; -1 if empty.
inline int polytope_dimension(const PolytopeSpec &spec, int max_n = default_scale_guard) {
    const auto verts = enumerate_vertices(spec, max_n);
    if (verts.empty())
        return -1;
    const std::size_t dim = triangle_size(spec.n());
    RationalMatrix m(verts.size() - 1, dim);
    for (std::size_t v = 1; v < verts.size(); ++v)
        for (std::size_t c = 0; c < dim; ++c)
            m(v - 1, c) = verts[v].entries()[c] - verts[0].entries()[c];
    return static_cast<int>(rank(m));
}

/// Seeded mix of lattice points, midpoints of lattice-point pairs and
/// convex combinations of up to three vertices. Every result is checked
/// for membership.
inline std::vector<GTPattern> sample_points(const PolytopeSpec &spec, std::size_t count,
                                            std::uint64_t seed, int max_n = default_scale_guard) {
    const auto vertices = enumerate_vertices(spec, max_n);
    if (vertices.empty())
        throw validation_error("cannot sample from the empty polytope " + to_string(spec));
    constexpr std::size_t lattice_cap = 5000;
    std::vector<GTPattern> lattice;
    for_each_lattice_point(spec, [&](const auto &rows) {
        lattice.push_back(pattern_from_int_rows(rows));
        return lattice.size() < lattice_cap;
    });

    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
    std::vector<GTPattern> out;
    out.reserve(count);
    while (out.size() < count) {
        std::size_t kind = pick(3);
        if (lattice.empty())
            kind = 2;
        else if (kind == 1 && lattice.size() < 2)
            kind = 0;
        GTPattern x;
        if (kind == 0) {
            x = lattice[pick(lattice.size())];
        } else if (kind == 1) {
            const std::size_t a = pick(lattice.size());
            std::size_t b = pick(lattice.size() - 1);
            if (b >= a)
                ++b;
            x = Rational(1, 2) * (lattice[a] + lattice[b]);
        } else {
            const std::size_t terms = 1 + pick(3);
            GTPattern acc(spec.n());
            long total = 0;
            for (std::size_t t = 0; t < terms; ++t) {
                const long w = 1 + static_cast<long>(pick(4));
                acc = acc + Rational(w) * vertices[pick(vertices.size())];
                total += w;
            }
            x = Rational(1, total) * acc;
        }
        if (!membership(x, spec))
            throw verification_error("sampled point left the polytope");
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace gtpoly
