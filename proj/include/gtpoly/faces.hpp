#pragma once

// Minimal faces of GT-polytopes through the tiling matrix, and
// non-integrality certificates for vertices.
//
// For x in GT(lambda, mu) with tiling P, the minimal face containing x has
// dimension dim ker A_P. A kernel vector eps lifts to a direction phi(eps)
// in X_n carrying eps_k on every cell of free tile P_k and zero elsewhere;
// these lifts span the face. A vertex x with denominator lcm q gives
// xi_k = q x_{ij} mod q (for (i,j) in P_k) with A_P xi = 0 mod q, and
// conversely such a xi added as xi/q to an integral pattern with tiling P
// yields a vertex with denominator q.

#include "gtpoly/linalg.hpp"
#include "gtpoly/pattern.hpp"
#include "gtpoly/tiling.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gtpoly {

struct Check {
    std::string name;
    bool passed = false;
};

using Transcript = std::vector<Check>;

inline bool all_passed(const Transcript &t) {
    for (const auto &c : t)
        if (!c.passed)
            return false;
    return true;
}

inline void require_passed(const Transcript &t, const std::string &context) {
    for (const auto &c : t)
        if (!c.passed)
            throw verification_error(context + ": check failed: " + c.name);
}

inline std::size_t face_dimension(const GTPattern &x, const PolytopeSpec &spec) {
    require_member(x, spec);
    const auto a = tiling_matrix(x);
    return a.cols() - rank(a);
}

inline bool is_vertex(const GTPattern &x, const PolytopeSpec &spec) {
    return face_dimension(x, spec) == 0;
}

/// The lift phi(eps): eps_k on each cell of free tile k, zero elsewhere.
template <class V> GTPattern lift_to_pattern(const Tiling &t, const std::vector<V> &eps) {
    if (eps.size() != t.free_count())
        throw validation_error("vector length " + std::to_string(eps.size()) +
                               " does not match " + std::to_string(t.free_count()) +
                               " free tiles");
    GTPattern y(t.n);
    for (std::size_t k = 0; k < eps.size(); ++k)
        for (const auto &c : t.tiles[static_cast<std::size_t>(t.free_tiles[k])])
            y.at(c) = Rational(eps[k]);
    return y;
}

struct FaceCertificate {
    std::size_t face_dimension = 0;
    KernelBasis kernel;
    std::vector<GTPattern> directions; // phi of each kernel vector
    Rational scale = 1;                // x +- scale * direction stays in the polytope
    Transcript transcript;
};

/// Smallest positive difference between two entries of x, if any.
inline std::optional<Rational> min_entry_gap(const GTPattern &x) {
    std::set<Rational> values(x.entries().begin(), x.entries().end());
    std::optional<Rational> gap;
    const Rational *prev = nullptr;
    for (const auto &v : values) {
        if (prev && (!gap || v - *prev < *gap))
            gap = v - *prev;
        prev = &v;
    }
    return gap;
}

inline FaceCertificate face_basis(const GTPattern &x, const PolytopeSpec &spec) {
    require_member(x, spec);
    const auto tiling = compute_tiling(x);
    const auto a = tiling_matrix(tiling);

    FaceCertificate cert;
    cert.kernel = kernel_basis(a);
    cert.face_dimension = cert.kernel.dimension;
    for (const auto &eps : cert.kernel.vectors)
        cert.directions.push_back(lift_to_pattern(tiling, eps));

    // One third of the smallest entry gap, divided by the largest kernel
    // entry, keeps every perturbation strictly below half the gap.
    Integer max_entry = 0;
    for (const auto &eps : cert.kernel.vectors)
        for (const auto &e : eps)
            max_entry = std::max(max_entry, abs_of(e));
    const auto gap = min_entry_gap(x);
    cert.scale = 1;
    if (gap && max_entry != 0)
        cert.scale = *gap / (3 * Rational(max_entry));

    bool in_kernel = true;
    for (const auto &eps : cert.kernel.vectors)
        for (const auto &e : multiply(a, eps))
            in_kernel = in_kernel && e == 0;
    cert.transcript.push_back({"kernel vectors satisfy A_P eps = 0", in_kernel});

    bool boundary_zero = true, row_sums_zero = true, members = true;
    for (const auto &y : cert.directions) {
        boundary_zero = boundary_zero && y.at(1, 1) == 0;
        for (int i = 1; i <= x.n(); ++i)
            boundary_zero = boundary_zero && y.at(i, x.n()) == 0;
        for (const auto &s : row_sums(y))
            row_sums_zero = row_sums_zero && s == 0;
        members = members && membership(x + cert.scale * y, spec) &&
                  membership(x - cert.scale * y, spec);
    }
    cert.transcript.push_back({"directions vanish on the bottom cell and top row", boundary_zero});
    cert.transcript.push_back({"directions have zero row sums", row_sums_zero});
    cert.transcript.push_back({"x +- scale * direction lie in the polytope", members});

    RationalMatrix dirs(cert.directions.size(), triangle_size(x.n()));
    for (std::size_t m = 0; m < cert.directions.size(); ++m) {
        const auto e = cert.directions[m].entries();
        for (std::size_t c = 0; c < e.size(); ++c)
            dirs(m, c) = e[c];
    }
    cert.transcript.push_back(
        {"directions are linearly independent", rank(dirs) == cert.directions.size()});
    require_passed(cert.transcript, "face basis");
    return cert;
}

struct NonIntegralityCertificate {
    Integer q;
    std::vector<Integer> xi; // indexed by free tiles, 0 <= xi_k < q
    std::size_t unit_index = 0;
    Transcript transcript;
};

/// Certificate for a non-integral vertex; nullopt iff the vertex is integral.
inline std::optional<NonIntegralityCertificate>
nonintegrality_certificate(const GTPattern &x, const PolytopeSpec &spec) {
    if (!is_vertex(x, spec))
        throw validation_error("pattern is not a vertex of " + to_string(spec));
    const Integer q = denominator_lcm(x);
    if (q == 1)
        return std::nullopt;
    const auto tiling = compute_tiling(x);
    const auto a = tiling_matrix(tiling);

    NonIntegralityCertificate cert;
    cert.q = q;
    bool constant_on_tiles = true;
    for (int t : tiling.free_tiles) {
        const auto &tile = tiling.tiles[static_cast<std::size_t>(t)];
        Rational scaled = q * x.at(tile.front());
        cert.xi.push_back(mod_of(scaled.get_num(), q));
        for (const auto &c : tile)
            constant_on_tiles = constant_on_tiles && x.at(c) == x.at(tile.front());
    }
    bool unit = false;
    for (std::size_t k = 0; k < cert.xi.size() && !unit; ++k)
        if (gcd_of(cert.xi[k], q) == 1) {
            unit = true;
            cert.unit_index = k;
        }
    cert.transcript.push_back({"pattern values constant on free tiles", constant_on_tiles});
    cert.transcript.push_back({"A_P xi = 0 mod q", in_kernel_mod(a, cert.xi, q)});
    cert.transcript.push_back({"some xi_k is a unit mod q", unit});
    require_passed(cert.transcript, "non-integrality certificate");
    return cert;
}

struct ConstructedVertex {
    GTPattern pattern;
    PolytopeSpec spec;
    bool nonintegral = false;
    Transcript transcript;
};

/// x = x_int + y with y = xi_k / q on free tile P_k of the target tiling.
///
/// The target tiling defaults to that of x_int. A different target (for
/// instance the tiling of a vertex whose fractional parts were truncated to
/// give x_int) is allowed; the result must then reproduce that tiling
/// exactly, otherwise the construction fails.
inline ConstructedVertex construct_nonintegral_vertex(const GTPattern &x_int,
                                                      const std::vector<Integer> &xi,
                                                      const Integer &q,
                                                      const Tiling *target = nullptr) {
    require_gt_pattern(x_int);
    if (!is_integral(x_int))
        throw validation_error("base pattern must be integral");
    if (q < 2)
        throw validation_error("q must be at least 2");
    const Tiling own = compute_tiling(x_int);
    const Tiling &tiling = target ? *target : own;
    if (tiling.n != x_int.n())
        throw validation_error("target tiling size does not match the base pattern");
    if (xi.size() != tiling.free_count())
        throw validation_error("xi has " + std::to_string(xi.size()) + " entries but the tiling has " +
                               std::to_string(tiling.free_count()) + " free tiles");
    const auto a = tiling_matrix(tiling);
    if (rank(a) != a.cols())
        throw validation_error("tiling matrix has nontrivial kernel");
    bool zero = true, has_unit = false;
    for (const auto &e : xi) {
        if (e < 0 || e >= q)
            throw validation_error("xi entries must lie in [0, q)");
        zero = zero && e == 0;
        has_unit = has_unit || gcd_of(e, q) == 1;
    }
    if (!in_kernel_mod(a, xi, q))
        throw validation_error("A_P xi is not 0 mod q");
    if (!zero && !has_unit)
        throw validation_error("no coordinate of xi is a unit mod q");

    std::vector<Rational> y(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k)
        y[k] = make_rational(xi[k], q);

    ConstructedVertex out;
    out.pattern = x_int + lift_to_pattern(tiling, y);
    auto report = validate_pattern(out.pattern);
    out.transcript.push_back({"result is a GT-pattern", report.empty()});
    if (!report.empty())
        throw verification_error("construction left the GT cone: " + to_string(report.front()));
    const bool same_tiling = compute_tiling(out.pattern) == tiling;
    out.transcript.push_back({"tiling of the result equals the target tiling", same_tiling});
    if (!same_tiling)
        throw verification_error("tiling drift: the constructed pattern does not have the target tiling");
    out.spec = spec_of(out.pattern);
    out.transcript.push_back({"result lies in its polytope", membership(out.pattern, out.spec)});
    out.transcript.push_back({"result is a vertex", is_vertex(out.pattern, out.spec)});
    if (!zero) {
        out.nonintegral = true;
        out.transcript.push_back({"denominator lcm equals q", denominator_lcm(out.pattern) == q});
    }
    require_passed(out.transcript, "vertex construction");
    return out;
}

} // namespace gtpoly
