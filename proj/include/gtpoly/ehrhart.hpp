#pragma once

// Exact interpolation of the Ehrhart counting function of GT(lambda, mu).

#include "gtpoly/combinatorics.hpp"
#include "gtpoly/linalg.hpp"
#include "gtpoly/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gtpoly {

struct EhrhartCheck {
    std::int64_t dilation = 0;
    Integer counted;
    Rational predicted;
    bool match = false;
};

struct EhrhartPolynomial {
    int degree = 0;
    std::vector<Rational> coefficients; // coefficients[p] multiplies m^p
    std::vector<EhrhartSample> fitted;   // m = 1..degree+1
    std::vector<EhrhartCheck> checks;    // further dilations
    bool verified = false;
};

inline Rational evaluate_polynomial(const std::vector<Rational> &coeffs, const Rational &m) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * m + *it;
    return acc;
}

/// Unique polynomial of degree < points.size() through (m, f(m)).
inline std::vector<Rational> interpolate(const std::vector<EhrhartSample> &points) {
    const std::size_t k = points.size();
    RationalMatrix system(k, k + 1);
    for (std::size_t r = 0; r < k; ++r) {
        Rational power = 1;
        for (std::size_t c = 0; c < k; ++c) {
            system(r, c) = power;
            power *= Rational(static_cast<long>(points[r].dilation));
        }
        system(r, k) = Rational(points[r].count);
    }
    auto reduced = row_reduce(std::move(system));
    if (reduced.pivots.size() != k || reduced.pivots.back() != k - 1)
        throw verification_error("interpolation nodes are not distinct");
    std::vector<Rational> coeffs(k);
    for (std::size_t r = 0; r < k; ++r)
        coeffs[r] = reduced.reduced(r, k);
    while (coeffs.size() > 1 && coeffs.back() == 0)
        coeffs.pop_back();
    return coeffs;
}

/// Fits f at m = 1..D+1, D = dim GT(spec) unless degree_hint is given, and
/// compares the fit with the counts at `extra_checks` further dilations.
inline EhrhartPolynomial ehrhart_polynomial(const PolytopeSpec &spec,
                                            std::optional<int> degree_hint = std::nullopt,
                                            int extra_checks = 3,
                                            int max_n = default_scale_guard) {
    int degree;
    if (degree_hint) {
        if (*degree_hint < 0)
            throw validation_error("degree hint must be nonnegative");
        degree = *degree_hint;
    } else {
        degree = polytope_dimension(spec, max_n);
        if (degree < 0)
            throw validation_error("Ehrhart polynomial of the empty polytope " + to_string(spec));
    }
    EhrhartPolynomial out;
    out.degree = degree;
    const auto values = ehrhart_values(spec, degree + 1 + extra_checks);
    out.fitted.assign(values.begin(), values.begin() + degree + 1);
    out.coefficients = interpolate(out.fitted);
    out.verified = true;
    for (auto it = values.begin() + degree + 1; it != values.end(); ++it) {
        EhrhartCheck c;
        c.dilation = it->dilation;
        c.counted = it->count;
        c.predicted = evaluate_polynomial(out.coefficients, Rational(static_cast<long>(it->dilation)));
        c.match = c.predicted == Rational(it->count);
        out.verified = out.verified && c.match;
        out.checks.push_back(std::move(c));
    }
    return out;
}

} // namespace gtpoly
