#pragma once

// Non-integral vertices with denominator k in X_{2k+1}, and the
// denominator bound for fixed n.

#include "gtpoly/faces.hpp"

#include <cstdint>
#include <string>

namespace gtpoly {

struct FamilyInstance {
    int k = 0;
    PolytopeSpec spec;
    GTPattern pattern;
    IntegerMatrix matrix;
    Integer determinant; // of the square tiling matrix (odd n) or 0 if not square
    Transcript transcript;
};

/// lambda = (k^k, k-1, 0^k), mu = ((k-1)^{k+1}, 1^k).
inline PolytopeSpec family_spec(int k) {
    std::vector<std::int64_t> lambda, mu;
    for (int t = 0; t < k; ++t)
        lambda.push_back(k);
    lambda.push_back(k - 1);
    for (int t = 0; t < k; ++t)
        lambda.push_back(0);
    for (int t = 0; t <= k; ++t)
        mu.push_back(k - 1);
    for (int t = 0; t < k; ++t)
        mu.push_back(1);
    return {std::move(lambda), std::move(mu)};
}

/// The casewise pattern x^(k). On the diagonal i = j <= k+1 the entry is
/// (k-j+1)(k-1)/k; the variant with factor (k+1) would give
/// x_{11} = k+1 != mu_1 and break x_{11} <= x_{12}.
inline GTPattern family_pattern(int k) {
    const int n = 2 * k + 1;
    GTPattern x(n);
    const Rational kk(k);
    const Rational k_minus_inv = kk - Rational(1, k);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= j; ++i) {
            Rational v;
            if (j <= k + 1) {
                v = i == j ? make_rational((k - j + 1) * (k - 1), k) : k_minus_inv;
            } else if (i < j - k) {
                v = kk;
            } else if (i <= k) {
                v = k_minus_inv;
            } else if (i == k + 1) {
                v = make_rational((j - k - 1) * (k - 1), k);
            } else {
                v = 0;
            }
            x.at(i, j) = v;
        }
    }
    return x;
}

/// Expected tiling-matrix shape: first column (1, 2, ..., k, ..., 2, 1),
/// the rest an identity with the middle row skipped.
inline bool has_family_matrix_shape(const IntegerMatrix &a, int k) {
    const std::size_t size = static_cast<std::size_t>(2 * k - 1);
    if (a.rows() != size || a.cols() != size)
        return false;
    const std::size_t middle = static_cast<std::size_t>(k - 1);
    for (std::size_t r = 0; r < size; ++r) {
        const long expected_first = r <= middle ? static_cast<long>(r + 1)
                                                : static_cast<long>(2 * k - 1 - static_cast<int>(r));
        if (a(r, 0) != expected_first)
            return false;
        for (std::size_t c = 1; c < size; ++c) {
            const std::size_t hot = c <= middle ? c - 1 : c;
            if (a(r, c) != (r == hot ? 1 : 0))
                return false;
        }
    }
    return true;
}

inline FamilyInstance counterexample(int k) {
    if (k < 2)
        throw validation_error("family parameter k must be at least 2, got " + std::to_string(k));
    FamilyInstance out;
    out.k = k;
    out.spec = family_spec(k);
    out.pattern = family_pattern(k);
    const Integer kz(k);

    const bool member = membership(out.pattern, out.spec);
    out.transcript.push_back({"pattern lies in GT(lambda, mu)", member});
    if (!member)
        throw verification_error("family pattern for k=" + std::to_string(k) +
                                 " is not in its polytope");
    out.matrix = tiling_matrix(out.pattern);
    out.transcript.push_back({"tiling matrix has the expected shape",
                              has_family_matrix_shape(out.matrix, k)});
    out.determinant = out.matrix.rows() == out.matrix.cols() ? determinant(out.matrix) : Integer(0);
    out.transcript.push_back({"|det A_P| = k", abs_of(out.determinant) == kz});
    out.transcript.push_back({"pattern is a vertex", is_vertex(out.pattern, out.spec)});
    out.transcript.push_back({"denominator lcm = k", denominator_lcm(out.pattern) == kz});
    require_passed(out.transcript, "family k=" + std::to_string(k));
    return out;
}

/// The k-th instance pushed into X_{2k+2} through the embedding.
inline FamilyInstance counterexample_even_n(int k) {
    auto base = counterexample(k);
    FamilyInstance out;
    out.k = k;
    out.spec = embed(base.spec);
    out.pattern = embed(base.pattern);
    out.matrix = tiling_matrix(out.pattern);
    out.determinant = 0;
    const Integer kz(k);
    out.transcript.push_back({"pattern lies in GT((lambda,0),(0,mu))", membership(out.pattern, out.spec)});
    out.transcript.push_back({"pattern is a vertex", is_vertex(out.pattern, out.spec)});
    out.transcript.push_back({"denominator lcm = k", denominator_lcm(out.pattern) == kz});
    require_passed(out.transcript, "even family k=" + std::to_string(k));
    return out;
}

/// (n-1)^(C(n+1,2) - n - 1).
inline Integer denominator_bound(int n) {
    if (n < 2)
        throw validation_error("denominator bound needs n >= 2");
    const unsigned long exponent = static_cast<unsigned long>(n) * static_cast<unsigned long>(n + 1) / 2 -
                                   static_cast<unsigned long>(n) - 1;
    return pow_of(Integer(n - 1), exponent);
}

} // namespace gtpoly
