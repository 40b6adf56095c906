#pragma once

// Exact linear algebra over Q, Z and Z/qZ.

#include "gtpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtpoly {

/// Dense row-major matrix. Zero-row and zero-column shapes are legal.
template <class T> class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols = 0) {
        if (!rows.empty())
            cols = rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw validation_error("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = rows[r][c];
        }
        return m;
    }

    template <class U>
        requires(!std::is_same_v<U, T>)
    static Matrix from_rows(const std::vector<std::vector<U>> &rows) {
        std::vector<std::vector<T>> v;
        for (const auto &row : rows)
            v.emplace_back(row.begin(), row.end());
        return from_rows(v);
    }

    template <class U>
    static Matrix from_rows(std::initializer_list<std::initializer_list<U>> rows) {
        std::vector<std::vector<T>> v;
        for (const auto &row : rows) {
            std::vector<T> r;
            for (const auto &e : row)
                r.emplace_back(e);
            v.push_back(std::move(r));
        }
        return from_rows(v);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t r = 0; r < rows_; ++r)
            out.push_back(row(r));
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

inline RationalMatrix to_rational(const IntegerMatrix &m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Rational(m(r, c));
    return out;
}

template <class T, class V>
std::vector<V> multiply(const Matrix<T> &m, const std::vector<V> &v) {
    if (v.size() != m.cols())
        throw validation_error("matrix-vector size mismatch");
    std::vector<V> out(m.rows(), V(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] += V(m(r, c)) * v[c];
    return out;
}

/// Reduced row echelon form and its pivot columns.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

inline RowEchelon row_reduce(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t p = lead;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != lead)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(p, c), m(lead, c));
        const Rational inv = 1 / m(lead, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(lead, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, col) == 0)
                continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix &m) { return row_reduce(m).pivots.size(); }
inline std::size_t rank(const IntegerMatrix &m) { return rank(to_rational(m)); }

/// Scale a rational vector to integers with gcd 1 and first nonzero entry positive.
inline std::vector<Integer> primitive_integer(const std::vector<Rational> &v) {
    Integer den = 1;
    for (const auto &e : v)
        den = lcm_of(den, e.get_den());
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto &e : v) {
        Rational s = e * den;
        out.push_back(s.get_num());
        g = gcd_of(g, out.back());
    }
    if (g == 0)
        return out;
    int sign = 1;
    for (const auto &e : out)
        if (e != 0) {
            sign = e < 0 ? -1 : 1;
            break;
        }
    for (auto &e : out)
        e = e / g * sign;
    return out;
}

inline std::vector<Integer> primitive_integer(const std::vector<Integer> &v) {
    std::vector<Rational> r(v.begin(), v.end());
    return primitive_integer(r);
}

/// Basis of the null space, one vector per free column of the reduced
/// row echelon form in increasing column order.
struct KernelBasis {
    std::size_t dimension = 0;
    std::vector<std::vector<Integer>> vectors;
};

inline KernelBasis kernel_basis(const RationalMatrix &m) {
    auto [r, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    KernelBasis out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, f);
        out.vectors.push_back(primitive_integer(v));
    }
    out.dimension = out.vectors.size();
    return out;
}

inline KernelBasis kernel_basis(const IntegerMatrix &m) { return kernel_basis(to_rational(m)); }

inline Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols())
        throw validation_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(p, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            const Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline Integer determinant(IntegerMatrix m) {
    if (m.rows() != m.cols())
        throw validation_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(p, c), m(k, c));
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c)
                m(r, c) = (m(r, c) * m(k, k) - m(r, k) * m(k, c)) / prev;
            m(r, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// U * A * V = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1}. Only the
/// column transform V is tracked; it is unimodular.
struct SmithForm {
    std::vector<Integer> diagonal; // min(rows, cols) entries, nonnegative
    IntegerMatrix column_transform;
};

inline SmithForm smith_normal_form(IntegerMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntegerMatrix v = IntegerMatrix::identity(n);
    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(r1, c), a(r2, c));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t r = 0; r < m; ++r)
            std::swap(a(r, c1), a(r, c2));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(v(r, c1), v(r, c2));
    };
    // col c2 -= f * col c1
    auto sub_col = [&](std::size_t c2, std::size_t c1, const Integer &f) {
        for (std::size_t r = 0; r < m; ++r)
            a(r, c2) -= f * a(r, c1);
        for (std::size_t r = 0; r < n; ++r)
            v(r, c2) -= f * v(r, c1);
    };
    auto sub_row = [&](std::size_t r2, std::size_t r1, const Integer &f) {
        for (std::size_t c = 0; c < n; ++c)
            a(r2, c) -= f * a(r1, c);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // Smallest nonzero magnitude in the trailing block becomes the pivot.
        for (;;) {
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t r = t; r < m; ++r)
                for (std::size_t c = t; c < n; ++c)
                    if (a(r, c) != 0 && (!found || abs_of(a(r, c)) < best)) {
                        best = abs_of(a(r, c));
                        pr = r;
                        pc = c;
                        found = true;
                    }
            if (!found)
                break;
            if (pr != t)
                swap_rows(pr, t);
            if (pc != t)
                swap_cols(pc, t);

            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a(r, t) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                sub_row(r, t, q);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a(t, c) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                sub_col(c, t, q);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility: fold any row whose entries the pivot does not divide.
            std::size_t bad_row = m;
            for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (mod_of(a(r, c), abs_of(a(t, t))) != 0) {
                        bad_row = r;
                        break;
                    }
            if (bad_row == m)
                break;
            for (std::size_t c = 0; c < n; ++c)
                a(t, c) += a(bad_row, c);
        }
        if (a(t, t) < 0)
            for (std::size_t c = 0; c < n; ++c)
                a(t, c) = -a(t, c);
    }

    SmithForm out;
    for (std::size_t t = 0; t < steps; ++t)
        out.diagonal.push_back(a(t, t));
    out.column_transform = std::move(v);
    return out;
}

/// Solutions of M xi = 0 over Z/qZ.
struct ModularKernel {
    Integer modulus;
    /// Generating set of the kernel module, entries in [0, q).
    std::vector<std::vector<Integer>> generators;
    /// A kernel element with some coordinate coprime to q, if one exists.
    std::optional<std::vector<Integer>> witness;
    std::size_t unit_index = 0;
};

inline std::vector<Integer> reduce_mod(std::vector<Integer> v, const Integer &q) {
    for (auto &e : v)
        e = mod_of(e, q);
    return v;
}

inline bool in_kernel_mod(const IntegerMatrix &m, const std::vector<Integer> &xi, const Integer &q) {
    for (const auto &e : multiply(m, xi))
        if (mod_of(e, q) != 0)
            return false;
    return true;
}

inline ModularKernel kernel_mod_q(const IntegerMatrix &m, const Integer &q) {
    if (q < 2)
        throw validation_error("modulus must be at least 2, got " + q.get_str());
    const std::size_t s = m.cols();
    auto snf = smith_normal_form(m);
    const auto &v = snf.column_transform;

    // With eta = V^{-1} xi the system decouples into d_t eta_t = 0 (mod q).
    ModularKernel out;
    out.modulus = q;
    for (std::size_t t = 0; t < s; ++t) {
        Integer step = 1; // eta_t ranges over multiples of step
        if (t < snf.diagonal.size() && snf.diagonal[t] != 0)
            step = q / gcd_of(snf.diagonal[t], q);
        if (step == q)
            continue;
        std::vector<Integer> g(s);
        for (std::size_t r = 0; r < s; ++r)
            g[r] = v(r, t) * step;
        out.generators.push_back(reduce_mod(std::move(g), q));
    }

    // The k-th coordinate projection of the kernel is the ideal generated by
    // gcd(q, generator coordinates); a unit exists there iff that gcd is 1.
    for (std::size_t k = 0; k < s && !out.witness; ++k) {
        Integer g = q;
        std::vector<Integer> coeff(out.generators.size(), Integer(0));
        // Extended gcd accumulated across generators: g = c_q q + sum c_i gen_i[k].
        for (std::size_t i = 0; i < out.generators.size(); ++i) {
            const Integer &a = out.generators[i][k];
            if (a == 0)
                continue;
            Integer ng, s1, t1;
            mpz_gcdext(ng.get_mpz_t(), s1.get_mpz_t(), t1.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
            if (ng == g)
                continue;
            for (auto &c : coeff)
                c *= s1;
            coeff[i] += t1;
            g = ng;
        }
        if (g != 1)
            continue;
        std::vector<Integer> xi(s, Integer(0));
        for (std::size_t i = 0; i < out.generators.size(); ++i)
            for (std::size_t r = 0; r < s; ++r)
                xi[r] += coeff[i] * out.generators[i][r];
        out.witness = reduce_mod(std::move(xi), q);
        out.unit_index = k;
    }
    return out;
}

} // namespace gtpoly
