#pragma once

// JSON encodings shared by the library and the command-line tool.
//
//   pattern:  {"n": 3, "rows": [[2,1,0], ["3/2","1/2"], [1]]}
//             rows run from the top row (row n) down to row 1; entries are
//             integers or "p/q" strings in lowest terms.
//   spec:     {"lambda": [...], "mu": [...]}
//   tiling:   {"tiles": [[[i,j], ...], ...], "free": [tile numbers]}
//   matrix:   row-major array of rows
//   tableau:  array of rows, top row first

#include "gtpoly/combinatorics.hpp"
#include "gtpoly/ehrhart.hpp"
#include "gtpoly/faces.hpp"
#include "gtpoly/family.hpp"
#include "gtpoly/tiling.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gtpoly::io {

using json = nlohmann::json;

inline json to_json(const Integer &z) {
    if (fits_int64(z))
        return to_int64(z);
    return z.get_str();
}

inline json to_json(const Rational &r) {
    if (is_integral(r))
        return to_json(Integer(r.get_num()));
    return r.get_str();
}

inline Integer integer_from_json(const json &j) {
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        auto r = parse_rational(j.get<std::string>());
        if (!is_integral(r))
            throw validation_error("expected an integer, got " + j.get<std::string>());
        return r.get_num();
    }
    throw validation_error("expected an integer, got " + j.dump());
}

inline std::int64_t int64_from_json(const json &j) { return to_int64(integer_from_json(j)); }

inline Rational rational_from_json(const json &j) {
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw validation_error("expected an integer or a \"p/q\" string, got " + j.dump());
}

template <class T> json vector_to_json(const std::vector<T> &v) {
    json a = json::array();
    for (const auto &e : v) {
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
            a.push_back(to_json(e));
        else
            a.push_back(e);
    }
    return a;
}

inline std::vector<std::int64_t> int64_vector_from_json(const json &j, const char *what) {
    if (!j.is_array())
        throw validation_error(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    for (const auto &e : j)
        out.push_back(int64_from_json(e));
    return out;
}

inline std::vector<Integer> integer_vector_from_json(const json &j, const char *what) {
    if (!j.is_array())
        throw validation_error(std::string(what) + " must be an array");
    std::vector<Integer> out;
    for (const auto &e : j)
        out.push_back(integer_from_json(e));
    return out;
}

inline json to_json(const GTPattern &x) {
    json rows = json::array();
    for (int j = x.n(); j >= 1; --j) {
        json row = json::array();
        for (const auto &e : x.row(j))
            row.push_back(to_json(e));
        rows.push_back(std::move(row));
    }
    return {{"n", x.n()}, {"rows", std::move(rows)}};
}

/// Rejects anything that is not exactly the triangular shape declared by "n".
inline GTPattern pattern_from_json(const json &j) {
    if (!j.is_object() || !j.contains("rows"))
        throw validation_error("pattern JSON needs a \"rows\" array");
    const auto &rows = j.at("rows");
    if (!rows.is_array() || rows.empty())
        throw validation_error("\"rows\" must be a nonempty array");
    const int n = static_cast<int>(rows.size());
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer())
            throw validation_error("\"n\" must be an integer");
        if (j.at("n").get<long long>() != n)
            throw validation_error("\"n\" is " + j.at("n").dump() + " but " + std::to_string(n) +
                                   " rows were given");
    }
    std::vector<std::vector<Rational>> bottom_up(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const auto &row = rows.at(static_cast<std::size_t>(k));
        const int j_row = n - k;
        if (!row.is_array() || static_cast<int>(row.size()) != j_row)
            throw validation_error("row " + std::to_string(j_row) + " (listed " + std::to_string(k + 1) +
                                   " from the top) must have " + std::to_string(j_row) + " entries");
        for (const auto &e : row)
            bottom_up[static_cast<std::size_t>(j_row - 1)].push_back(rational_from_json(e));
    }
    return GTPattern::from_rows(bottom_up);
}

inline json to_json(const PolytopeSpec &s) {
    return {{"lambda", vector_to_json(s.lambda)}, {"mu", vector_to_json(s.mu)}};
}

inline PolytopeSpec spec_from_json(const json &j) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("mu"))
        throw validation_error("spec JSON needs \"lambda\" and \"mu\"");
    return {int64_vector_from_json(j.at("lambda"), "lambda"), int64_vector_from_json(j.at("mu"), "mu")};
}

inline json to_json(const Tiling &t) {
    json tiles = json::array();
    for (const auto &tile : t.tiles) {
        json cells = json::array();
        for (const auto &c : tile)
            cells.push_back({c.i, c.j});
        tiles.push_back(std::move(cells));
    }
    return {{"n", t.n}, {"tiles", std::move(tiles)}, {"free", t.free_tiles}};
}

template <class T> json to_json(const Matrix<T> &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(vector_to_json(m.row(r)));
    return rows;
}

inline IntegerMatrix integer_matrix_from_json(const json &j) {
    if (!j.is_array())
        throw validation_error("matrix must be an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto &r : j)
        rows.push_back(integer_vector_from_json(r, "matrix row"));
    return IntegerMatrix::from_rows(rows);
}

inline json to_json(const Transcript &t) {
    json a = json::array();
    for (const auto &c : t)
        a.push_back({{"check", c.name}, {"passed", c.passed}});
    return a;
}

inline json to_json(const KernelBasis &k) {
    json vecs = json::array();
    for (const auto &v : k.vectors)
        vecs.push_back(vector_to_json(v));
    return {{"dimension", k.dimension}, {"vectors", std::move(vecs)}};
}

inline json to_json(const FaceCertificate &c) {
    json dirs = json::array();
    for (const auto &d : c.directions)
        dirs.push_back(to_json(d));
    return {{"face_dimension", c.face_dimension},
            {"kernel_basis", to_json(c.kernel)},
            {"face_directions", std::move(dirs)},
            {"scale", to_json(c.scale)},
            {"verification", to_json(c.transcript)}};
}

inline json to_json(const NonIntegralityCertificate &c) {
    return {{"q", to_json(c.q)},
            {"xi", vector_to_json(c.xi)},
            {"unit_index", c.unit_index},
            {"verification", to_json(c.transcript)}};
}

inline json to_json(const ConstructedVertex &v) {
    return {{"pattern", to_json(v.pattern)},
            {"spec", to_json(v.spec)},
            {"nonintegral", v.nonintegral},
            {"q", to_json(denominator_lcm(v.pattern))},
            {"verification", to_json(v.transcript)}};
}

inline json to_json(const FamilyInstance &f) {
    json out = {{"k", f.k},
                {"n", f.spec.n()},
                {"pattern", to_json(f.pattern)},
                {"spec", to_json(f.spec)},
                {"tiling_matrix", to_json(f.matrix)},
                {"q", to_json(denominator_lcm(f.pattern))},
                {"verification", to_json(f.transcript)}};
    if (f.matrix.rows() == f.matrix.cols())
        out["|det|"] = to_json(abs_of(f.determinant));
    return out;
}

inline json to_json(const Tableau &t) {
    json rows = json::array();
    for (const auto &r : t.rows)
        rows.push_back(r);
    return rows;
}

inline Tableau tableau_from_json(const json &j) {
    if (!j.is_array())
        throw validation_error("tableau must be an array of rows");
    Tableau t;
    for (const auto &r : j)
        t.rows.push_back(int64_vector_from_json(r, "tableau row"));
    return t;
}

inline json to_json(const EhrhartPolynomial &p) {
    json fitted = json::array(), checks = json::array();
    for (const auto &s : p.fitted)
        fitted.push_back({{"m", s.dilation}, {"f", to_json(s.count)}});
    for (const auto &c : p.checks)
        checks.push_back({{"m", c.dilation},
                          {"f", to_json(c.counted)},
                          {"predicted", to_json(c.predicted)},
                          {"match", c.match}});
    return {{"degree", p.degree},
            {"coefficients", vector_to_json(p.coefficients)},
            {"fitted", std::move(fitted)},
            {"checks", std::move(checks)},
            {"verified", p.verified}};
}

} // namespace gtpoly::io
