#pragma once

// Small worked instances used by the tests, the acceptance suite and the
// `repro-paper` command.

#include "gtpoly/combinatorics.hpp"
#include "gtpoly/pattern.hpp"

namespace gtpoly::instances {

/// Non-integral member of GT((6,5,3,2,0),(4,1,4,5,2)) on a 2-dimensional face.
inline GTPattern face_pattern() {
    return GTPattern::from_rows({
        {Rational(4)},
        {Rational(9, 2), Rational(1, 2)},
        {Rational(5), Rational(7, 2), Rational(1, 2)},
        {Rational(6), Rational(9, 2), Rational(3), Rational(1, 2)},
        {Rational(6), Rational(5), Rational(3), Rational(2), Rational(0)},
    });
}

inline PolytopeSpec face_spec() { return {{6, 5, 3, 2, 0}, {4, 1, 4, 5, 2}}; }

/// Tiling matrix of face_pattern().
inline std::vector<std::vector<long>> face_matrix() {
    return {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 0, 0, 1}};
}

/// Spanning vectors of the kernel of face_matrix(), up to scale.
inline std::vector<std::vector<long>> face_kernel() { return {{0, 0, -1, 1, 0}, {1, -1, 1, 0, 1}}; }

/// Integral pattern in GT((6,3,2,2,0),(3,1,3,1,5)).
inline GTPattern tableau_pattern() {
    return GTPattern::from_rows<int>({{3}, {3, 1}, {4, 2, 1}, {4, 2, 2, 0}, {6, 3, 2, 2, 0}});
}

inline PolytopeSpec tableau_spec() { return {{6, 3, 2, 2, 0}, {3, 1, 3, 1, 5}}; }

/// Semistandard tableau matching tableau_pattern().
inline Tableau tableau_rows() { return {{{1, 1, 1, 3, 5, 5}, {2, 3, 5}, {3, 4}, {5, 5}}}; }

/// Tiling matrix of a 6-row vertex; kept as a golden matrix.
inline std::vector<std::vector<long>> six_row_vertex_matrix() {
    return {{1, 0, 0}, {1, 1, 0}, {2, 2, 0}, {1, 1, 1}};
}

} // namespace gtpoly::instances
