#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gtpoly;
using namespace gtpoly::test;

namespace {

// Vertices by brute force: every choice of inequalities that, together with
// the equalities, pins down a single point; keep the feasible ones.
std::vector<GTPattern> vertices_by_bases(const PolytopeSpec &spec) {
    const auto sys = constraint_system(spec);
    const int n = spec.n();
    const std::size_t dim = triangle_size(n);
    RationalMatrix eq(sys.equalities.size(), dim);
    for (std::size_t r = 0; r < sys.equalities.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c)
            eq(r, c) = sys.equalities[r].coeffs[c];
    const std::size_t need = dim - rank(eq);
    std::set<GTPattern> found;
    for_each_subset(sys.inequalities.size(), need, [&](const std::vector<std::size_t> &pick) {
        std::vector<const LinearConstraint *> rows;
        for (const auto &e : sys.equalities)
            rows.push_back(&e);
        for (auto p : pick)
            rows.push_back(&sys.inequalities[p]);
        RationalMatrix m(rows.size(), dim + 1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < dim; ++c)
                m(r, c) = rows[r]->coeffs[c];
            m(r, dim) = rows[r]->rhs;
        }
        const auto ech = row_reduce(m);
        if (ech.pivots.size() != dim || ech.pivots.back() != dim - 1)
            return; // not unique, or inconsistent
        GTPattern x(n);
        const auto cells = cells_of(n);
        for (std::size_t r = 0; r < dim; ++r)
            x.at(cells[r]) = ech.reduced(r, dim);
        if (membership(x, spec))
            found.insert(x);
    });
    return {found.begin(), found.end()};
}

std::vector<PolytopeSpec> test_specs() {
    std::vector<PolytopeSpec> out = {
        {{2, 2, 1, 0, 0}, {1, 1, 1, 1, 1}}, {{2, 1, 0}, {1, 1, 1}},         {{3, 1, 0, 0}, {1, 1, 1, 1}},
        {{3, 2, 1, 0}, {2, 1, 2, 1}},       {{2, 2, 0, 0}, {1, 1, 1, 1}},   {{4, 2, 1, 0}, {1, 2, 3, 1}},
        {{3, 3, 2, 1, 0}, {2, 2, 2, 2, 1}}, {{2, 1, 1, 0, 0}, {1, 1, 1, 1, 0}}, {{3, 2, 1}, {2, 2, 2}},
        {{4, 3, 2, 1, 0}, {2, 2, 2, 2, 2}}, instances::face_spec()};
    return out;
}

} // namespace

TEST(Oracle, ConstraintSystemCutsOutThePolytope) {
    const auto sys = constraint_system(instances::face_spec());
    for (const auto &e : sys.equalities)
        EXPECT_EQ(evaluate(e, instances::face_pattern()), e.rhs) << e.label;
    for (const auto &e : sys.inequalities)
        EXPECT_GE(evaluate(e, instances::face_pattern()), e.rhs) << e.label;
    EXPECT_EQ(sys.inequalities.size(), 2 * 10u + 15u);
}

TEST(Oracle, FaceDimensionExamples) {
    EXPECT_EQ(face_dimension_oracle(instances::face_pattern(), instances::face_spec()), 2u);
    EXPECT_EQ(face_dimension_oracle(family_pattern(2), family_spec(2)), 0u);
    const PolytopeSpec point({3, 2, 0}, {3, 2, 0});
    EXPECT_EQ(face_dimension_oracle(enumerate_lattice_points(point).at(0), point), 0u);
    EXPECT_THROW(face_dimension_oracle(instances::face_pattern(), family_spec(2)), validation_error);
}

TEST(Oracle, VerticesOfSinglePoint) {
    const PolytopeSpec point({4, 2, 1, 0}, {4, 2, 1, 0});
    const auto v = enumerate_vertices(point);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0], enumerate_lattice_points(point).at(0));
}

TEST(Oracle, FamilyVertexIsFound) {
    const auto v = enumerate_vertices(family_spec(2));
    EXPECT_NE(std::find(v.begin(), v.end(), family_pattern(2)), v.end());
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
}

TEST(Oracle, EmptyPolytopes) {
    EXPECT_TRUE(enumerate_vertices(PolytopeSpec({1, 1}, {2, 0})).empty());
    EXPECT_TRUE(enumerate_vertices(PolytopeSpec({1, 2}, {1, 2})).empty());
    EXPECT_TRUE(enumerate_vertices(PolytopeSpec({2, 1, 0}, {1, 1, 2})).empty());
    EXPECT_EQ(polytope_dimension(PolytopeSpec({1, 1}, {2, 0})), -1);
    EXPECT_THROW(sample_points(PolytopeSpec({1, 1}, {2, 0}), 3, 1), validation_error);
}

TEST(Oracle, SmallDimensions) {
    EXPECT_EQ(polytope_dimension(PolytopeSpec({2, 1, 0}, {1, 1, 1})), 1);
    EXPECT_EQ(polytope_dimension(PolytopeSpec({1}, {1})), 0);
    EXPECT_EQ(polytope_dimension(PolytopeSpec({3, 0}, {1, 2})), 0);
    EXPECT_EQ(polytope_dimension(PolytopeSpec({3, 2, 1, 0}, {3, 2, 1, 0})), 0);
}

TEST(Oracle, ScaleGuard) {
    const PolytopeSpec seven = family_spec(3);
    EXPECT_THROW(enumerate_vertices(seven), scale_guard_error);
    EXPECT_THROW(enumerate_vertices(family_spec(2), 4), scale_guard_error);
    try {
        enumerate_vertices(seven);
    } catch (const validation_error &e) {
        EXPECT_NE(std::string(e.what()).find("n <= 6"), std::string::npos);
    }
}

TEST(Sample, SinglePointRepeats) {
    const PolytopeSpec point({2, 1, 0}, {2, 1, 0});
    const auto pts = sample_points(point, 7, 99);
    ASSERT_EQ(pts.size(), 7u);
    for (const auto &p : pts)
        EXPECT_EQ(p, pts[0]);
}

TEST(Sample, MembersAndDeterminism) {
    const PolytopeSpec spec({2, 2, 1, 0, 0}, {1, 1, 1, 1, 1});
    const auto a = sample_points(spec, 10, 1);
    ASSERT_EQ(a.size(), 10u);
    for (const auto &p : a)
        EXPECT_TRUE(membership(p, spec));
    EXPECT_EQ(a, sample_points(spec, 10, 1));
}

TEST(Sample, MidpointsHavePositiveFaceDimension) {
    const PolytopeSpec spec({2, 2, 1, 0, 0}, {1, 1, 1, 1, 1});
    const auto pts = enumerate_lattice_points(spec);
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const auto mid = Rational(1, 2) * (pts[a] + pts[b]);
            EXPECT_GE(face_dimension(mid, spec), 1u);
            EXPECT_GE(face_dimension_oracle(mid, spec), 1u);
        }
}

TEST(OracleProperty, DoubleDescriptionMatchesBasisEnumeration) {
    std::vector<PolytopeSpec> specs;
    for (std::int64_t a = 0; a <= 3; ++a)
        for (std::int64_t b = 0; b <= a; ++b)
            for (std::int64_t c = 0; c <= b; ++c)
                for (std::int64_t d = 0; d <= a + b + c; ++d)
                    for (std::int64_t e = 0; d + e <= a + b + c; ++e)
                        specs.push_back({{a, b, c}, {d, e, a + b + c - d - e}});
    specs.push_back({{3, 2, 1, 0}, {2, 1, 2, 1}});
    specs.push_back({{2, 2, 0, 0}, {1, 1, 1, 1}});
    specs.push_back({{3, 1, 1, 0}, {1, 2, 1, 1}});
    for (const auto &spec : specs)
        EXPECT_EQ(enumerate_vertices(spec), vertices_by_bases(spec)) << to_string(spec);
}

TEST(OracleProperty, FaceDimensionsAgree) {
    std::size_t total = 0;
    for (const auto &spec : test_specs()) {
        for (const auto &x : sample_points(spec, 15, 7)) {
            EXPECT_EQ(face_dimension(x, spec), face_dimension_oracle(x, spec)) << to_string(spec);
            ++total;
        }
    }
    EXPECT_GE(total, 100u);
}

TEST(OracleProperty, VertexCriterionMatchesEnumeration) {
    for (const auto &spec : test_specs()) {
        const auto verts = enumerate_vertices(spec);
        for (const auto &v : verts)
            EXPECT_TRUE(is_vertex(v, spec)) << to_string(spec);
        std::vector<GTPattern> candidates = enumerate_lattice_points(spec);
        const auto samples = sample_points(spec, 20, 3);
        candidates.insert(candidates.end(), samples.begin(), samples.end());
        for (const auto &x : candidates) {
            const bool listed = std::binary_search(verts.begin(), verts.end(), x);
            EXPECT_EQ(is_vertex(x, spec), listed) << to_string(spec);
        }
    }
}

TEST(OracleProperty, VertexDenominatorsBelowBound) {
    for (const auto &spec : test_specs()) {
        const auto bound = denominator_bound(spec.n());
        for (const auto &v : enumerate_vertices(spec))
            EXPECT_LT(denominator_lcm(v), bound);
    }
}
