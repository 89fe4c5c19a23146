#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "stabcone/cone.hpp"
#include "support.hpp"

using namespace stabcone;
using testing_support::as_set;
using testing_support::iv;
using testing_support::ivs;

namespace {

// Extreme rays of a pointed H-cone by trying every subset of inequalities that cuts
// out a line together with the equalities.
std::set<IntVector> brute_force_rays(std::size_t n, const std::vector<IntVector>& eqs,
                                     const std::vector<IntVector>& ineqs) {
    std::set<IntVector> out;
    const std::size_t m = ineqs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<IntVector> rows = eqs;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) rows.push_back(ineqs[i]);
        if (rank(rows) != n - 1) continue;
        auto k = nullspace(rows, n);
        for (IntVector d : {k[0], negated(k[0])}) {
            bool ok = true;
            for (const auto& a : ineqs) ok = ok && dot(a, d) <= 0;
            if (ok) out.insert(primitive(d));
        }
    }
    return out;
}

// Facet normals of a full-dimensional pointed V-cone: hyperplanes spanned by n-1
// generators with every generator weakly on the negative side.
std::set<IntVector> brute_force_facets(std::size_t n, const std::vector<IntVector>& gens) {
    std::set<IntVector> out;
    const std::size_t m = gens.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) rows.push_back(gens[i]);
        if (rank(rows) != n - 1) continue;
        auto k = nullspace(rows, n);
        for (IntVector a : {k[0], negated(k[0])}) {
            bool ok = true;
            for (const auto& g : gens) ok = ok && dot(a, g) <= 0;
            if (ok) out.insert(primitive(a));
        }
    }
    return out;
}

IntVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
    return v;
}

} // namespace

TEST(Cone, HalfLine) {
    auto c = convert(RationalCone::from_halfspaces(1, {}, ivs({{1}})));
    EXPECT_EQ(c.rays, ivs({{-1}}));
    EXPECT_TRUE(c.lineality.empty());
    EXPECT_TRUE(c.reps_synced);
}

TEST(Cone, BandStringHalfspacesToRays) {
    auto c = convert(RationalCone::from_halfspaces(4, ivs({{1, 1, 2, 1}}),
                                                   ivs({{0, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}})));
    EXPECT_EQ(as_set(c.rays), as_set(ivs({{1, 0, 0, -1}, {1, -1, 0, 0}, {0, 1, -1, 1}})));
}

TEST(Cone, OrthantToHalfspaces) {
    auto c = convert(RationalCone::from_generators(2, ivs({{1, 0}, {0, 1}})), Target::halfspaces);
    EXPECT_EQ(as_set(c.inequalities), as_set(ivs({{-1, 0}, {0, -1}})));
    EXPECT_TRUE(c.equalities.empty());
}

TEST(Cone, WholeSpaceAndOrigin) {
    auto w = convert(RationalCone::whole_space(3));
    EXPECT_TRUE(w.rays.empty());
    EXPECT_EQ(w.lineality.size(), 3u);
    EXPECT_TRUE(w.inequalities.empty());
    auto o = convert(RationalCone::origin(3));
    EXPECT_TRUE(o.rays.empty());
    EXPECT_TRUE(o.lineality.empty());
    EXPECT_EQ(o.equalities.size(), 3u);
    EXPECT_EQ(o.dimension(), 0u);
}

TEST(Cone, HalfplaneHasLineality) {
    auto c = convert(RationalCone::from_halfspaces(2, {}, ivs({{1, 0}})));
    EXPECT_EQ(c.rays, ivs({{-1, 0}}));
    EXPECT_EQ(c.lineality, ivs({{0, 1}}));
    // generators off the lineality are projected, so the V-form is canonical
    auto d = convert(RationalCone::from_generators(2, ivs({{-2, 5}}), ivs({{0, -3}})));
    EXPECT_EQ(c, d);
}

TEST(Cone, RedundantGeneratorsAreRemoved) {
    auto c = convert(RationalCone::from_generators(2, ivs({{1, 0}, {0, 1}, {1, 1}, {2, 0}})));
    EXPECT_EQ(c.rays, ivs({{0, 1}, {1, 0}}));
}

TEST(Cone, DimensionMismatchThrows) {
    EXPECT_THROW(RationalCone::from_generators(2, ivs({{1, 0, 0}})), DomainError);
    auto a = convert(RationalCone::origin(2));
    auto b = convert(RationalCone::origin(3));
    EXPECT_THROW(relate(a, b), DomainError);
    EXPECT_THROW(intersect_subspace(a, ivs({{1}})), DomainError);
}

TEST(Cone, IntersectSubspace) {
    auto orthant = RationalCone::from_generators(2, ivs({{1, 0}, {0, 1}}));
    auto c = intersect_subspace(orthant, ivs({{1, -1}}));
    EXPECT_EQ(c.rays, ivs({{1, 1}}));
    auto same = intersect_subspace(orthant, ivs({{0, 0}}));
    EXPECT_EQ(same, convert(orthant));
}

TEST(Cone, IntersectThinLineWithGlueEquations) {
    // line quiver on five vertices, copies 1<->4 and 2<->5 glued
    auto t = RationalCone::from_generators(
        5, ivs({{1, -1, 0, 0, 0}, {0, 1, -1, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 0, 1, -1}}));
    auto c = intersect_subspace(t, ivs({{1, 0, 0, -1, 0}, {0, 1, 0, 0, -1}}));
    EXPECT_EQ(c.rays, ivs({{1, -1, 0, 1, -1}}));
    EXPECT_TRUE(c.lineality.empty());
}

TEST(Cone, Relate) {
    auto band = RationalCone::from_generators(
        4, ivs({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, -1, 1}, {1, 0, 0, -1}}));
    EXPECT_EQ(relate(band, iv({1, 0, -1, 0})), Relation::contains_point);
    EXPECT_EQ(relate(band, iv({-1, 0, 1, 0})), Relation::incomparable);
    auto sub = RationalCone::from_generators(4, ivs({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, -1, 1}}));
    EXPECT_EQ(relate(band, sub), Relation::subcone);
    EXPECT_EQ(relate(sub, band), Relation::supercone);
    EXPECT_EQ(relate(band, band), Relation::equal);
    auto other = RationalCone::from_generators(4, ivs({{-1, 1, 0, 0}}));
    EXPECT_EQ(relate(band, other), Relation::incomparable);
}

TEST(Cone, FaceLatticeOfRay) {
    auto f = face_lattice(RationalCone::from_generators(2, ivs({{1, -1}})));
    ASSERT_EQ(f.faces.size(), 2u);
    EXPECT_EQ(f.faces[0].dim, 0u);
    EXPECT_EQ(f.faces[1].dim, 1u);
    EXPECT_TRUE(f.simplicial);
}

TEST(Cone, SimplicialFaceCountIsPowerOfTwo) {
    for (std::size_t d = 1; d <= 5; ++d) {
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < d; ++i) gens.push_back(unit_vector(d, i));
        auto f = face_lattice(RationalCone::from_generators(d, gens));
        EXPECT_EQ(f.faces.size(), std::size_t{1} << d);
        EXPECT_TRUE(f.simplicial);
    }
}

TEST(Cone, FaceLatticeOfSquareCone) {
    auto band = RationalCone::from_generators(
        4, ivs({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, -1, 1}, {1, 0, 0, -1}}));
    auto f = face_lattice(band);
    // apex, 4 rays, 4 two-dimensional faces, the cone
    EXPECT_EQ(f.faces.size(), 10u);
    EXPECT_FALSE(f.simplicial);
    EXPECT_EQ(face_lattice(band, 1).faces.size(), 5u);
}

TEST(Cone, DualCone) {
    auto neg = RationalCone::from_generators(2, ivs({{-1, 0}, {0, -1}}));
    EXPECT_EQ(dual_cone(neg), convert(neg));
    auto chain = RationalCone::from_generators(2, ivs({{-1, 1}}));
    auto d = dual_cone(chain);
    EXPECT_EQ(d.inequalities, ivs({{1, -1}}));
    EXPECT_EQ(d.rays, ivs({{-1, 1}}));
    EXPECT_EQ(d.lineality, ivs({{1, 1}}));
}

TEST(Cone, DoubleDualRandom) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + trial % 2;
        std::vector<IntVector> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(random_vector(rng, n, -3, 3));
        auto c = convert(RationalCone::from_generators(n, gens));
        EXPECT_EQ(dual_cone(dual_cone(c)), c);
    }
}

TEST(Cone, SpanUnion) {
    auto a = RationalCone::from_generators(2, ivs({{1, 0}}));
    auto b = RationalCone::from_generators(2, ivs({{0, 1}}));
    EXPECT_EQ(span_union(a, b), convert(RationalCone::from_generators(2, ivs({{1, 0}, {0, 1}}))));
    EXPECT_EQ(span_union(a, a), convert(a));
    auto opposite = RationalCone::from_generators(2, ivs({{-1, 0}}));
    EXPECT_EQ(span_union(a, opposite).lineality, ivs({{1, 0}}));
}

TEST(Cone, RandomHalfspacesMatchBruteForce) {
    std::mt19937 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + trial % 2;
        std::vector<IntVector> ineqs;
        for (std::size_t i = 0; i < 3 + static_cast<std::size_t>(trial % 4); ++i)
            ineqs.push_back(random_vector(rng, n, -2, 2));
        std::vector<IntVector> eqs;
        if (trial % 5 == 0) eqs.push_back(random_vector(rng, n, -1, 1));
        auto c = convert(RationalCone::from_halfspaces(n, eqs, ineqs));
        std::vector<IntVector> all = eqs;
        all.insert(all.end(), ineqs.begin(), ineqs.end());
        EXPECT_EQ(c.lineality.size(), n - rank(all));
        if (!c.lineality.empty()) continue;
        EXPECT_EQ(as_set(c.rays), brute_force_rays(n, eqs, ineqs)) << "trial " << trial;
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(Cone, RandomGeneratorsMatchBruteForceFacets) {
    std::mt19937 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3;
        std::vector<IntVector> gens;
        // keep the cone inside the halfspace x1 + x2 + x3 > 0 so it is pointed
        while (gens.size() < 5) {
            auto v = random_vector(rng, n, -2, 3);
            if (v[0] + v[1] + v[2] > 0) gens.push_back(v);
        }
        auto c = convert(RationalCone::from_generators(n, gens));
        if (c.dimension() != n) continue;
        EXPECT_EQ(as_set(c.inequalities), brute_force_facets(n, gens)) << "trial " << trial;
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(Cone, RoundTripAndTightness) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4;
        std::vector<IntVector> gens;
        for (int i = 0; i < 5; ++i) gens.push_back(random_vector(rng, n, -2, 2));
        auto c = convert(RationalCone::from_generators(n, gens));
        auto back = convert(RationalCone::from_halfspaces(n, c.equalities, c.inequalities));
        EXPECT_EQ(back, c);
        for (const auto& r : c.rays) {
            std::vector<IntVector> tight;
            for (const auto& a : c.inequalities)
                if (dot(a, r) == 0) tight.push_back(a);
            EXPECT_GE(rank(tight) + 1 + c.lineality.size(), c.dimension());
            EXPECT_EQ(content(r), 1);
        }
    }
}
