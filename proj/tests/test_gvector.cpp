#include <gtest/gtest.h>

#include "stabcone/representation.hpp"
#include "stabcone/stability.hpp"
#include "support.hpp"

using namespace stabcone;
namespace ts = testing_support;

namespace {

StringWord str(const BoundQuiver& q, const char* w) { return check_string(parse_walk(w, q), q); }
BandWord band(const BoundQuiver& q, const char* w) { return check_band(parse_walk(w, q), q); }

// Every rotation of every thin band whose quiver is exactly the band's own quiver.
std::vector<std::pair<BoundQuiver, BandWord>> band_shaped() {
    std::vector<std::pair<BoundQuiver, BandWord>> out;
    auto sq = parse_algebra(ts::kSquare);
    auto kr = parse_algebra(ts::kKronecker);
    auto triangle = parse_algebra("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\n");
    auto hexagon = parse_algebra(
        "vertices: 1 2 3 4 5 6\narrow a: 1 -> 2\narrow b: 3 -> 2\narrow c: 3 -> 4\narrow d: 5 -> 4\n"
        "arrow e: 5 -> 6\narrow f: 1 -> 6\n");
    const std::vector<std::pair<BoundQuiver, const char*>> bases{
        {sq, "a b g- d-"}, {kr, "a b-"}, {triangle, "a b c-"}, {hexagon, "a b- c d- e f-"}};
    for (const auto& [q, w] : bases) {
        const BandWord b = band(q, w);
        for (std::size_t k = 0; k < b.size(); ++k) out.push_back({q, rotate(q, b, k)});
        // the reverse walk is a band of the same module
        const BandWord rb = check_band(reversed(q, b.word()), q);
        for (std::size_t k = 0; k < rb.size(); ++k) out.push_back({q, rotate(q, rb, k)});
    }
    return out;
}

} // namespace

TEST(GVectorOracle, ProjectivesAndSimples) {
    auto sq = parse_algebra(ts::kSquare);
    EXPECT_EQ(g_vector_oracle(sq, str(sq, "@3")), ts::e(4, 3));
    EXPECT_EQ(g_vector_oracle(sq, str(sq, "g- d- a b")), ts::e(4, 1));
    EXPECT_EQ(g_vector_oracle(sq, str(sq, "@1")), ts::iv({1, -1, 0, -1}));

    auto a2 = parse_algebra(ts::kA2);
    EXPECT_EQ(g_vector_oracle(a2, str(a2, "a")), ts::e(2, 1));
    EXPECT_EQ(g_vector_oracle(a2, str(a2, "@1")), ts::ed(2, 1, 2));
    EXPECT_EQ(g_vector_oracle(a2, str(a2, "@2")), ts::e(2, 2));

    auto cyc = parse_algebra(ts::kCyc);
    EXPECT_EQ(g_vector_oracle(cyc, str(cyc, "a b c a")), ts::e(3, 1));
}

TEST(GVectorOracle, RelationsShrinkTheKernelTop) {
    // with a c = 0 the radical of P(1) is S(2)
    auto q = parse_algebra("vertices: 1 2 3\narrow a: 1 -> 2\narrow c: 2 -> 3\nzero: a c\n");
    EXPECT_EQ(g_vector_oracle(q, str(q, "@1")), ts::iv({1, -1, 0}));
    EXPECT_EQ(g_vector_oracle(q, str(q, "a")), ts::e(3, 1));
    EXPECT_EQ(g_vector_oracle(q, str(q, "@2")), ts::iv({0, 1, -1}));
    auto free_q = parse_algebra("vertices: 1 2 3\narrow a: 1 -> 2\narrow c: 2 -> 3\n");
    EXPECT_EQ(g_vector_oracle(free_q, str(free_q, "a")), ts::iv({1, 0, -1}));
}

TEST(GVectorOracle, BandOfExampleSquare) {
    auto sq = parse_algebra(ts::kSquare);
    const BandWord b = band(sq, "a b g- d-");
    EXPECT_EQ(g_vector_oracle(sq, b), ts::ed(4, 1, 3));
    EXPECT_EQ(band_g_vector(sq, b), ts::ed(4, 1, 3));
}

TEST(GVectorFormula, MatchesOracleOnBandShapedQuivers) {
    for (const auto& [q, b] : band_shaped()) {
        SCOPED_TRACE(format_walk(q, b.word()));
        EXPECT_EQ(band_g_vector(q, b), g_vector_oracle(q, b));
        for (std::size_t m = 0; m < b.size(); ++m)
            for (std::size_t r = 0; r <= 3; ++r) {
                SCOPED_TRACE("m=" + std::to_string(m) + " r=" + std::to_string(r));
                EXPECT_EQ(g_vector(q, b, m, r), g_vector_oracle(q, concat_power(q, b, r, m)));
            }
    }
}

TEST(GVectorFormula, AdditivityInTheBandPower) {
    for (const auto& [q, b] : band_shaped()) {
        const IntVector gb = g_vector_oracle(q, b);
        for (std::size_t m = 0; m < b.size(); ++m) {
            const IntVector g1 = g_vector_oracle(q, concat_power(q, b, 1, m));
            const IntVector g2 = g_vector_oracle(q, concat_power(q, b, 2, m));
            EXPECT_EQ(g2 - g1, gb);
        }
    }
}

TEST(GVectorFormula, BaseCaseIsTheSimpleAtTheStart) {
    auto sq = parse_algebra(ts::kSquare);
    const BandWord b = band(sq, "a b g- d-");
    for (std::size_t k = 0; k < 4; ++k) {
        const BandWord rb = rotate(sq, b, k);
        const Word simple(sq, rb.word().start(), {});
        EXPECT_EQ(g_vector(sq, rb, 0, 0), g_vector_oracle(sq, check_string(simple, sq)));
    }
}

TEST(GVectorFormula, NonThinBandRejected) {
    auto loop = parse_algebra(ts::kLoop);
    const BandWord b = band(loop, "a b x-");
    EXPECT_THROW(g_vector(loop, b, 0, 1), DomainError);
    EXPECT_NO_THROW(g_vector_oracle(loop, b));
}

TEST(GVectorProperties, BandVectorLiesInBandCone) {
    for (const auto& src : ts::suite_sources()) {
        auto q = parse_algebra(src);
        for (const auto& b : enumerate_bands(q, 6)) {
            if (!dimension_vector(b).is_thin()) continue;
            SCOPED_TRACE(format_walk(q, b.word()));
            const auto c = oracle_cone(q, b);
            EXPECT_TRUE(c.cone.contains(g_vector_oracle(q, b)));
            EXPECT_TRUE(c.cone.contains(band_g_vector(q, b)));
        }
    }
}

TEST(GVectorProperties, ThinRaysSumToTwiceG) {
    for (const auto& [q, b] : band_shaped()) {
        const BandShape s = band_shape(b);
        IntVector sum = zero_vector(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) sum = sum + letter_ray(s, i);
        EXPECT_EQ(sum, Integer(2) * band_g_positions(s));
    }
    auto sq = parse_algebra(ts::kSquare);
    const auto c = oracle_cone(sq, band(sq, "a b g- d-"));
    IntVector sum = zero_vector(4);
    for (const auto& r : c.cone.rays) sum = sum + r;
    EXPECT_EQ(sum, ts::iv({2, 0, -2, 0}));
}
