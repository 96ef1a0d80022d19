#include "atfkit/orbifold.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace atf;
using namespace testing_support;

namespace {

// Random smooth toric polygon: corner cuts of small size on a monotone seed.
ATBD random_smooth(std::mt19937_64& rng, int blowups) {
    ATBD d = std::uniform_int_distribution<int>(0, 1)(rng)
                 ? polygon({pt(-3, -3), pt(6, -3), pt(-3, 6)})
                 : polygon({pt(-3, -3), pt(3, -3), pt(3, 3), pt(-3, 3)});
    for (int i = 0; i < blowups; ++i) {
        std::uniform_int_distribution<std::size_t> v(0, d.size() - 1);
        for (int attempt = 0; attempt < 20; ++attempt) {
            try {
                d = toric_blowup(d, v(rng), Rat(1, 2));
                break;
            } catch (const DiagramError&) {
            }
        }
    }
    return d;
}

// Every point lies on or left of each hull edge.
bool hull_contains(const HullPolygon& h, const LatticeVec& p) {
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const auto& a = h.vertices[i];
        const auto& b = h.vertices[(i + 1) % h.vertices.size()];
        if (wedge(b - a, p - a) < 0) return false;
    }
    return true;
}

}  // namespace

TEST(Orbifold, CornerOrdersOfMutatedPlane) {
    ATBD d = cp2_three_node();
    LimitOrbifold o = limit_orbifold(d);
    EXPECT_EQ(o.corner_orders, (std::vector<Int>{1, 1, 1}));
    LimitOrbifold m = limit_orbifold(mutate(d, 2));
    std::vector<Int> orders = m.corner_orders;
    std::sort(orders.begin(), orders.end());
    EXPECT_EQ(orders, (std::vector<Int>{1, 1, 4}));
    Rat closure_x = 0, closure_y = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        closure_x += m.edge_lengths[i] * Rat(m.edge_directions[i].x);
        closure_y += m.edge_lengths[i] * Rat(m.edge_directions[i].y);
    }
    EXPECT_EQ(closure_x, 0);
    EXPECT_EQ(closure_y, 0);
}

TEST(Orbifold, PlaneIntersectionMatrix) {
    LimitOrbifold o = limit_orbifold(cp2());
    for (const auto& row : intersection_matrix(o))
        for (const auto& x : row) EXPECT_EQ(x, 1);
    EXPECT_EQ(degree(o), 9);
    EXPECT_EQ(triangle_degree(o), 9);
}

TEST(Orbifold, WeightedPlaneOneOneFour) {
    LimitOrbifold o = limit_orbifold(mutate(cp2_three_node(), 2));
    IntersectionMatrix m = intersection_matrix(o);
    // Edges are D_i = L_i H with length type L = (1,1,4) and H.H = 1/(lambda ABC) = 1/4.
    Rat unit = *std::min_element(o.edge_lengths.begin(), o.edge_lengths.end());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rat li = o.edge_lengths[i] / unit, lj = o.edge_lengths[j] / unit;
            EXPECT_EQ(m[i][j] / (li * lj), Rat(1, 4));
        }
    EXPECT_EQ(degree(o), 9);
    EXPECT_EQ(triangle_degree(o), 9);
}

TEST(Orbifold, SmoothToricNoether) {
    // For smooth toric surfaces K.K = 12 - (number of edges) and v_{i-1} + v_{i+1} = -(D_i.D_i) v_i.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        ATBD d = random_smooth(rng, trial % 5);
        LimitOrbifold o = limit_orbifold(d);
        std::size_t n = o.size();
        EXPECT_EQ(degree(o), Rat(12 - static_cast<long long>(n)));
        auto normals = fan_normals(o);
        for (std::size_t i = 0; i < n; ++i) {
            Rat self = divisor_self_intersection(o, i);
            ASSERT_EQ(boost::multiprecision::denominator(self), 1);
            Int s = boost::multiprecision::numerator(self);
            EXPECT_EQ(normals[(i + n - 1) % n] + normals[(i + 1) % n], -s * normals[i]);
        }
    }
}

TEST(Orbifold, BlowupGivesMinusOneCurve) {
    ATBD d = toric_blowup(cp2(), 0, 1);
    LimitOrbifold o = limit_orbifold(d);
    std::vector<Rat> selfs;
    for (std::size_t i = 0; i < o.size(); ++i) selfs.push_back(divisor_self_intersection(o, i));
    std::sort(selfs.begin(), selfs.end());
    EXPECT_EQ(selfs, (std::vector<Rat>{-1, 0, 0, 1}));
    EXPECT_EQ(degree(o), 8);
    IntersectionMatrix m = intersection_matrix(o);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(m[i][(i + 2) % 4], 0);
        EXPECT_EQ(m[i][(i + 1) % 4], 1);
    }
    EXPECT_THROW(triangle_degree(o), DiagramError);
}

TEST(Orbifold, SeamRejected) {
    ATBD sq = polygon({pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2)}, pt(0, 0));
    ATBD d = almost_toric_blowup(sq, 0, pt(-1, -2), 2, Side::Right);
    EXPECT_THROW(limit_orbifold(d), DiagramError);
    EXPECT_NO_THROW(limit_orbifold(canonicalize(d)));
}

TEST(Orbifold, ConvexHullAgainstBruteForce) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coord(-12, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LatticeVec> pts;
        for (int i = 0; i < 3 + trial % 10; ++i) pts.emplace_back(coord(rng), coord(rng));
        HullPolygon h = convex_hull(pts);
        if (h.vertices.size() < 3) continue;
        for (const auto& p : pts) EXPECT_TRUE(hull_contains(h, p));
        for (std::size_t i = 0; i < h.vertices.size(); ++i) {
            EXPECT_NE(std::find(pts.begin(), pts.end(), h.vertices[i]), pts.end());
            const auto& a = h.vertices[(i + h.vertices.size() - 1) % h.vertices.size()];
            const auto& b = h.vertices[i];
            const auto& c = h.vertices[(i + 1) % h.vertices.size()];
            EXPECT_GT(wedge(b - a, c - b), 0);  // strict turn: no redundant vertices
        }
    }
}

TEST(Orbifold, HullOfPlaneFan) {
    HullPolygon h = predicted_hull(cp2_three_node());
    EXPECT_EQ(hull_edge_lengths(h), (std::vector<Int>{1, 1, 1}));
    HullPolygon m = predicted_hull(mutate(cp2_three_node(), 2));
    std::vector<Int> lengths = hull_edge_lengths(m);
    std::sort(lengths.begin(), lengths.end());
    EXPECT_EQ(lengths, (std::vector<Int>{1, 1, 2}));
    EXPECT_EQ(canonical_hull(m), canonical_hull(convex_hull({{1, 0}, {0, 1}, {-1, -4}})));
}

TEST(Orbifold, CornerAngle) {
    HullPolygon h = convex_hull({{1, 0}, {0, 1}, {-1, -1}});
    EXPECT_EQ(corner_affine_angle(h, {1, 0}), 3);
    EXPECT_THROW(corner_affine_angle(h, {0, 0}), DiagramError);
}

TEST(Orbifold, CanonicalHullIsInvariant) {
    HullPolygon h = convex_hull({{1, 0}, {1, 1}, {0, 1}, {-4, -25}});
    UnimodularMap g(2, 1, 1, 1);
    std::vector<LatticeVec> moved;
    for (const auto& v : h.vertices) moved.push_back(g(v));
    EXPECT_EQ(canonical_hull(convex_hull(moved)), canonical_hull(h));
}
