#include "atfkit/atbd.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <climits>
#include <numeric>
#include <random>

using namespace atf;
using namespace testing_support;

namespace {

std::vector<Rat> ratio(std::vector<long long> v) {
    std::vector<Rat> out;
    for (auto x : v) out.push_back(Rat(x));
    return out;
}

// Pick's theorem on the polygon scaled to integer coordinates: an area oracle
// that never uses the shoelace formula.
Rat pick_area(const ATBD& d) {
    Int den = 1;
    for (const auto& v : d.vertices)
        for (const Rat& c : {v.x, v.y}) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    std::vector<std::pair<long long, long long>> pts;
    for (const auto& v : d.vertices)
        pts.emplace_back((v.x * Rat(den)).convert_to<long long>(), (v.y * Rat(den)).convert_to<long long>());
    long long minx = LLONG_MAX, maxx = LLONG_MIN, miny = LLONG_MAX, maxy = LLONG_MIN, boundary = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [x0, y0] = pts[i];
        auto [x1, y1] = pts[(i + 1) % pts.size()];
        boundary += std::gcd(std::llabs(x1 - x0), std::llabs(y1 - y0));
        minx = std::min(minx, x0), maxx = std::max(maxx, x0), miny = std::min(miny, y0), maxy = std::max(maxy, y0);
    }
    long long interior = 0;
    for (long long x = minx; x <= maxx; ++x)
        for (long long y = miny; y <= maxy; ++y) {
            bool on_edge = false, inside = false;
            for (std::size_t i = 0, j = pts.size() - 1; i < pts.size(); j = i++) {
                auto [xi, yi] = pts[i];
                auto [xj, yj] = pts[j];
                long long cross = (xj - xi) * (y - yi) - (yj - yi) * (x - xi);
                if (cross == 0 && std::min(xi, xj) <= x && x <= std::max(xi, xj) && std::min(yi, yj) <= y &&
                    y <= std::max(yi, yj))
                    on_edge = true;
                if ((yi > y) != (yj > y)) {
                    long long den = yj - yi, num = (xj - xi) * (y - yi) + xi * den;
                    if (den > 0 ? x * den < num : x * den > num) inside = !inside;
                }
            }
            if (!on_edge && inside) ++interior;
        }
    return (Rat(interior) + Rat(boundary, 2) - 1) / Rat(den * den);
}

}  // namespace

TEST(Atbd, ValidateReferenceTriangle) {
    EXPECT_TRUE(validate(cp2()).ok());
    EXPECT_TRUE(validate(cp2_three_node()).ok());
    ATBD bad = cp2();
    bad.cuts.push_back(Cut{{1, 1}, CutKind::Ray, {0}, {Rat(1, 2)}});
    auto r = validate(bad);
    ASSERT_FALSE(r.ok());
    bool role_message = false;
    for (const auto& v : r.violations)
        if (v.find("cut base vertex must have CUT_BASE role") != std::string::npos) role_message = true;
    EXPECT_TRUE(role_message);
}

TEST(Atbd, ValidateCatchesNonDelzantCorner) {
    ATBD d = polygon({pt(0, 0), pt(4, 0), pt(0, 1)});
    EXPECT_FALSE(validate(d).ok());
}

TEST(Atbd, NodalTrade) {
    ATBD d = nodal_trade(cp2(), 0);
    ASSERT_EQ(d.cuts.size(), 1u);
    EXPECT_EQ(d.cuts[0].direction, LatticeVec(1, 1));
    EXPECT_EQ(d.cut_point(d.cuts[0], d.cuts[0].nodes[0]), pt(Rat(-1, 2), Rat(-1, 2)));
    EXPECT_EQ(d.vertices, cp2().vertices);
    EXPECT_TRUE(validate(d).ok());
    Profile p = profile(cp2_three_node());
    for (const auto& nt : p.node_type) EXPECT_EQ(nt, std::make_pair(Int(1), Int(1)));
    EXPECT_EQ(p.length_type, ratio({1, 1, 1}));
    EXPECT_EQ(*p.lambda, Rat(1));
}

TEST(Atbd, NodalTradeRejectsSingularCorner) {
    ATBD d = polygon({pt(0, 0), pt(4, -1), pt(0, 1)});
    EXPECT_THROW(nodal_trade(d, 2), DiagramError);
}

TEST(Atbd, NodalSlide) {
    ATBD d = nodal_trade(cp2(), 0);
    ATBD s = nodal_slide(d, 0, {Rat(3, 4)});
    EXPECT_EQ(s.vertices, d.vertices);
    EXPECT_EQ(s.cuts[0].nodes, std::vector<Rat>{Rat(3, 4)});
    EXPECT_EQ(nodal_slide(s, 0, d.cuts[0].nodes), d);
    EXPECT_THROW(nodal_slide(d, 0, {Rat(3)}), DiagramError);  // the exit point on the opposite edge
    EXPECT_THROW(nodal_slide(d, 0, {Rat(-1, 2)}), DiagramError);
}

TEST(Atbd, TransferTwiceIsEquivalent) {
    ATBD d = nodal_trade(cp2(), 0);
    ATBD once = transfer_cut(d, 0, Side::Left);
    EXPECT_TRUE(validate(once).ok());
    EXPECT_EQ(once.cuts[0].direction, LatticeVec(-1, -1));
    EXPECT_EQ(area(once), area(d));
    EXPECT_TRUE(equivalent(transfer_cut(once, 0, Side::Left), d));
    EXPECT_TRUE(equivalent(transfer_cut(d, 0, Side::Right), once));
}

TEST(Atbd, MutationFollowsMarkovTree) {
    ATBD d = cp2_three_node();
    ATBD m = mutate(d, 0);
    EXPECT_TRUE(validate(m).ok());
    EXPECT_TRUE(is_monotone(m));
    EXPECT_EQ(area(m), area(d));
    Profile p = profile(m);
    std::vector<Rat> lengths = p.length_type;
    std::sort(lengths.begin(), lengths.end());
    EXPECT_EQ(lengths, ratio({1, 1, 4}));
    std::vector<Int> ps;
    for (const auto& [n, q] : p.node_type) ps.push_back(q);
    std::sort(ps.begin(), ps.end());
    EXPECT_EQ(ps, (std::vector<Int>{1, 1, 2}));
    EXPECT_TRUE(equivalent(mutate(d, 0, Side::Right), m));
    EXPECT_TRUE(equivalent(mutate(m, 0), d));
}

TEST(Atbd, MutationWordDescendsTree) {
    // (1,1,1) -> (1,1,2) -> (1,5,2) -> (1,5,13), squared as lengths.
    ATBD d = cp2_three_node();
    EXPECT_EQ(mutate_word(d, {}), d);
    ATBD w1 = mutate_word(d, {{2, Side::Left}});
    ATBD w2 = mutate_word(w1, {{1, Side::Left}});
    ATBD w3 = mutate_word(w2, {{2, Side::Left}});
    EXPECT_EQ(profile(w1).length_type, ratio({1, 1, 4}));
    EXPECT_EQ(profile(w2).length_type, ratio({1, 25, 4}));
    EXPECT_EQ(profile(w3).length_type, ratio({1, 25, 169}));
    EXPECT_TRUE(equivalent(mutate_word(d, {{1, Side::Left}, {1, Side::Left}}), d));
}

TEST(Atbd, EdgeSplitIdentity) {
    // Mutating at slot 1 of (a,b,c) splits the opposite edge into a k3 c^2 and a k2 b^2 (scaled).
    ATBD d = mutate_word(cp2_three_node(), {{2, Side::Left}, {1, Side::Left}});
    Profile before = profile(d);
    ATBD m = mutate(d, 0);
    Profile after = profile(m);
    Rat a = 1, b = 5, c = 2;  // current type II triple (length type 1, 25, 4)
    EXPECT_EQ(before.length_type, ratio({1, 25, 4}));
    Rat a2 = (b * b + c * c) / a;  // k1 a a' = k2 b^2 + k3 c^2
    EXPECT_EQ(after.length_type, (std::vector<Rat>{a2 * a2, Rat(25), Rat(4)}));
}

TEST(Atbd, AreaMatchesPickOracle) {
    std::mt19937_64 rng(5);
    ATBD d = cp2_three_node();
    std::uniform_int_distribution<std::size_t> cut(0, 2);
    for (int i = 0; i < 12; ++i) {
        d = mutate(d, cut(rng));
        EXPECT_EQ(area(d), pick_area(d));
        EXPECT_EQ(area(d), Rat(9, 2));
    }
}

TEST(Atbd, ToricBlowupMonotoneCondition) {
    ATBD one = toric_blowup(cp2(), 0, 1);
    EXPECT_TRUE(validate(one).ok());
    EXPECT_TRUE(is_monotone(one));
    EXPECT_EQ(area(cp2()) - area(one), Rat(1, 2));
    EXPECT_EQ(area(one), pick_area(one));
    ATBD two = toric_blowup(cp2(), 0, 2);
    EXPECT_TRUE(validate(two).ok());
    EXPECT_FALSE(is_monotone(two));
    EXPECT_EQ(area(cp2()) - area(two), Rat(2));
    EXPECT_THROW(toric_blowup(cp2(), 0, 3), DiagramError);
}

TEST(Atbd, AlmostToricBlowupNotch) {
    // Large lattice square standing in for a quadrant; the edge y = 0 runs left to right.
    ATBD sq = polygon({pt(0, 0), pt(8, 0), pt(8, 8), pt(0, 8)});
    ATBD d = almost_toric_blowup(sq, 0, pt(3, 0), 1, Side::Left);
    EXPECT_TRUE(validate(d).ok());
    std::vector<RationalPoint> want{pt(0, 0), pt(2, 0), pt(3, 1), pt(3, 0), pt(8, 0), pt(8, 8), pt(0, 8)};
    EXPECT_EQ(d.vertices, want);
    ASSERT_EQ(d.cuts.size(), 1u);
    EXPECT_EQ(d.cuts[0].kind, CutKind::Seam);
    EXPECT_EQ(d.cuts[0].direction, LatticeVec(1, 0));
    EXPECT_EQ(area(sq) - area(d), Rat(1, 2));
    EXPECT_THROW(profile(d), DiagramError);
    EXPECT_THROW(almost_toric_blowup(sq, 0, pt(1, 0), 2, Side::Left), DiagramError);
}

TEST(Atbd, AlmostToricBlowupMonotoneIffLengthIsDistance) {
    // Monotone square of distance 2 around the origin.
    ATBD sq = polygon({pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2)}, pt(0, 0));
    ASSERT_TRUE(is_monotone(sq));
    ATBD good = almost_toric_blowup(sq, 0, pt(-1, -2), 2, Side::Right);
    EXPECT_TRUE(validate(good).ok());
    EXPECT_TRUE(is_monotone(good));
    ATBD bad = almost_toric_blowup(sq, 0, pt(Rat(3, 2), Rat(-2)), 3, Side::Left);
    EXPECT_TRUE(validate(bad).ok());
    EXPECT_FALSE(is_monotone(bad));
    // Straightening the seam keeps the area and the verdict.
    ATBD ray = transfer_cut(good, 0, Side::Right);
    EXPECT_EQ(ray.cuts[0].kind, CutKind::Ray);
    EXPECT_TRUE(validate(ray).ok());
    EXPECT_TRUE(is_monotone(ray));
    EXPECT_EQ(area(ray), area(good));
}

TEST(Atbd, MonotoneChecks) {
    EXPECT_TRUE(is_monotone(cp2()));
    EXPECT_EQ(monotone_distance(cp2()), Rat(1));
    ATBD off = cp2();
    off.monotone_point = pt(Rat(1, 3), Rat(0));
    EXPECT_FALSE(is_monotone(off));
    ATBD none = cp2();
    none.monotone_point.reset();
    EXPECT_THROW(is_monotone(none), DiagramError);
}

TEST(Atbd, CanonicalForm) {
    ATBD d = cp2_three_node();
    ATBD rotated = apply_map(d, UnimodularMap(0, 1, -1, 0));
    EXPECT_TRUE(equivalent(d, rotated));
    EXPECT_TRUE(equivalent(d, translate(d, pt(5, -3))));
    EXPECT_FALSE(equivalent(d, mutate(d, 0)));
    EXPECT_EQ(canonicalize(canonicalize(d)), canonicalize(d));
}

TEST(Atbd, BuildTriangularReference) {
    TriangularSpec s{MarkovEqnII{3, {1, 1, 1}}, {1, 1, 1}, {1, 1, 1}, std::nullopt, std::nullopt, Rat(1)};
    ATBD d = build_triangular(s);
    EXPECT_TRUE(validate(d).ok());
    EXPECT_TRUE(is_monotone(d));
    EXPECT_EQ(area(d), Rat(1, 2));
    EXPECT_TRUE(equivalent(normalize_distance(d, 1), cp2_three_node()));

    TriangularSpec pxp{MarkovEqnII{2, {1, 1, 2}}, {1, 1, 1}, {1, 1, 2}, std::nullopt, std::nullopt, Rat(1)};
    ATBD q = build_triangular(pxp);
    EXPECT_TRUE(validate(q).ok());
    EXPECT_EQ(profile(q).length_type, ratio({1, 1, 2}));

    TriangularSpec wrong = s;
    wrong.x = 0;
    wrong.y = 0;
    EXPECT_THROW(build_triangular(wrong), DiagramError);
}

TEST(Atbd, InferTypeTwo) {
    auto [eq, t] = infer_type_II(ratio({1, 1, 4}));
    EXPECT_EQ(eq, (MarkovEqnII{3, {1, 1, 1}}));
    EXPECT_EQ(t, (Triple{1, 1, 2}));
}

TEST(Atbd, SidesParse) {
    EXPECT_EQ(parse_side("left"), Side::Left);
    EXPECT_EQ(to_string(Side::Right), "right");
    EXPECT_THROW(parse_side("up"), DiagramError);
}
