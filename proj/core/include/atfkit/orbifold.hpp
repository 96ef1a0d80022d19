#pragma once

#include "atfkit/atbd.hpp"

#include <vector>

namespace atf {

struct LimitOrbifold {
    std::vector<RationalPoint> vertices;
    std::vector<LatticeVec> edge_directions;  // edge i runs from vertex i to vertex i+1
    std::vector<Int> corner_orders;           // at vertex i, between edges i-1 and i
    std::vector<Rat> edge_lengths;

    std::size_t size() const { return vertices.size(); }
};

using IntersectionMatrix = std::vector<std::vector<Rat>>;

struct HullPolygon {
    std::vector<LatticeVec> vertices;  // counterclockwise
    friend bool operator==(const HullPolygon&, const HullPolygon&) = default;
};

LimitOrbifold limit_orbifold(const ATBD& d);

// D.D = -(v ^ w) / ((v ^ u)(u ^ w)) with v, u, w the previous, own and next edge directions.
Rat divisor_self_intersection(const LimitOrbifold& o, std::size_t edge);
IntersectionMatrix intersection_matrix(const LimitOrbifold& o);
// K.K with K the sum of all edge divisors; triangles are cross-checked against the closed formula.
Rat degree(const LimitOrbifold& o);
// (A+B+C)^2 / (lambda A B C) from corner orders and opposite edge lengths.
Rat triangle_degree(const LimitOrbifold& o);

// Primitive inward normal of each limit-orbifold edge.
std::vector<LatticeVec> fan_normals(const LimitOrbifold& o);
HullPolygon convex_hull(std::vector<LatticeVec> points);
HullPolygon predicted_hull(const ATBD& d);
std::vector<Int> hull_edge_lengths(const HullPolygon& h);
Int corner_affine_angle(const HullPolygon& h, const LatticeVec& vertex);
// Representative under SL(2,Z) acting linearly.
HullPolygon canonical_hull(const HullPolygon& h);

}  // namespace atf
