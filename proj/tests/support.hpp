#pragma once

#include "atfkit/atbd.hpp"

#include <vector>

namespace testing_support {

inline atf::RationalPoint pt(long long x, long long y) { return {atf::Rat(x), atf::Rat(y)}; }
inline atf::RationalPoint pt(atf::Rat x, atf::Rat y) { return {x, y}; }

inline atf::ATBD polygon(std::vector<atf::RationalPoint> vs, std::optional<atf::RationalPoint> m = std::nullopt) {
    atf::ATBD d;
    d.vertices = std::move(vs);
    d.roles.assign(d.vertices.size(), atf::VertexRole{});
    d.monotone_point = m;
    return d;
}

// Monotone CP^2 moment triangle.
inline atf::ATBD cp2() { return polygon({pt(-1, -1), pt(2, -1), pt(-1, 2)}, pt(0, 0)); }

inline atf::ATBD cp2_three_node() { return atf::trade_all(cp2()); }

}  // namespace testing_support
