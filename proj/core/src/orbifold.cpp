#include "atfkit/orbifold.hpp"

#include <algorithm>

namespace atf {

namespace {

// Unimodular map sending the primitive vector e to (1, 0).
UnimodularMap to_x_axis(const LatticeVec& e) {
    Int r0 = e.x, r1 = e.y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1, tmp;
        tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) {
        s0 = -s0;
        t0 = -t0;
    }
    return UnimodularMap(s0, t0, -e.y, e.x);
}

Int gcd_abs(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

}  // namespace

LimitOrbifold limit_orbifold(const ATBD& d) {
    for (const auto& c : d.cuts)
        if (c.kind != CutKind::Ray) throw DiagramError("limit orbifold needs ray cuts only (seam present)");
    LimitOrbifold o;
    o.vertices = d.vertices;
    std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        o.edge_directions.push_back(d.edge_direction(i));
        o.edge_lengths.push_back(d.edge_length(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Int m = abs(wedge(o.edge_directions[(i + n - 1) % n], o.edge_directions[i]));
        if (m == 0) throw DiagramError("straight corner in limit orbifold");
        o.corner_orders.push_back(m);
    }
    return o;
}

Rat divisor_self_intersection(const LimitOrbifold& o, std::size_t i) {
    std::size_t n = o.size();
    if (n < 3) throw DiagramError("polygon needs three edges");
    const LatticeVec& u = o.edge_directions[i % n];
    const LatticeVec& v = o.edge_directions[(i + n - 1) % n];
    const LatticeVec& w = o.edge_directions[(i + 1) % n];
    return Rat(-wedge(v, w)) / Rat(wedge(v, u) * wedge(u, w));
}

IntersectionMatrix intersection_matrix(const LimitOrbifold& o) {
    std::size_t n = o.size();
    if (n < 3) throw DiagramError("polygon needs three edges");
    IntersectionMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = divisor_self_intersection(o, i);
        std::size_t j = (i + 1) % n;
        // Edges i and i+1 meet at vertex i+1.
        Rat adj = Rat(1) / Rat(o.corner_orders[j]);
        m[i][j] = adj;
        m[j][i] = adj;
    }
    return m;
}

Rat triangle_degree(const LimitOrbifold& o) {
    if (o.size() != 3) throw DiagramError("closed formula needs a triangle");
    // Corner k faces edge k+1.
    Rat lambda = Rat(o.corner_orders[0]) / o.edge_lengths[1];
    for (std::size_t k = 1; k < 3; ++k)
        if (Rat(o.corner_orders[k]) / o.edge_lengths[(k + 1) % 3] != lambda)
            throw DiagramError("corner orders are not proportional to opposite edges");
    Rat s = o.edge_lengths[0] + o.edge_lengths[1] + o.edge_lengths[2];
    return s * s / (lambda * o.edge_lengths[0] * o.edge_lengths[1] * o.edge_lengths[2]);
}

Rat degree(const LimitOrbifold& o) {
    auto m = intersection_matrix(o);
    Rat k = 0;
    for (const auto& row : m)
        for (const auto& x : row) k += x;
    if (o.size() == 3 && triangle_degree(o) != k)
        throw DiagramError("divisor matrix and triangle formula disagree (diagram corrupt)");
    return k;
}

std::vector<LatticeVec> fan_normals(const LimitOrbifold& o) {
    std::vector<LatticeVec> out;
    for (const auto& e : o.edge_directions) out.emplace_back(-e.y, e.x);
    return out;
}

HullPolygon convex_hull(std::vector<LatticeVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return HullPolygon{pts};
    std::vector<LatticeVec> h(2 * pts.size());
    std::size_t k = 0;
    auto turn = [](const LatticeVec& o, const LatticeVec& a, const LatticeVec& b) { return wedge(a - o, b - o); };
    for (const auto& p : pts) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return HullPolygon{h};
}

HullPolygon predicted_hull(const ATBD& d) { return convex_hull(fan_normals(limit_orbifold(d))); }

std::vector<Int> hull_edge_lengths(const HullPolygon& h) {
    std::vector<Int> out;
    std::size_t n = h.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVec e = h.vertices[(i + 1) % n] - h.vertices[i];
        out.push_back(gcd_abs(e.x, e.y));
    }
    return out;
}

Int corner_affine_angle(const HullPolygon& h, const LatticeVec& v) {
    std::size_t n = h.vertices.size();
    auto it = std::find(h.vertices.begin(), h.vertices.end(), v);
    if (it == h.vertices.end() || n < 3) throw DiagramError("not a hull vertex");
    std::size_t i = static_cast<std::size_t>(it - h.vertices.begin());
    LatticeVec ein = primitive(v - h.vertices[(i + n - 1) % n]);
    LatticeVec eout = primitive(h.vertices[(i + 1) % n] - v);
    return abs(wedge(ein, eout));
}

HullPolygon canonical_hull(const HullPolygon& h) {
    std::size_t n = h.vertices.size();
    if (n < 3) return h;
    std::optional<HullPolygon> best;
    for (std::size_t s = 0; s < n; ++s) {
        const LatticeVec& v = h.vertices[s];
        UnimodularMap g0 = to_x_axis(primitive(h.vertices[(s + 1) % n] - v));
        LatticeVec f = g0(primitive(v - h.vertices[(s + n - 1) % n]));
        Int k = 0;
        if (f.y != 0) {
            Int m = abs(f.y);
            Int r = ((f.x % m) + m) % m;
            k = (r - f.x) / f.y;
        }
        UnimodularMap g = UnimodularMap(1, k, 0, 1) * g0;
        HullPolygon c;
        for (std::size_t i = 0; i < n; ++i) c.vertices.push_back(g(h.vertices[(s + i) % n]));
        if (!best || std::lexicographical_compare(c.vertices.begin(), c.vertices.end(), best->vertices.begin(),
                                                  best->vertices.end()))
            best = c;
    }
    return *best;
}

}  // namespace atf
