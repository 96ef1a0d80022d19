#include "atfkit/atbd.hpp"

#include <algorithm>
#include <sstream>

namespace atf {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

RationalPoint as_point(const LatticeVec& v) { return RationalPoint(v); }

// Parameter t with p = o + t w, assuming p lies on that line.
Rat line_parameter(const RationalPoint& o, const LatticeVec& w, const RationalPoint& p) {
    if (w.x != 0) return (p.x - o.x) / Rat(w.x);
    return (p.y - o.y) / Rat(w.y);
}

bool on_line(const RationalPoint& o, const LatticeVec& w, const RationalPoint& p) {
    return wedge(p - o, as_point(w)) == 0;
}

struct Hit {
    Rat t, s;
};

// Ray p + t w against segment a->b: t along the ray, s in [0,1] along the segment.
std::optional<Hit> ray_hit(const RationalPoint& p, const LatticeVec& w, const RationalPoint& a,
                           const RationalPoint& b) {
    RationalPoint e = b - a;
    Rat den = wedge(as_point(w), e);
    if (den == 0) return std::nullopt;
    RationalPoint ap = a - p;
    return Hit{wedge(ap, e) / den, wedge(ap, as_point(w)) / den};
}

bool on_segment(const RationalPoint& p, const RationalPoint& a, const RationalPoint& b) {
    if (wedge(b - a, p - a) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

bool segments_meet(const RationalPoint& p1, const RationalPoint& p2, const RationalPoint& q1,
                   const RationalPoint& q2) {
    int d1 = sign(wedge(q2 - q1, p1 - q1)), d2 = sign(wedge(q2 - q1, p2 - q1));
    int d3 = sign(wedge(p2 - p1, q1 - p1)), d4 = sign(wedge(p2 - p1, q2 - p1));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return on_segment(p1, q1, q2) || on_segment(p2, q1, q2) || on_segment(q1, p1, p2) || on_segment(q2, p1, p2);
}

bool on_boundary(const ATBD& d, const RationalPoint& p) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (on_segment(p, d.vertex(i), d.vertex(i + 1))) return true;
    return false;
}

bool strictly_inside(const ATBD& d, const RationalPoint& p) {
    if (on_boundary(d, p)) return false;
    bool in = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& a = d.vertex(i);
        const auto& b = d.vertex(i + 1);
        if ((a.y > p.y) != (b.y > p.y)) {
            Rat x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

Rat signed_area(const std::vector<RationalPoint>& v) {
    Rat a = 0;
    for (std::size_t i = 0; i < v.size(); ++i) a += wedge(v[i], v[(i + 1) % v.size()]);
    return a / 2;
}

// Segment occupied by a cut: base to the outermost node.
std::pair<RationalPoint, RationalPoint> cut_segment(const ATBD& d, const Cut& c) {
    RationalPoint o = d.cut_origin(c);
    Rat last = c.nodes.empty() ? Rat(0) : c.nodes.back();
    return {o, o + scaled(last, c.direction)};
}

void shift_bases_after_insert(ATBD& d, std::size_t after) {
    for (auto& c : d.cuts)
        for (auto& b : c.base)
            if (b > after) ++b;
}

// Inserts p on edge j (between j and j+1) unless it coincides with an endpoint; returns its index.
std::size_t insert_on_edge(ATBD& d, std::size_t j, const Rat& s, const RationalPoint& p) {
    std::size_t n = d.size();
    if (s == 0) return j;
    if (s == 1) return wrap(j + 1, n);
    d.vertices.insert(d.vertices.begin() + j + 1, p);
    d.roles.insert(d.roles.begin() + j + 1, VertexRole{});
    shift_bases_after_insert(d, j);
    return j + 1;
}

void erase_vertex(ATBD& d, std::size_t i) {
    for (const auto& c : d.cuts)
        for (auto b : c.base)
            if (b == i) throw DiagramError("cannot remove a cut base vertex");
    d.vertices.erase(d.vertices.begin() + i);
    d.roles.erase(d.roles.begin() + i);
    for (auto& c : d.cuts)
        for (auto& b : c.base)
            if (b > i) --b;
}

bool is_any_base(const ATBD& d, std::size_t i) {
    for (std::size_t ci = 0; ci < d.cuts.size(); ++ci) {
        const auto& c = d.cuts[ci];
        for (auto b : c.base)
            if (b == i) return true;
        if (c.kind == CutKind::Seam && d.apex(c) == i) return true;
    }
    return false;
}

void remove_straight_vertices(ATBD& d) {
    bool changed = true;
    while (changed && d.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (is_any_base(d, i)) continue;
            if (d.edge_direction(static_cast<std::ptrdiff_t>(i) - 1) == d.edge_direction(i)) {
                erase_vertex(d, i);
                changed = true;
                break;
            }
        }
    }
}

std::vector<std::size_t> ccw_walk(std::size_t from, std::size_t to, std::size_t n) {
    std::vector<std::size_t> out{from};
    std::size_t i = from;
    while (i != to) {
        i = (i + 1) % n;
        out.push_back(i);
    }
    return out;
}

RationalPoint affine_image(const UnimodularMap& m, const RationalPoint& anchor, const RationalPoint& x) {
    return anchor + m(x - anchor);
}

// Canonical node parameters for a ray cut, or the given fallback reference length.
void place_nodes(ATBD& d, Cut& c, const std::optional<Rat>& fallback_reference = std::nullopt) {
    if (c.kind != CutKind::Ray) return;
    RationalPoint o = d.cut_origin(c);
    std::optional<Rat> ref;
    if (d.monotone_point && on_line(o, c.direction, *d.monotone_point)) {
        Rat t = line_parameter(o, c.direction, *d.monotone_point);
        if (t > 0) ref = t;
    }
    if (!ref) ref = fallback_reference;
    if (!ref) return;
    std::size_t n = c.nodes.size();
    for (std::size_t i = 0; i < n; ++i) c.nodes[i] = *ref * Rat(i + 1, n + 1);
}

// First boundary point hit by the ray from the origin of a cut, beyond t = 0.
struct Exit {
    Rat t;
    std::size_t edge;
    Rat s;
};

Exit find_exit(const ATBD& d, const RationalPoint& o, const LatticeVec& w, std::optional<std::size_t> skip_vertex) {
    std::optional<Exit> best;
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (skip_vertex && (j == *skip_vertex || wrap(j + 1, d.size()) == *skip_vertex)) continue;
        auto h = ray_hit(o, w, d.vertex(j), d.vertex(j + 1));
        if (!h || h->t <= 0 || h->s < 0 || h->s > 1) continue;
        if (!best || h->t < best->t) best = Exit{h->t, j, h->s};
    }
    if (!best) throw DiagramError("eigenray never reaches the boundary");
    return *best;
}

void check_path_clear(const ATBD& d, const RationalPoint& from, const RationalPoint& to, std::size_t self,
                      std::optional<std::size_t> partner) {
    for (std::size_t ci = 0; ci < d.cuts.size(); ++ci) {
        if (ci == self || (partner && ci == *partner)) continue;
        auto [a, b] = cut_segment(d, d.cuts[ci]);
        if (segments_meet(from, to, a, b)) throw DiagramError("cut collision");
    }
}

std::optional<std::size_t> cut_touching(const ATBD& d, std::size_t vertex) {
    for (std::size_t ci = 0; ci < d.cuts.size(); ++ci) {
        const auto& c = d.cuts[ci];
        for (auto b : c.base)
            if (b == vertex) return ci;
        if (c.kind == CutKind::Seam && d.apex(c) == vertex) return ci;
    }
    return std::nullopt;
}

bool corner_matches(const LatticeVec& ein, const LatticeVec& eout, const LatticeVec& w, const Int& n) {
    if (n == 0) return ein == eout;
    for (int e : {1, -1})
        if (monodromy_power(w, Int(e) * n)(ein) == eout) return true;
    return false;
}

ATBD transfer_ray(const ATBD& d0, std::size_t ci, Side side, std::size_t k, bool through_monotone) {
    ATBD d = d0;
    Cut c = d.cuts[ci];
    std::size_t n = c.count();
    if (k < 1 || k > n) throw DiagramError("node count out of range");
    std::size_t bi = c.base[0];
    RationalPoint b = d.vertices[bi];
    const LatticeVec w = c.direction;

    std::vector<Rat> stay(c.nodes.begin(), c.nodes.begin() + (n - k));
    std::vector<Rat> moving(c.nodes.begin() + (n - k), c.nodes.end());
    if (through_monotone) {
        if (!d.monotone_point) throw DiagramError("mutation needs a monotone point");
        if (!on_line(b, w, *d.monotone_point)) throw DiagramError("monotone point is off the cut eigenline");
        Rat tm = line_parameter(b, w, *d.monotone_point);
        if (tm <= 0) throw DiagramError("monotone point lies behind the cut");
        // Nodes are re-placed canonically afterwards; only the path past m matters.
        for (auto& t : moving) t = tm;
    }
    Rat far = moving.back();

    Exit ex = find_exit(d, b, w, bi);
    if (ex.t <= far) throw DiagramError("node leaves the polygon");
    RationalPoint x = b + scaled(ex.t, w);
    // A collinear opposite ray based at x absorbs the arriving nodes.
    std::optional<std::size_t> merge_into;
    for (std::size_t oc = 0; oc < d.cuts.size(); ++oc) {
        const Cut& o = d.cuts[oc];
        if (oc != ci && o.kind == CutKind::Ray && o.direction == -w && d.vertices[o.base[0]] == x) merge_into = oc;
    }
    check_path_clear(d, b + scaled(moving.front(), w), x, ci, merge_into);

    std::size_t xi = insert_on_edge(d, ex.edge, ex.s, x);
    bi = d.cuts[ci].base[0];
    std::optional<std::size_t> partner = cut_touching(d, xi);
    if (partner) {
        const Cut& o = d.cuts[*partner];
        if (o.kind != CutKind::Ray || o.direction != -w) throw DiagramError("cut collision");
    }

    std::size_t nv = d.size();
    auto piece = side == Side::Right ? ccw_walk(bi, xi, nv) : ccw_walk(xi, bi, nv);
    std::vector<std::size_t> inner(piece.begin() + 1, piece.end() - 1);

    std::optional<UnimodularMap> chosen;
    std::vector<RationalPoint> mapped;
    for (int eps : {1, -1}) {
        UnimodularMap m = monodromy_power(w, Int(eps) * Int(k));
        std::vector<RationalPoint> v2 = d.vertices;
        for (auto i : inner) v2[i] = affine_image(m, b, d.vertices[i]);
        LatticeVec ein = primitive_direction(v2[bi] - v2[wrap(static_cast<std::ptrdiff_t>(bi) - 1, nv)]);
        LatticeVec eout = primitive_direction(v2[wrap(bi + 1, nv)] - v2[bi]);
        if (corner_matches(ein, eout, w, Int(n - k))) {
            chosen = m;
            mapped = std::move(v2);
            break;
        }
    }
    if (!chosen) throw DiagramError("no monodromy sign matches the corner");

    for (std::size_t oc = 0; oc < d.cuts.size(); ++oc) {
        if (oc == ci) continue;
        Cut& cc = d.cuts[oc];
        std::size_t anchor = cc.kind == CutKind::Ray ? cc.base[0] : d.apex(cc);
        if (std::find(inner.begin(), inner.end(), anchor) != inner.end()) cc.direction = (*chosen)(cc.direction);
    }
    d.vertices = std::move(mapped);

    std::vector<Rat> arrived;
    for (std::size_t i = 0; i < moving.size(); ++i)
        arrived.push_back(through_monotone ? ex.t - far * Rat(i + 1, moving.size() + 1) : ex.t - moving[i]);
    std::sort(arrived.begin(), arrived.end());

    std::optional<std::size_t> erase_index;
    if (partner) {
        Cut& o = d.cuts[*partner];
        o.nodes.insert(o.nodes.end(), arrived.begin(), arrived.end());
        std::sort(o.nodes.begin(), o.nodes.end());
        if (through_monotone) place_nodes(d, o);
        if (stay.empty()) erase_index = ci;
        else {
            d.cuts[ci].nodes = stay;
            if (through_monotone) place_nodes(d, d.cuts[ci]);
        }
    } else {
        Cut fresh{-w, CutKind::Ray, {xi}, arrived};
        if (through_monotone) place_nodes(d, fresh);
        if (stay.empty()) d.cuts[ci] = fresh;
        else {
            d.cuts[ci].nodes = stay;
            if (through_monotone) place_nodes(d, d.cuts[ci]);
            d.cuts.push_back(fresh);
        }
    }
    if (erase_index) d.cuts.erase(d.cuts.begin() + *erase_index);
    remove_straight_vertices(d);
    d.refresh_roles();
    return d;
}

ATBD transfer_seam_once(const ATBD& d0, std::size_t ci, Side side, Side remap) {
    ATBD d = d0;
    const Cut c = d.cuts[ci];
    std::size_t ai = d.apex(c);
    RationalPoint apex = d.vertices[ai];
    LatticeVec w = side == Side::Right ? c.direction : -c.direction;

    Exit ex = find_exit(d, apex, w, ai);
    RationalPoint x = apex + scaled(ex.t, w);
    check_path_clear(d, apex, x, ci, std::nullopt);
    std::size_t xi = insert_on_edge(d, ex.edge, ex.s, x);
    ai = d.apex(d.cuts[ci]);
    if (auto other = cut_touching(d, xi); other && *other != ci) throw DiagramError("cut collision");

    std::size_t nv = d.size();
    auto p1 = ccw_walk(ai, xi, nv);
    auto p2 = ccw_walk(xi, ai, nv);
    if (p1.size() < 3 || p2.size() < 3) throw DiagramError("degenerate seam chord");
    std::size_t after = p1[1], before = p2[p2.size() - 2];
    std::size_t src = remap == Side::Right ? after : before;
    std::size_t dst = remap == Side::Right ? before : after;
    const auto& piece = remap == Side::Right ? p1 : p2;

    std::optional<UnimodularMap> chosen;
    for (int eps : {1, -1}) {
        UnimodularMap m = monodromy_power(c.direction, Int(eps) * Int(c.count()));
        if (primitive_direction(m(d.vertices[src] - apex)) == primitive_direction(d.vertices[dst] - apex)) {
            chosen = m;
            break;
        }
    }
    if (!chosen) throw DiagramError("seam segments are not related by the monodromy");

    std::vector<std::size_t> inner(piece.begin() + 1, piece.end() - 1);
    for (auto i : inner) d.vertices[i] = affine_image(*chosen, apex, d.vertices[i]);
    for (std::size_t oc = 0; oc < d.cuts.size(); ++oc) {
        if (oc == ci) continue;
        Cut& cc = d.cuts[oc];
        std::size_t anchor = cc.kind == CutKind::Ray ? cc.base[0] : d.apex(cc);
        if (std::find(inner.begin(), inner.end(), anchor) != inner.end()) cc.direction = (*chosen)(cc.direction);
    }

    Rat apex_param = ex.t;
    // Detach the seam, then drop the apex and the vertex that now coincides with its partner.
    d.cuts[ci] = Cut{-w, CutKind::Ray, {xi}, {}};
    std::size_t hi = std::max(ai, src), lo = std::min(ai, src);
    for (std::size_t idx : {hi, lo}) {
        d.vertices.erase(d.vertices.begin() + idx);
        d.roles.erase(d.roles.begin() + idx);
        for (auto& cc : d.cuts)
            for (auto& bb : cc.base)
                if (bb > idx) --bb;
    }
    Cut& fresh = d.cuts[ci];
    fresh.nodes.assign(c.count(), apex_param);
    if (c.count() > 1)
        for (std::size_t i = 0; i < c.count(); ++i) fresh.nodes[i] = apex_param * Rat(i + 1, c.count());
    place_nodes(d, fresh);
    remove_straight_vertices(d);
    d.refresh_roles();
    return d;
}

UnimodularMap to_x_axis(const LatticeVec& e) {
    // [[s, t], [-b, a]] with s a + t b = 1 sends (a, b) to (1, 0).
    Int a = e.x, b = e.y, s = 1, t = 0, old_r = a, r = b, os = 1, ss = 0, ot = 0, tt = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = os - q * ss;
        os = ss;
        ss = tmp;
        tmp = ot - q * tt;
        ot = tt;
        tt = tmp;
    }
    s = os;
    t = ot;
    if (old_r < 0) {
        s = -s;
        t = -t;
    }
    return UnimodularMap(s, t, -b, a);
}

using Key = std::vector<Rat>;

Key diagram_key(const ATBD& d) {
    Key k;
    k.push_back(Rat(d.size()));
    for (const auto& v : d.vertices) {
        k.push_back(v.x);
        k.push_back(v.y);
    }
    k.push_back(d.monotone_point ? Rat(1) : Rat(0));
    if (d.monotone_point) {
        k.push_back(d.monotone_point->x);
        k.push_back(d.monotone_point->y);
    }
    k.push_back(Rat(d.cuts.size()));
    for (const auto& c : d.cuts) {
        k.push_back(Rat(c.kind == CutKind::Ray ? 0 : 1));
        for (auto b : c.base) k.push_back(Rat(b));
        k.push_back(Rat(c.direction.x));
        k.push_back(Rat(c.direction.y));
        k.push_back(Rat(c.nodes.size()));
        for (const auto& t : c.nodes) k.push_back(t);
    }
    return k;
}

Int squarefree_part(const Int& v, Int& root) {
    Int n = v, k = 1;
    root = 1;
    for (Int p = 2; p * p <= n && p < 1000000; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            root *= p;
        }
        if (n % p == 0) {
            n /= p;
            k *= p;
        }
    }
    bool exact = false;
    Int r = isqrt_exact(n, exact);
    if (exact) root *= r;
    else k *= n;
    return k;
}

}  // namespace

const RationalPoint& ATBD::vertex(std::ptrdiff_t i) const { return vertices[wrap(i, vertices.size())]; }

LatticeVec ATBD::edge_direction(std::ptrdiff_t i) const { return primitive_direction(vertex(i + 1) - vertex(i)); }

Rat ATBD::edge_length(std::ptrdiff_t i) const { return affine_length(vertex(i), vertex(i + 1)); }

std::size_t ATBD::apex(const Cut& c) const { return (c.base[0] + 1) % vertices.size(); }

RationalPoint ATBD::cut_origin(const Cut& c) const {
    return c.kind == CutKind::Ray ? vertices[c.base[0]] : vertices[apex(c)];
}

RationalPoint ATBD::cut_point(const Cut& c, const Rat& t) const { return cut_origin(c) + scaled(t, c.direction); }

std::optional<std::size_t> ATBD::ray_at(std::size_t i) const {
    for (std::size_t ci = 0; ci < cuts.size(); ++ci)
        if (cuts[ci].kind == CutKind::Ray && cuts[ci].base[0] == i) return ci;
    return std::nullopt;
}

void ATBD::refresh_roles() {
    roles.assign(vertices.size(), VertexRole{});
    for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
        const auto& c = cuts[ci];
        for (auto b : c.base) roles[b] = VertexRole{VertexRole::CutBase, ci};
        if (c.kind == CutKind::Seam) roles[apex(c)] = VertexRole{VertexRole::CutBase, ci};
    }
}

ValidationReport validate(const ATBD& d) {
    ValidationReport r;
    auto bad = [&](const std::string& s) { r.violations.push_back(s); };
    std::size_t n = d.size();
    if (n < 3) {
        bad("polygon needs at least three vertices");
        return r;
    }
    if (d.roles.size() != n) {
        bad("roles do not match the vertex list");
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (d.vertex(i) == d.vertex(i + 1)) {
            bad("vertex " + std::to_string(i) + ": zero-length edge");
            return r;
        }
    if (signed_area(d.vertices) <= 0) bad("vertices are not counterclockwise");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_meet(d.vertex(i), d.vertex(i + 1), d.vertex(j), d.vertex(j + 1)))
                bad("edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    for (std::size_t i = 0; i < n; ++i)
        if (d.edge_direction(static_cast<std::ptrdiff_t>(i) - 1) == -d.edge_direction(i))
            bad("vertex " + std::to_string(i) + ": edges fold back");
    RationalPoint closure;
    for (std::size_t i = 0; i < n; ++i) closure = closure + scaled(d.edge_length(i), d.edge_direction(i));
    if (!(closure == RationalPoint())) bad("polygon does not close");

    std::vector<int> owner(n, -1);
    for (std::size_t ci = 0; ci < d.cuts.size(); ++ci) {
        const Cut& c = d.cuts[ci];
        std::string tag = "cut " + std::to_string(ci) + ": ";
        if (c.direction.is_zero() || !is_primitive(c.direction)) bad(tag + "direction not primitive");
        if (c.nodes.empty()) bad(tag + "no nodes");
        std::size_t want = c.kind == CutKind::Ray ? 1 : 2;
        if (c.base.size() != want) {
            bad(tag + "wrong number of base vertices");
            continue;
        }
        bool in_range = true;
        for (auto b : c.base)
            if (b >= n) in_range = false;
        if (!in_range) {
            bad(tag + "base index out of range");
            continue;
        }
        std::vector<std::size_t> members = c.base;
        if (c.kind == CutKind::Seam) {
            if (c.base[1] != (c.base[0] + 2) % n) bad(tag + "seam base vertices must flank the apex");
            members.push_back(d.apex(c));
        }
        for (auto b : members) {
            if (owner[b] >= 0 && owner[b] != static_cast<int>(ci)) bad("vertex " + std::to_string(b) + ": shared by two cuts");
            owner[b] = static_cast<int>(ci);
            if (d.roles[b].kind != VertexRole::CutBase || d.roles[b].cut != ci)
                bad("vertex " + std::to_string(b) + ": cut base vertex must have CUT_BASE role");
        }
        if (c.kind == CutKind::Ray) {
            for (std::size_t i = 0; i < c.nodes.size(); ++i) {
                if (c.nodes[i] <= 0 || (i > 0 && c.nodes[i] <= c.nodes[i - 1]))
                    bad(tag + "node parameters must be positive and increasing");
                if (!strictly_inside(d, d.cut_point(c, c.nodes[i]))) bad(tag + "node not interior");
            }
            std::size_t b = c.base[0];
            LatticeVec ein = d.edge_direction(static_cast<std::ptrdiff_t>(b) - 1), eout = d.edge_direction(b);
            bool ok = false;
            for (int sg : {1, -1})
                for (int e : {1, -1}) {
                    LatticeVec img = monodromy_power(c.direction, Int(e) * Int(c.count()))(ein);
                    if (Int(sg) * img == eout) ok = true;
                }
            if (!ok) bad(tag + "corner is not related by the cut monodromy");
            if (!c.nodes.empty()) {
                auto [p, q] = cut_segment(d, c);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == b || (j + 1) % n == b) continue;
                    if (segments_meet(p, q, d.vertex(j), d.vertex(j + 1))) bad(tag + "cut meets the boundary away from its base");
                }
            }
            if (d.monotone_point) {
                const auto& m = *d.monotone_point;
                if (!on_line(d.vertices[b], c.direction, m) || line_parameter(d.vertices[b], c.direction, m) <= 0)
                    bad(tag + "monotone point is off the eigenline");
            }
        } else {
            for (const auto& t : c.nodes)
                if (t != 0) bad(tag + "seam nodes sit at the apex");
            RationalPoint a = d.vertices[d.apex(c)];
            RationalPoint s1 = d.vertices[c.base[0]] - a, s2 = d.vertices[c.base[1]] - a;
            bool ok = false;
            for (int e : {1, -1}) {
                UnimodularMap m = monodromy_power(c.direction, Int(e) * Int(c.count()));
                if (primitive_direction(m(s1)) == primitive_direction(s2)) ok = true;
            }
            if (!ok) bad(tag + "seam segments are not identified by the monodromy");
            if (affine_length(a, d.vertices[c.base[0]]) != affine_length(a, d.vertices[c.base[1]]))
                bad(tag + "seam segments differ in length");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (owner[i] >= 0) continue;
        if (d.roles[i].kind == VertexRole::CutBase) {
            bad("vertex " + std::to_string(i) + ": CUT_BASE role without a cut");
            continue;
        }
        if (wedge(d.edge_direction(static_cast<std::ptrdiff_t>(i) - 1), d.edge_direction(i)) != 1)
            bad("vertex " + std::to_string(i) + ": Delzant corner must be convex with determinant 1");
    }
    for (std::size_t a = 0; a < d.cuts.size(); ++a)
        for (std::size_t b = a + 1; b < d.cuts.size(); ++b) {
            if (d.cuts[a].nodes.empty() || d.cuts[b].nodes.empty()) continue;
            auto [p1, p2] = cut_segment(d, d.cuts[a]);
            auto [q1, q2] = cut_segment(d, d.cuts[b]);
            if (segments_meet(p1, p2, q1, q2))
                bad("cuts " + std::to_string(a) + " and " + std::to_string(b) + " intersect");
        }
    return r;
}

void require_valid(const ATBD& d, const std::string& context) {
    auto rep = validate(d);
    if (rep.ok()) return;
    std::string msg = context + ": invalid diagram";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw DiagramError(msg);
}

Rat area(const ATBD& d) { return signed_area(d.vertices); }

Rat edge_distance(const ATBD& d, std::size_t edge) {
    if (!d.monotone_point) throw DiagramError("diagram has no monotone point");
    LatticeVec u = d.edge_direction(edge);
    LatticeVec nu{-u.y, u.x};
    const auto& a = d.vertex(edge);
    Rat offset = Rat(nu.x) * a.x + Rat(nu.y) * a.y;
    return lattice_distance(nu, offset, *d.monotone_point);
}

namespace {

// Notch sides of a seam are glued by the monodromy; they are not boundary edges.
std::vector<bool> notch_edges(const ATBD& d) {
    std::vector<bool> skip(d.size(), false);
    for (const auto& c : d.cuts)
        if (c.kind == CutKind::Seam) skip[c.base[0]] = skip[d.apex(c)] = true;
    return skip;
}

std::optional<Rat> common_distance(const ATBD& d) {
    if (!d.monotone_point) throw DiagramError("diagram has no monotone point");
    for (const auto& c : d.cuts)
        if (c.kind == CutKind::Seam && !on_line(d.vertices[d.apex(c)], c.direction, *d.monotone_point)) return std::nullopt;
    auto skip = notch_edges(d);
    std::optional<Rat> first;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (skip[i]) continue;
        Rat e = edge_distance(d, i);
        if (!first) first = e;
        else if (e != *first) return std::nullopt;
    }
    return first;
}

}  // namespace

bool is_monotone(const ATBD& d) { return common_distance(d).has_value(); }

Rat monotone_distance(const ATBD& d) {
    auto r = common_distance(d);
    if (!r) throw DiagramError("diagram is not monotone");
    return *r;
}

void place_nodes_canonically(ATBD& d) {
    for (auto& c : d.cuts) place_nodes(d, c);
}

ATBD nodal_trade(const ATBD& d0, std::size_t v) {
    if (v >= d0.size()) throw DiagramError("vertex out of range");
    if (d0.roles[v].kind != VertexRole::Delzant || is_any_base(d0, v)) throw DiagramError("vertex is not a Delzant corner");
    LatticeVec ein = d0.edge_direction(static_cast<std::ptrdiff_t>(v) - 1), eout = d0.edge_direction(v);
    Int det = wedge(ein, eout);
    if (det != 1 && det != -1) throw DiagramError("vertex is not a Delzant corner (|det| = " + abs(det).str() + ")");
    LatticeVec w = primitive(eout - ein);
    ATBD d = d0;
    const RationalPoint& b = d.vertices[v];
    if (d.monotone_point &&
        (!on_line(b, w, *d.monotone_point) || line_parameter(b, w, *d.monotone_point) <= 0))
        throw DiagramError("eigenline misses the monotone point");
    Cut c{w, CutKind::Ray, {v}, {Rat(0)}};
    Exit ex = find_exit(d, b, w, v);
    place_nodes(d, c, ex.t / 2);
    d.cuts.push_back(c);
    d.refresh_roles();
    return d;
}

ATBD trade_all(const ATBD& d0) {
    ATBD d = d0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (is_any_base(d, i)) continue;
        Int det = wedge(d.edge_direction(static_cast<std::ptrdiff_t>(i) - 1), d.edge_direction(i));
        if (det == 1) d = nodal_trade(d, i);
    }
    return d;
}

ATBD nodal_slide(const ATBD& d0, std::size_t ci, const std::vector<Rat>& positions) {
    if (ci >= d0.cuts.size()) throw DiagramError("cut index out of range");
    const Cut& c = d0.cuts[ci];
    if (c.kind != CutKind::Ray) throw DiagramError("only ray cuts can slide");
    if (positions.size() != c.count()) throw DiagramError("slide must keep the node count");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] <= 0) throw DiagramError("node crosses the base");
        if (i > 0 && positions[i] <= positions[i - 1]) throw DiagramError("node positions must increase");
        if (!strictly_inside(d0, d0.cut_point(c, positions[i]))) throw DiagramError("node leaves the polygon");
    }
    ATBD d = d0;
    d.cuts[ci].nodes = positions;
    require_valid(d, "nodal slide");
    return d;
}

ATBD transfer_cut(const ATBD& d, std::size_t ci, Side side, std::optional<Side> seam_remap) {
    if (ci >= d.cuts.size()) throw DiagramError("cut index out of range");
    if (d.cuts[ci].kind == CutKind::Ray) return transfer_ray(d, ci, side, d.cuts[ci].count(), false);
    if (seam_remap) return transfer_seam_once(d, ci, side, *seam_remap);
    std::string first_error;
    for (Side r : {Side::Right, Side::Left}) {
        try {
            ATBD out = transfer_seam_once(d, ci, side, r);
            if (validate(out).ok()) return out;
            if (first_error.empty()) first_error = "transfer produced an invalid diagram";
        } catch (const DiagramError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    throw DiagramError(first_error);
}

ATBD mutate(const ATBD& d, std::size_t ci, Side side, std::optional<std::size_t> count) {
    if (ci >= d.cuts.size()) throw DiagramError("cut index out of range");
    const Cut& c = d.cuts[ci];
    if (c.kind != CutKind::Ray) throw DiagramError("transfer the seam to a ray before mutating");
    return transfer_ray(d, ci, side, count.value_or(c.count()), true);
}

ATBD mutate_word(const ATBD& d, const std::vector<std::pair<std::size_t, Side>>& word) {
    ATBD out = d;
    for (const auto& [ci, side] : word) out = mutate(out, ci, side);
    return out;
}

ATBD toric_blowup(const ATBD& d0, std::size_t v, const Rat& l) {
    if (v >= d0.size()) throw DiagramError("vertex out of range");
    if (is_any_base(d0, v)) throw DiagramError("vertex is not a Delzant corner");
    LatticeVec ein = d0.edge_direction(static_cast<std::ptrdiff_t>(v) - 1), eout = d0.edge_direction(v);
    if (wedge(ein, eout) != 1) throw DiagramError("vertex is not a Delzant corner");
    if (l <= 0) throw DiagramError("blowup length must be positive");
    if (l >= d0.edge_length(static_cast<std::ptrdiff_t>(v) - 1) || l >= d0.edge_length(v))
        throw DiagramError("blowup length too large for the adjacent edges");
    ATBD d = d0;
    RationalPoint p = d.vertices[v];
    RationalPoint a = p + scaled(-l, ein), b = p + scaled(l, eout);
    d.vertices[v] = a;
    d.vertices.insert(d.vertices.begin() + v + 1, b);
    d.roles.insert(d.roles.begin() + v + 1, VertexRole{});
    shift_bases_after_insert(d, v);
    d.refresh_roles();
    return d;
}

ATBD almost_toric_blowup(const ATBD& d0, std::size_t edge, const RationalPoint& p, const Rat& l, Side side) {
    if (edge >= d0.size()) throw DiagramError("edge out of range");
    if (l <= 0) throw DiagramError("blowup length must be positive");
    const RationalPoint a = d0.vertex(edge), b = d0.vertex(edge + 1);
    LatticeVec u = d0.edge_direction(edge);
    if (!on_line(a, u, p)) throw DiagramError("point is not on the edge");
    Rat t = line_parameter(a, u, p), len = d0.edge_length(edge);
    if (t <= 0 || t >= len) throw DiagramError("point must be interior to the edge");
    Rat tq = side == Side::Left ? t - l : t + l;
    if (tq <= 0 || tq >= len) throw DiagramError("insufficient room on the edge");
    LatticeVec nu = lattice_complement(u);
    RationalPoint apex = p + scaled(l, nu);
    RationalPoint q = a + scaled(tq, u);
    if (!strictly_inside(d0, apex)) throw DiagramError("insufficient room for the notch");
    for (const auto& c : d0.cuts) {
        auto [s1, s2] = cut_segment(d0, c);
        bool hit = segments_meet(s1, s2, q, apex) || segments_meet(s1, s2, apex, p) || segments_meet(s1, s2, q, p);
        RationalPoint mid = Rat(1, 2) * (s1 + s2);
        ATBD tri;
        tri.vertices = side == Side::Left ? std::vector<RationalPoint>{q, p, apex} : std::vector<RationalPoint>{p, q, apex};
        if (hit || strictly_inside(tri, mid) || strictly_inside(tri, s2)) throw DiagramError("notch collides with a cut");
    }
    ATBD d = d0;
    std::vector<RationalPoint> notch = side == Side::Left ? std::vector<RationalPoint>{q, apex, p}
                                                          : std::vector<RationalPoint>{p, apex, q};
    d.vertices.insert(d.vertices.begin() + edge + 1, notch.begin(), notch.end());
    d.roles.insert(d.roles.begin() + edge + 1, 3, VertexRole{});
    for (auto& c : d.cuts)
        for (auto& bb : c.base)
            if (bb > edge) bb += 3;
    d.cuts.push_back(Cut{u, CutKind::Seam, {edge + 1, edge + 3}, {Rat(0)}});
    d.refresh_roles();
    return d;
}

ATBD apply_map(const ATBD& d0, const UnimodularMap& m) {
    ATBD d = d0;
    for (auto& v : d.vertices) v = m(v);
    if (d.monotone_point) d.monotone_point = m(*d.monotone_point);
    for (auto& c : d.cuts) c.direction = m(c.direction);
    if (m.det() == -1) {
        std::size_t n = d.size();
        // Reverse to restore counterclockwise order: old index i goes to n-1-i.
        std::reverse(d.vertices.begin(), d.vertices.end());
        for (auto& c : d.cuts) {
            for (auto& b : c.base) b = n - 1 - b;
            if (c.kind == CutKind::Seam) std::swap(c.base[0], c.base[1]);
        }
        d.refresh_roles();
    }
    return d;
}

ATBD translate(const ATBD& d0, const RationalPoint& off) {
    ATBD d = d0;
    for (auto& v : d.vertices) v = v + off;
    if (d.monotone_point) d.monotone_point = *d.monotone_point + off;
    return d;
}

ATBD scale(const ATBD& d0, const Rat& f) {
    if (f <= 0) throw DiagramError("scale factor must be positive");
    ATBD d = d0;
    for (auto& v : d.vertices) v = f * v;
    if (d.monotone_point) d.monotone_point = f * *d.monotone_point;
    for (auto& c : d.cuts)
        for (auto& t : c.nodes) t *= f;
    return d;
}

ATBD normalize_distance(const ATBD& d, const Rat& distance) {
    if (distance <= 0) throw DiagramError("distance must be positive");
    return scale(d, distance / monotone_distance(d));
}

bool is_triangular(const ATBD& d) {
    if (d.size() != 3 || d.cuts.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i)
        if (!d.ray_at(i)) return false;
    return true;
}

std::vector<Int> corner_orders_by_cut(const ATBD& d) {
    std::vector<Int> out;
    for (const auto& c : d.cuts) {
        if (c.kind != CutKind::Ray) throw DiagramError("seam present");
        std::size_t b = c.base[0];
        out.push_back(abs(wedge(d.edge_direction(static_cast<std::ptrdiff_t>(b) - 1), d.edge_direction(b))));
    }
    return out;
}

Profile profile(const ATBD& d) {
    for (const auto& c : d.cuts)
        if (c.kind != CutKind::Ray) throw DiagramError("profile needs ray cuts only (seam present)");
    Profile pr;
    auto dets = corner_orders_by_cut(d);
    for (std::size_t i = 0; i < d.cuts.size(); ++i) {
        Int n = Int(d.cuts[i].count());
        if (dets[i] % n != 0) throw DiagramError("non-integral node type");
        bool exact = false;
        Int p = isqrt_exact(dets[i] / n, exact);
        if (!exact || p == 0) throw DiagramError("non-integral node type");
        pr.node_type.emplace_back(n, p);
    }
    std::vector<Rat> lens;
    bool tri = is_triangular(d);
    if (tri)
        for (const auto& c : d.cuts) lens.push_back(d.edge_length(c.base[0] + 1));
    else
        for (std::size_t i = 0; i < d.size(); ++i) lens.push_back(d.edge_length(i));
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& l : lens) {
        num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::numerator(l)));
        den_lcm = boost::multiprecision::lcm(den_lcm, Int(boost::multiprecision::denominator(l)));
    }
    Rat unit(num_gcd, den_lcm);
    for (const auto& l : lens) pr.length_type.push_back(l / unit);
    if (tri) {
        Rat lambda = Rat(pr.node_type[0].first * pr.node_type[0].second * pr.node_type[0].second) / pr.length_type[0];
        for (std::size_t i = 1; i < 3; ++i) {
            Rat li = Rat(pr.node_type[i].first * pr.node_type[i].second * pr.node_type[i].second) / pr.length_type[i];
            if (li != lambda) throw DiagramError("lambda ratios disagree");
        }
        pr.lambda = lambda;
    }
    return pr;
}

ATBD canonicalize(const ATBD& d0) {
    ATBD d = d0;
    for (std::size_t ci = 0; ci < d.cuts.size(); ++ci) {
        if (d.cuts[ci].kind != CutKind::Seam) continue;
        try {
            d = transfer_cut(d, ci, Side::Left);
        } catch (const DiagramError&) {
            d = transfer_cut(d, ci, Side::Right);
        }
    }
    std::optional<ATBD> best;
    Key best_key;
    std::size_t n = d.size();
    for (std::size_t s = 0; s < n; ++s) {
        UnimodularMap g0 = to_x_axis(d.edge_direction(s));
        LatticeVec f = g0(d.edge_direction(static_cast<std::ptrdiff_t>(s) - 1));
        Int k = 0;
        if (f.y != 0) {
            Int m = abs(f.y);
            Int r = ((f.x % m) + m) % m;
            k = (r - f.x) / f.y;
        }
        UnimodularMap g = UnimodularMap(1, k, 0, 1) * g0;
        ATBD e = apply_map(d, g);
        RationalPoint origin = e.monotone_point ? *e.monotone_point : e.vertices[s];
        e = translate(e, RationalPoint() - origin);
        ATBD r;
        r.label = d.label;
        r.monotone_point = e.monotone_point;
        for (std::size_t i = 0; i < n; ++i) r.vertices.push_back(e.vertices[(s + i) % n]);
        r.cuts = e.cuts;
        for (auto& c : r.cuts)
            for (auto& b : c.base) b = (b + n - s) % n;
        std::sort(r.cuts.begin(), r.cuts.end(), [](const Cut& a, const Cut& b) {
            if (a.base != b.base) return a.base < b.base;
            return a.direction < b.direction;
        });
        r.refresh_roles();
        Key key = diagram_key(r);
        if (!best || key < best_key) {
            best = r;
            best_key = key;
        }
    }
    return *best;
}

bool equivalent(const ATBD& a, const ATBD& b) {
    ATBD ca = canonicalize(a), cb = canonicalize(b);
    return ca.vertices == cb.vertices && ca.cuts == cb.cuts && ca.monotone_point == cb.monotone_point;
}

namespace {

// Triangle for fixed (x, y); throws with a reason when the data does not close up.
ATBD triangle_for(const TriangularSpec& s, const TypeIData& t1, const Int& x, const Int& y) {
    const Int &p = t1.pqr[0], &q = t1.pqr[1], &r = t1.pqr[2];
    const auto& n = s.nodes;
    LatticeVec u3{1, 0};
    LatticeVec u1{1 - n[1] * y * q, -n[1] * q * q};
    LatticeVec u2{1 + n[0] * x * p, n[0] * p * p};
    if (!is_primitive(u1) || !is_primitive(u2)) throw DiagramError("edge directions are not primitive");
    std::array<Rat, 3> len;
    for (int i = 0; i < 3; ++i) len[i] = s.scale * Rat(s.eq.k[i] * s.triple[i] * s.triple[i]);
    ATBD d;
    RationalPoint v0, v1 = v0 + scaled(len[2], u3), v2 = v1 + scaled(len[1], u2);
    if (!(v2 + scaled(len[0], u1) == v0)) throw DiagramError("edges do not close");
    d.vertices = {v0, v1, v2};
    LatticeVec w1 = primitive(u2 - u3), w2 = primitive(u3 - u1), w3raw = u1 - u2;
    if (w1 != LatticeVec(x, p) || w2 != LatticeVec(y, q)) throw DiagramError("cut directions are not primitive");
    Int g = boost::multiprecision::gcd(abs(w3raw.x), abs(w3raw.y));
    if (g != n[2] * r) throw DiagramError("third corner does not carry n3 r");
    LatticeVec w3 = primitive(w3raw);
    // Point at equal lattice distance from the three edge lines.
    std::array<LatticeVec, 3> us{u3, u2, u1};
    std::array<RationalPoint, 3> anchors{v0, v1, v2};
    std::array<std::array<Rat, 3>, 3> a;
    std::array<Rat, 3> rhs;
    for (int i = 0; i < 3; ++i) {
        LatticeVec nu{-us[i].y, us[i].x};
        a[i] = {Rat(nu.x), Rat(nu.y), Rat(-1)};
        rhs[i] = Rat(nu.x) * anchors[i].x + Rat(nu.y) * anchors[i].y;
    }
    auto det3 = [](const std::array<std::array<Rat, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    Rat det = det3(a);
    if (det == 0) throw DiagramError("degenerate triangle");
    std::array<Rat, 3> sol;
    for (int c = 0; c < 3; ++c) {
        auto m = a;
        for (int i = 0; i < 3; ++i) m[i][c] = rhs[i];
        sol[c] = det3(m) / det;
    }
    d.monotone_point = RationalPoint(sol[0], sol[1]);
    d.cuts = {Cut{w1, CutKind::Ray, {1}, std::vector<Rat>(static_cast<std::size_t>(n[0]), Rat(0))},
              Cut{w2, CutKind::Ray, {0}, std::vector<Rat>(static_cast<std::size_t>(n[1]), Rat(0))},
              Cut{w3, CutKind::Ray, {2}, std::vector<Rat>(static_cast<std::size_t>(n[2]), Rat(0))}};
    for (auto& c : d.cuts) {
        const auto& b = d.vertices[c.base[0]];
        if (!on_line(b, c.direction, *d.monotone_point) || line_parameter(b, c.direction, *d.monotone_point) <= 0)
            throw DiagramError("eigenline misses the monotone point");
    }
    place_nodes_canonically(d);
    d.refresh_roles();
    require_valid(d, "triangular diagram");
    return d;
}

}  // namespace

ATBD build_triangular(const TriangularSpec& s) {
    for (const auto& n : s.nodes)
        if (n < 1) throw DiagramError("node counts must be positive");
    if (s.scale <= 0) throw DiagramError("scale must be positive");
    TypeIData t1 = derive_type_I_data(s.eq, s.triple, s.nodes);
    const Int &p = t1.pqr[0], &q = t1.pqr[1];
    const auto& k = s.eq.k;
    const auto& t = s.triple;
    Int A = s.nodes[1] * q * k[0] * t[0] * t[0];
    Int B = s.nodes[0] * p * k[1] * t[1] * t[1];
    Int C = s.eq.K * k[0] * k[1] * k[2] * t[0] * t[1] * t[2];
    auto label = [&](ATBD d) {
        d.label = "triangular " + format_equation(s.eq) + " (" + format_triple(s.triple) + ")";
        return d;
    };
    if (s.x || s.y) {
        if (!s.x || !s.y) throw DiagramError("give both x and y");
        if (A * *s.y - B * *s.x != C) throw DiagramError("(x, y) violates the cut identity n2 q k1 a^2 y - n1 p k2 b^2 x = K k1 k2 k3 abc");
        try {
            return label(triangle_for(s, t1, *s.x, *s.y));
        } catch (const DiagramError& e) {
            throw DiagramError(std::string("(x, y) rejected: ") + e.what());
        }
    }
    // A y - B x = C; general solution from one particular solution.
    Int g = boost::multiprecision::gcd(A, B);
    if (C % g != 0) throw DiagramError("cut identity has no integral solution");
    // Extended Euclid on (A, B): A s + B u = g.
    Int r0 = A, r1 = B, s0 = 1, s1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        Int qq = r0 / r1, tmp;
        tmp = r0 - qq * r1; r0 = r1; r1 = tmp;
        tmp = s0 - qq * s1; s0 = s1; s1 = tmp;
        tmp = v0 - qq * v1; v0 = v1; v1 = tmp;
    }
    Int f = C / g;
    Int y0 = s0 * f, x0 = -v0 * f;
    Int step_x = A / g, step_y = B / g;
    // x = x0 + step_x j; start from the j closest to zero |x|.
    Int j0 = -x0 / step_x;
    std::vector<Int> order;
    for (int off = 0; off <= 64; ++off) {
        order.push_back(j0 + off);
        if (off) order.push_back(j0 - off);
    }
    std::sort(order.begin(), order.end(), [&](const Int& a, const Int& b) {
        Int xa = abs(x0 + step_x * a), xb = abs(x0 + step_x * b);
        if (xa != xb) return xa < xb;
        return x0 + step_x * a < x0 + step_x * b;
    });
    std::ostringstream tried;
    for (const auto& j : order) {
        Int x = x0 + step_x * j, y = y0 + step_y * j;
        try {
            return label(triangle_for(s, t1, x, y));
        } catch (const DiagramError& e) {
            if (tried.tellp() < 400) tried << " (" << x << "," << y << "): " << e.what() << ";";
        }
    }
    throw DiagramError("no solution of the cut identity gives a valid triangle;" + tried.str());
}

std::pair<MarkovEqnII, Triple> infer_type_II(const std::vector<Rat>& lt) {
    if (lt.size() != 3) throw DiagramError("length type must have three entries");
    MarkovEqnII eq;
    Triple t;
    Int prod = 1, sum = 0;
    for (int i = 0; i < 3; ++i) {
        if (boost::multiprecision::denominator(lt[i]) != 1) throw DiagramError("length type is not integral");
        Int v = boost::multiprecision::numerator(lt[i]);
        eq.k[i] = squarefree_part(v, t[i]);
        prod *= eq.k[i] * t[i];
        sum += v;
    }
    if (sum % prod != 0) throw DiagramError("length type does not fit a type II equation");
    eq.K = sum / prod;
    return {eq, t};
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(const std::string& s) {
    if (s == "left" || s == "l" || s == "L") return Side::Left;
    if (s == "right" || s == "r" || s == "R") return Side::Right;
    throw DiagramError("side must be left or right");
}

}  // namespace atf
