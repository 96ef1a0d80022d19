#include "atfkit/lattice.hpp"

#include <boost/integer/common_factor.hpp>

namespace atf {

UnimodularMap::UnimodularMap(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    Int det_ = a * d - b * c;
    if (det_ != 1 && det_ != -1) throw LatticeError("map is not unimodular");
}

UnimodularMap UnimodularMap::inverse() const {
    Int dt = det();
    return UnimodularMap(d * dt, -b * dt, -c * dt, a * dt);
}

UnimodularMap operator*(const UnimodularMap& m, const UnimodularMap& n) {
    return UnimodularMap(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                         m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

Int wedge(const LatticeVec& v, const LatticeVec& w) { return v.x * w.y - v.y * w.x; }
Rat wedge(const RationalPoint& v, const RationalPoint& w) { return v.x * w.y - v.y * w.x; }

static Int gcd_abs(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

LatticeVec primitive(const LatticeVec& v) {
    if (v.is_zero()) throw LatticeError("primitive of zero vector");
    Int g = gcd_abs(v.x, v.y);
    return {v.x / g, v.y / g};
}

bool is_primitive(const LatticeVec& v) { return !v.is_zero() && gcd_abs(v.x, v.y) == 1; }

LatticeVec primitive_direction(const RationalPoint& v) {
    Int dx = boost::multiprecision::denominator(v.x), dy = boost::multiprecision::denominator(v.y);
    Int l = boost::multiprecision::lcm(dx, dy);
    Int x = boost::multiprecision::numerator(v.x) * (l / dx);
    Int y = boost::multiprecision::numerator(v.y) * (l / dy);
    return primitive({x, y});
}

UnimodularMap monodromy_power(const LatticeVec& w, const Int& k) {
    if (!is_primitive(w)) throw LatticeError("eigendirection must be primitive");
    const Int& s = w.x;
    const Int& t = w.y;
    return UnimodularMap(1 - k * s * t, k * s * s, -k * t * t, 1 + k * s * t);
}

UnimodularMap monodromy_matrix(const LatticeVec& w, const Int& n) {
    if (n < 1) throw LatticeError("node count must be positive");
    return monodromy_power(w, n);
}

Rat affine_length(const RationalPoint& p, const RationalPoint& q) {
    RationalPoint d = q - p;
    if (d.x == 0 && d.y == 0) return Rat(0);
    LatticeVec u = primitive_direction(d);
    return u.x != 0 ? d.x / Rat(u.x) : d.y / Rat(u.y);
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat lattice_distance(const LatticeVec& normal, const Rat& offset, const RationalPoint& p) {
    if (!is_primitive(normal)) throw LatticeError("normal must be primitive");
    return abs(Rat(normal.x) * p.x + Rat(normal.y) * p.y - offset);
}

LatticeVec lattice_complement(const LatticeVec& u) {
    if (!is_primitive(u)) throw LatticeError("complement needs a primitive vector");
    // Extended Euclid: a*y0 - b*x0 = 1 for u = (a,b).
    Int a = u.x, b = u.y;
    Int old_r = a, r = -b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    // old_s*a + old_t*(-b) = old_r = +-1
    Int y0 = old_s * old_r, x0 = old_t * old_r;
    LatticeVec nu{x0, y0};
    // Shift by multiples of u to minimise |<u,nu>|; ties go to the smaller x, then y.
    Int uu = a * a + b * b;
    Int k = (a * nu.x + b * nu.y) / uu;
    LatticeVec best = nu - k * u;
    auto key_less = [&](const LatticeVec& p, const LatticeVec& q) {
        Int dp = boost::multiprecision::abs(a * p.x + b * p.y);
        Int dq = boost::multiprecision::abs(a * q.x + b * q.y);
        if (dp != dq) return dp < dq;
        return p < q;
    };
    for (int c = -2; c <= 2; ++c) {
        LatticeVec cand = nu - (k + c) * u;
        if (key_less(cand, best)) best = cand;
    }
    nu = best;
    return nu;
}

Int isqrt_exact(const Int& n, bool& exact) {
    if (n < 0) { exact = false; return 0; }
    Int r = boost::multiprecision::sqrt(n);
    exact = (r * r == n);
    return r;
}

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Int parse_integer(const std::string& s) {
    if (s.empty()) throw LatticeError("empty integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw LatticeError("bad integer: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw LatticeError("bad integer: " + s);
    return Int(s);
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(s));
    Int num = parse_integer(s.substr(0, slash));
    Int den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw LatticeError("zero denominator: " + s);
    return Rat(num, den);
}

}  // namespace atf
