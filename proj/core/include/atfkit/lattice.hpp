#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace atf {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

class LatticeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LatticeVec {
    Int x, y;

    LatticeVec() = default;
    LatticeVec(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
    friend bool operator<(const LatticeVec& a, const LatticeVec& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    friend LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) { return {a.x + b.x, a.y + b.y}; }
    friend LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) { return {a.x - b.x, a.y - b.y}; }
    friend LatticeVec operator-(const LatticeVec& a) { return {-a.x, -a.y}; }
    friend LatticeVec operator*(const Int& k, const LatticeVec& a) { return {k * a.x, k * a.y}; }
};

struct RationalPoint {
    Rat x, y;

    RationalPoint() = default;
    RationalPoint(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit RationalPoint(const LatticeVec& v) : x(v.x), y(v.y) {}

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend RationalPoint operator*(const Rat& k, const RationalPoint& a) { return {k * a.x, k * a.y}; }
};

inline RationalPoint operator+(const RationalPoint& p, const LatticeVec& v) { return {p.x + Rat(v.x), p.y + Rat(v.y)}; }
inline RationalPoint scaled(const Rat& t, const LatticeVec& v) { return {t * Rat(v.x), t * Rat(v.y)}; }

// Rows (a b) and (c d).
struct UnimodularMap {
    Int a{1}, b{0}, c{0}, d{1};

    UnimodularMap() = default;
    UnimodularMap(Int a_, Int b_, Int c_, Int d_);

    Int det() const { return a * d - b * c; }
    LatticeVec operator()(const LatticeVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    RationalPoint operator()(const RationalPoint& p) const {
        return {Rat(a) * p.x + Rat(b) * p.y, Rat(c) * p.x + Rat(d) * p.y};
    }
    UnimodularMap inverse() const;
    friend UnimodularMap operator*(const UnimodularMap& m, const UnimodularMap& n);
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

Int wedge(const LatticeVec& v, const LatticeVec& w);
Rat wedge(const RationalPoint& v, const RationalPoint& w);

LatticeVec primitive(const LatticeVec& v);
// Primitive lattice direction of a nonzero rational vector.
LatticeVec primitive_direction(const RationalPoint& v);
bool is_primitive(const LatticeVec& v);

// [[1 - nst, ns^2], [-nt^2, 1 + nst]] for w = (s,t); n >= 1.
UnimodularMap monodromy_matrix(const LatticeVec& w, const Int& n);
// Same formula for any integer exponent k; M(w,-k) is the inverse of M(w,k).
UnimodularMap monodromy_power(const LatticeVec& w, const Int& k);

Rat affine_length(const RationalPoint& p, const RationalPoint& q);
Rat lattice_distance(const LatticeVec& normal, const Rat& offset, const RationalPoint& p);

// u ^ nu = 1, chosen with |<u,nu>| minimal so nu is as close to orthogonal as possible.
LatticeVec lattice_complement(const LatticeVec& u);

Int isqrt_exact(const Int& n, bool& exact);
Rat abs(const Rat& r);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);
Rat parse_rational(const std::string& s);
Int parse_integer(const std::string& s);

}  // namespace atf
