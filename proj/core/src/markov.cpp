#include "atfkit/markov.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace atf {

namespace {

Int sum(const Triple& t) { return t[0] + t[1] + t[2]; }

const std::array<Int, 3>& coefficients(const MarkovEqn& eq) {
    return std::visit([](const auto& e) -> const std::array<Int, 3>& {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, MarkovEqnI>) return e.n;
        else return e.k;
    }, eq);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else if (c != ' ') cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Int root_coefficient(const MarkovEqnI& eq) {
    bool exact = false;
    Int r = isqrt_exact(eq.d * eq.n[0] * eq.n[1] * eq.n[2], exact);
    if (!exact) throw MarkovError("d n1 n2 n3 is not a perfect square");
    return r;
}

bool admissible(const MarkovEqnI& eq) {
    if (eq.d < 1) return false;
    for (const auto& n : eq.n)
        if (n < 1) return false;
    bool exact = false;
    isqrt_exact(eq.d * eq.n[0] * eq.n[1] * eq.n[2], exact);
    if (!exact) return false;
    for (int k = 0; k < 3; ++k) {
        Int prod = eq.d * eq.n[(k + 1) % 3] * eq.n[(k + 2) % 3];
        if (prod % eq.n[k] != 0) return false;
    }
    return true;
}

bool is_solution(const MarkovEqn& eq, const Triple& t) {
    for (const auto& x : t)
        if (x < 1) return false;
    if (auto* e = std::get_if<MarkovEqnI>(&eq)) {
        bool exact = false;
        Int s = isqrt_exact(e->d * e->n[0] * e->n[1] * e->n[2], exact);
        if (!exact) return false;
        return e->n[0] * t[0] * t[0] + e->n[1] * t[1] * t[1] + e->n[2] * t[2] * t[2] == s * t[0] * t[1] * t[2];
    }
    const auto& e = std::get<MarkovEqnII>(eq);
    return e.k[0] * t[0] * t[0] + e.k[1] * t[1] * t[1] + e.k[2] * t[2] * t[2] ==
           e.K * e.k[0] * e.k[1] * e.k[2] * t[0] * t[1] * t[2];
}

Triple mutate_triple(const MarkovEqn& eq, const Triple& t, int index) {
    if (index < 1 || index > 3) throw MarkovError("mutation index must be 1, 2 or 3");
    int i = index - 1, j = (i + 1) % 3, k = (i + 2) % 3;
    Triple out = t;
    if (auto* e = std::get_if<MarkovEqnI>(&eq)) {
        // sqrt(d n_j n_k / n_i) = sqrt(d n1 n2 n3) / n_i
        Rat v = Rat(root_coefficient(*e), e->n[i]) * Rat(t[j] * t[k]) - Rat(t[i]);
        if (boost::multiprecision::denominator(v) != 1) throw MarkovError("mutation leaves the integers");
        out[i] = boost::multiprecision::numerator(v);
    } else {
        const auto& f = std::get<MarkovEqnII>(eq);
        out[i] = f.K * f.k[j] * f.k[k] * t[j] * t[k] - t[i];
    }
    if (out[i] < 1) throw MarkovError("mutated entry is not positive");
    return out;
}

Triple symmetric_canonical(const MarkovEqn& eq, const Triple& t) {
    const auto& c = coefficients(eq);
    Triple out = t;
    // At most three slots: bubble within equal-coefficient classes.
    for (int pass = 0; pass < 3; ++pass)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (c[i] == c[j] && out[j] < out[i]) std::swap(out[i], out[j]);
    return out;
}

Descent minimize(const MarkovEqn& eq, const Triple& t) {
    if (!is_solution(eq, t)) throw MarkovError("not a solution");
    Descent d{t, {}};
    for (;;) {
        bool moved = false;
        for (int idx = 1; idx <= 3; ++idx) {
            Triple m;
            try { m = mutate_triple(eq, d.minimum, idx); }
            catch (const MarkovError&) { continue; }
            if (sum(m) < sum(d.minimum)) {
                d.minimum = m;
                d.word.push_back(idx);
                moved = true;
                break;
            }
        }
        if (!moved) return d;
    }
}

std::vector<Triple> minimal_solutions(const MarkovEqn& eq, int search_bound) {
    // Coefficients of c1 a^2 + c2 b^2 + c3 c^2 = C abc; searched in 128-bit arithmetic.
    const auto& c = coefficients(eq);
    Int big_c;
    if (auto* e = std::get_if<MarkovEqnI>(&eq)) big_c = root_coefficient(*e);
    else {
        const auto& f = std::get<MarkovEqnII>(eq);
        big_c = f.K * f.k[0] * f.k[1] * f.k[2];
    }
    const Int limit("1000000000000");
    if (big_c > limit || c[0] > limit || c[1] > limit || c[2] > limit)
        throw MarkovError("equation constants too large for the seed search");
    using W = __int128;
    W k0 = c[0].convert_to<long long>(), k1 = c[1].convert_to<long long>(), k2 = c[2].convert_to<long long>();
    W kk = big_c.convert_to<long long>();
    std::set<Triple> mins;
    for (W a = 1; a <= search_bound; ++a)
        for (W b = 1; b <= search_bound; ++b) {
            W lhs = k0 * a * a + k1 * b * b;
            for (W r = 1; r <= search_bound; ++r)
                if (lhs + k2 * r * r == kk * a * b * r) {
                    Triple t{Int((long long)a), Int((long long)b), Int((long long)r)};
                    mins.insert(minimize(eq, t).minimum);
                }
        }
    return {mins.begin(), mins.end()};
}

std::set<Triple> enumerate_tree(const MarkovEqn& eq, const Int& bound) {
    auto seeds = minimal_solutions(eq);
    if (seeds.empty()) throw MarkovError("no seed solution within the search bound");
    std::set<Triple> seen, out;
    std::deque<Triple> queue;
    auto below = [&](const Triple& t) { return std::max({t[0], t[1], t[2]}) < bound; };
    for (const auto& s : seeds)
        if (below(s) && seen.insert(s).second) queue.push_back(s);
    while (!queue.empty()) {
        Triple t = queue.front();
        queue.pop_front();
        out.insert(symmetric_canonical(eq, t));
        for (int idx = 1; idx <= 3; ++idx) {
            Triple m;
            try { m = mutate_triple(eq, t, idx); }
            catch (const MarkovError&) { continue; }
            if (sum(m) <= sum(t) || !below(m)) continue;
            if (seen.insert(m).second) queue.push_back(m);
        }
    }
    return out;
}

std::vector<MarkovEqnI> classify_type_I(int search_bound) {
    std::vector<MarkovEqnI> out;
    for (int d = 1; d <= 9; ++d) {
        int rest = 12 - d;
        for (int n1 = 1; n1 <= rest; ++n1)
            for (int n2 = n1; n1 + n2 <= rest; ++n2) {
                int n3 = rest - n1 - n2;
                if (n3 < n2) continue;
                MarkovEqnI eq{Int(d), {Int(n1), Int(n2), Int(n3)}};
                if (!admissible(eq)) continue;
                bool found = false;
                for (const auto& m : minimal_solutions(eq, search_bound))
                    if (is_solution(eq, m)) found = true;
                if (found) out.push_back(eq);
            }
    }
    std::sort(out.begin(), out.end(), [](const MarkovEqnI& a, const MarkovEqnI& b) {
        if (a.d != b.d) return a.d > b.d;
        return a.n < b.n;
    });
    return out;
}

TypeIData derive_type_I_data(const MarkovEqnII& eq, const Triple& t, const std::array<Int, 3>& nodes) {
    if (!is_solution(eq, t)) throw MarkovError("triple does not solve the type II equation");
    // lambda k_i t_i^2 / n_i must be a square p_i^2. Relative to slot 1 this needs
    // rho_i^2 = n1 k_i / (k1 n_i) to be a rational square; then p_i = t_i rho_i p1 / t1.
    std::array<Rat, 3> rho;
    rho[0] = 1;
    for (int i = 1; i < 3; ++i) {
        Rat sq(nodes[0] * eq.k[i], eq.k[0] * nodes[i]);
        bool e1 = false, e2 = false;
        Int rn = isqrt_exact(boost::multiprecision::numerator(sq), e1);
        Int rd = isqrt_exact(boost::multiprecision::denominator(sq), e2);
        if (!e1 || !e2) throw MarkovError("inconsistent node assignment");
        rho[i] = Rat(rn, rd);
    }
    Int p1 = 1;
    for (int i = 1; i < 3; ++i) {
        Rat f = Rat(t[i]) * rho[i] / Rat(t[0]);
        p1 = boost::multiprecision::lcm(p1, Int(boost::multiprecision::denominator(f)));
    }
    Triple pqr;
    for (int i = 0; i < 3; ++i) {
        Rat v = Rat(t[i]) * rho[i] * Rat(p1) / Rat(t[0]);
        pqr[i] = boost::multiprecision::numerator(v);
    }
    Rat lambda(nodes[0] * pqr[0] * pqr[0], eq.k[0] * t[0] * t[0]);
    for (int i = 1; i < 3; ++i)
        if (Rat(nodes[i] * pqr[i] * pqr[i], eq.k[i] * t[i] * t[i]) != lambda)
            throw MarkovError("lambda ratios disagree");
    Rat d = Rat(eq.K * eq.K * eq.k[0] * eq.k[1] * eq.k[2]) / lambda;
    return {lambda, d, pqr};
}

std::string format_equation(const MarkovEqn& eq) {
    std::ostringstream os;
    if (auto* e = std::get_if<MarkovEqnI>(&eq))
        os << "I:" << e->d << "," << e->n[0] << "," << e->n[1] << "," << e->n[2];
    else {
        const auto& f = std::get<MarkovEqnII>(eq);
        os << "II:" << f.K << "," << f.k[0] << "," << f.k[1] << "," << f.k[2];
    }
    return os.str();
}

MarkovEqn parse_equation(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw MarkovError("equation must look like I:d,n1,n2,n3 or II:K,k1,k2,k3");
    std::string kind = s.substr(0, colon);
    auto parts = split(s.substr(colon + 1), ',');
    if (parts.size() != 4) throw MarkovError("equation needs four integers");
    std::array<Int, 4> v;
    for (int i = 0; i < 4; ++i) {
        v[i] = parse_integer(parts[i]);
        if (v[i] < 1) throw MarkovError("equation constants must be positive");
    }
    if (kind == "I") {
        MarkovEqnI e{v[0], {v[1], v[2], v[3]}};
        root_coefficient(e);
        return e;
    }
    if (kind == "II") return MarkovEqnII{v[0], {v[1], v[2], v[3]}};
    throw MarkovError("unknown equation type: " + kind);
}

std::string format_triple(const Triple& t) {
    return t[0].str() + "," + t[1].str() + "," + t[2].str();
}

Triple parse_triple(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw MarkovError("triple needs three integers");
    Triple t;
    for (int i = 0; i < 3; ++i) {
        t[i] = parse_integer(parts[i]);
        if (t[i] < 1) throw MarkovError("triple entries must be positive");
    }
    return t;
}

}  // namespace atf
