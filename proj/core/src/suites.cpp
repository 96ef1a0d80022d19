#include "atfkit/suites.hpp"

#include "atfkit/catalog.hpp"
#include "atfkit/io.hpp"
#include "atfkit/markov.hpp"
#include "atfkit/orbifold.hpp"
#include "atfkit/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace atf {

namespace {

struct Checker {
    SuiteReport& r;
    std::size_t local_checks = 0, local_failures = 0;

    bool operator()(bool ok, const std::string& what) {
        ++r.checks;
        ++local_checks;
        if (!ok) {
            ++r.failures;
            ++local_failures;
            if (r.first_counterexample.empty()) r.first_counterexample = what;
        }
        return ok;
    }

    void section(const std::string& title) {
        std::ostringstream s;
        s << title << ": " << local_checks << " checks, " << local_failures << " failures";
        r.lines.push_back(s.str());
        local_checks = local_failures = 0;
    }
};

using Word = std::vector<std::pair<std::size_t, Side>>;

std::string show_word(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w[i].first) + (w[i].second == Side::Left ? "L" : "R");
    }
    return s + "]";
}

struct Final {
    std::string id;
    ATBD d;
    int expected_degree;
};

std::vector<Final> finals(const std::string& selector) {
    std::vector<Final> out;
    for (const auto& id : triangular_scripts()) {
        if (selector != "all" && selector != id) continue;
        out.push_back({id, build(id).diagram, script_info(id).expected_degree});
    }
    if (out.empty()) throw SuiteError("selector matches no triangular catalog script: " + selector);
    return out;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), cut(0, 2), side(0, 1);
    Word w(len(rng));
    for (auto& l : w) l = {cut(rng), side(rng) ? Side::Right : Side::Left};
    return w;
}

// All words of length <= depth over the three cuts, visited depth first with shared prefixes.
void for_each_word(const ATBD& d, int depth, Word& prefix, const std::function<void(const ATBD&, const Word&)>& visit) {
    visit(d, prefix);
    if (static_cast<int>(prefix.size()) == depth) return;
    for (std::size_t c = 0; c < d.cuts.size(); ++c) {
        prefix.emplace_back(c, Side::Left);
        ATBD next;
        bool ok = true;
        try {
            next = mutate(d, c, Side::Left);
        } catch (const std::exception&) {
            ok = false;
        }
        if (ok) for_each_word(next, depth, prefix, visit);
        else visit(ATBD{}, prefix);
        prefix.pop_back();
    }
}

// Markov data attached to a triangular diagram, slot i <-> cut i.
struct Tracker {
    MarkovEqnII eq2;
    Triple t;
    MarkovEqnI eq1;
    Triple pqr;
};

Tracker tracker_for(const ATBD& d) {
    Profile p = profile(d);
    Tracker k;
    std::tie(k.eq2, k.t) = infer_type_II(p.length_type);
    Rat deg = degree(limit_orbifold(d));
    k.eq1.d = boost::multiprecision::numerator(deg);
    for (int i = 0; i < 3; ++i) {
        k.eq1.n[i] = p.node_type[i].first;
        k.pqr[i] = p.node_type[i].second;
    }
    return k;
}

Tracker advance(Tracker k, std::size_t slot) {
    int idx = static_cast<int>(slot) + 1;
    k.t = mutate_triple(k.eq2, k.t, idx);
    k.pqr = mutate_triple(k.eq1, k.pqr, idx);
    return k;
}

std::vector<Rat> normalized(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    std::vector<Rat> out;
    for (const auto& x : v) out.push_back(Rat(x, g));
    return out;
}

bool correspondence_holds(const ATBD& d, const Tracker& k, std::string& why) {
    Profile p = profile(d);
    std::vector<Int> want_len;
    for (int i = 0; i < 3; ++i) want_len.push_back(k.eq2.k[i] * k.t[i] * k.t[i]);
    if (p.length_type != normalized(want_len)) {
        why = "length type differs from mutated triple " + format_triple(k.t);
        return false;
    }
    for (int i = 0; i < 3; ++i)
        if (p.node_type[i].first != k.eq1.n[i] || p.node_type[i].second != k.pqr[i]) {
            why = "node type differs from mutated triple " + format_triple(k.pqr);
            return false;
        }
    return true;
}

int depth_or(const SuiteSpec& s, int fallback) { return s.depth.value_or(fallback); }

void suite_classification(const SuiteSpec&, SuiteReport& r) {
    Checker check{r};
    std::vector<MarkovEqnI> got = classify_type_I();
    // Independent brute force over the admissible equations.
    std::set<std::pair<long long, std::array<long long, 3>>> oracle;
    for (long long d = 1; d <= 9; ++d)
        for (long long a = 1; a <= 12; ++a)
            for (long long b = a; b <= 12; ++b) {
                long long c = 12 - d - a - b;
                if (c < b) continue;
                long long prod = d * a * b * c, s = 0;
                while (s * s < prod) ++s;
                if (s * s != prod) continue;
                if ((d * a * b) % c || (d * a * c) % b || (d * b * c) % a) continue;
                bool solvable = false;
                for (long long p = 1; p <= 64 && !solvable; ++p)
                    for (long long q = 1; q <= 64 && !solvable; ++q)
                        for (long long x = 1; x <= 64; ++x)
                            if (a * p * p + b * q * q + c * x * x == s * p * q * x) {
                                solvable = true;
                                break;
                            }
                if (solvable) oracle.insert({d, {a, b, c}});
            }
    std::set<std::pair<long long, std::array<long long, 3>>> mine;
    std::map<long long, int> per_degree;
    for (const auto& e : got) {
        mine.insert({e.d.convert_to<long long>(),
                     {e.n[0].convert_to<long long>(), e.n[1].convert_to<long long>(), e.n[2].convert_to<long long>()}});
        ++per_degree[e.d.convert_to<long long>()];
    }
    check(mine == oracle, "classification differs from brute force");
    const std::map<long long, int> golden{{9, 1}, {8, 1}, {7, 0}, {6, 1}, {5, 1}, {4, 1}, {3, 2}, {2, 2}, {1, 2}};
    for (const auto& [d, n] : golden) {
        int have = per_degree.count(d) ? per_degree[d] : 0;
        check(have == n, "degree " + std::to_string(d) + ": " + std::to_string(have) + " equations, expected " +
                             std::to_string(n));
    }
    check(got.size() == 11, "total " + std::to_string(got.size()) + " equations, expected 11");
    for (const auto& e : got) {
        check(admissible(e), format_equation(e) + " not admissible");
        check(e.n[0] + e.n[1] + e.n[2] + e.d == 12, format_equation(e) + " violates n1+n2+n3+d = 12");
    }
    std::string listing;
    for (const auto& e : got) listing += " " + format_equation(e);
    r.lines.push_back("equations:" + listing);
    check.section("classification");
}

void suite_markov_trees(const SuiteSpec&, SuiteReport& r) {
    Checker check{r};
    MarkovEqn eq = MarkovEqnII{3, {1, 1, 1}};
    // Bound on every component; the listed set includes (1,13,34) whose sum exceeds 40.
    std::set<Triple> brute, by_sum;
    for (int a = 1; a <= 40; ++a)
        for (int b = a; b <= 40; ++b)
            for (int c = b; c <= 40; ++c)
                if (a * a + b * b + c * c == 3 * a * b * c) {
                    brute.insert(Triple{a, b, c});
                    if (a + b + c <= 40) by_sum.insert(Triple{a, b, c});
                }
    std::set<Triple> tree;
    for (auto t : enumerate_tree(eq, 41)) {
        std::sort(t.begin(), t.end());
        tree.insert(t);
    }
    const std::set<Triple> expected{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {2, 5, 29}, {1, 13, 34}};
    check(tree == brute, "tree enumeration differs from brute force");
    check(tree == expected, "tree enumeration differs from the expected list");
    std::string listing;
    for (const auto& t : tree) listing += " " + format_triple(t);
    r.lines.push_back("components <= 40:" + listing);
    r.lines.push_back("of these, " + std::to_string(by_sum.size()) + " have sum <= 40");
    check.section("triples with components <= 40");
    for (const auto& t : enumerate_tree(eq, 100000)) {
        Descent dsc = minimize(eq, t);
        Triple m = dsc.minimum;
        std::sort(m.begin(), m.end());
        check(m == Triple{1, 1, 1}, "descent of " + format_triple(t) + " ends at " + format_triple(dsc.minimum));
        Int sum = t[0] + t[1] + t[2];
        int down = 0;
        for (int i = 1; i <= 3; ++i) {
            Triple u = mutate_triple(eq, t, i);
            if (u[0] + u[1] + u[2] < sum) ++down;
        }
        if (t != Triple{1, 1, 1} && sum > 3)
            check(down == 1, format_triple(t) + " has " + std::to_string(down) + " decreasing mutations");
    }
    check.section("descent and unique decreasing mutation");
}

void suite_mutation_correspondence(const SuiteSpec& s, SuiteReport& r) {
    Checker check{r};
    int depth = depth_or(s, 8);
    int exhaustive = std::min(depth, 5);
    auto fs = finals(s.selector);
    for (const auto& f : fs) {
        Tracker base = tracker_for(f.d);
        std::map<std::size_t, Tracker> memo;
        Word prefix;
        std::vector<Tracker> stack{base};
        for_each_word(f.d, exhaustive, prefix, [&](const ATBD& d, const Word& w) {
            Tracker k = base;
            for (const auto& [c, side] : w) k = advance(k, c);
            if (d.vertices.empty()) {
                check(false, f.id + " word " + show_word(w) + ": mutation failed");
                return;
            }
            std::string why;
            try {
                check(correspondence_holds(d, k, why), f.id + " word " + show_word(w) + ": " + why);
            } catch (const std::exception& e) {
                check(false, f.id + " word " + show_word(w) + ": " + e.what());
            }
        });
    }
    check.section("exhaustive words up to length " + std::to_string(exhaustive));
    std::mt19937_64 rng(s.seed);
    for (int i = 0; i < 200; ++i) {
        const Final& f = fs[static_cast<std::size_t>(i) % fs.size()];
        Word w = random_word(rng, static_cast<std::size_t>(depth));
        try {
            Tracker k = tracker_for(f.d);
            ATBD d = f.d;
            for (const auto& [c, side] : w) {
                d = mutate(d, c, side);
                k = advance(k, c);
            }
            std::string why;
            check(correspondence_holds(d, k, why), f.id + " word " + show_word(w) + ": " + why);
        } catch (const std::exception& e) {
            check(false, f.id + " word " + show_word(w) + ": " + e.what());
        }
    }
    check.section("200 random words up to length " + std::to_string(depth));
}

// One random mutate / transfer / slide step. Moves whose preconditions fail
// (a cut in the way, a node pushed out) are redrawn and counted as rejected.
ATBD random_move(const ATBD& d, std::mt19937_64& rng, std::string& what, std::size_t& rejected) {
    std::uniform_int_distribution<int> kind(0, 2), side(0, 1);
    std::uniform_int_distribution<std::size_t> cut(0, d.cuts.size() - 1);
    static const Rat factors[] = {Rat(1, 2), Rat(2, 3), Rat(3, 4), Rat(4, 3)};
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::size_t c = cut(rng);
        Side sd = side(rng) ? Side::Right : Side::Left;
        int k = kind(rng);
        Rat f = factors[std::uniform_int_distribution<int>(0, 3)(rng)];
        try {
            if (k == 0) {
                ATBD out = mutate(d, c, sd);
                what += " mutate " + std::to_string(c) + to_string(sd);
                return out;
            }
            if (k == 1) {
                ATBD out = transfer_cut(d, c, sd);
                what += " transfer " + std::to_string(c) + to_string(sd);
                return out;
            }
            std::vector<Rat> pos = d.cuts[c].nodes;
            for (auto& t : pos) t *= f;
            ATBD out = nodal_slide(d, c, pos);
            what += " slide " + std::to_string(c) + "x" + to_string(f);
            return out;
        } catch (const DiagramError&) {
            ++rejected;
        }
    }
    throw DiagramError("no applicable move");
}

void suite_degree_invariance(const SuiteSpec& s, SuiteReport& r) {
    Checker check{r};
    int depth = depth_or(s, 8);
    std::map<int, std::set<std::string>> by_degree;
    auto fs = finals(s.selector);
    for (const auto& f : fs) {
        LimitOrbifold o = limit_orbifold(f.d);
        Rat k = degree(o);
        check(k == Rat(f.expected_degree), f.id + ": degree " + to_string(k));
        check(triangle_degree(o) == k, f.id + ": triangle formula disagrees");
        by_degree[f.expected_degree].insert(f.id);
    }
    for (const auto& id : list_scripts()) {
        ScriptInfo info = script_info(id);
        if (info.unverifiable || info.triangular_after || (s.selector != "all" && s.selector != id)) continue;
        std::vector<std::pair<std::string, ATBD>> last;
        try {
            if (info.parameterized)
                for (const auto& p : markov_pairs(4)) last.emplace_back(id, build(id, "final", p).diagram);
            else last.emplace_back(id, build(id).diagram);
            for (const auto& [name, d] : last) {
                Rat k = degree(limit_orbifold(canonicalize(d)));
                check(k == Rat(info.expected_degree), name + ": degree " + to_string(k));
                by_degree[info.expected_degree].insert(name);
            }
        } catch (const std::exception& e) {
            check(false, id + ": " + e.what());
        }
    }
    check.section("catalog finals");
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<int> len(1, depth);
    std::size_t rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        const Final& f = fs[static_cast<std::size_t>(i) % fs.size()];
        std::string what = f.id + ":";
        try {
            ATBD d = f.d;
            int n = len(rng);
            for (int j = 0; j < n; ++j) d = random_move(d, rng, what, rejected);
            LimitOrbifold o = limit_orbifold(d);
            Rat k = degree(o);
            check(k == Rat(f.expected_degree) && triangle_degree(o) == k, what + " gives degree " + to_string(k));
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }
    r.lines.push_back(std::to_string(rejected) + " moves redrawn after failed preconditions");
    check.section("1000 random words of mutate/transfer/slide");
    for (const auto& [deg, ids] : by_degree) {
        std::string l = "degree " + std::to_string(deg) + ":";
        for (const auto& id : ids) l += " " + id;
        r.lines.push_back(l);
    }
}

std::vector<std::pair<std::string, ATBD>> descendants(const std::vector<Final>& fs, int exhaustive, int random_words,
                                                      int depth, std::uint64_t seed) {
    std::vector<std::pair<std::string, ATBD>> out;
    for (const auto& f : fs) {
        Word prefix;
        for_each_word(f.d, exhaustive, prefix, [&](const ATBD& d, const Word& w) {
            if (!d.vertices.empty()) out.emplace_back(f.id + " " + show_word(w), d);
        });
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_words; ++i) {
        const Final& f = fs[static_cast<std::size_t>(i) % fs.size()];
        Word w = random_word(rng, static_cast<std::size_t>(depth));
        try {
            out.emplace_back(f.id + " " + show_word(w), mutate_word(f.d, w));
        } catch (const std::exception&) {
        }
    }
    return out;
}

void suite_type_one(const SuiteSpec& s, SuiteReport& r) {
    Checker check{r};
    int depth = depth_or(s, 6);
    auto fs = finals(s.selector);
    for (const auto& [name, d] : descendants(fs, std::min(depth, 3), 100, depth, s.seed)) {
        try {
            check(is_triangular(d) && is_monotone(d), name + ": not a monotone triangle");
            Profile p = profile(d);  // throws when the lambda ratios disagree
            check(p.lambda.has_value(), name + ": no lambda");
            Tracker k = tracker_for(d);
            check(is_solution(k.eq1, k.pqr), name + ": " + format_triple(k.pqr) + " does not solve " + format_equation(k.eq1));
            Rat d2 = Rat(k.eq2.K * k.eq2.K * k.eq2.k[0] * k.eq2.k[1] * k.eq2.k[2]) / *p.lambda;
            check(d2 == Rat(k.eq1.d), name + ": K^2 k1k2k3 / lambda = " + to_string(d2));
            for (int i = 0; i < 3; ++i)
                check(Rat(k.eq1.n[i] * k.pqr[i] * k.pqr[i]) / p.length_type[i] == *p.lambda,
                      name + ": lambda ratio " + std::to_string(i) + " disagrees");
        } catch (const std::exception& e) {
            check(false, name + ": " + e.what());
        }
    }
    check.section("finals and descendants");
}

void suite_hull(const SuiteSpec& s, SuiteReport& r) {
    Checker check{r};
    int depth = depth_or(s, 5);
    auto fs = finals(s.selector);
    for (const auto& [name, d] : descendants(fs, std::min(depth, 4), 100, depth, s.seed)) {
        try {
            Profile p = profile(d);
            HullPolygon h = predicted_hull(d);
            std::vector<Int> got = hull_edge_lengths(h), want;
            for (const auto& [n, q] : p.node_type) want.push_back(n * q);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            check(got == want, name + ": hull edge lengths differ from n_i p_i");
            if (name.rfind("cp2.A", 0) != 0) continue;
            // Fan of CP(w1, w2, w3), w = squared Markov triple: sum w_i v_i = 0 and |det(v_j, v_k)| = w_i.
            LimitOrbifold o = limit_orbifold(d);
            auto normals = fan_normals(o);
            check(h.vertices.size() == 3, name + ": hull is not a triangle");
            LatticeVec sum{0, 0};
            bool dets = true;
            for (std::size_t i = 0; i < 3; ++i) {
                // Corner at the base of cut i joins edges b-1 and b; edge b+1 is opposite.
                std::size_t b = d.cuts[i].base[0];
                Int w = p.node_type[i].second * p.node_type[i].second;
                sum = sum + w * normals[(b + 1) % 3];
                if (abs(wedge(normals[(b + 2) % 3], normals[b])) != w) dets = false;
            }
            for (const auto& v : normals)
                if (!is_primitive(v)) dets = false;
            check(sum == LatticeVec(0, 0) && dets, name + ": hull is not the weighted projective fan");
        } catch (const std::exception& e) {
            check(false, name + ": " + e.what());
        }
    }
    check.section("finals and descendants");
}

void suite_cp2x1(const SuiteSpec&, SuiteReport& r) {
    Checker check{r};
    const std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 2}, {2, 5}, {5, 13}, {13, 34}, {29, 169}};
    for (const auto& [ai, bi] : pairs) {
        Int a = ai, b = bi;
        std::string tag = "(" + std::to_string(ai) + "," + std::to_string(bi) + ")";
        try {
            Cp2x1Diagram f = cp2x1_family(a, b);
            LimitOrbifold o = limit_orbifold(f.diagram);
            Rat aa = divisor_self_intersection(o, f.edge_a), bb = divisor_self_intersection(o, f.edge_b);
            Rat cc = divisor_self_intersection(o, f.edge_c), ee = divisor_self_intersection(o, f.edge_e);
            check(aa == Rat(a * a - b * b, b * b), tag + ": A.A = " + to_string(aa));
            check(bb == Rat(b * b - a * a, a * a), tag + ": B.B = " + to_string(bb));
            check(cc == Rat(Int(1), a * a * b * b), tag + ": C.C = " + to_string(cc));
            check(ee == Rat(-1), tag + ": E.E = " + to_string(ee));
            check(degree(o) == Rat(8), tag + ": degree " + to_string(degree(o)));
            HullPolygon h = predicted_hull(f.diagram);
            LatticeVec u = o.edge_directions[f.edge_a];
            Int angle = corner_affine_angle(h, LatticeVec(-u.y, u.x));
            check(angle == 3 * a - b, tag + ": corner angle " + angle.str() + ", expected " + (3 * a - b).str());
            HullPolygon model = convex_hull({{1, 0}, {1, 1}, {0, 1}, {-a * a, -b * b}});
            check(canonical_hull(h) == canonical_hull(model), tag + ": hull differs from the fan-vector quadrilateral");
        } catch (const std::exception& e) {
            check(false, tag + ": " + e.what());
        }
    }
    check.section("intersection numbers and corner angles");
    std::set<Int> angles;
    std::string listing;
    for (const auto& [a, b] : markov_pairs(8)) {
        try {
            Cp2x1Diagram f = cp2x1_family(a, b);
            LimitOrbifold o = limit_orbifold(f.diagram);
            LatticeVec u = o.edge_directions[f.edge_a];
            Int angle = corner_affine_angle(predicted_hull(f.diagram), LatticeVec(-u.y, u.x));
            angles.insert(angle);
            listing += " " + angle.str();
        } catch (const std::exception& e) {
            check(false, "pair (" + a.str() + "," + b.str() + "): " + e.what());
        }
    }
    check(angles.size() >= 4, "only " + std::to_string(angles.size()) + " distinct corner angles");
    r.lines.push_back("angles of the first 8 pairs:" + listing);
    check.section("distinct angles");
}

void suite_area(const SuiteSpec& s, SuiteReport& r) {
    Checker check{r};
    int depth = depth_or(s, 8);
    auto fs = finals(s.selector);
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<int> len(1, depth);
    std::size_t rejected = 0;
    for (int i = 0; i < 300; ++i) {
        const Final& f = fs[static_cast<std::size_t>(i) % fs.size()];
        std::string what = f.id + ":";
        try {
            ATBD d = f.d;
            Rat a0 = area(d);
            int n = len(rng);
            for (int j = 0; j < n; ++j) {
                d = random_move(d, rng, what, rejected);
                check(area(d) == a0 && is_monotone(d) && validate(d).ok(), what + ": area or monotonicity changed");
            }
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }
    r.lines.push_back(std::to_string(rejected) + " moves redrawn after failed preconditions");
    check.section("mutate/transfer/slide");
    for (const auto& ev : blowup_events()) {
        if (s.selector != "all" && s.selector != ev.script) continue;
        std::string tag = ev.script + " " + ev.step;
        Rat dist = monotone_distance(ev.before);
        check(area(ev.before) - area(ev.after) == ev.length * ev.length / 2, tag + ": area decrement");
        check(is_monotone(ev.after) == (ev.length == dist), tag + ": monotonicity");
        int controls = 0;
        for (const Rat& l : {ev.length / 2, ev.length * 3 / 2}) {
            ATBD alt;
            try {
                alt = ev.almost_toric ? almost_toric_blowup(ev.before, ev.index, ev.point, l, ev.side)
                                      : toric_blowup(ev.before, ev.index, l);
            } catch (const DiagramError&) {
                continue;
            }
            ++controls;
            check(validate(alt).ok(), tag + ": control blowup invalid");
            check(area(ev.before) - area(alt) == l * l / 2, tag + ": control area decrement");
            check(is_monotone(alt) == (l == dist), tag + ": control monotonicity for length " + to_string(l));
        }
        check(controls > 0, tag + ": no control length fits");
        r.lines.push_back(tag + (ev.almost_toric ? ": almost toric" : ": toric") + " blowup of length " +
                          to_string(ev.length) + ", monotone distance " + to_string(dist));
    }
    check.section("blowups");
}

void suite_reproducibility(const SuiteSpec&, SuiteReport& r) {
    Checker check{r};
    std::string dir = default_golden_dir();
    CatalogReport gold = compare_goldens(dir);
    for (const auto& c : gold.checks) check(c.ok, c.subject + ": " + c.detail);
    r.lines.push_back("golden directory: " + dir);
    check.section("goldens");
    for (const auto& id : list_scripts()) {
        ScriptInfo info = script_info(id);
        if (info.unverifiable) continue;
        std::vector<std::pair<std::string, ATBD>> steps;
        try {
            if (info.parameterized)
                for (const auto& p : markov_pairs(4)) steps.emplace_back("F2", build(id, "final", p).diagram);
            else steps = build_steps(id);
        } catch (const std::exception& e) {
            check(false, id + ": " + e.what());
            continue;
        }
        for (const auto& [name, d] : steps) {
            std::string text = write_diagram(d);
            ATBD back = read_diagram(text);
            check(back == d, id + " " + name + ": read(write(d)) != d");
            check(write_diagram(back) == text, id + " " + name + ": serialization not stable");
            RenderOptions opts;
            opts.show_grid = true;
            opts.show_labels = true;
            std::string svg = render_svg(d, opts);
            check(svg == render_svg(d, opts) && svg == render_svg(back, opts), id + " " + name + ": SVG not byte-stable");
        }
    }
    check.section("round trip and rendering");
}

struct SuiteEntry {
    const char* name;
    int default_depth;
    void (*run)(const SuiteSpec&, SuiteReport&);
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> table{
        {"classification", 0, suite_classification},
        {"markov-trees", 0, suite_markov_trees},
        {"mutation-correspondence", 8, suite_mutation_correspondence},
        {"degree-invariance", 8, suite_degree_invariance},
        {"type-one-identity", 6, suite_type_one},
        {"hull", 5, suite_hull},
        {"cp2x1-family", 0, suite_cp2x1},
        {"area-conservation", 8, suite_area},
        {"reproducibility", 0, suite_reproducibility},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
}

SuiteReport run_suite(const SuiteSpec& spec) {
    const SuiteEntry* entry = nullptr;
    for (const auto& e : registry())
        if (spec.name == e.name) entry = &e;
    if (!entry) throw SuiteError("unknown suite: " + spec.name);
    if (spec.depth && (*spec.depth > kMaxSuiteDepth || *spec.depth < 1))
        throw SuiteError("depth guard: depth must be between 1 and " + std::to_string(kMaxSuiteDepth));
    SuiteReport r;
    r.name = spec.name;
    r.depth = spec.depth.value_or(entry->default_depth);
    r.seed = spec.seed;
    SuiteSpec s = spec;
    if (!s.depth && entry->default_depth > 0) s.depth = entry->default_depth;
    entry->run(s, r);
    return r;
}

}  // namespace atf
