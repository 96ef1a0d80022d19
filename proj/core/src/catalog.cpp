#include "atfkit/catalog.hpp"

#include "atfkit/io.hpp"
#include "atfkit/markov.hpp"
#include "catalog_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <map>
#include <set>

#ifndef ATFKIT_GOLDEN_DIR_DEFAULT
#define ATFKIT_GOLDEN_DIR_DEFAULT "golden"
#endif

namespace atf {

using nlohmann::json;

namespace {

const std::map<std::string, json>& scripts() {
    static const std::map<std::string, json> table = [] {
        std::map<std::string, json> out;
        for (const auto& [name, text] : detail::embedded_scripts()) {
            json j = json::parse(text);
            out[j.at("id").get<std::string>()] = j;
        }
        return out;
    }();
    return table;
}

const json& script_json(const std::string& id) {
    auto it = scripts().find(id);
    if (it == scripts().end()) throw CatalogError("unknown script id: " + id);
    return it->second;
}

std::string show(const LatticeVec& v) { return "(" + v.x.str() + "," + v.y.str() + ")"; }
std::string show(const RationalPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::size_t find_vertex(const ATBD& d, const RationalPoint& p) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.vertices[i] == p) return i;
    throw CatalogError("no vertex at " + show(p));
}

enum class Match { Exact, Sign, None };

Match match_label(const LatticeVec& got, const LatticeVec& want) {
    if (got == want) return Match::Exact;
    if (got == -want) return Match::Sign;
    return Match::None;
}

Side side_of(const json& op, const char* key, Side fallback) {
    if (!op.contains(key)) return fallback;
    return parse_side(op.at(key).get<std::string>());
}

struct Replay {
    ATBD d;
    std::vector<std::string> notes;
    std::string where;
    std::string script, step;
    std::vector<BlowupEvent>* events = nullptr;

    [[noreturn]] void fail(const std::string& quote, const std::string& why) {
        throw CatalogError(where + ": assertion failed for \"" + quote + "\": " + why);
    }

    void trade(const json& op, const std::string& quote) {
        std::size_t v = find_vertex(d, point_from_json(op.at("vertex")));
        LatticeVec want = vec_from_json(op.at("label"));
        ATBD out = nodal_trade(d, v);
        Match m = match_label(out.cuts.back().direction, want);
        if (m == Match::Exact) {
            d = out;
            return;
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i == v || d.roles[i].kind != VertexRole::Delzant) continue;
            try {
                ATBD alt = nodal_trade(d, i);
                if (alt.cuts.back().direction == want) {
                    notes.push_back(where + ": pinned corner " + show(d.vertices[v]) + " gives " +
                                    show(out.cuts.back().direction) + "; used alternative corner " +
                                    show(d.vertices[i]) + " for label " + show(want));
                    d = alt;
                    return;
                }
            } catch (const DiagramError&) {
            }
        }
        if (m == Match::Sign) {
            notes.push_back(where + ": label " + show(want) + " matched up to sign by " + show(out.cuts.back().direction));
            d = out;
            return;
        }
        fail(quote, "trade gives " + show(out.cuts.back().direction) + ", expected " + show(want));
    }

    void mutate_op(const json& op, const std::string& quote) {
        std::size_t v = find_vertex(d, point_from_json(op.at("base")));
        std::optional<std::size_t> ci = d.ray_at(v);
        if (!ci) throw CatalogError(where + ": no ray cut based at " + show(d.vertices[v]));
        LatticeVec want = vec_from_json(op.at("label"));
        Match m = match_label(d.cuts[*ci].direction, want);
        if (m == Match::None) {
            std::optional<std::size_t> alt;
            for (std::size_t c = 0; c < d.cuts.size(); ++c)
                if (d.cuts[c].kind == CutKind::Ray && d.cuts[c].direction == want) alt = c;
            if (!alt) fail(quote, "cut at " + show(d.vertices[v]) + " has direction " + show(d.cuts[*ci].direction));
            notes.push_back(where + ": pinned cut " + show(d.cuts[*ci].direction) + " replaced by the cut with label " +
                            show(want));
            ci = alt;
        } else if (m == Match::Sign) {
            notes.push_back(where + ": label " + show(want) + " matched up to sign by " + show(d.cuts[*ci].direction));
        }
        if (op.contains("nodes")) {
            std::size_t n = op.at("nodes").get<std::size_t>();
            if (d.cuts[*ci].count() != n)
                fail(quote, "cut carries " + std::to_string(d.cuts[*ci].count()) + " nodes, expected " + std::to_string(n));
        }
        std::optional<std::size_t> count;
        if (op.contains("count")) count = op.at("count").get<std::size_t>();
        d = mutate(d, *ci, side_of(op, "side", Side::Left), count);
    }

    void transfer_seam(const json& op, const std::string& quote) {
        std::optional<std::size_t> ci;
        for (std::size_t c = 0; c < d.cuts.size(); ++c)
            if (d.cuts[c].kind == CutKind::Seam) ci = c;
        if (!ci) throw CatalogError(where + ": no seam to transfer");
        std::optional<Side> remap;
        if (op.contains("remap")) remap = parse_side(op.at("remap").get<std::string>());
        d = transfer_cut(d, *ci, side_of(op, "side", Side::Left), remap);
        if (op.contains("label")) {
            LatticeVec want = vec_from_json(op.at("label"));
            Match m = match_label(d.cuts[*ci].direction, want);
            if (m == Match::None) fail(quote, "transfer gives " + show(d.cuts[*ci].direction));
            if (m == Match::Sign)
                notes.push_back(where + ": label " + show(want) + " matched up to sign by " + show(d.cuts[*ci].direction));
        }
    }

    void apply(const json& op, const std::string& quote) {
        std::string kind = op.at("op").get<std::string>();
        if (kind == "trade") trade(op, quote);
        else if (kind == "trade_all") d = trade_all(d);
        else if (kind == "mutate") mutate_op(op, quote);
        else if (kind == "transfer_seam") transfer_seam(op, quote);
        else if (kind == "frame") {
            const auto& m = op.at("matrix");
            d = apply_map(d, UnimodularMap(int_from_json(m[0][0]), int_from_json(m[0][1]), int_from_json(m[1][0]),
                                           int_from_json(m[1][1])));
        } else if (kind == "normalize") d = normalize_distance(d, rat_from_json(op.at("distance")));
        else if (kind == "toric_blowup") {
            std::size_t v = find_vertex(d, point_from_json(op.at("vertex")));
            Rat l = rat_from_json(op.at("length"));
            ATBD before = d;
            d = toric_blowup(d, v, l);
            if (events) events->push_back({script, step, false, before, d, v, RationalPoint(), Side::Left, l});
        }
        else if (kind == "almost_toric_blowup") {
            RationalPoint a = point_from_json(op.at("edge")[0]), b = point_from_json(op.at("edge")[1]);
            std::size_t i = find_vertex(d, a);
            if (!(d.vertex(static_cast<std::ptrdiff_t>(i) + 1) == b))
                throw CatalogError(where + ": no edge " + show(a) + " -> " + show(b));
            Side side = op.value("notch", "back") == "back" ? Side::Left : Side::Right;
            RationalPoint p = point_from_json(op.at("point"));
            Rat l = rat_from_json(op.at("length"));
            ATBD before = d;
            d = almost_toric_blowup(d, i, p, l, side);
            if (events) events->push_back({script, step, true, before, d, i, p, side, l});
        } else
            throw CatalogError(where + ": unknown operation " + kind);
    }

    void check_state() {
        auto rep = validate(d);
        if (!rep.ok()) throw CatalogError(where + ": replay produced an invalid diagram: " + rep.violations.front());
        if (d.monotone_point && !is_monotone(d)) throw CatalogError(where + ": replay lost monotonicity");
    }
};

ATBD cp2_triangle() {
    ATBD d;
    d.vertices = {RationalPoint(-1, -1), RationalPoint(2, -1), RationalPoint(-1, 2)};
    d.monotone_point = RationalPoint(0, 0);
    d.label = "toric CP2";
    d.refresh_roles();
    return d;
}

// Stage index: 0 = base, i = after step i, steps+1 = triangular completion.
std::vector<std::pair<std::string, ATBD>> replay(const std::string& id, const std::optional<FamilyParams>& params,
                                                 std::size_t last_stage, std::vector<std::string>& notes,
                                                 std::vector<BlowupEvent>* events = nullptr);

ATBD base_diagram(const json& s, const std::optional<FamilyParams>& params, std::vector<std::string>& notes) {
    const json& b = s.at("base");
    if (b.contains("stub")) throw CatalogError(s.at("id").get<std::string>() + " is an unverifiable stub (figure only)");
    if (b.contains("diagram")) {
        ATBD d = diagram_from_json(b.at("diagram"));
        d.refresh_roles();
        return d;
    }
    if (b.contains("script")) {
        BuildResult r = build(b.at("script").get<std::string>(), b.at("step").get<std::string>(), params);
        notes.insert(notes.end(), r.notes.begin(), r.notes.end());
        return r.diagram;
    }
    if (b.contains("triangular_spec")) {
        const json& t = b.at("triangular_spec");
        MarkovEqn eq = parse_equation(t.at("equation").get<std::string>());
        if (!std::holds_alternative<MarkovEqnII>(eq)) throw CatalogError("triangular spec needs a type II equation");
        TriangularSpec spec;
        spec.eq = std::get<MarkovEqnII>(eq);
        spec.triple = parse_triple(t.at("triple").get<std::string>());
        Triple n = parse_triple(t.at("nodes").get<std::string>());
        spec.nodes = {n[0], n[1], n[2]};
        spec.scale = rat_from_json(t.value("scale", json("1")));
        return build_triangular(spec);
    }
    if (b.contains("family")) throw CatalogError("family base handled separately");
    throw CatalogError("script has no base");
}

std::size_t stage_count(const json& s) { return s.at("steps").size() + (s.contains("triangular") ? 1 : 0); }

std::vector<std::pair<std::string, ATBD>> replay_family(const json& s, const std::optional<FamilyParams>& params,
                                                        std::size_t last_stage) {
    if (!params) throw CatalogError(s.at("id").get<std::string>() + " needs parameters a,b");
    Cp2x1Diagram f = cp2x1_family(params->first, params->second);
    std::vector<std::pair<std::string, ATBD>> out{{"F1", f.triangle}, {"F2", f.diagram}};
    out.insert(out.begin(), {"base", cp2_triangle()});
    out.resize(std::min(out.size(), last_stage + 1));
    return out;
}

std::vector<std::pair<std::string, ATBD>> replay(const std::string& id, const std::optional<FamilyParams>& params,
                                                 std::size_t last_stage, std::vector<std::string>& notes,
                                                 std::vector<BlowupEvent>* events) {
    const json& s = script_json(id);
    if (s.at("base").contains("family")) return replay_family(s, params, last_stage);
    Replay r;
    r.script = id;
    r.events = events;
    r.where = id + " base";
    r.d = base_diagram(s, params, notes);
    r.check_state();
    std::vector<std::pair<std::string, ATBD>> out{{"base", r.d}};
    const json& steps = s.at("steps");
    for (std::size_t i = 0; i < steps.size() && out.size() <= last_stage; ++i) {
        const json& st = steps[i];
        std::string quote = st.value("quote", "");
        r.where = id + " " + st.at("name").get<std::string>();
        r.step = st.at("name").get<std::string>();
        for (const auto& op : st.at("ops")) r.apply(op, quote);
        r.check_state();
        r.d.label = id + " " + st.at("name").get<std::string>();
        out.emplace_back(st.at("name").get<std::string>(), r.d);
    }
    if (s.contains("triangular") && out.size() <= last_stage) {
        r.where = id + " final";
        for (const auto& op : s.at("triangular").at("ops")) r.apply(op, "triangular completion");
        r.check_state();
        r.d.label = id + " final";
        out.emplace_back("final", r.d);
    }
    notes.insert(notes.end(), r.notes.begin(), r.notes.end());
    return out;
}

int expected_degree_of(const json& s) {
    if (s.contains("degree")) return s.at("degree").get<int>();
    if (s.contains("blowups")) return 9 - s.at("blowups").get<int>();
    return 0;
}

}  // namespace

std::vector<std::string> list_scripts() {
    std::vector<std::string> ids;
    for (const auto& [id, j] : scripts()) ids.push_back(id);
    return ids;
}

ScriptInfo script_info(const std::string& id) {
    const json& s = script_json(id);
    ScriptInfo info;
    info.id = id;
    info.surface = s.value("surface", "");
    info.expected_degree = expected_degree_of(s);
    info.unverifiable = s.value("unverifiable", false);
    info.parameterized = s.contains("parameters");
    for (const auto& st : s.at("steps")) info.steps.push_back({st.at("name").get<std::string>(), st.value("quote", "")});
    if (s.contains("triangular")) info.triangular_after = s.at("triangular").at("after").get<std::string>();
    return info;
}

std::vector<std::string> triangular_scripts() {
    std::vector<std::string> out;
    for (const auto& [id, j] : scripts())
        if (j.contains("triangular")) out.push_back(id);
    return out;
}

BuildResult build(const std::string& id, const std::string& step, const std::optional<FamilyParams>& params) {
    const json& s = script_json(id);
    std::size_t total = stage_count(s);
    std::size_t stage = total;
    if (s.at("base").contains("family")) total = stage = 2;
    if (step != "final") {
        bool numeric = !step.empty() && std::all_of(step.begin(), step.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (numeric) {
            stage = std::stoul(step);
            if (stage > total) throw CatalogError(id + " has no step " + step);
        } else {
            std::optional<std::size_t> found;
            const json& steps = s.at("steps");
            for (std::size_t i = 0; i < steps.size(); ++i)
                if (steps[i].at("name").get<std::string>() == step) found = i + 1;
            if (!found) throw CatalogError(id + " has no step " + step);
            stage = *found;
        }
    }
    BuildResult r;
    auto stages = replay(id, params, stage, r.notes);
    if (stages.size() <= stage) throw CatalogError(id + " has no step " + step);
    r.diagram = stages[stage].second;
    return r;
}

std::vector<std::pair<std::string, ATBD>> build_steps(const std::string& id, const std::optional<FamilyParams>& params) {
    std::vector<std::string> notes;
    auto out = replay(id, params, static_cast<std::size_t>(-1) / 2, notes);
    out.erase(out.begin());
    return out;
}

std::vector<BlowupEvent> blowup_events() {
    std::vector<BlowupEvent> out;
    for (const auto& id : list_scripts()) {
        ScriptInfo info = script_info(id);
        if (info.unverifiable || info.parameterized) continue;
        std::vector<std::string> notes;
        replay(id, std::nullopt, static_cast<std::size_t>(-1) / 2, notes, &out);
    }
    return out;
}

std::vector<FamilyParams> markov_pairs(std::size_t count) {
    std::vector<FamilyParams> out;
    Int a = 1, b = 1;
    while (out.size() < count) {
        out.emplace_back(a, b);
        Int next = 3 * b - a;
        a = b;
        b = next;
    }
    return out;
}

Cp2x1Diagram cp2x1_family(const Int& a, const Int& b) {
    if (a < 1 || b < a) throw CatalogError("family parameters need 1 <= a <= b");
    if (1 + a * a + b * b != 3 * a * b)
        throw CatalogError("(" + a.str() + "," + b.str() + ") does not extend to a Markov triple (1, a, b)");
    ATBD d = nodal_trade(nodal_trade(cp2_triangle(), 1), 2);
    auto opposite = [&](std::size_t ci) { return d.edge_length(d.cuts[ci].base[0] + 1); };
    std::size_t delzant = 0;
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 200) throw CatalogError("family construction did not reach the target triple");
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d.roles[i].kind == VertexRole::Delzant) delzant = i;
        Rat unit = d.edge_length(delzant + 1);
        Rat x = opposite(0) / unit, y = opposite(1) / unit;
        Rat lo = std::min(x, y), hi = std::max(x, y);
        if (lo == Rat(a * a) && hi == Rat(b * b)) break;
        if (hi > Rat(b * b)) throw CatalogError("family construction overshot the target triple");
        std::size_t ci = x <= y ? 0 : 1;
        try {
            d = mutate(d, ci, Side::Left);
        } catch (const DiagramError&) {
            d = mutate(d, ci, Side::Right);
        }
    }
    d = normalize_distance(d, Rat(a * b));
    Cp2x1Diagram f;
    f.triangle = d;
    f.triangle.label = "CP2 triangle (1," + a.str() + "," + b.str() + ")";
    f.diagram = toric_blowup(d, delzant, Rat(a * b));
    f.diagram.label = "CP2#1 family (" + a.str() + "," + b.str() + ")";
    const ATBD& g = f.diagram;
    f.edge_e = delzant;
    std::size_t n = g.size();
    Rat la = Rat(3 * a * a - a * b), lb = Rat(3 * b * b - a * b);
    bool have_a = false, have_b = false, have_c = false;
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t e = (delzant + k) % n;
        Rat l = g.edge_length(e);
        if (l == Rat(3) && !have_c) {
            f.edge_c = e;
            have_c = true;
        } else if (l == la && !have_a) {
            f.edge_a = e;
            have_a = true;
        } else if (l == lb && !have_b) {
            f.edge_b = e;
            have_b = true;
        }
    }
    if (!have_a || !have_b || !have_c || g.edge_length(f.edge_e) != Rat(a * b))
        throw CatalogError("family diagram does not have edges (3a^2-ab, 3b^2-ab, 3, ab)");
    return f;
}

std::size_t CatalogReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; }));
}

namespace {

struct FinalFacts {
    bool built = false;
    MarkovEqnI eq;
    Triple pqr;
};

std::vector<CheckResult> verify_script(const std::string& id, const std::vector<MarkovEqnI>& classified,
                                       FinalFacts& facts) {
    std::vector<CheckResult> out;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({id, name, ok, detail});
        return ok;
    };
    ScriptInfo info = script_info(id);
    ATBD d;
    try {
        d = build(id).diagram;
        check("replay", true);
    } catch (const std::exception& e) {
        check("replay", false, e.what());
        return out;
    }
    check("valid", validate(d).ok());
    check("monotone", d.monotone_point && is_monotone(d));
    if (!check("triangular", is_triangular(d))) return out;
    try {
        Profile pr = profile(d);
        LimitOrbifold o = limit_orbifold(d);
        Rat deg = degree(o);
        check("degree-formula", triangle_degree(o) == deg, to_string(deg));
        check("degree", deg == Rat(info.expected_degree),
              "got " + to_string(deg) + ", expected " + std::to_string(info.expected_degree));
        MarkovEqnI eq;
        eq.d = boost::multiprecision::numerator(deg);
        Triple pqr;
        for (int i = 0; i < 3; ++i) {
            eq.n[i] = pr.node_type[i].first;
            pqr[i] = pr.node_type[i].second;
        }
        facts = {true, eq, pqr};
        std::string eqs = format_equation(eq) + " (" + format_triple(pqr) + ")";
        check("type-I-solution", is_solution(eq, pqr), eqs);
        check("node-sum", eq.n[0] + eq.n[1] + eq.n[2] + eq.d == 12, eqs);
        std::array<Int, 3> sorted_n = eq.n;
        std::sort(sorted_n.begin(), sorted_n.end());
        bool listed = std::any_of(classified.begin(), classified.end(),
                                  [&](const MarkovEqnI& c) { return c.d == eq.d && c.n == sorted_n; });
        check("classified", listed, eqs);
        auto [eq2, t] = infer_type_II(pr.length_type);
        Rat d2 = Rat(eq2.K * eq2.K * eq2.k[0] * eq2.k[1] * eq2.k[2]) / *pr.lambda;
        check("lambda", d2 == deg, format_equation(eq2) + " gives d = " + to_string(d2));
        std::vector<Int> hull = hull_edge_lengths(predicted_hull(d)), want;
        for (const auto& [n, p] : pr.node_type) want.push_back(n * p);
        std::sort(hull.begin(), hull.end());
        std::sort(want.begin(), want.end());
        check("hull", hull == want);
    } catch (const std::exception& e) {
        check("invariants", false, e.what());
    }
    return out;
}

}  // namespace

CatalogReport verify_catalog() {
    CatalogReport rep;
    std::vector<MarkovEqnI> classified = classify_type_I();
    std::vector<std::string> ids = triangular_scripts();
    std::vector<FinalFacts> facts(ids.size());
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (std::size_t i = 0; i < ids.size(); ++i)
        jobs.push_back(std::async(std::launch::async, verify_script, ids[i], std::cref(classified), std::ref(facts[i])));
    for (auto& j : jobs) {
        auto part = j.get();
        rep.checks.insert(rep.checks.end(), part.begin(), part.end());
    }
    // Non-triangular scripts must still replay cleanly at every step.
    for (const auto& id : list_scripts()) {
        ScriptInfo info = script_info(id);
        if (info.unverifiable || info.parameterized || info.triangular_after) continue;
        try {
            build_steps(id);
            rep.checks.push_back({id, "replay", true, ""});
        } catch (const std::exception& e) {
            rep.checks.push_back({id, "replay", false, e.what()});
        }
    }
    std::set<std::pair<Int, std::array<Int, 3>>> finals;
    for (const auto& f : facts) {
        if (!f.built) continue;
        auto n = f.eq.n;
        std::sort(n.begin(), n.end());
        finals.insert({f.eq.d, n});
    }
    std::string missing, extra;
    std::set<std::pair<Int, std::array<Int, 3>>> listed;
    for (const auto& c : classified) {
        listed.insert({c.d, c.n});
        if (!finals.count({c.d, c.n})) missing += " " + format_equation(c);
    }
    for (const auto& f : finals)
        if (!listed.count(f)) extra += " " + format_equation(MarkovEqnI{f.first, f.second});
    rep.checks.push_back({"catalog", "classification-covered", missing.empty(),
                          missing.empty() ? "" : "not realized:" + missing});
    rep.checks.push_back({"catalog", "classification-exact", extra.empty(),
                          extra.empty() ? "" : "outside the classification:" + extra});
    return rep;
}

std::string default_golden_dir() {
    if (const char* env = std::getenv("ATFKIT_GOLDEN_DIR"); env && *env) return env;
    return ATFKIT_GOLDEN_DIR_DEFAULT;
}

std::vector<std::string> golden_ids() {
    std::vector<std::string> out;
    for (const auto& id : list_scripts())
        if (!script_info(id).unverifiable) out.push_back(id);
    return out;
}

namespace {

json summary_of(const ATBD& d) {
    json j;
    ATBD c = canonicalize(d);
    j["canonical"] = diagram_to_json(c);
    LimitOrbifold o = limit_orbifold(c);
    j["degree"] = rat_to_json(degree(o));
    if (is_triangular(c)) {
        j["profile"] = profile_to_json(profile(c));
        j["hull"] = hull_to_json(canonical_hull(predicted_hull(c)));
    }
    return j;
}

}  // namespace

std::string golden_record(const std::string& id) {
    ScriptInfo info = script_info(id);
    if (info.unverifiable) throw CatalogError(id + " is an unverifiable stub");
    json rec;
    rec["id"] = id;
    rec["format"] = "atfkit-golden-1";
    if (info.parameterized) {
        rec["instances"] = json::array();
        for (const auto& [a, b] : markov_pairs(4)) {
            Cp2x1Diagram f = cp2x1_family(a, b);
            json inst;
            inst["params"] = json::array({int_to_json(a), int_to_json(b)});
            inst["diagram"] = diagram_to_json(f.diagram);
            LimitOrbifold o = limit_orbifold(f.diagram);
            inst["matrix"] = matrix_to_json(intersection_matrix(o));
            inst["degree"] = rat_to_json(degree(o));
            inst["hull"] = hull_to_json(predicted_hull(f.diagram));
            rec["instances"].push_back(inst);
        }
        return dump(rec);
    }
    auto steps = build_steps(id);
    rec["steps"] = json::array();
    for (const auto& [name, d] : steps) rec["steps"].push_back(json{{"name", name}, {"diagram", diagram_to_json(d)}});
    rec["final"] = summary_of(steps.back().second);
    return dump(rec);
}

void write_goldens(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& id : golden_ids()) save_text((std::filesystem::path(dir) / (id + ".json")).string(), golden_record(id));
}

CatalogReport compare_goldens(const std::string& dir) {
    CatalogReport rep;
    for (const auto& id : golden_ids()) {
        std::string path = (std::filesystem::path(dir) / (id + ".json")).string();
        std::string want;
        try {
            want = load_text(path);
        } catch (const std::exception&) {
            rep.checks.push_back({id, "golden", false, "missing " + path});
            continue;
        }
        std::string got;
        try {
            got = golden_record(id);
        } catch (const std::exception& e) {
            rep.checks.push_back({id, "golden", false, e.what()});
            continue;
        }
        if (got == want) {
            rep.checks.push_back({id, "golden", true, ""});
            continue;
        }
        std::size_t line = 1, i = 0;
        while (i < got.size() && i < want.size() && got[i] == want[i]) {
            if (got[i] == '\n') ++line;
            ++i;
        }
        rep.checks.push_back({id, "golden", false, "mismatch at line " + std::to_string(line) + " of " + path});
    }
    return rep;
}

}  // namespace atf
