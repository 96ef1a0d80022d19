#include "atfkit/catalog.hpp"
#include "atfkit/io.hpp"
#include "atfkit/markov.hpp"
#include "atfkit/orbifold.hpp"
#include "atfkit/render.hpp"
#include "atfkit/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace atf;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) std::cout << text;
    else save_text(out, text);
}

json triple_json(const Triple& t) { return json::array({int_to_json(t[0]), int_to_json(t[1]), int_to_json(t[2])}); }

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

FamilyParams parse_params(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 2) throw UsageError("--params expects a,b");
    return {parse_integer(parts[0]), parse_integer(parts[1])};
}

struct MarkovArgs {
    std::string action, eq, triple;
    int index = 0;
    std::string bound = "1000";
};

int run_markov(const MarkovArgs& a) {
    if (a.action == "classify") {
        json out = json::array();
        for (const auto& e : classify_type_I()) {
            json je;
            je["equation"] = format_equation(e);
            je["minimal_solutions"] = json::array();
            for (const auto& t : minimal_solutions(e)) je["minimal_solutions"].push_back(triple_json(t));
            out.push_back(je);
        }
        std::cout << dump(out);
        return kOk;
    }
    if (a.eq.empty()) throw UsageError("--eq is required");
    MarkovEqn eq = parse_equation(a.eq);
    auto need_triple = [&] {
        if (a.triple.empty()) throw UsageError("--triple is required");
        return parse_triple(a.triple);
    };
    json out;
    out["equation"] = format_equation(eq);
    if (a.action == "solve") {
        Triple t = need_triple();
        bool ok = is_solution(eq, t);
        out["triple"] = triple_json(t);
        out["solution"] = ok;
        std::cout << dump(out);
        return ok ? kOk : kFailure;
    }
    if (a.action == "mutate") {
        if (a.index < 1 || a.index > 3) throw UsageError("--index must be 1, 2 or 3");
        Triple t = need_triple();
        out["triple"] = triple_json(mutate_triple(eq, t, a.index));
    } else if (a.action == "tree") {
        out["bound"] = a.bound;
        out["triples"] = json::array();
        for (const auto& t : enumerate_tree(eq, parse_integer(a.bound))) out["triples"].push_back(triple_json(t));
    } else if (a.action == "minimize") {
        Descent d = minimize(eq, need_triple());
        out["minimum"] = triple_json(d.minimum);
        out["word"] = d.word;
    } else {
        throw UsageError("unknown markov action: " + a.action);
    }
    std::cout << dump(out);
    return kOk;
}

struct AtbdArgs {
    std::string action, file, out, side = "left", length, positions, point, remap;
    std::optional<std::size_t> cut, vertex, edge, count;
};

int run_atbd(const AtbdArgs& a) {
    ATBD d = load_diagram(a.file);
    Side side = parse_side(a.side);
    auto need = [](const std::optional<std::size_t>& v, const char* flag) {
        if (!v) throw UsageError(std::string(flag) + " is required");
        return *v;
    };
    auto need_length = [&] {
        if (a.length.empty()) throw UsageError("--length is required");
        return parse_rational(a.length);
    };
    if (a.action == "validate") {
        ValidationReport r = validate(d);
        json out;
        out["valid"] = r.ok();
        out["violations"] = r.violations;
        out["monotone"] = r.ok() && is_monotone(d);
        emit(dump(out), a.out);
        return r.ok() ? kOk : kFailure;
    }
    if (a.action == "profile") {
        emit(dump(profile_to_json(profile(d))), a.out);
        return kOk;
    }
    ATBD result;
    if (a.action == "trade") {
        std::optional<std::size_t> v = a.vertex ? a.vertex : a.cut;
        result = v ? nodal_trade(d, *v) : trade_all(d);
    } else if (a.action == "slide") {
        if (a.positions.empty()) throw UsageError("--positions is required");
        std::vector<Rat> pos;
        for (const auto& p : split_commas(a.positions)) pos.push_back(parse_rational(p));
        result = nodal_slide(d, need(a.cut, "--cut"), pos);
    } else if (a.action == "transfer") {
        std::optional<Side> remap;
        if (!a.remap.empty()) remap = parse_side(a.remap);
        result = transfer_cut(d, need(a.cut, "--cut"), side, remap);
    } else if (a.action == "mutate") {
        result = mutate(d, need(a.cut, "--cut"), side, a.count);
    } else if (a.action == "blowup") {
        std::optional<std::size_t> v = a.vertex ? a.vertex : a.cut;
        result = toric_blowup(d, need(v, "--vertex"), need_length());
    } else if (a.action == "atblowup") {
        if (a.point.empty()) throw UsageError("--point is required");
        auto xy = split_commas(a.point);
        if (xy.size() != 2) throw UsageError("--point expects x,y");
        result = almost_toric_blowup(d, need(a.edge, "--edge"), {parse_rational(xy[0]), parse_rational(xy[1])},
                                     need_length(), side);
    } else if (a.action == "canon") {
        result = canonicalize(d);
    } else {
        throw UsageError("unknown atbd action: " + a.action);
    }
    emit(write_diagram(result), a.out);
    return kOk;
}

struct CatalogArgs {
    std::string action, id, step = "final", params, out, write_goldens;
    bool compare = false;
};

int run_catalog(const CatalogArgs& a) {
    std::optional<FamilyParams> params;
    if (!a.params.empty()) params = parse_params(a.params);
    if (a.action == "list") {
        json out = json::array();
        for (const auto& id : list_scripts()) {
            ScriptInfo s = script_info(id);
            json j;
            j["id"] = s.id;
            j["surface"] = s.surface;
            j["steps"] = json::array();
            for (const auto& st : s.steps) j["steps"].push_back(st.name);
            j["triangular"] = s.triangular_after.has_value();
            j["unverifiable"] = s.unverifiable;
            j["parameterized"] = s.parameterized;
            out.push_back(j);
        }
        std::cout << dump(out);
        return kOk;
    }
    if (a.action == "build") {
        if (a.id.empty()) throw UsageError("--id is required");
        BuildResult r = build(a.id, a.step, params);
        for (const auto& n : r.notes) std::cerr << "note: " << n << "\n";
        emit(write_diagram(r.diagram), a.out);
        return kOk;
    }
    if (a.action == "verify") {
        if (!a.write_goldens.empty()) {
            write_goldens(a.write_goldens);
            std::cout << "wrote " << golden_ids().size() << " golden files to " << a.write_goldens << "\n";
            return kOk;
        }
        CatalogReport r = a.compare ? compare_goldens(default_golden_dir()) : verify_catalog();
        for (const auto& c : r.checks) {
            if (!a.id.empty() && c.subject != a.id) continue;
            std::cout << (c.ok ? "ok   " : "FAIL ") << c.subject << " " << c.check;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << r.checks.size() << " checks, " << r.failures() << " failures\n";
        return r.ok() ? kOk : kFailure;
    }
    throw UsageError("unknown catalog action: " + a.action);
}

int run_orbifold(const std::string& action, const std::string& file, const std::string& out) {
    ATBD d = load_diagram(file);
    LimitOrbifold o = limit_orbifold(d);
    json j;
    if (action == "limit") j = orbifold_to_json(o);
    else if (action == "matrix") j = matrix_to_json(intersection_matrix(o));
    else if (action == "degree") j = json{{"degree", rat_to_json(degree(o))}};
    else if (action == "hull") j = hull_to_json(predicted_hull(d));
    else throw UsageError("unknown orbifold action: " + action);
    emit(dump(j), out);
    return kOk;
}

int run_verify(const std::string& suite, std::optional<int> depth, std::uint64_t seed, const std::string& select) {
    SuiteSpec spec{suite, depth, seed, select};
    SuiteReport r = run_suite(spec);
    std::cout << "suite " << r.name << " depth " << r.depth << " seed " << r.seed << "\n";
    for (const auto& l : r.lines) std::cout << "  " << l << "\n";
    std::cout << r.checks << " checks, " << r.failures << " failures\n";
    if (!r.first_counterexample.empty()) std::cout << "first counterexample: " << r.first_counterexample << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
    return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Almost toric base diagrams, Markov-type equations and their limit orbifolds"};
    app.require_subcommand(1);
    std::function<int()> action;

    MarkovArgs ma;
    auto* markov = app.add_subcommand("markov", "Markov-type equations");
    markov->add_option("action", ma.action, "solve|mutate|tree|minimize|classify")
        ->required()
        ->check(CLI::IsMember({"solve", "mutate", "tree", "minimize", "classify"}));
    markov->add_option("--eq", ma.eq, "II:K,k1,k2,k3 or I:d,n1,n2,n3");
    markov->add_option("--triple", ma.triple, "a,b,c");
    markov->add_option("--index", ma.index, "slot to mutate (1-3)");
    markov->add_option("--bound", ma.bound, "tree: largest component stays below this");
    markov->callback([&] { action = [&] { return run_markov(ma); }; });

    AtbdArgs aa;
    auto* atbd = app.add_subcommand("atbd", "Diagram operations");
    atbd->add_option("action", aa.action, "validate|profile|trade|slide|transfer|mutate|blowup|atblowup|canon")
        ->required()
        ->check(CLI::IsMember(
            {"validate", "profile", "trade", "slide", "transfer", "mutate", "blowup", "atblowup", "canon"}));
    atbd->add_option("file", aa.file, "diagram file")->required();
    atbd->add_option("--cut", aa.cut, "cut index (trade and blowup: vertex index)");
    atbd->add_option("--vertex", aa.vertex, "vertex index");
    atbd->add_option("--edge", aa.edge, "edge index (atblowup)");
    atbd->add_option("--side", aa.side, "left|right")->check(CLI::IsMember({"left", "right"}));
    atbd->add_option("--remap", aa.remap, "seam transfer: remapped half, left|right")
        ->check(CLI::IsMember({"left", "right"}));
    atbd->add_option("--length", aa.length, "blowup size");
    atbd->add_option("--count", aa.count, "mutate: number of nodes to move");
    atbd->add_option("--positions", aa.positions, "slide: comma-separated node parameters");
    atbd->add_option("--point", aa.point, "atblowup: x,y on the edge");
    atbd->add_option("-o,--out", aa.out, "output file");
    atbd->callback([&] { action = [&] { return run_atbd(aa); }; });

    CatalogArgs ca;
    auto* catalog = app.add_subcommand("catalog", "Scripted constructions");
    catalog->add_option("action", ca.action, "list|build|verify")
        ->required()
        ->check(CLI::IsMember({"list", "build", "verify"}));
    catalog->add_option("--id", ca.id, "script id");
    catalog->add_option("--step", ca.step, "step name or number, or final");
    catalog->add_option("--params", ca.params, "family parameters a,b");
    catalog->add_option("-o,--out", ca.out, "output file");
    catalog->add_flag("--goldens", ca.compare, "verify: compare against the golden files");
    catalog->add_option("--write-goldens", ca.write_goldens, "verify: regenerate golden files into DIR");
    catalog->callback([&] { action = [&] { return run_catalog(ca); }; });

    std::string oaction, ofile, oout;
    auto* orb = app.add_subcommand("orbifold", "Limit orbifold invariants");
    orb->add_option("action", oaction, "limit|matrix|degree|hull")
        ->required()
        ->check(CLI::IsMember({"limit", "matrix", "degree", "hull"}));
    orb->add_option("file", ofile, "diagram file")->required();
    orb->add_option("-o,--out", oout, "output file");
    orb->callback([&] { action = [&] { return run_orbifold(oaction, ofile, oout); }; });

    std::string rfile, rout;
    RenderOptions ropts;
    auto* render = app.add_subcommand("render", "SVG rendering");
    render->add_option("file", rfile, "diagram file")->required();
    render->add_option("-o,--out", rout, "output SVG");
    render->add_flag("--grid", ropts.show_grid, "draw the integer grid");
    render->add_flag("--labels", ropts.show_labels, "label vertices");
    render->add_option("--scale", ropts.scale, "pixels per lattice unit")->check(CLI::PositiveNumber);
    render->callback([&] { action = [&] { emit(render_svg(load_diagram(rfile), ropts), rout); return kOk; }; });

    std::string suite, select = "all";
    std::optional<int> depth;
    std::uint64_t seed = kDefaultSeed;
    auto* verify = app.add_subcommand("verify", "Property suites");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--depth", depth, "mutation word length");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--select", select, "catalog script id or all");
    verify->callback([&] { action = [&] { return run_verify(suite, depth, seed, select); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SuiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
