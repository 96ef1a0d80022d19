#include "atfkit/io.hpp"

#include <fstream>
#include <sstream>

namespace atf {

using nlohmann::json;

json int_to_json(const Int& n) { return n.str(); }

Int int_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Int(j.get<long long>());
        if (j.is_string()) return parse_integer(j.get<std::string>());
    } catch (const LatticeError& e) {
        throw FormatError(e.what());
    }
    throw FormatError("expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const LatticeError& e) {
        throw FormatError(e.what());
    }
    throw FormatError("expected a rational, got " + j.dump());
}

json point_to_json(const RationalPoint& p) { return json::array({rat_to_json(p.x), rat_to_json(p.y)}); }

RationalPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("expected a point [x, y]");
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

json vec_to_json(const LatticeVec& v) { return json::array({int_to_json(v.x), int_to_json(v.y)}); }

LatticeVec vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("expected a vector [m, n]");
    return {int_from_json(j[0]), int_from_json(j[1])};
}

json diagram_to_json(const ATBD& d) {
    json j;
    j["label"] = d.label;
    j["vertices"] = json::array();
    for (const auto& v : d.vertices) j["vertices"].push_back(point_to_json(v));
    j["roles"] = json::array();
    for (const auto& r : d.roles)
        j["roles"].push_back(r.kind == VertexRole::Delzant ? std::string("delzant") : "cut:" + std::to_string(r.cut));
    j["cuts"] = json::array();
    for (const auto& c : d.cuts) {
        json jc;
        jc["direction"] = vec_to_json(c.direction);
        jc["kind"] = c.kind == CutKind::Ray ? "ray" : "seam";
        jc["base"] = c.base;
        jc["nodes"] = json::array();
        for (const auto& t : c.nodes) jc["nodes"].push_back(rat_to_json(t));
        j["cuts"].push_back(jc);
    }
    j["monotone_point"] = d.monotone_point ? point_to_json(*d.monotone_point) : json(nullptr);
    return j;
}

ATBD diagram_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("diagram must be an object");
    ATBD d;
    try {
        d.label = j.value("label", "");
        for (const auto& v : j.at("vertices")) d.vertices.push_back(point_from_json(v));
        if (j.contains("cuts"))
            for (const auto& jc : j.at("cuts")) {
                Cut c;
                c.direction = vec_from_json(jc.at("direction"));
                std::string kind = jc.value("kind", "ray");
                if (kind == "ray") c.kind = CutKind::Ray;
                else if (kind == "seam") c.kind = CutKind::Seam;
                else throw FormatError("unknown cut kind: " + kind);
                for (const auto& b : jc.at("base")) {
                    std::size_t idx = b.get<std::size_t>();
                    if (idx >= d.vertices.size()) throw FormatError("cut base index out of range");
                    c.base.push_back(idx);
                }
                if (c.base.empty()) throw FormatError("cut without base");
                for (const auto& t : jc.at("nodes")) c.nodes.push_back(rat_from_json(t));
                d.cuts.push_back(c);
            }
        if (j.contains("monotone_point") && !j.at("monotone_point").is_null())
            d.monotone_point = point_from_json(j.at("monotone_point"));
        if (j.contains("roles")) {
            const auto& jr = j.at("roles");
            if (jr.size() != d.vertices.size()) throw FormatError("roles do not match the vertex list");
            for (const auto& r : jr) {
                std::string s = r.get<std::string>();
                if (s == "delzant") d.roles.push_back(VertexRole{});
                else if (s.rfind("cut:", 0) == 0)
                    d.roles.push_back(VertexRole{VertexRole::CutBase, std::stoul(s.substr(4))});
                else throw FormatError("unknown role: " + s);
            }
        } else {
            d.roles.assign(d.vertices.size(), VertexRole{});
            d.refresh_roles();
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed diagram: ") + e.what());
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("malformed diagram: ") + e.what());
    }
    return d;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string write_diagram(const ATBD& d) { return dump(diagram_to_json(d)); }

ATBD read_diagram(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("parse error: ") + e.what());
    }
    return diagram_from_json(j);
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

ATBD load_diagram(const std::string& path) { return read_diagram(load_text(path)); }

json profile_to_json(const Profile& p) {
    json j;
    j["node_type"] = json::array();
    for (const auto& [n, q] : p.node_type) j["node_type"].push_back(json::array({int_to_json(n), int_to_json(q)}));
    j["length_type"] = json::array();
    for (const auto& l : p.length_type) j["length_type"].push_back(rat_to_json(l));
    j["lambda"] = p.lambda ? rat_to_json(*p.lambda) : json(nullptr);
    return j;
}

json orbifold_to_json(const LimitOrbifold& o) {
    json j;
    j["vertices"] = json::array();
    j["edge_directions"] = json::array();
    j["corner_orders"] = json::array();
    j["edge_lengths"] = json::array();
    for (std::size_t i = 0; i < o.size(); ++i) {
        j["vertices"].push_back(point_to_json(o.vertices[i]));
        j["edge_directions"].push_back(vec_to_json(o.edge_directions[i]));
        j["corner_orders"].push_back(int_to_json(o.corner_orders[i]));
        j["edge_lengths"].push_back(rat_to_json(o.edge_lengths[i]));
    }
    return j;
}

json matrix_to_json(const IntersectionMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& x : r) row.push_back(rat_to_json(x));
        rows.push_back(row);
    }
    return json{{"matrix", rows}};
}

json hull_to_json(const HullPolygon& h) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : h.vertices) j["vertices"].push_back(vec_to_json(v));
    j["edge_lengths"] = json::array();
    for (const auto& l : hull_edge_lengths(h)) j["edge_lengths"].push_back(int_to_json(l));
    return j;
}

}  // namespace atf
