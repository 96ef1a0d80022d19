#pragma once

#include "atfkit/lattice.hpp"
#include "atfkit/markov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace atf {

class DiagramError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class CutKind { Ray, Seam };

// Facing from the base into the diagram along the cut direction (rays), or
// facing inward from the blown-up edge (seams and blowup notches).
enum class Side { Left, Right };

struct Cut {
    LatticeVec direction;
    CutKind kind = CutKind::Ray;
    // Ray: {base}. Seam: {vertex before the apex, vertex after the apex}.
    std::vector<std::size_t> base;
    // Parameters along direction from the base (rays) or from the apex (seams).
    std::vector<Rat> nodes;

    std::size_t count() const { return nodes.size(); }
    friend bool operator==(const Cut&, const Cut&) = default;
};

struct VertexRole {
    enum Kind { Delzant, CutBase } kind = Delzant;
    std::size_t cut = 0;
    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct ATBD {
    std::vector<RationalPoint> vertices;  // counterclockwise
    std::vector<VertexRole> roles;
    std::vector<Cut> cuts;
    std::optional<RationalPoint> monotone_point;
    std::string label;

    std::size_t size() const { return vertices.size(); }
    const RationalPoint& vertex(std::ptrdiff_t i) const;
    // Primitive direction of the edge from vertex i to vertex i+1.
    LatticeVec edge_direction(std::ptrdiff_t i) const;
    Rat edge_length(std::ptrdiff_t i) const;
    // Apex vertex index of a seam cut.
    std::size_t apex(const Cut& c) const;
    // Point at parameter t along cut c.
    RationalPoint cut_point(const Cut& c, const Rat& t) const;
    RationalPoint cut_origin(const Cut& c) const;
    // Index of the ray cut based at vertex i, if any.
    std::optional<std::size_t> ray_at(std::size_t i) const;
    // Roles derived from the cut list.
    void refresh_roles();

    friend bool operator==(const ATBD&, const ATBD&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const ATBD& d);
void require_valid(const ATBD& d, const std::string& context);

Rat area(const ATBD& d);
bool is_monotone(const ATBD& d);
// Common lattice distance from the monotone point to the edge lines; throws unless monotone.
Rat monotone_distance(const ATBD& d);
Rat edge_distance(const ATBD& d, std::size_t edge);

ATBD nodal_trade(const ATBD& d, std::size_t vertex);
// Trades every Delzant corner, in vertex order.
ATBD trade_all(const ATBD& d);
ATBD nodal_slide(const ATBD& d, std::size_t cut, const std::vector<Rat>& positions);
// Rays: side selects the half remapped by the monodromy.
// Seams: side selects the chord direction along the edge (Right = +u) and
// seam_remap the remapped half (tries both when absent).
ATBD transfer_cut(const ATBD& d, std::size_t cut, Side side = Side::Left,
                  std::optional<Side> seam_remap = std::nullopt);
// Slides the innermost `count` nodes (default all) through the monotone point, then transfers.
ATBD mutate(const ATBD& d, std::size_t cut, Side side = Side::Left,
            std::optional<std::size_t> count = std::nullopt);
ATBD mutate_word(const ATBD& d, const std::vector<std::pair<std::size_t, Side>>& word);

ATBD toric_blowup(const ATBD& d, std::size_t vertex, const Rat& length);
// Notch on edge (edge, edge+1) at point p; Left puts the notch behind p along the edge.
ATBD almost_toric_blowup(const ATBD& d, std::size_t edge, const RationalPoint& p, const Rat& length,
                         Side side = Side::Left);

ATBD apply_map(const ATBD& d, const UnimodularMap& m);
ATBD translate(const ATBD& d, const RationalPoint& offset);
ATBD scale(const ATBD& d, const Rat& factor);
// Rescales about the monotone point so the monotone distance becomes `distance`.
ATBD normalize_distance(const ATBD& d, const Rat& distance);

// Re-places the nodes of every ray cut at t_m i/(n+1).
void place_nodes_canonically(ATBD& d);

struct Profile {
    std::vector<std::pair<Int, Int>> node_type;  // (n_i, p_i) per cut
    std::vector<Rat> length_type;                 // triangles: edge opposite cut i
    std::optional<Rat> lambda;
};
Profile profile(const ATBD& d);
bool is_triangular(const ATBD& d);
// Ordered by cut index: corner determinant at cut i and length of the opposite edge.
std::vector<Int> corner_orders_by_cut(const ATBD& d);

ATBD canonicalize(const ATBD& d);
bool equivalent(const ATBD& a, const ATBD& b);

struct TriangularSpec {
    MarkovEqnII eq;
    Triple triple;
    std::array<Int, 3> nodes;
    std::optional<Int> x, y;
    Rat scale{1};
};
ATBD build_triangular(const TriangularSpec& spec);

// Squarefree split of a triangular length type into a type II equation and triple.
std::pair<MarkovEqnII, Triple> infer_type_II(const std::vector<Rat>& length_type);

std::string to_string(Side s);
Side parse_side(const std::string& s);

}  // namespace atf
