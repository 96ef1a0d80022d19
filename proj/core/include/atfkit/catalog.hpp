#pragma once

#include "atfkit/atbd.hpp"
#include "atfkit/orbifold.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atf {

class CatalogError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct StepInfo {
    std::string name;
    std::string quote;
};

struct ScriptInfo {
    std::string id;
    std::string surface;
    int expected_degree = 0;  // 0 when unknown
    bool unverifiable = false;
    bool parameterized = false;
    std::vector<StepInfo> steps;
    std::optional<std::string> triangular_after;
};

using FamilyParams = std::pair<Int, Int>;

std::vector<std::string> list_scripts();
ScriptInfo script_info(const std::string& id);
// Scripts ending in a triangular diagram.
std::vector<std::string> triangular_scripts();

struct BuildResult {
    ATBD diagram;
    std::vector<std::string> notes;  // logged label discrepancies and alternatives
};

// step: "final", a step name ("A3"), or a 1-based step number ("0" is the base diagram).
BuildResult build(const std::string& id, const std::string& step = "final",
                  const std::optional<FamilyParams>& params = std::nullopt);
// Every step in order, plus "final" when the script has a triangular completion.
std::vector<std::pair<std::string, ATBD>> build_steps(const std::string& id,
                                                      const std::optional<FamilyParams>& params = std::nullopt);

// Blown-up CP^2 from a Markov triple (1, a, b): edges A, B, C, E of areas
// 3a^2 - ab, 3b^2 - ab, 3 and ab.
struct Cp2x1Diagram {
    ATBD triangle;  // before the blowup
    ATBD diagram;
    std::size_t edge_a = 0, edge_b = 0, edge_c = 0, edge_e = 0;
};
Cp2x1Diagram cp2x1_family(const Int& a, const Int& b);
// Pairs (a, b), a <= b, with (1, a, b) a Markov triple, in increasing order.
std::vector<FamilyParams> markov_pairs(std::size_t count);

// A blowup performed by a script step, with the diagrams around it.
struct BlowupEvent {
    std::string script, step;
    bool almost_toric = false;
    ATBD before, after;
    std::size_t index = 0;  // vertex (toric) or edge (almost toric)
    RationalPoint point;    // almost toric only
    Side side = Side::Left;
    Rat length;
};
std::vector<BlowupEvent> blowup_events();

struct CheckResult {
    std::string subject;
    std::string check;
    bool ok = true;
    std::string detail;
};

struct CatalogReport {
    std::vector<CheckResult> checks;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

CatalogReport verify_catalog();

// Golden records: one JSON file per script.
std::string default_golden_dir();  // ATFKIT_GOLDEN_DIR or the bundled directory
std::string golden_record(const std::string& id);
std::vector<std::string> golden_ids();
void write_goldens(const std::string& dir);
CatalogReport compare_goldens(const std::string& dir);

}  // namespace atf
