#include "atfkit/io.hpp"
#include "atfkit/render.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace atf;
using namespace testing_support;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

// Six-place rounding by integer long division, halves away from zero.
std::string six_places(long long num, long long den) {
    bool neg = (num < 0) != (den < 0) && num != 0;
    num = std::llabs(num), den = std::llabs(den);
    long long scaled = (num * 2000000 + den) / (2 * den);
    std::string frac = std::to_string(scaled % 1000000);
    frac.insert(0, 6 - frac.size(), '0');
    std::string s = std::to_string(scaled / 1000000) + "." + frac;
    return (neg && scaled != 0 ? "-" : "") + s;
}

}  // namespace

TEST(Io, DiagramRoundTrip) {
    std::mt19937_64 rng(3);
    ATBD d = cp2_three_node();
    d.label = "plane";
    for (int i = 0; i < 10; ++i) {
        std::string text = write_diagram(d);
        ATBD back = read_diagram(text);
        EXPECT_EQ(back, d);
        EXPECT_EQ(write_diagram(back), text);
        d = mutate(d, std::uniform_int_distribution<std::size_t>(0, 2)(rng));
    }
}

TEST(Io, SeamRoundTripAndMissingRoles) {
    ATBD sq = polygon({pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2)}, pt(0, 0));
    ATBD d = almost_toric_blowup(sq, 0, pt(-1, -2), 2, Side::Right);
    EXPECT_EQ(read_diagram(write_diagram(d)), d);
    nlohmann::json j = diagram_to_json(d);
    j.erase("roles");
    EXPECT_EQ(diagram_from_json(j), d);
}

TEST(Io, KeysAreSortedAndStable) {
    std::string text = write_diagram(cp2());
    EXPECT_LT(text.find("\"cuts\""), text.find("\"label\""));
    EXPECT_LT(text.find("\"label\""), text.find("\"monotone_point\""));
    EXPECT_LT(text.find("\"monotone_point\""), text.find("\"roles\""));
    EXPECT_LT(text.find("\"roles\""), text.find("\"vertices\""));
    EXPECT_EQ(text.back(), '\n');
}

TEST(Io, MalformedInput) {
    EXPECT_THROW(read_diagram("{"), FormatError);
    EXPECT_THROW(read_diagram("[]"), FormatError);
    EXPECT_THROW(read_diagram(R"({"vertices": [["1/0", "0"]]})"), FormatError);
    EXPECT_THROW(read_diagram(R"({"vertices": [["0","0"],["1","0"],["0","1"]], "cuts": [{"direction": [1,1], "kind": "bent", "base": [0], "nodes": []}]})"),
                 FormatError);
    EXPECT_THROW(load_diagram("/nonexistent/diagram.json"), FormatError);
    // Plain JSON numbers are accepted for integers.
    ATBD d = read_diagram(R"({"vertices": [[-1,-1],[2,-1],[-1,2]], "monotone_point": [0,0]})");
    EXPECT_EQ(d.vertices, cp2().vertices);
    EXPECT_TRUE(validate(d).ok());
}

TEST(Io, FileRoundTrip) {
    auto path = std::filesystem::temp_directory_path() / "atfkit_io_test.json";
    save_text(path.string(), write_diagram(cp2_three_node()));
    EXPECT_EQ(load_diagram(path.string()), cp2_three_node());
    std::filesystem::remove(path);
}

TEST(Render, DecimalRounding) {
    for (long long num = -2500; num <= 2500; num += 7)
        for (long long den : {1LL, 2LL, 3LL, 7LL, 8LL, 64LL, 2000000LL, 3000000LL})
            EXPECT_EQ(decimal6(Rat(num, den)), six_places(num, den)) << num << "/" << den;
    EXPECT_EQ(decimal6(Rat(1, 2000000)), "0.000001");
    EXPECT_EQ(decimal6(Rat(-1, 2000000)), "-0.000001");
    EXPECT_EQ(decimal6(Rat(-1, 3000000)), "0.000000");
}

TEST(Render, PlaneElementCounts) {
    RenderOptions opts;
    opts.show_grid = true;
    std::string svg = render_svg(cp2_three_node(), opts);
    EXPECT_EQ(count(svg, "class=\"edge\""), 3u);
    EXPECT_EQ(count(svg, "class=\"cut\""), 3u);
    EXPECT_EQ(count(svg, "stroke-dasharray=\"6 4\""), 3u);
    EXPECT_EQ(count(svg, "class=\"node\""), 6u);
    EXPECT_EQ(count(svg, "class=\"monotone\""), 1u);
    EXPECT_EQ(count(svg, "class=\"grid\""), 1u);
    EXPECT_EQ(svg, render_svg(cp2_three_node(), opts));
}

TEST(Render, NoCutsNoDashes) {
    std::string svg = render_svg(cp2());
    EXPECT_EQ(count(svg, "stroke-dasharray=\"6 4\""), 0u);
    EXPECT_EQ(count(svg, "class=\"grid\""), 0u);
}

TEST(Render, RejectsInvalidDiagram) {
    ATBD bad = polygon({pt(0, 0), pt(4, 0), pt(0, 1)});
    EXPECT_THROW(render_svg(bad), DiagramError);
    RenderOptions opts;
    opts.scale = 0;
    EXPECT_THROW(render_svg(cp2(), opts), DiagramError);
}
