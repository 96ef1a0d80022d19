#include "atfkit/render.hpp"

#include <sstream>

namespace atf {

std::string decimal6(const Rat& r) {
    Int num = boost::multiprecision::numerator(r) * 1000000;
    Int den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int q = (2 * num + den) / (2 * den);
    std::string digits = q.str();
    if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
    if (neg && q != 0) out.insert(0, "-");
    return out;
}

namespace {

struct Frame {
    Rat minx, maxy;
    int scale;
    std::string x(const Rat& v) const { return decimal6((v - minx) * scale); }
    std::string y(const Rat& v) const { return decimal6((maxy - v) * scale); }
};

Rat floor_rat(const Rat& r) {
    Int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return Rat(q);
}

Rat ceil_rat(const Rat& r) { return -floor_rat(-r); }

}  // namespace

std::string render_svg(const ATBD& d, const RenderOptions& opts) {
    if (opts.scale < 1) throw DiagramError("render scale must be at least 1");
    require_valid(d, "render");
    Rat minx = d.vertices[0].x, maxx = minx, miny = d.vertices[0].y, maxy = miny;
    for (const auto& v : d.vertices) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    // One lattice unit of margin around the integer hull of the polygon.
    minx = floor_rat(minx) - 1;
    miny = floor_rat(miny) - 1;
    maxx = ceil_rat(maxx) + 1;
    maxy = ceil_rat(maxy) + 1;
    Frame f{minx, maxy, opts.scale};
    std::string width = decimal6((maxx - minx) * opts.scale), height = decimal6((maxy - miny) * opts.scale);

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    if (opts.show_grid) {
        s << "  <g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
        for (Int x = boost::multiprecision::numerator(minx); Rat(x) <= maxx; ++x)
            s << "    <line x1=\"" << f.x(Rat(x)) << "\" y1=\"" << f.y(maxy) << "\" x2=\"" << f.x(Rat(x)) << "\" y2=\""
              << f.y(miny) << "\"/>\n";
        for (Int y = boost::multiprecision::numerator(miny); Rat(y) <= maxy; ++y)
            s << "    <line x1=\"" << f.x(minx) << "\" y1=\"" << f.y(Rat(y)) << "\" x2=\"" << f.x(maxx) << "\" y2=\""
              << f.y(Rat(y)) << "\"/>\n";
        s << "  </g>\n";
    }
    s << "  <g class=\"boundary\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& a = d.vertex(i);
        const auto& b = d.vertex(i + 1);
        s << "    <path class=\"edge\" d=\"M " << f.x(a.x) << " " << f.y(a.y) << " L " << f.x(b.x) << " " << f.y(b.y)
          << "\"/>\n";
    }
    s << "  </g>\n";
    const Rat arm = Rat(1, 8);
    for (std::size_t ci = 0; ci < d.cuts.size(); ++ci) {
        const Cut& c = d.cuts[ci];
        s << "  <g class=\"cut\" stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" fill=\"none\">\n";
        RationalPoint o = d.cut_origin(c);
        RationalPoint end = d.cut_point(c, c.nodes.back());
        if (c.kind == CutKind::Ray)
            s << "    <path class=\"cut-line\" d=\"M " << f.x(o.x) << " " << f.y(o.y) << " L " << f.x(end.x) << " "
              << f.y(end.y) << "\"/>\n";
        for (const auto& t : c.nodes) {
            RationalPoint p = d.cut_point(c, t);
            for (int sgn : {1, -1})
                s << "    <line class=\"node\" stroke-dasharray=\"none\" x1=\"" << f.x(p.x - arm) << "\" y1=\""
                  << f.y(p.y - sgn * arm) << "\" x2=\"" << f.x(p.x + arm) << "\" y2=\"" << f.y(p.y + sgn * arm)
                  << "\"/>\n";
        }
        if (opts.show_labels) {
            s << "    <text x=\"" << f.x(end.x + arm) << "\" y=\"" << f.y(end.y + arm)
              << "\" font-size=\"10\" stroke=\"none\" fill=\"#000000\">(" << c.direction.x << "," << c.direction.y << ")";
            if (c.count() > 1) s << " x" << c.count();
            s << "</text>\n";
        }
        s << "  </g>\n";
    }
    if (d.monotone_point)
        s << "  <circle class=\"monotone\" cx=\"" << f.x(d.monotone_point->x) << "\" cy=\"" << f.y(d.monotone_point->y)
          << "\" r=\"3\" fill=\"#000000\"/>\n";
    if (opts.show_labels && !d.label.empty()) {
        std::string text;
        for (char ch : d.label) {
            if (ch == '<') text += "&lt;";
            else if (ch == '>') text += "&gt;";
            else if (ch == '&') text += "&amp;";
            else text += ch;
        }
        s << "  <text x=\"4\" y=\"14\" font-size=\"12\">" << text << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace atf
