#include "hiero/svg.hpp"

#include <cmath>
#include <cstdio>

namespace hiero {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Hieroglyph& h, const std::optional<std::vector<uint8_t>>& twists) {
    if (twists && static_cast<int>(twists->size()) != h.letters())
        throw Error(ErrorKind::BadArgument, "twist vector length does not match letter count");

    const int len = h.length();
    const double size = 520.0;
    const double cx = size / 2, cy = size / 2;
    const double r = 200.0;
    const double pi = 3.14159265358979323846;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    auto point = [&](int k, double radius, double& x, double& y) {
        double angle = 2 * pi * k / (len == 0 ? 1 : len) - pi / 2;
        x = cx + radius * std::cos(angle);
        y = cy + radius * std::sin(angle);
    };

    // One chord per letter between its two attachment points; twisted bands
    // are dashed.
    for (int letter = 0; letter < h.letters(); ++letter) {
        auto [p, q] = h.occurrences(letter);
        double x1, y1, x2, y2;
        point(p, r, x1, y1);
        point(q, r, x2, y2);
        bool twisted = twists && (*twists)[static_cast<size_t>(letter)];
        out += "  <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\" stroke=\"" + (twisted ? "firebrick" : "steelblue") +
               "\" stroke-width=\"2\"" + (twisted ? " stroke-dasharray=\"7 4\"" : "") + "/>\n";
    }

    // Attachment labels outside the circle, one per position.
    for (int k = 0; k < len; ++k) {
        double x, y;
        point(k, r + 18, x, y);
        int letter = h.code()[static_cast<size_t>(k)];
        bool twisted = twists && (*twists)[static_cast<size_t>(letter)];
        out += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
               "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">" +
               h.name(letter) + (twisted ? "*" : "") + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace hiero
