#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "validity/bench.hpp"

namespace validity::bench {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 32.0;
constexpr double kCross = 7.0;

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += ch;
        }
    }
    return out;
}

struct Frame {
    double x0, x1, y0, y1;

    double sx(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin); }
    double sy(double y) const { return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin); }
};

Frame frame_for(const DataSet& data, const Centroids& v, std::size_t dims) {
    Frame f{data.point(0)[0], data.point(0)[0], 0.0, 0.0};
    const double y_first = dims > 1 ? data.point(0)[1] : 0.0;
    f.y0 = f.y1 = y_first;
    auto extend = [&](std::span<const double> p) {
        f.x0 = std::min(f.x0, p[0]);
        f.x1 = std::max(f.x1, p[0]);
        const double y = dims > 1 ? p[1] : 0.0;
        f.y0 = std::min(f.y0, y);
        f.y1 = std::max(f.y1, y);
    };
    for (std::size_t j = 0; j < data.size(); ++j) {
        extend(data.point(j));
    }
    for (std::size_t i = 0; i < v.count(); ++i) {
        extend(v.center(i));
    }
    // Pad flat extents so the scale stays finite.
    if (f.x1 - f.x0 <= 0.0) {
        f.x0 -= 1.0;
        f.x1 += 1.0;
    }
    if (f.y1 - f.y0 <= 0.0) {
        f.y0 -= 1.0;
        f.y1 += 1.0;
    }
    return f;
}

}  // namespace

std::string render_svg(const DataSet& data, const fcm::FcmResult& result, PlotOutcome* outcome) {
    const auto& u = result.u;
    const auto& v = result.v;
    if (u.points() != data.size() || v.dim() != data.dim()) {
        throw Error(ErrorKind::structural, "FCM result does not belong to this data set");
    }
    const std::size_t dims = std::min<std::size_t>(data.dim(), 2);
    if (data.dim() > 2 && outcome) {
        outcome->warnings.push_back("data has " + std::to_string(data.dim()) +
                                    " dimensions; plotting the first two coordinates");
    }
    const Frame f = frame_for(data, v, dims);
    auto y_of = [&](std::span<const double> p) { return dims > 1 ? p[1] : 0.0; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kSize) + "\" height=\"" + fixed(kSize) +
           "\" viewBox=\"0 0 " + fixed(kSize) + " " + fixed(kSize) + "\">\n";
    svg += "<title>" + xml_escape(data.name()) + " c=" + std::to_string(u.clusters()) + "</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kSize) + "\" height=\"" + fixed(kSize) + "\" fill=\"white\"/>\n";

    for (std::size_t j = 0; j < data.size(); ++j) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < u.clusters(); ++i) {
            if (u(i, j) > u(best, j)) {
                best = i;
            }
        }
        auto p = data.point(j);
        svg += "<circle class=\"point\" cx=\"" + fixed(f.sx(p[0])) + "\" cy=\"" + fixed(f.sy(y_of(p))) +
               "\" r=\"4\" fill=\"" + kPalette[best % kPalette.size()] + "\" fill-opacity=\"" + fixed(u(best, j)) +
               "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    for (std::size_t i = 0; i < v.count(); ++i) {
        auto p = v.center(i);
        const double cx = f.sx(p[0]);
        const double cy = f.sy(y_of(p));
        svg += "<path class=\"centroid\" d=\"M" + fixed(cx - kCross) + " " + fixed(cy - kCross) + " L" +
               fixed(cx + kCross) + " " + fixed(cy + kCross) + " M" + fixed(cx - kCross) + " " + fixed(cy + kCross) +
               " L" + fixed(cx + kCross) + " " + fixed(cy - kCross) + "\" stroke=\"" +
               kPalette[i % kPalette.size()] + "\" stroke-width=\"2.5\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

PlotOutcome emit_plot(const DataSet& data, const fcm::FcmResult& result, const std::filesystem::path& path) {
    PlotOutcome outcome;
    const std::string svg = render_svg(data, result, &outcome);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::io, "cannot write plot to " + path.string());
    }
    out << svg;
    out.flush();
    if (!out) {
        throw Error(ErrorKind::io, "failed writing plot to " + path.string());
    }
    return outcome;
}

}  // namespace validity::bench
