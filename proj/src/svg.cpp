#include "segchi/svg.hpp"

#include <cstdio>
#include <sstream>

namespace segchi {

namespace {

// 12 significant digits, plenty for display; files never re-ingest these.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string render_svg(const Construction& c, const RenderOptions& opt) {
    double w = c.rect.width().to_double();
    double h = c.rect.height().to_double();
    double W = 1000.0;
    double H = W * h / w;
    double x0 = c.rect.x0.to_double();
    double y1 = c.rect.y1.to_double();
    auto X = [&](const Rational& x) { return (x.to_double() - x0) / w * W; };
    auto Y = [&](const Rational& y) { return (y1 - y.to_double()) / h * H; };
    double stroke = W / 500.0 * opt.stroke_scale;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H)
       << "\">\n";
    os << "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << fmt(W) << "\" height=\"" << fmt(H)
       << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"" << fmt(stroke) << "\"/>\n";

    if (opt.show_roots)
        for (const Probe& p : c.probes)
            os << "  <rect class=\"root\" x=\"" << fmt(X(p.root.x0)) << "\" y=\""
               << fmt(Y(p.root.y1)) << "\" width=\"" << fmt(X(p.root.x1) - X(p.root.x0))
               << "\" height=\"" << fmt(Y(p.root.y0) - Y(p.root.y1))
               << "\" fill=\"#7fb3d5\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";

    if (opt.show_probes)
        for (const Probe& p : c.probes)
            os << "  <rect class=\"probe\" x=\"" << fmt(X(p.rect.x0)) << "\" y=\""
               << fmt(Y(p.rect.y1)) << "\" width=\"" << fmt(X(p.rect.x1) - X(p.rect.x0))
               << "\" height=\"" << fmt(Y(p.rect.y0) - Y(p.rect.y1))
               << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << fmt(stroke * 0.6)
               << "\"/>\n";

    for (const Segment& s : c.segments)
        os << "  <line class=\"seg " << (s.role == SegmentRole::Base ? "base" : "diagonal")
           << "\" x1=\"" << fmt(X(s.p.x)) << "\" y1=\"" << fmt(Y(s.p.y)) << "\" x2=\""
           << fmt(X(s.q.x)) << "\" y2=\"" << fmt(Y(s.q.y)) << "\" stroke=\""
           << (s.role == SegmentRole::Base ? "#1a1a1a" : "#1e8449")
           << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";

    os << "</svg>\n";
    return os.str();
}

} // namespace segchi
