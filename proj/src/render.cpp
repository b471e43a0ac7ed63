#include "triplehom/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "triplehom/moves.hpp"

namespace triplehom {

namespace {

bool interleaved(const Arrow& a, const Arrow& b) {
  int lo = std::min(a.tail, a.head), hi = std::max(a.tail, a.head);
  bool t = lo < b.tail && b.tail < hi, h = lo < b.head && b.head < hi;
  return t != h;
}

void text_frame(std::ostringstream& out, const GaussDiagram& d) {
  out << "crossings " << d.crossing_count() << ", components " << d.component_count() << ", base gap " << d.base()
      << "\n";
  if (d.slot_count() == 0) {
    out << "  (empty circle)\n";
    return;
  }
  for (int s = 0; s < d.slot_count(); ++s) {
    const Endpoint& e = d.slot(s);
    out << "  " << s << ' ' << (e.tail ? 'O' : 'U') << e.arrow << (d.arrow(e.arrow).sign > 0 ? '+' : '-');
    if (d.component_count() > 1) out << "  c" << d.component_of(s);
    out << '\n';
  }
  out << "  interleaved:";
  const auto& arrows = d.arrows();
  bool any = false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = i + 1; j < arrows.size(); ++j)
      if (d.component_of(arrows[i].tail) == d.component_of(arrows[i].head) &&
          d.component_of(arrows[j].tail) == d.component_of(arrows[i].tail) &&
          d.component_of(arrows[j].head) == d.component_of(arrows[i].tail) && interleaved(arrows[i], arrows[j])) {
        out << ' ' << arrows[i].id << 'x' << arrows[j].id;
        any = true;
      }
  if (!any) out << " none";
  out << '\n';
}

constexpr double kFrame = 320.0;
constexpr double kRadius = 120.0;

struct Point {
  double x, y;
};

void svg_frame(std::ostringstream& out, const GaussDiagram& d, double top) {
  const double cx = kFrame / 2, cy = top + kFrame / 2;
  const int m = d.slot_count();
  auto at = [&](double pos, double r) {
    double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * pos / std::max(1, m);
    return Point{cx + r * std::cos(angle), cy + r * std::sin(angle)};
  };
  out << "<g>\n";
  std::vector<TripleSite> sites;
  if (d.is_knot() && d.crossing_count() >= 3) sites = find_triple_sites(d);
  const TripleSite* braid = nullptr;
  for (const TripleSite& s : sites)
    if (s.coherent && s.flavor == Flavor::braid) {
      braid = &s;
      break;
    }
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"2\"/>\n";
  if (braid != nullptr) {
    static const char* colour[3] = {"#f4c7c3", "#c3e0f4", "#cdebc5"};
    auto zones = zone_of_slots(d, *braid);
    for (int s = 0; s < m; ++s) {
      if (zones[static_cast<std::size_t>(s)] < 0) continue;
      Point a = at(s - 0.5, kRadius), b = at(s + 0.5, kRadius);
      out << "<path d=\"M " << a.x << ' ' << a.y << " A " << kRadius << ' ' << kRadius << " 0 0 1 " << b.x << ' ' << b.y
          << "\" fill=\"none\" stroke=\"" << colour[zones[static_cast<std::size_t>(s)]]
          << "\" stroke-width=\"10\"/>\n";
    }
  }
  auto in_site = [&](int id) {
    for (const TripleSite& s : sites)
      for (int c : s.chord)
        if (c == id) return s.coherent ? 2 : 1;
    return 0;
  };
  for (const Arrow& a : d.arrows()) {
    Point t = at(a.tail, kRadius), h = at(a.head, kRadius);
    int mark = in_site(a.id);
    const char* stroke = mark == 2 ? "#c0392b" : mark == 1 ? "#e67e22" : (a.sign > 0 ? "#1f4e8c" : "#6b2f8c");
    out << "<line x1=\"" << t.x << "\" y1=\"" << t.y << "\" x2=\"" << h.x << "\" y2=\"" << h.y << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1.6\" marker-end=\"url(#head)\"/>\n";
  }
  for (int s = 0; s < m; ++s) {
    const Endpoint& e = d.slot(s);
    Point p = at(s, kRadius + 16);
    out << "<text x=\"" << p.x << "\" y=\"" << p.y << "\" font-size=\"11\" text-anchor=\"middle\">"
        << (e.tail ? 'O' : 'U') << e.arrow << (d.arrow(e.arrow).sign > 0 ? '+' : '-') << "</text>\n";
  }
  Point b = at(d.base() - 0.5, kRadius);
  out << "<circle cx=\"" << b.x << "\" cy=\"" << b.y << "\" r=\"4\" fill=\"#000\"/>\n";
  out << "</g>\n";
}

std::string svg_document(const std::vector<GaussDiagram>& frames) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kFrame << "\" height=\"" << kFrame * frames.size()
      << "\">\n<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"7\" "
         "markerHeight=\"7\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  for (std::size_t i = 0; i < frames.size(); ++i) svg_frame(out, frames[i], kFrame * static_cast<double>(i));
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_diagram(const GaussDiagram& d, RenderFormat format) {
  if (format == RenderFormat::svg) return svg_document({d});
  std::ostringstream out;
  text_frame(out, d);
  return out.str();
}

std::string render_trace(const Trace& t, RenderFormat format) {
  auto steps = validate(t);
  if (format == RenderFormat::svg) return svg_document(steps);
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << "frame " << i;
    if (i > 0) out << " after " << format_event(t.events[i - 1]);
    out << '\n';
    text_frame(out, steps[i]);
  }
  return out.str();
}

}  // namespace triplehom
