#include <doctest.h>

#include "support.hpp"
#include "triplehom/render.hpp"

using namespace triplehom;
using support::knot;

TEST_CASE("text rendering") {
  CHECK(render_diagram(knot(""), RenderFormat::text) == "crossings 0, components 1, base gap 0\n  (empty circle)\n");
  std::string t = render_diagram(knot(support::kTrefoil), RenderFormat::text);
  CHECK(t ==
        "crossings 3, components 1, base gap 0\n"
        "  0 O1+\n  1 U2+\n  2 O3+\n  3 U1+\n  4 O2+\n  5 U3+\n"
        "  interleaved: 1x2 1x3 2x3\n");
  CHECK(render_diagram(knot("O1+ U1+"), RenderFormat::text).find("interleaved: none") != std::string::npos);
}

TEST_CASE("svg rendering") {
  std::string s = render_diagram(knot(support::kTrefoil), RenderFormat::svg);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);
  CHECK(render_diagram(knot(support::kTrefoil), RenderFormat::svg) == s);
}

TEST_CASE("trace rendering has one frame per diagram") {
  Trace t = support::fixture_trace("unknot_to_trefoil.trace");
  std::string text = render_trace(t, RenderFormat::text);
  std::size_t frames = 0;
  for (std::size_t p = text.find("frame "); p != std::string::npos; p = text.find("frame ", p + 1)) ++frames;
  CHECK(frames == t.events.size() + 1);
  CHECK(text.find("frame 3 after R2 + 0 2 2") != std::string::npos);
  std::string svg = render_trace(t, RenderFormat::svg);
  CHECK(svg.rfind("<svg", 0) == 0);
}
