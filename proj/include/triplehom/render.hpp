#pragma once

#include <string>

#include "triplehom/gauss.hpp"
#include "triplehom/homotopy.hpp"

namespace triplehom {

enum class RenderFormat { text, svg };

// Text: one line per slot (position, O/U, id, sign) and the interleaved
// chord pairs. SVG: the circle with directed chords, triple sites drawn in
// colour and the zones of the first braid-like site shaded.
std::string render_diagram(const GaussDiagram& d, RenderFormat format);

// One frame per diagram of the trace.
std::string render_trace(const Trace& t, RenderFormat format);

}  // namespace triplehom
