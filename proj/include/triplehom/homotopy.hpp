#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triplehom/gauss.hpp"
#include "triplehom/moves.hpp"

namespace triplehom {

// A combinatorial triple homotopy: a start diagram and the events applied to
// it in order. Events address crossings by id and insertion points by gap in
// the diagram they act on.
struct Trace {
  GaussDiagram initial;
  std::vector<MoveEvent> events;
};

// Trace text format:
//
//   init <GC code of a knot>
//   base <gap>                      (optional, right after init)
//   R1 + <gap> [variant]   |  R1 - <id>
//   R2 + <gap> <gap> [variant]  |  R2 - <id> <id>
//   R3 <id> <id> <id> <variant>
//   T3 braid <id> <id> <id> [variant]  |  T3 star <id> <id> <id> [variant]
//
// '#' starts a comment. Variants are documented on MoveEvent.
std::string format_event(const MoveEvent& e);
MoveEvent parse_event(std::string_view line);
Trace parse_trace(std::string_view text);
std::string serialize_trace(const Trace& t);

// Replays the trace; element 0 is the initial diagram, element k + 1 the
// diagram after event k. Throws ValidationError naming the first bad event.
std::vector<GaussDiagram> validate(const Trace& t);
GaussDiagram end_diagram(const Trace& t);

// Sum of triple point indices.
int trace_index(const Trace& t);
bool is_regular(const Trace& t);
// End equals start up to base point, rotation and relabelling.
bool is_closed(const Trace& t);
// Throws DomainError when a closed regular trace has nonzero index.
void assert_regular_loop_index(const Trace& t);

struct EventCheck {
  int step = 0;
  MoveKind kind = MoveKind::r2;
  int index = 0;
  int w = 0;  // W(p) before the move; 0 for Reidemeister moves
};

struct Theorem2Report {
  std::vector<EventCheck> events;
  int index = 0;
  int w_total = 0;
  int v2_start = 0;
  int v2_end = 0;
  bool pass = false;
};

// Sum of ind(p) W(p). Throws DomainError if the trace has a star-like event.
int w_total(const Trace& t);
Theorem2Report check_theorem2(const Trace& t);

Trace reverse(const Trace& t);
// Requires end(t1) and initial(t2) to agree up to base point.
Trace compose(const Trace& t1, const Trace& t2);
// Every step diagram becomes step # knot, spliced at the base point.
Trace connect_sum_trace(const Trace& t, const GaussDiagram& knot);
// Replaces each star-like triple move by R2 insertion, braid-like triple
// move, R2 deletion with the same endpoints.
Trace star_to_braid(const Trace& t);
// Swaps events k and k + 1 when they touch disjoint crossings.
Trace commute_disjoint(const Trace& t, int k);

}  // namespace triplehom
