#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "triplehom/gauss.hpp"

namespace triplehom {

enum class MoveKind { r1, r2, r3, triple_braid, triple_star };
enum class Flavor { braid, star };
enum class Zone { A = 0, B = 1, C = 2 };

// Local picture of three pairwise crossing strands around a triangular face,
// derived from straight-line geometry. Strand k is the k-th strand arc met
// along the knot; chord k joins the two arcs other than k.
struct LocalPattern {
  // Gauss-side data.
  std::array<int, 3> first_partner{};          // arc met by the chord at each arc's first slot
  std::array<std::array<bool, 2>, 3> tail{};   // roles of the two slots of each arc
  std::array<int, 3> chord_sign{};

  // Geometry it came from.
  int shape = 0;            // which of the two mirror-image triangles
  unsigned orientation = 0; // bit k: strand k reversed against the reference line
  unsigned over = 0;        // bit for (0,1), (0,2), (1,2): lower-index strand on top
  Flavor flavor = Flavor::braid;
  bool linear_heights = true;
  std::array<int, 3> height{};  // 0 = top .. 2 = bottom, meaningful when linear_heights
  // Braid-like only: the lower strand runs from the triangle's source vertex
  // to its sink; the upper strand crosses it from right to left.
  int upper = -1, middle = -1, lower = -1;
};

// An oriented straight line through (px, py) with direction (dx, dy).
struct Line {
  double px = 0, py = 0, dx = 1, dy = 0;
};

// Local picture of three lines in general position; `over` as in LocalPattern.
LocalPattern derive_local_pattern(const std::array<Line, 3>& lines, unsigned over);

// Strands 0, 1 on the axes, strand 2 closing a triangle in the first quadrant
// (shape 0) or the fourth (shape 1); orientation bit k reverses strand k.
std::array<Line, 3> reference_lines(int shape, unsigned orientation);

// All 128 local pictures (2 shapes x 8 orientations x 8 over/under choices).
const std::vector<LocalPattern>& local_patterns();

// A triangle of the diagram: three strand arcs, each two adjacent slots.
struct TripleSite {
  std::array<int, 3> arc{};    // first slot of each arc, in circle order
  std::array<int, 3> chord{};  // arrow ids; chord[k] joins the arcs other than k
  int pattern = -1;            // index into local_patterns()
  Flavor flavor = Flavor::braid;
  bool coherent = false;       // all three signs equal
  bool linear_heights = true;  // R3 applies
  // Zone k is the arc of the circle strictly between arc k and arc k+1.
  std::array<Zone, 3> zone_label{};
  int upper = -1;   // arc separating zones A and C (braid-like only)
  int middle = -1;  // arc separating zones A and B
  int lower = -1;   // arc separating zones B and C

  friend bool operator==(const TripleSite&, const TripleSite&) = default;
};

// One elementary step of a homotopy.
//
//   R1 +  gap            variant: bit0 negative sign, bit1 head met first,
//                        bit2 base point inside the new curl
//   R1 -  id
//   R2 +  gap1 <= gap2   variant: bit0 second strand on top, bit1 antiparallel,
//                        bit2 first new arrow negative, bits 3-4 how many
//                        of the new slots at the base gap precede the base point
//   R2 -  id id
//   R3    id id id       variant: rank among matching sites
//   T3    id id id       variant: rank among matching sites
//
// A gap g below the slot count sits before slot g, and after the base point
// when g is the base gap. Gap = slot count means just before the base point.
// Inserted arrows take ids max_id()+1, max_id()+2.
struct MoveEvent {
  MoveKind kind = MoveKind::r2;
  bool insert = false;
  std::array<int, 2> gap{0, 0};
  std::array<int, 3> ids{0, 0, 0};
  int variant = 0;

  friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};

bool is_triple(MoveKind k) noexcept;

std::vector<TripleSite> find_triple_sites(const GaussDiagram& d);

// The site an R3/T3 event addresses. Throws InvalidMove.
TripleSite resolve_site(const GaussDiagram& d, const MoveEvent& e);

GaussDiagram apply_move(const GaussDiagram& d, const MoveEvent& e);

// Index of a triple point: +1 if the writhe rises by 6, -1 if it falls; 0
// for Reidemeister moves.
int move_index(const MoveEvent& e, const GaussDiagram& d);
int writhe_delta(const MoveEvent& e, const GaussDiagram& d);

// Slots holding the site's arrows are not in any zone; other slots map to the
// label of their zone.
std::vector<int> zone_of_slots(const GaussDiagram& d, const TripleSite& s);  // -1 for triple slots
int zone_writhe(const GaussDiagram& d, const TripleSite& s, Zone from, Zone to);
// W(p): signed count of arrows outside the triangle joining two different zones.
int triple_writhe(const GaussDiagram& d, const TripleSite& s);

// The two triple crossings whose smoothing splits the knot into three
// components, one around each zone; the first always cuts off zone C.
std::array<int, 2> smoothing_pair(const GaussDiagram& d, const TripleSite& s);
GaussDiagram smoothed_link_of_site(const GaussDiagram& d, const TripleSite& s);

// Components of smoothed_link_of_site holding zones A and C.
std::array<int, 2> smoothed_zone_components(const GaussDiagram& d, const TripleSite& s);

// Every event of one kind that could apply to d: all sites, bigons and
// curls, and every gap/variant for insertions up to max_crossings. Insertions
// are not yet checked for planarity; apply_move does that.
std::vector<MoveEvent> candidate_events(const GaussDiagram& d, MoveKind kind, bool insert, int max_crossings);

struct SuccessorOptions {
  int max_crossings = 10;
  bool allow_r1 = true;
  bool allow_star = true;
  bool allow_braid = true;
  bool allow_r2_insert = true;
  // Skip events whose curl, bigon or triangle runs through the base point,
  // so that a connected sum spliced there can follow along.
  bool keep_base_clear = false;
};

bool meets_base(const GaussDiagram& d, const MoveEvent& e);

// Every applicable event with its result, ordered: R2 deletions, R3, triple
// moves, R2 insertions, R1 deletions and insertions.
std::vector<std::pair<MoveEvent, GaussDiagram>> successors(const GaussDiagram& d, const SuccessorOptions& opt);

std::string to_string(MoveKind k);

}  // namespace triplehom
