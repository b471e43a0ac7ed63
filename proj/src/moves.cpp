#include "triplehom/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "triplehom/error.hpp"

namespace triplehom {

// ---------------------------------------------------------------------------
// Local pictures

namespace {

int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return i == 0 ? (j == 1 ? 0 : 1) : 2;
}

bool on_top(unsigned over, int i, int j) {
  bool lower_on_top = (over >> pair_bit(i, j)) & 1u;
  return i < j ? lower_on_top : !lower_on_top;
}

double dot(const Line& l, double x, double y) { return x * l.dx + y * l.dy; }

}  // namespace

LocalPattern derive_local_pattern(const std::array<Line, 3>& lines, unsigned over) {
  auto meet = [&](int i, int j) {
    const Line& a = lines[static_cast<std::size_t>(i)];
    const Line& b = lines[static_cast<std::size_t>(j)];
    // a.p + s a.d = b.p + t b.d
    double det = a.dx * (-b.dy) - a.dy * (-b.dx);
    double rx = b.px - a.px, ry = b.py - a.py;
    double s = (rx * (-b.dy) - ry * (-b.dx)) / det;
    return std::pair<double, double>{a.px + s * a.dx, a.py + s * a.dy};
  };
  LocalPattern p;
  p.over = over;
  std::array<int, 3> last_vertex{};
  for (int k = 0; k < 3; ++k) {
    const Line& l = lines[static_cast<std::size_t>(k)];
    int j1 = (k + 1) % 3, j2 = (k + 2) % 3;
    auto [x1, y1] = meet(k, j1);
    auto [x2, y2] = meet(k, j2);
    bool j1_first = dot(l, x1, y1) < dot(l, x2, y2);
    int first = j1_first ? j1 : j2;
    int second = j1_first ? j2 : j1;
    p.first_partner[static_cast<std::size_t>(k)] = first;
    p.tail[static_cast<std::size_t>(k)] = {on_top(over, k, first), on_top(over, k, second)};
    last_vertex[static_cast<std::size_t>(k)] = pair_bit(k, second);
  }
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    const Line& o = lines[static_cast<std::size_t>(on_top(over, i, j) ? i : j)];
    const Line& u = lines[static_cast<std::size_t>(on_top(over, i, j) ? j : i)];
    p.chord_sign[static_cast<std::size_t>(k)] = o.dx * u.dy - o.dy * u.dx > 0 ? 1 : -1;
  }
  // Star-like: the three sides run head to tail around the triangle.
  std::set<int> ends(last_vertex.begin(), last_vertex.end());
  p.flavor = ends.size() == 3 ? Flavor::star : Flavor::braid;
  for (int k = 0; k < 3; ++k) {
    int below = 0;
    for (int j = 0; j < 3; ++j)
      if (j != k && on_top(over, j, k)) ++below;
    p.height[static_cast<std::size_t>(k)] = below;
  }
  std::set<int> ranks(p.height.begin(), p.height.end());
  p.linear_heights = ranks.size() == 3;
  if (p.flavor == Flavor::braid) {
    // The lower strand's side leaves the source vertex (first on both of its
    // strands) and enters the sink (last on both).
    std::array<int, 3> first_vertex{};
    for (int k = 0; k < 3; ++k)
      first_vertex[static_cast<std::size_t>(k)] = pair_bit(k, p.first_partner[static_cast<std::size_t>(k)]);
    auto on_strand = [](int v, int k) { return v != (k == 0 ? 2 : k == 1 ? 1 : 0); };
    auto all_through = [&](int v, const std::array<int, 3>& end) {
      for (int k = 0; k < 3; ++k)
        if (on_strand(v, k) && end[static_cast<std::size_t>(k)] != v) return false;
      return true;
    };
    for (int k = 0; k < 3; ++k) {
      auto ku = static_cast<std::size_t>(k);
      if (all_through(first_vertex[ku], first_vertex) && all_through(last_vertex[ku], last_vertex)) p.lower = k;
    }
    const Line& lo = lines[static_cast<std::size_t>(p.lower)];
    for (int k = 0; k < 3; ++k) {
      if (k == p.lower) continue;
      const Line& l = lines[static_cast<std::size_t>(k)];
      (lo.dx * l.dy - lo.dy * l.dx > 0 ? p.upper : p.middle) = k;
    }
  }
  return p;
}

std::array<Line, 3> reference_lines(int shape, unsigned orientation) {
  // Strands 0 and 1 run along the axes; strand 2 cuts off a triangle in the
  // first quadrant (shape 0) or in the fourth quadrant (its mirror image).
  std::array<Line, 3> lines{{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, -1, 1}}};
  if (shape == 1) lines[2] = {1, 0, 1, 1};
  for (int k = 0; k < 3; ++k)
    if ((orientation >> k) & 1u) {
      lines[static_cast<std::size_t>(k)].dx = -lines[static_cast<std::size_t>(k)].dx;
      lines[static_cast<std::size_t>(k)].dy = -lines[static_cast<std::size_t>(k)].dy;
    }
  return lines;
}

namespace {

std::vector<LocalPattern> build_patterns() {
  std::vector<LocalPattern> out;
  for (int shape = 0; shape < 2; ++shape)
    for (unsigned orient = 0; orient < 8; ++orient)
      for (unsigned over = 0; over < 8; ++over) {
        LocalPattern p = derive_local_pattern(reference_lines(shape, orient), over);
        p.shape = shape;
        p.orientation = orient;
        out.push_back(p);
      }
  return out;
}

unsigned descriptor(const std::array<int, 3>& first_partner, const std::array<std::array<bool, 2>, 3>& tail,
                    const std::array<int, 3>& sign) {
  unsigned key = 0;
  for (int k = 0; k < 3; ++k) {
    auto ku = static_cast<std::size_t>(k);
    key = key * 2 + (first_partner[ku] == (k + 1) % 3 ? 1u : 0u);
    key = key * 2 + (tail[ku][0] ? 1u : 0u);
    key = key * 2 + (tail[ku][1] ? 1u : 0u);
    key = key * 2 + (sign[ku] > 0 ? 1u : 0u);
  }
  return key;
}

const std::map<unsigned, int>& pattern_index() {
  static const std::map<unsigned, int> index = [] {
    std::map<unsigned, int> m;
    const auto& table = local_patterns();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const LocalPattern& p = table[i];
      m.emplace(descriptor(p.first_partner, p.tail, p.chord_sign), static_cast<int>(i));
    }
    return m;
  }();
  return index;
}

}  // namespace

const std::vector<LocalPattern>& local_patterns() {
  static const std::vector<LocalPattern> table = build_patterns();
  return table;
}

bool is_triple(MoveKind k) noexcept { return k == MoveKind::triple_braid || k == MoveKind::triple_star; }

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::r1: return "R1";
    case MoveKind::r2: return "R2";
    case MoveKind::r3: return "R3";
    case MoveKind::triple_braid: return "T3 braid";
    case MoveKind::triple_star: return "T3 star";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Sites

namespace {

void require_knot(const GaussDiagram& d) {
  if (!d.is_knot()) throw DomainError("moves act on single-component diagrams");
}

int other_end(const GaussDiagram& d, int slot) {
  const Endpoint& e = d.slot(slot);
  const Arrow& a = d.arrow(e.arrow);
  return e.tail ? a.head : a.tail;
}

// Zone k lies between arc k and arc k+1: A between the upper and middle
// strands, B between middle and lower, C between lower and upper.
void label_zones(const LocalPattern& p, TripleSite& s) {
  s.upper = p.upper;
  s.middle = p.middle;
  s.lower = p.lower;
  if (p.flavor != Flavor::braid) return;
  auto zone_between = [](int a, int b) { return (a + 1) % 3 == b ? a : b; };
  s.zone_label[static_cast<std::size_t>(zone_between(p.upper, p.middle))] = Zone::A;
  s.zone_label[static_cast<std::size_t>(zone_between(p.middle, p.lower))] = Zone::B;
  s.zone_label[static_cast<std::size_t>(zone_between(p.lower, p.upper))] = Zone::C;
}

std::optional<TripleSite> classify(const GaussDiagram& d, std::array<int, 3> arc) {
  std::sort(arc.begin(), arc.end());
  auto arc_of = [&](int slot) {
    for (int k = 0; k < 3; ++k) {
      int f = arc[static_cast<std::size_t>(k)];
      if (slot == f || slot == d.next_slot(f)) return k;
    }
    return -1;
  };
  std::array<int, 3> first_partner{};
  std::array<std::array<bool, 2>, 3> tail{};
  std::array<int, 3> chord{};
  std::array<int, 3> sign{};
  for (int k = 0; k < 3; ++k) {
    int f = arc[static_cast<std::size_t>(k)];
    int s = d.next_slot(f);
    int pf = arc_of(other_end(d, f));
    int ps = arc_of(other_end(d, s));
    if (pf < 0 || ps < 0 || pf == k || ps == k || pf == ps) return std::nullopt;
    first_partner[static_cast<std::size_t>(k)] = pf;
    tail[static_cast<std::size_t>(k)] = {d.slot(f).tail, d.slot(s).tail};
    // chord joining k and pf is indexed by the remaining arc
    chord[static_cast<std::size_t>(3 - k - pf)] = d.slot(f).arrow;
    chord[static_cast<std::size_t>(3 - k - ps)] = d.slot(s).arrow;
  }
  for (int k = 0; k < 3; ++k) sign[static_cast<std::size_t>(k)] = d.arrow(chord[static_cast<std::size_t>(k)]).sign;
  const auto& index = pattern_index();
  auto it = index.find(descriptor(first_partner, tail, sign));
  if (it == index.end()) return std::nullopt;
  const LocalPattern& p = local_patterns()[static_cast<std::size_t>(it->second)];
  TripleSite site;
  site.arc = arc;
  site.chord = chord;
  site.pattern = it->second;
  site.flavor = p.flavor;
  site.coherent = sign[0] == sign[1] && sign[1] == sign[2];
  site.linear_heights = p.linear_heights;
  label_zones(p, site);
  return site;
}

}  // namespace

std::vector<TripleSite> find_triple_sites(const GaussDiagram& d) {
  require_knot(d);
  const int m = d.slot_count();
  std::vector<TripleSite> out;
  if (d.crossing_count() < 3) return out;
  std::vector<char> corner(static_cast<std::size_t>(m), 0);
  for (int s = 0; s < m; ++s) corner[static_cast<std::size_t>(s)] = d.slot(s).arrow != d.slot(d.next_slot(s)).arrow;
  // Corners (by first slot) containing a given slot.
  auto corners_at = [&](int slot, int* out2) {
    int n = 0;
    if (corner[static_cast<std::size_t>(slot)]) out2[n++] = slot;
    int p = d.prev_slot(slot);
    if (corner[static_cast<std::size_t>(p)]) out2[n++] = p;
    return n;
  };
  std::set<std::array<int, 3>> seen;
  for (int c1 = 0; c1 < m; ++c1) {
    if (!corner[static_cast<std::size_t>(c1)]) continue;
    int t1 = d.next_slot(c1);
    int pu = other_end(d, c1);
    int pv = other_end(d, t1);
    int u = d.slot(c1).arrow, v = d.slot(t1).arrow;
    int c2s[2], c3s[2];
    int n2 = corners_at(pu, c2s), n3 = corners_at(pv, c3s);
    for (int i2 = 0; i2 < n2; ++i2) {
      int c2 = c2s[i2];
      int q2 = c2 == pu ? d.next_slot(c2) : c2;
      int w = d.slot(q2).arrow;
      if (w == u || w == v) continue;
      for (int i3 = 0; i3 < n3; ++i3) {
        int c3 = c3s[i3];
        int q3 = c3 == pv ? d.next_slot(c3) : c3;
        if (d.slot(q3).arrow != w || q3 == q2) continue;
        std::array<int, 3> key{c1, c2, c3};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        if (auto site = classify(d, key)) out.push_back(*site);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TripleSite& a, const TripleSite& b) { return a.arc < b.arc; });
  return out;
}

namespace {

bool same_arrows(const TripleSite& s, std::array<int, 3> ids) {
  std::array<int, 3> c = s.chord;
  std::sort(c.begin(), c.end());
  std::sort(ids.begin(), ids.end());
  return c == ids;
}

}  // namespace

TripleSite resolve_site(const GaussDiagram& d, const MoveEvent& e) {
  require_knot(d);
  for (int id : e.ids)
    if (d.find_arrow(id) == nullptr) throw InvalidMove("unknown crossing id " + std::to_string(id));
  std::vector<TripleSite> on_arrows;
  for (const TripleSite& s : find_triple_sites(d))
    if (same_arrows(s, e.ids)) on_arrows.push_back(s);
  if (on_arrows.empty()) throw InvalidMove("crossings do not form a triangle");
  std::vector<TripleSite> matching;
  for (const TripleSite& s : on_arrows) {
    if (e.kind == MoveKind::r3 && s.linear_heights) matching.push_back(s);
    if (is_triple(e.kind) && s.coherent &&
        s.flavor == (e.kind == MoveKind::triple_braid ? Flavor::braid : Flavor::star))
      matching.push_back(s);
  }
  if (matching.empty()) {
    if (e.kind == MoveKind::r3) throw InvalidMove("R3 pattern mismatch: heights around the triangle are cyclic");
    bool any_coherent = std::any_of(on_arrows.begin(), on_arrows.end(), [](const TripleSite& s) { return s.coherent; });
    if (!any_coherent) throw InvalidMove("non-coherent triple site");
    throw InvalidMove(std::string("triangle is not ") + (e.kind == MoveKind::triple_braid ? "braid-like" : "star-like"));
  }
  if (e.variant < 0 || e.variant >= static_cast<int>(matching.size()))
    throw InvalidMove("site variant " + std::to_string(e.variant) + " out of range");
  return matching[static_cast<std::size_t>(e.variant)];
}

// ---------------------------------------------------------------------------
// Applying moves

namespace {

struct Insertion {
  int gap;
  std::vector<Endpoint> items;
};

// Gap g < m inserts before slot g; at the base gap that is just after the
// base point. Gap m inserts just before the base point instead. Of the items
// landing at the base gap, the first `before_base` go in front of the base
// point.
GaussDiagram insert_slots(const GaussDiagram& d, std::vector<Insertion> ins, std::vector<ArrowSign> signs,
                          int before_base = 0) {
  const int m = d.slot_count();
  const int b = d.base();
  for (const Insertion& x : ins)
    if (x.gap < 0 || x.gap > m) throw InvalidMove("gap " + std::to_string(x.gap) + " out of range");
  // Items at the base gap in sequence order: gap m ones first.
  std::vector<Endpoint> at_base, seq;
  for (const Insertion& x : ins)
    if (x.gap == m && m > 0) at_base.insert(at_base.end(), x.items.begin(), x.items.end());
  const int forced = static_cast<int>(at_base.size());
  for (const Insertion& x : ins)
    if (x.gap == b || m == 0) at_base.insert(at_base.end(), x.items.begin(), x.items.end());
  if (before_base != 0 && (forced != 0 || before_base >= static_cast<int>(at_base.size())))
    throw InvalidMove("base split does not fall inside the inserted strands");
  const int shift = forced + before_base;
  int base = b + shift;
  for (const Insertion& x : ins)
    if (x.gap < b) base += static_cast<int>(x.items.size());
  for (int pos = 0; pos <= m; ++pos) {
    if (pos == b) seq.insert(seq.end(), at_base.begin(), at_base.end());
    for (const Insertion& x : ins)
      if (x.gap == pos && pos != b && pos < m) seq.insert(seq.end(), x.items.begin(), x.items.end());
    if (pos < m) seq.push_back(d.slot(pos));
  }
  auto all = d.signs();
  all.insert(all.end(), signs.begin(), signs.end());
  return GaussDiagram::from_cycles({seq}, all, base);
}

GaussDiagram delete_arrows(const GaussDiagram& d, const std::vector<int>& ids) {
  auto gone = [&](int id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
  std::vector<Endpoint> seq;
  int base = d.base();
  for (int pos = 0; pos < d.slot_count(); ++pos) {
    if (gone(d.slot(pos).arrow)) {
      if (pos < d.base()) --base;
    } else {
      seq.push_back(d.slot(pos));
    }
  }
  if (base >= static_cast<int>(seq.size())) base = 0;
  std::vector<ArrowSign> signs;
  for (const Arrow& a : d.arrows())
    if (!gone(a.id)) signs.push_back({a.id, a.sign});
  return GaussDiagram::from_cycles({seq}, signs, base);
}

GaussDiagram flip_triangle(const GaussDiagram& d, const TripleSite& s, bool crossing_change) {
  auto cycles = d.cycles();  // rotated by base
  std::vector<Endpoint> seq(d.slots().begin(), d.slots().end());
  for (int f : s.arc) {
    int g = d.next_slot(f);
    std::swap(seq[static_cast<std::size_t>(f)], seq[static_cast<std::size_t>(g)]);
  }
  auto signs = d.signs();
  if (crossing_change) {
    for (auto& e : seq)
      if (std::find(s.chord.begin(), s.chord.end(), e.arrow) != s.chord.end()) e.tail = !e.tail;
    for (auto& x : signs)
      if (std::find(s.chord.begin(), s.chord.end(), x.id) != s.chord.end()) x.sign = -x.sign;
  }
  (void)cycles;
  return GaussDiagram::from_cycles({seq}, signs, d.base());
}

bool adjacent(const GaussDiagram& d, int a, int b) { return d.next_slot(a) == b || d.next_slot(b) == a; }

GaussDiagram apply_unchecked(const GaussDiagram& d, const MoveEvent& e) {
  const int next_id = d.max_id() + 1;
  switch (e.kind) {
    case MoveKind::r1: {
      if (e.insert) {
        if (e.variant < 0 || e.variant > 7) throw InvalidMove("R1 variant out of range");
        int sign = (e.variant & 1) ? -1 : 1;
        bool head_first = (e.variant & 2) != 0;
        Insertion x{e.gap[0], {{next_id, !head_first}, {next_id, head_first}}};
        return insert_slots(d, {x}, {{next_id, sign}}, (e.variant >> 2) & 1);
      }
      const Arrow& a = d.arrow(e.ids[0]);
      if (!adjacent(d, a.tail, a.head)) throw InvalidMove("R1 pattern mismatch: endpoints not adjacent");
      return delete_arrows(d, {a.id});
    }
    case MoveKind::r2: {
      if (e.insert) {
        if (e.variant < 0 || e.variant > 31) throw InvalidMove("R2 variant out of range");
        const int split = (e.variant >> 3) & 3;
        if (e.gap[0] > e.gap[1]) throw InvalidMove("R2 gaps must be given in increasing order");
        bool second_on_top = (e.variant & 1) != 0;
        bool antiparallel = (e.variant & 2) != 0;
        int sign = (e.variant & 4) ? -1 : 1;
        int a = next_id, b = next_id + 1;
        Insertion first{e.gap[0], {{a, !second_on_top}, {b, !second_on_top}}};
        Insertion second{e.gap[1], {{a, second_on_top}, {b, second_on_top}}};
        if (antiparallel) std::swap(second.items[0], second.items[1]);
        if (e.gap[0] == e.gap[1]) {
          first.items.insert(first.items.end(), second.items.begin(), second.items.end());
          return insert_slots(d, {first}, {{a, sign}, {b, -sign}}, split);
        }
        return insert_slots(d, {first, second}, {{a, sign}, {b, -sign}}, split);
      }
      const Arrow& a = d.arrow(e.ids[0]);
      const Arrow& b = d.arrow(e.ids[1]);
      if (a.id == b.id) throw InvalidMove("R2 needs two distinct crossings");
      if (a.sign == b.sign) throw InvalidMove("R2 pattern mismatch: equal signs");
      if (!adjacent(d, a.tail, b.tail) || !adjacent(d, a.head, b.head))
        throw InvalidMove("R2 pattern mismatch: crossings do not bound a bigon");
      return delete_arrows(d, {a.id, b.id});
    }
    case MoveKind::r3: return flip_triangle(d, resolve_site(d, e), false);
    case MoveKind::triple_braid:
    case MoveKind::triple_star: return flip_triangle(d, resolve_site(d, e), true);
  }
  throw InvalidMove("unknown move kind");
}

}  // namespace

GaussDiagram apply_move(const GaussDiagram& d, const MoveEvent& e) {
  require_knot(d);
  GaussDiagram out = apply_unchecked(d, e);
  if (supporting_genus(out) != supporting_genus(d))
    throw InvalidMove(to_string(e.kind) + " would take the diagram off the plane");
  return out;
}

int writhe_delta(const MoveEvent& e, const GaussDiagram& d) {
  switch (e.kind) {
    case MoveKind::r1: return e.insert ? ((e.variant & 1) ? -1 : 1) : -d.arrow(e.ids[0]).sign;
    case MoveKind::r2:
    case MoveKind::r3: return 0;
    case MoveKind::triple_braid:
    case MoveKind::triple_star: return -6 * d.arrow(resolve_site(d, e).chord[0]).sign;
  }
  return 0;
}

int move_index(const MoveEvent& e, const GaussDiagram& d) {
  if (!is_triple(e.kind)) return 0;
  return writhe_delta(e, d) > 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Zones

namespace {

std::vector<int> raw_zones(const GaussDiagram& d, const TripleSite& s) {
  std::vector<int> zone(static_cast<std::size_t>(d.slot_count()), -1);
  for (int k = 0; k < 3; ++k) {
    int from = d.next_slot(s.arc[static_cast<std::size_t>(k)]);
    int to = s.arc[static_cast<std::size_t>((k + 1) % 3)];
    for (int p = d.next_slot(from); p != to; p = d.next_slot(p)) zone[static_cast<std::size_t>(p)] = k;
  }
  return zone;
}

}  // namespace

std::vector<int> zone_of_slots(const GaussDiagram& d, const TripleSite& s) {
  auto zone = raw_zones(d, s);
  for (int& z : zone)
    if (z >= 0) z = static_cast<int>(s.zone_label[static_cast<std::size_t>(z)]);
  return zone;
}

int zone_writhe(const GaussDiagram& d, const TripleSite& s, Zone from, Zone to) {
  if (from == to) throw DomainError("zone_writhe needs two distinct zones");
  auto zone = zone_of_slots(d, s);
  int sum = 0;
  for (const Arrow& a : d.arrows()) {
    if (zone[static_cast<std::size_t>(a.tail)] == static_cast<int>(from) &&
        zone[static_cast<std::size_t>(a.head)] == static_cast<int>(to))
      sum += a.sign;
  }
  return sum;
}

int triple_writhe(const GaussDiagram& d, const TripleSite& s) {
  if (!s.coherent || s.flavor != Flavor::braid) throw DomainError("W(p) needs a coherent braid-like site");
  auto zone = raw_zones(d, s);
  int sum = 0;
  for (const Arrow& a : d.arrows()) {
    int zt = zone[static_cast<std::size_t>(a.tail)], zh = zone[static_cast<std::size_t>(a.head)];
    if (zt >= 0 && zh >= 0 && zt != zh) sum += a.sign;
  }
  return sum;
}

std::array<int, 2> smoothing_pair(const GaussDiagram& d, const TripleSite& s) {
  if (!s.coherent || s.flavor != Flavor::braid) throw DomainError("smoothing needs a coherent braid-like site");
  // The chord avoiding the middle arc cuts zone C off; it goes with the chord
  // cutting off zone A unless the two interleave, else with the one for B.
  int c_chord = s.chord[static_cast<std::size_t>(s.middle)];
  int a_chord = s.chord[static_cast<std::size_t>(s.lower)];
  int b_chord = s.chord[static_cast<std::size_t>(s.upper)];
  const Arrow& x = d.arrow(c_chord);
  const Arrow& y = d.arrow(a_chord);
  int lo = std::min(x.tail, x.head), hi = std::max(x.tail, x.head);
  bool inside_t = lo < y.tail && y.tail < hi, inside_h = lo < y.head && y.head < hi;
  return {c_chord, inside_t == inside_h ? a_chord : b_chord};
}

GaussDiagram smoothed_link_of_site(const GaussDiagram& d, const TripleSite& s) {
  auto [first, second] = smoothing_pair(d, s);
  return smooth(smooth(d, first), second);
}

std::array<int, 2> smoothed_zone_components(const GaussDiagram& d, const TripleSite& s) {
  auto pair = smoothing_pair(d, s);
  GaussDiagram link = smoothed_link_of_site(d, s);
  // Which side of each smoothed chord a point of the circle lies on decides
  // its component.
  auto side = [&](double pos) {
    int key = 0;
    for (int id : pair) {
      const Arrow& a = d.arrow(id);
      double lo = std::min(a.tail, a.head), hi = std::max(a.tail, a.head);
      key = key * 2 + (lo < pos && pos < hi ? 1 : 0);
    }
    return key;
  };
  std::map<int, int> component_of_side;
  for (const Arrow& a : d.arrows()) {
    if (a.id == pair[0] || a.id == pair[1]) continue;
    const Arrow& b = link.arrow(a.id);
    component_of_side[side(a.tail)] = link.component_of(b.tail);
    component_of_side[side(a.head)] = link.component_of(b.head);
  }
  std::vector<int> unclaimed;
  for (int k = 0; k < link.component_count(); ++k)
    if (link.component_size(k) == 0) unclaimed.push_back(k);
  auto zone_component = [&](Zone z) {
    int k = 0;
    while (s.zone_label[static_cast<std::size_t>(k)] != z) ++k;
    double pos = d.next_slot(s.arc[static_cast<std::size_t>(k)]) + 0.5;
    auto it = component_of_side.find(side(pos));
    if (it != component_of_side.end()) return it->second;
    // A component without crossings.
    int c = unclaimed.back();
    unclaimed.pop_back();
    return c;
  };
  return {zone_component(Zone::A), zone_component(Zone::C)};
}

// ---------------------------------------------------------------------------
// Successor enumeration

namespace {

std::array<int, 3> sorted_ids(std::array<int, 3> c) {
  std::sort(c.begin(), c.end());
  return c;
}

bool site_matches(const TripleSite& t, MoveKind kind) {
  if (kind == MoveKind::r3) return t.linear_heights;
  return t.coherent && t.flavor == (kind == MoveKind::triple_braid ? Flavor::braid : Flavor::star);
}

// Events on the given sites, each with the rank resolve_site expects.
std::vector<std::pair<MoveEvent, const TripleSite*>> site_events(const std::vector<TripleSite>& sites, MoveKind kind) {
  std::vector<std::pair<MoveEvent, const TripleSite*>> out;
  for (const TripleSite& s : sites) {
    if (!site_matches(s, kind)) continue;
    int rank = 0;
    for (const TripleSite& t : sites) {
      if (&t == &s) break;
      if (same_arrows(t, s.chord) && site_matches(t, kind)) ++rank;
    }
    out.push_back({MoveEvent{kind, false, {0, 0}, sorted_ids(s.chord), rank}, &s});
  }
  return out;
}

std::vector<MoveEvent> r2_deletions(const GaussDiagram& d) {
  std::vector<MoveEvent> out;
  for (const Arrow& a : d.arrows())
    for (const Arrow& b : d.arrows()) {
      if (b.id <= a.id || a.sign == b.sign) continue;
      if (adjacent(d, a.tail, b.tail) && adjacent(d, a.head, b.head))
        out.push_back(MoveEvent{MoveKind::r2, false, {0, 0}, {a.id, b.id, 0}, 0});
    }
  return out;
}

}  // namespace

std::vector<MoveEvent> candidate_events(const GaussDiagram& d, MoveKind kind, bool insert, int max_crossings) {
  require_knot(d);
  std::vector<MoveEvent> out;
  const int n = d.crossing_count();
  const int gaps = d.slot_count() + 1;
  switch (kind) {
    case MoveKind::r1:
      if (!insert) {
        for (const Arrow& a : d.arrows())
          if (adjacent(d, a.tail, a.head)) out.push_back(MoveEvent{MoveKind::r1, false, {0, 0}, {a.id, 0, 0}, 0});
      } else if (n + 1 <= max_crossings) {
        for (int g = 0; g < gaps; ++g)
          for (int v = 0; v < (g == d.base() ? 8 : 4); ++v)
            out.push_back(MoveEvent{MoveKind::r1, true, {g, 0}, {0, 0, 0}, v});
      }
      break;
    case MoveKind::r2:
      if (!insert) return r2_deletions(d);
      if (n + 2 <= max_crossings)
        for (int g1 = 0; g1 < gaps; ++g1)
          for (int g2 = g1; g2 < gaps; ++g2)
            for (int v = 0; v < (g1 == d.base() || g2 == d.base() ? 32 : 8); ++v)
              out.push_back(MoveEvent{MoveKind::r2, true, {g1, g2}, {0, 0, 0}, v});
      break;
    default: {
      auto sites = find_triple_sites(d);
      for (auto& [e, site] : site_events(sites, kind)) out.push_back(e);
    }
  }
  return out;
}

bool meets_base(const GaussDiagram& d, const MoveEvent& e) {
  const int m = d.slot_count();
  if (m <= 2) return e.insert && e.variant >= (e.kind == MoveKind::r1 ? 4 : 8);
  if (e.insert) return e.variant >= (e.kind == MoveKind::r1 ? 4 : 8);
  // The edge of the circle carrying the base point.
  const int last = (d.base() + m - 1) % m;
  auto crosses = [&](int x, int y) { return (x == last && y == d.base()) || (y == last && x == d.base()); };
  switch (e.kind) {
    case MoveKind::r1: {
      const Arrow& a = d.arrow(e.ids[0]);
      return crosses(a.tail, a.head);
    }
    case MoveKind::r2: {
      const Arrow& a = d.arrow(e.ids[0]);
      const Arrow& b = d.arrow(e.ids[1]);
      return crosses(a.tail, b.tail) || crosses(a.head, b.head);
    }
    default: {
      const TripleSite s = resolve_site(d, e);
      for (int f : s.arc)
        if (f == last) return true;
      return false;
    }
  }
}

std::vector<std::pair<MoveEvent, GaussDiagram>> successors(const GaussDiagram& d, const SuccessorOptions& opt) {
  require_knot(d);
  std::vector<std::pair<MoveEvent, GaussDiagram>> out;
  const int genus = supporting_genus(d);
  auto try_push = [&](const MoveEvent& e) {
    if (opt.keep_base_clear && meets_base(d, e)) return;
    try {
      GaussDiagram r = apply_unchecked(d, e);
      if (supporting_genus(r) == genus) out.emplace_back(e, std::move(r));
    } catch (const InvalidMove&) {
    }
  };

  for (const MoveEvent& e : r2_deletions(d)) try_push(e);

  // Flipping a face keeps the rotation system planar.
  auto sites = find_triple_sites(d);
  auto clear = [&](const TripleSite& site) {
    if (!opt.keep_base_clear || d.slot_count() == 0) return true;
    const int last = (d.base() + d.slot_count() - 1) % d.slot_count();
    return std::find(site.arc.begin(), site.arc.end(), last) == site.arc.end();
  };
  for (auto& [e, site] : site_events(sites, MoveKind::r3))
    if (clear(*site)) out.emplace_back(e, flip_triangle(d, *site, false));
  if (opt.allow_braid)
    for (auto& [e, site] : site_events(sites, MoveKind::triple_braid))
      if (clear(*site)) out.emplace_back(e, flip_triangle(d, *site, true));
  if (opt.allow_star)
    for (auto& [e, site] : site_events(sites, MoveKind::triple_star))
      if (clear(*site)) out.emplace_back(e, flip_triangle(d, *site, true));

  if (opt.allow_r2_insert)
    for (const MoveEvent& e : candidate_events(d, MoveKind::r2, true, opt.max_crossings)) try_push(e);
  if (opt.allow_r1) {
    for (const MoveEvent& e : candidate_events(d, MoveKind::r1, false, opt.max_crossings)) try_push(e);
    for (const MoveEvent& e : candidate_events(d, MoveKind::r1, true, opt.max_crossings)) try_push(e);
  }
  return out;
}

}  // namespace triplehom
