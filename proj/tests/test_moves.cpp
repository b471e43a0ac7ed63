#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "triplehom/error.hpp"
#include "triplehom/invariants.hpp"
#include "triplehom/moves.hpp"

using namespace triplehom;
using support::knot;

namespace {

MoveEvent triple(MoveKind k, int a, int b, int c, int variant = 0) {
  return MoveEvent{k, false, {0, 0}, {a, b, c}, variant};
}

bool all_equal_signs(const LocalPattern& p) {
  return p.chord_sign[0] == p.chord_sign[1] && p.chord_sign[1] == p.chord_sign[2];
}

}  // namespace

TEST_CASE("local patterns: 128 distinct pictures, coherent ones split 24 braid / 8 star") {
  const auto& pats = local_patterns();
  REQUIRE(pats.size() == 128);
  std::set<std::tuple<std::array<int, 3>, std::array<std::array<bool, 2>, 3>, std::array<int, 3>>> seen;
  int braid = 0, star = 0;
  for (const auto& p : pats) {
    seen.insert({p.first_partner, p.tail, p.chord_sign});
    if (all_equal_signs(p)) ++(p.flavor == Flavor::braid ? braid : star);
    if (p.flavor == Flavor::braid) {
      std::set<int> roles{p.upper, p.middle, p.lower};
      CHECK(roles == std::set<int>{0, 1, 2});
    }
  }
  CHECK(seen.size() == 128);
  CHECK(braid == 24);
  CHECK(star == 8);
}

TEST_CASE("reversing the middle strand keeps a braid-like picture, reversing the lower one gives star-like") {
  for (const auto& p : local_patterns()) {
    if (p.flavor != Flavor::braid || !all_equal_signs(p)) continue;
    auto flip = [&](int strand) {
      auto lines = reference_lines(p.shape, p.orientation ^ (1u << strand));
      return derive_local_pattern(lines, p.over);
    };
    CHECK(flip(p.middle).flavor == Flavor::braid);
    CHECK(flip(p.lower).flavor == Flavor::star);
  }
}

TEST_CASE("the Gauss-level flip is the picture with one line pushed across the opposite vertex") {
  // Line 2 crosses the intersection of lines 0 and 1, which sits at the origin.
  for (int shape = 0; shape < 2; ++shape)
    for (unsigned orient = 0; orient < 8; ++orient)
      for (unsigned over = 0; over < 8; ++over) {
        auto lines = reference_lines(shape, orient);
        LocalPattern before = derive_local_pattern(lines, over);
        auto moved = lines;
        moved[2].px = -moved[2].px;
        moved[2].py = -moved[2].py;
        for (bool change : {false, true}) {
          LocalPattern after = derive_local_pattern(moved, change ? over ^ 7u : over);
          for (int k = 0; k < 3; ++k) {
            const int other = 3 - k - before.first_partner[k];
            CHECK(after.first_partner[k] == other);
            CHECK(after.tail[k][0] == (before.tail[k][1] != change));
            CHECK(after.tail[k][1] == (before.tail[k][0] != change));
            CHECK(after.chord_sign[k] == (change ? -before.chord_sign[k] : before.chord_sign[k]));
          }
        }
      }
}

TEST_CASE("triple sites of the trefoil") {
  GaussDiagram t = knot(support::kTrefoil);
  auto sites = find_triple_sites(t);
  REQUIRE(sites.size() == 2);
  for (const auto& s : sites) {
    CHECK(s.coherent);
    for (int id : s.chord) CHECK(t.arrow(id).sign == 1);
  }
  CHECK(find_triple_sites(knot("")).empty());
  // a (+,+,-) triangle is found but not coherent
  GaussDiagram mixed = knot("O1+ U2+ U3- U1+ O2+ O3-");
  auto m = find_triple_sites(mixed);
  REQUIRE_FALSE(m.empty());
  for (const auto& s : m) CHECK_FALSE(s.coherent);
  CHECK_THROWS_AS(apply_move(mixed, triple(MoveKind::triple_braid, 1, 2, 3)), InvalidMove);
  CHECK_THROWS_AS(apply_move(mixed, triple(MoveKind::triple_star, 1, 2, 3)), InvalidMove);
}

TEST_CASE("every triple site bounds a triangular face") {
  for (const auto& d : support::corpus(7, 3, 400)) {
    auto faces = diagram_faces(d);
    for (const auto& s : find_triple_sites(d)) {
      std::vector<int> arcs(s.arc.begin(), s.arc.end());
      std::sort(arcs.begin(), arcs.end());
      bool found = std::any_of(faces.begin(), faces.end(), [&](std::vector<int> f) {
        std::sort(f.begin(), f.end());
        return f == arcs;
      });
      CHECK(found);
    }
  }
}

TEST_CASE("triple moves: sign flip, writhe by 6, index, involution") {
  GaussDiagram t = knot(support::kTrefoil);
  for (const auto& s : find_triple_sites(t)) {
    MoveEvent e = triple(s.flavor == Flavor::braid ? MoveKind::triple_braid : MoveKind::triple_star, s.chord[0],
                         s.chord[1], s.chord[2]);
    std::sort(e.ids.begin(), e.ids.end());
    GaussDiagram r = apply_move(t, e);
    CHECK(writhe(r) == writhe(t) - 6);
    CHECK(move_index(e, t) == -1);
    for (int id : s.chord) CHECK(r.arrow(id).sign == -1);
    MoveEvent back = e;
    CHECK(move_index(back, r) == 1);
    CHECK(same_diagram(apply_move(r, back), t));
  }
  CHECK(move_index(MoveEvent{MoveKind::r2, true, {0, 0}, {0, 0, 0}, 0}, t) == 0);
}

TEST_CASE("R moves: inverses and the writhe delta law") {
  GaussDiagram t = knot(support::kTrefoil);
  MoveEvent ins{MoveKind::r2, true, {0, 0}, {0, 0, 0}, 3};
  GaussDiagram r = apply_move(t, ins);
  CHECK(r.crossing_count() == 5);
  CHECK(writhe(r) == writhe(t));
  CHECK(same_diagram(apply_move(r, MoveEvent{MoveKind::r2, false, {0, 0}, {4, 5, 0}, 0}), t));
  MoveEvent curl{MoveKind::r1, true, {2, 0}, {0, 0, 0}, 1};
  GaussDiagram c = apply_move(t, curl);
  CHECK(writhe(c) == 2);
  CHECK(same_diagram(apply_move(c, MoveEvent{MoveKind::r1, false, {0, 0}, {4, 0, 0}, 0}), t));
  CHECK_THROWS_AS(apply_move(t, MoveEvent{MoveKind::r1, false, {0, 0}, {1, 0, 0}, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(t, MoveEvent{MoveKind::r2, false, {0, 0}, {1, 2, 0}, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(t, MoveEvent{MoveKind::r2, true, {4, 1}, {0, 0, 0}, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(t, MoveEvent{MoveKind::r1, true, {99, 0}, {0, 0, 0}, 0}), InvalidMove);

  for (const auto& d : support::corpus(6, 2, 150)) {
    for (const auto& [e, after] : successors(d, SuccessorOptions{})) {
      const int dw = writhe(after) - writhe(d);
      CHECK(dw == writhe_delta(e, d));
      switch (e.kind) {
        case MoveKind::r1: CHECK(std::abs(dw) == 1); break;
        case MoveKind::r2:
        case MoveKind::r3: CHECK(dw == 0); break;
        default: CHECK(std::abs(dw) == 6);
      }
      CHECK(supporting_genus(after) == 0);
      if (!is_triple(e.kind)) CHECK(v2(after) == v2(d));
      if (is_triple(e.kind)) CHECK(arf(after) != arf(d));
    }
  }
}

TEST_CASE("insertions can land on either side of the base point") {
  GaussDiagram t = knot(support::kTrefoil).with_base(2);
  GaussDiagram after = apply_move(t, MoveEvent{MoveKind::r1, true, {2, 0}, {0, 0, 0}, 0});
  GaussDiagram before = apply_move(t, MoveEvent{MoveKind::r1, true, {6, 0}, {0, 0, 0}, 0});
  GaussDiagram inside = apply_move(t, MoveEvent{MoveKind::r1, true, {2, 0}, {0, 0, 0}, 4});
  CHECK(after.slot(after.base()).arrow == 4);
  CHECK(before.slot(before.prev_slot(before.base())).arrow == 4);
  CHECK(inside.slot(inside.base()).arrow == 4);
  CHECK(inside.slot(inside.prev_slot(inside.base())).arrow == 4);
  CHECK(same_diagram(after, before, BaseMode::quotient));
  CHECK_FALSE(same_diagram(after, before));
  CHECK(meets_base(t, MoveEvent{MoveKind::r1, true, {2, 0}, {0, 0, 0}, 4}));
  CHECK_FALSE(meets_base(t, MoveEvent{MoveKind::r1, true, {2, 0}, {0, 0, 0}, 0}));
  CHECK_THROWS_AS(apply_move(t, MoveEvent{MoveKind::r1, true, {3, 0}, {0, 0, 0}, 4}), InvalidMove);
}

TEST_CASE("zones of a five-crossing diagram, by hand") {
  // Slots: 0 U5, 1 O5, 2 O3, 3 O4, 4 O1, 5 U3, 6 U4, 7 O2, 8 U2, 9 U1.
  // The triangle {1,3,5} uses the slot pairs (1,2), (4,5), (9,0); the
  // remaining slots fall into {3}, {6,7,8} and an empty zone. Arrow 4 joins
  // the first two; arrow 2 stays inside one zone.
  GaussDiagram d = knot("U5+ O5+ O3+ O4- O1+ U3+ U4- O2- U2- U1+");
  auto sites = find_triple_sites(d);
  REQUIRE(sites.size() == 1);
  const TripleSite& s = sites[0];
  CHECK(s.arc == std::array<int, 3>{1, 4, 9});
  CHECK(s.flavor == Flavor::braid);
  CHECK(s.coherent);
  auto z = zone_of_slots(d, s);
  CHECK(z == std::vector<int>{-1, -1, -1, 1, -1, -1, 2, 2, 2, -1});
  CHECK(zone_writhe(d, s, Zone::B, Zone::C) == -1);
  CHECK(zone_writhe(d, s, Zone::C, Zone::B) == 0);
  CHECK(zone_writhe(d, s, Zone::A, Zone::C) == 0);
  CHECK(triple_writhe(d, s) == -1);
  CHECK_THROWS_AS(zone_writhe(d, s, Zone::A, Zone::A), DomainError);
}

TEST_CASE("zone bookkeeping on every coherent braid-like site of the corpus") {
  using Z = Zone;
  int sites_seen = 0;
  for (const auto& d : support::corpus(8, 4, 1200)) {
    for (const auto& s : find_triple_sites(d)) {
      if (!s.coherent || s.flavor != Flavor::braid) continue;
      ++sites_seen;
      auto w = [&](Z x, Z y) { return zone_writhe(d, s, x, y); };
      const int W = triple_writhe(d, s);
      CHECK(W == w(Z::A, Z::B) + w(Z::B, Z::A) + w(Z::A, Z::C) + w(Z::C, Z::A) + w(Z::B, Z::C) + w(Z::C, Z::B));
      CHECK(W % 2 != 0);
      CHECK(w(Z::C, Z::B) + w(Z::A, Z::B) - w(Z::B, Z::A) - w(Z::B, Z::C) == 1);
      GaussDiagram link = smoothed_link_of_site(d, s);
      REQUIRE(link.component_count() == 3);
      auto [ca, cc] = smoothed_zone_components(d, s);
      const int lk = linking_number(link, ca, cc);
      CHECK(w(Z::A, Z::C) == lk);
      CHECK(w(Z::C, Z::A) == lk);
    }
  }
  CHECK(sites_seen > 50);
}
