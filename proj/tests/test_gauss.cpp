#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "triplehom/error.hpp"
#include "triplehom/gauss.hpp"
#include "triplehom/invariants.hpp"

using namespace triplehom;
using support::knot;

namespace {

// Same diagram read from another slot, with labels permuted.
GaussDiagram scramble(const GaussDiagram& d, std::mt19937_64& rng) {
  auto c = d.cycles();
  if (!c[0].empty()) std::rotate(c[0].begin(), c[0].begin() + static_cast<long>(rng() % c[0].size()), c[0].end());
  std::vector<int> ids;
  for (const Arrow& a : d.arrows()) ids.push_back(a.id);
  auto fresh = ids;
  for (int& x : fresh) x += 100;
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::vector<std::pair<int, int>> map;
  for (std::size_t i = 0; i < ids.size(); ++i) map.emplace_back(ids[i], fresh[i]);
  return relabel(GaussDiagram::from_cycles(c, d.signs(), 0), map);
}

}  // namespace

TEST_CASE("parse: trefoil, empty code, and the two-occurrence rule") {
  GaussDiagram t = knot(support::kTrefoil);
  CHECK(t.crossing_count() == 3);
  CHECK(t.slot_count() == 6);
  CHECK(t.is_knot());
  for (const Arrow& a : t.arrows()) CHECK(a.sign == 1);

  GaussDiagram u = knot("");
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);

  CHECK_THROWS_AS(parse_gauss_code("O1+ U2+ O3+ U1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ O1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ U1-"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ X1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O1* U1*"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("Oa+ Ua+"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("base 9\nO1+ U1+"), ParseError);
}

TEST_CASE("parse: comments, base directive, links") {
  GaussDiagram d = parse_gauss_code("# a curl\nbase 1\nO1+ U1+\n");
  CHECK(d.base() == 1);
  CHECK(d.crossing_count() == 1);

  GaussDiagram hopf = parse_gauss_code("O1+ U2+\nU1+ O2+");
  CHECK(hopf.component_count() == 2);
  CHECK(serialize(hopf) == "O1+ U2+\nU1+ O2+\n");
}

TEST_CASE("serialize is bit-exact and round-trips") {
  CHECK(serialize(knot("")).empty());
  CHECK(serialize(knot(support::kTrefoil)) == support::kTrefoil);
  CHECK(serialize(knot(support::kTrefoil).with_base(2)) == "base 2\nO1+ U2+ O3+ U1+ O2+ U3+");
  for (const auto& d : support::corpus(7, 3, 400)) {
    GaussDiagram back = parse_gauss_code(serialize(d));
    CHECK(back == d);
    CHECK(canonical_key(back) == canonical_key(d));
  }
}

TEST_CASE("writhe") {
  CHECK(writhe(knot(support::kTrefoil)) == 3);
  CHECK(writhe(knot("")) == 0);
  CHECK(writhe(mirror(knot(support::kTrefoil))) == -3);
  CHECK(writhe(knot(support::kFigureEight)) == 0);
}

TEST_CASE("canonical form: rotation and relabelling invariant, idempotent") {
  GaussDiagram t = knot(support::kTrefoil);
  CHECK(canonical_key(knot("O2+ U3+ O1+ U2+ O3+ U1+")) == canonical_key(knot("O3+ U1+ O2+ U3+ O1+ U2+")));
  CHECK(canonical_key(t) != canonical_key(mirror(t)));
  CHECK(same_diagram(t, relabel(t, {{1, 3}, {3, 1}, {2, 2}})));

  std::mt19937_64 rng(support::seed());
  for (const auto& d : support::corpus(7, 3, 300)) {
    GaussDiagram c = canonical_form(d, BaseMode::quotient);
    CHECK(canonical_key(c, BaseMode::quotient) == canonical_key(d, BaseMode::quotient));
    CHECK(canonical_form(c, BaseMode::quotient) == c);
    CHECK(canonical_key(scramble(d, rng), BaseMode::quotient) == canonical_key(d, BaseMode::quotient));
    // keep mode sees the base point
    CHECK(canonical_key(canonical_form(d)) == canonical_key(d));
  }
}

TEST_CASE("base point: keep mode distinguishes, quotient mode does not") {
  GaussDiagram f = knot(support::kFigureEight);
  CHECK(same_diagram(f, f.with_base(3), BaseMode::quotient));
  CHECK_FALSE(same_diagram(f, f.with_base(3), BaseMode::keep));
  CHECK_THROWS_AS(f.with_base(8), DomainError);
}

TEST_CASE("connected sum") {
  GaussDiagram t = knot(support::kTrefoil);
  CHECK(same_diagram(connected_sum(t, knot("")), t));
  CHECK(same_diagram(connected_sum(knot(""), t), t));
  GaussDiagram tt = connected_sum(t, t);
  CHECK(tt.crossing_count() == 6);
  CHECK(writhe(tt) == 6);
  CHECK(v2(tt) == 2);
  CHECK(serialize(tt) == "O4+ U5+ O6+ U4+ O5+ U6+ O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK_THROWS_AS(connected_sum(t, parse_gauss_code("O1+ U2+\nU1+ O2+")), DomainError);

  auto c = support::corpus(6, 2, 60);
  for (std::size_t i = 0; i + 1 < c.size(); i += 7) {
    GaussDiagram s = connected_sum(c[i], c[i + 1]);
    CHECK(writhe(s) == writhe(c[i]) + writhe(c[i + 1]));
    CHECK(s.crossing_count() == c[i].crossing_count() + c[i + 1].crossing_count());
    CHECK(supporting_genus(s) == supporting_genus(c[i]) + supporting_genus(c[i + 1]));
  }
}

TEST_CASE("smoothing") {
  GaussDiagram curl = knot("O1+ U1+");
  GaussDiagram two = smooth(curl, 1);
  CHECK(two.component_count() == 2);
  CHECK(two.crossing_count() == 0);

  GaussDiagram link = smooth(knot(support::kTrefoil), 1);
  CHECK(link.component_count() == 2);
  CHECK(link.crossing_count() == 2);
  CHECK(linking_number(link, 0, 1) == 1);
  CHECK_THROWS_AS(smooth(curl, 7), DomainError);

  for (const auto& d : support::corpus(6, 3, 200)) {
    for (const Arrow& a : d.arrows()) {
      GaussDiagram s = smooth(d, a.id);
      CHECK(std::abs(s.component_count() - d.component_count()) == 1);
      CHECK(s.crossing_count() == d.crossing_count() - 1);
      for (const Arrow& b : d.arrows())
        if (b.id != a.id) CHECK(s.arrow(b.id).sign == b.sign);
    }
  }
}

TEST_CASE("mirror is an involution that negates the writhe") {
  for (const auto& d : support::corpus(7, 3, 300)) {
    CHECK(mirror(mirror(d)) == d);
    CHECK(writhe(mirror(d)) == -writhe(d));
  }
}

TEST_CASE("supporting genus: classical seeds are planar, a virtual trefoil is not") {
  CHECK(supporting_genus(knot("")) == 0);
  CHECK(supporting_genus(knot(support::kTrefoil)) == 0);
  CHECK(supporting_genus(knot(support::kFigureEight)) == 0);
  CHECK(supporting_genus(knot("O1+ U2+ U1+ O2+")) == 1);
  // V + E = F + 2 on the sphere: faces = n + 2
  GaussDiagram f = knot(support::kFigureEight);
  CHECK(diagram_faces(f).size() == 6);
  for (const auto& d : support::corpus(7, 3, 300))
    if (d.crossing_count() > 0) CHECK(diagram_faces(d).size() == static_cast<std::size_t>(d.crossing_count() + 2));
}
