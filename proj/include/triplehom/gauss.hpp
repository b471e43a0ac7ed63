#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triplehom {

// One end of an arrow. Arrows run from the over-passage (tail) to the
// under-passage (head) everywhere in this project.
struct Endpoint {
  int arrow = 0;
  bool tail = true;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// A crossing seen as a signed chord; `tail` and `head` are slot indices.
struct Arrow {
  int id = 0;
  int sign = 1;
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ArrowSign {
  int id = 0;
  int sign = 1;
};

// Whether canonicalisation keeps the base point fixed or quotients it out.
enum class BaseMode { keep, quotient };

// Signed directed Gauss diagram of a knot or link.
//
// Slots of all components are stored back to back; component k occupies
// [component_start(k), component_start(k) + component_size(k)) and is read
// cyclically. The base point lies just before slot `base()` of component 0
// (gap index). Values are immutable: every operation returns a new diagram.
class GaussDiagram {
 public:
  // 0-crossing unknot.
  GaussDiagram();

  // Validates and builds a diagram. Throws DomainError when an arrow does not
  // own exactly one tail and one head slot, a sign is not +-1, or the base
  // gap is out of range.
  static GaussDiagram from_cycles(const std::vector<std::vector<Endpoint>>& cycles,
                                  const std::vector<ArrowSign>& signs, int base = 0);

  std::span<const Endpoint> slots() const noexcept { return slots_; }
  const Endpoint& slot(int s) const { return slots_.at(static_cast<std::size_t>(s)); }
  int slot_count() const noexcept { return static_cast<int>(slots_.size()); }
  int crossing_count() const noexcept { return static_cast<int>(arrows_.size()); }

  // Sorted by id.
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow* find_arrow(int id) const noexcept;
  const Arrow& arrow(int id) const;  // throws DomainError on unknown id
  int max_id() const noexcept { return arrows_.empty() ? 0 : arrows_.back().id; }

  int component_count() const noexcept { return static_cast<int>(comp_size_.size()); }
  int component_start(int k) const { return comp_start_.at(static_cast<std::size_t>(k)); }
  int component_size(int k) const { return comp_size_.at(static_cast<std::size_t>(k)); }
  int component_of(int s) const;
  bool is_knot() const noexcept { return comp_size_.size() == 1; }

  int next_slot(int s) const;
  int prev_slot(int s) const;

  int base() const noexcept { return base_; }
  GaussDiagram with_base(int gap) const;

  // Components as endpoint cycles; component 0 is rotated to start at the
  // base point, so from_cycles(cycles(), ...) reproduces an equal diagram
  // with base 0.
  std::vector<std::vector<Endpoint>> cycles() const;
  std::vector<ArrowSign> signs() const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<Endpoint> slots_;
  std::vector<Arrow> arrows_;
  std::vector<int> comp_start_;
  std::vector<int> comp_size_;
  int base_ = 0;
};

// GC text format: one component per line, tokens like `O1+` / `U12-`,
// optional `base <gap>` directive, `#` comments, empty text = unknot.
GaussDiagram parse_gauss_code(std::string_view text);
std::string serialize(const GaussDiagram& d);

int writhe(const GaussDiagram& d) noexcept;

// Rotation-minimal representative relabelled 1..n by first appearance.
GaussDiagram canonical_form(const GaussDiagram& d, BaseMode mode = BaseMode::keep);
// Hashable identity string; equal iff the canonical forms are equal.
std::string canonical_key(const GaussDiagram& d, BaseMode mode = BaseMode::keep);
bool same_diagram(const GaussDiagram& a, const GaussDiagram& b, BaseMode mode = BaseMode::keep);

// Splices d2 (read from its base point) into d1 at d1's base point. Arrows of
// d2 are renumbered above d1's largest id. The result's base point sits
// just before the spliced block.
GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2);

// Oriented smoothing of one crossing; splits or merges components.
GaussDiagram smooth(const GaussDiagram& d, int crossing_id);

// Reverses every arrow and negates every sign.
GaussDiagram mirror(const GaussDiagram& d);

// Genus of the oriented surface carried by the diagram's rotation system
// (summed over connected pieces). Zero exactly for classical diagrams.
int supporting_genus(const GaussDiagram& d);

// Faces of the diagram's rotation system. Each face lists its edges in
// boundary order; edge s runs from slot s to next_slot(s).
std::vector<std::vector<int>> diagram_faces(const GaussDiagram& d);

// Renumbers arrows; `mapping` pairs old ids with new ids and must cover all.
GaussDiagram relabel(const GaussDiagram& d, const std::vector<std::pair<int, int>>& mapping);

}  // namespace triplehom
