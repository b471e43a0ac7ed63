#include "triplehom/gauss.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "triplehom/error.hpp"

namespace triplehom {

GaussDiagram::GaussDiagram() : comp_start_{0}, comp_size_{0} {}

GaussDiagram GaussDiagram::from_cycles(const std::vector<std::vector<Endpoint>>& cycles,
                                       const std::vector<ArrowSign>& signs, int base) {
  if (cycles.empty()) throw DomainError("diagram needs at least one component");
  GaussDiagram d;
  d.comp_start_.clear();
  d.comp_size_.clear();
  for (const auto& c : cycles) {
    d.comp_start_.push_back(static_cast<int>(d.slots_.size()));
    d.comp_size_.push_back(static_cast<int>(c.size()));
    d.slots_.insert(d.slots_.end(), c.begin(), c.end());
  }

  std::map<int, Arrow> by_id;
  for (const auto& s : signs) {
    if (s.sign != 1 && s.sign != -1) throw DomainError("sign of arrow " + std::to_string(s.id) + " is not +-1");
    if (!by_id.emplace(s.id, Arrow{s.id, s.sign, -1, -1}).second)
      throw DomainError("duplicate sign entry for arrow " + std::to_string(s.id));
  }
  for (int pos = 0; pos < d.slot_count(); ++pos) {
    const Endpoint& e = d.slots_[static_cast<std::size_t>(pos)];
    auto it = by_id.find(e.arrow);
    if (it == by_id.end()) throw DomainError("arrow " + std::to_string(e.arrow) + " has no sign");
    int& where = e.tail ? it->second.tail : it->second.head;
    if (where != -1)
      throw DomainError("arrow " + std::to_string(e.arrow) + " has two " + (e.tail ? "tails" : "heads"));
    where = pos;
  }
  for (auto& [id, a] : by_id) {
    if (a.tail < 0 || a.head < 0) throw DomainError("arrow " + std::to_string(id) + " lacks an endpoint");
    d.arrows_.push_back(a);
  }

  int gaps0 = std::max(1, d.comp_size_[0]);
  if (base < 0 || base >= gaps0) throw DomainError("base gap " + std::to_string(base) + " out of range");
  d.base_ = base;
  return d;
}

const Arrow* GaussDiagram::find_arrow(int id) const noexcept {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, int v) { return a.id < v; });
  if (it == arrows_.end() || it->id != id) return nullptr;
  return &*it;
}

const Arrow& GaussDiagram::arrow(int id) const {
  const Arrow* a = find_arrow(id);
  if (a == nullptr) throw DomainError("unknown crossing id " + std::to_string(id));
  return *a;
}

int GaussDiagram::component_of(int s) const {
  if (s < 0 || s >= slot_count()) throw DomainError("slot out of range");
  auto it = std::upper_bound(comp_start_.begin(), comp_start_.end(), s);
  int k = static_cast<int>(it - comp_start_.begin()) - 1;
  // skip empty components that share the same start
  while (comp_size_[static_cast<std::size_t>(k)] == 0 || s >= comp_start_[static_cast<std::size_t>(k)] + comp_size_[static_cast<std::size_t>(k)]) --k;
  return k;
}

int GaussDiagram::next_slot(int s) const {
  int k = component_of(s);
  int start = comp_start_[static_cast<std::size_t>(k)];
  int size = comp_size_[static_cast<std::size_t>(k)];
  return start + (s - start + 1) % size;
}

int GaussDiagram::prev_slot(int s) const {
  int k = component_of(s);
  int start = comp_start_[static_cast<std::size_t>(k)];
  int size = comp_size_[static_cast<std::size_t>(k)];
  return start + (s - start + size - 1) % size;
}

GaussDiagram GaussDiagram::with_base(int gap) const {
  int gaps0 = std::max(1, comp_size_[0]);
  if (gap < 0 || gap >= gaps0) throw DomainError("base gap " + std::to_string(gap) + " out of range");
  GaussDiagram d = *this;
  d.base_ = gap;
  return d;
}

std::vector<std::vector<Endpoint>> GaussDiagram::cycles() const {
  std::vector<std::vector<Endpoint>> out;
  for (std::size_t k = 0; k < comp_size_.size(); ++k) {
    auto first = slots_.begin() + comp_start_[k];
    std::vector<Endpoint> c(first, first + comp_size_[k]);
    if (k == 0 && !c.empty()) std::rotate(c.begin(), c.begin() + base_, c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ArrowSign> GaussDiagram::signs() const {
  std::vector<ArrowSign> out;
  out.reserve(arrows_.size());
  for (const Arrow& a : arrows_) out.push_back({a.id, a.sign});
  return out;
}

// ---------------------------------------------------------------------------
// GC text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);

  std::vector<std::string_view> lines;
  std::size_t at = 0;
  while (true) {
    std::size_t nl = text.find('\n', at);
    lines.push_back(text.substr(at, nl == std::string_view::npos ? std::string_view::npos : nl - at));
    if (nl == std::string_view::npos) break;
    at = nl + 1;
  }

  int base = 0;
  std::vector<std::vector<Endpoint>> cycles;
  struct Seen {
    int count = 0;
    int over = 0;
    int sign = 0;
  };
  std::map<int, Seen> seen;

  for (std::string_view raw : lines) {
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '#') continue;
    if (line.starts_with("base")) {
      std::string_view rest = trim(line.substr(4));
      base = parse_int(rest, "base directive");
      continue;
    }
    std::vector<Endpoint> cycle;
    std::size_t pos = 0;
    while (pos < line.size()) {
      std::size_t sp = line.find(' ', pos);
      std::string_view tok = line.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
      pos = sp == std::string_view::npos ? line.size() : sp + 1;
      if (tok.empty()) continue;
      if (tok.size() < 3 || (tok.front() != 'O' && tok.front() != 'U') || (tok.back() != '+' && tok.back() != '-'))
        throw ParseError("malformed token '" + std::string(tok) + "'");
      std::string_view digits = tok.substr(1, tok.size() - 2);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("malformed token '" + std::string(tok) + "'");
      int label = parse_int(digits, "crossing label");
      bool over = tok.front() == 'O';
      int sign = tok.back() == '+' ? 1 : -1;
      Seen& s = seen[label];
      if (s.count > 0 && s.sign != sign)
        throw ParseError("sign mismatch between the two occurrences of label " + std::to_string(label));
      s.sign = sign;
      s.count += 1;
      s.over += over ? 1 : 0;
      cycle.push_back({label, over});
    }
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) cycles.emplace_back();

  std::vector<ArrowSign> signs;
  for (const auto& [label, s] : seen) {
    if (s.count != 2)
      throw ParseError("label " + std::to_string(label) + " appears " + std::to_string(s.count) + " time(s)");
    if (s.over != 1) throw ParseError("label " + std::to_string(label) + " needs one O and one U occurrence");
    signs.push_back({label, s.sign});
  }
  try {
    return GaussDiagram::from_cycles(cycles, signs, base);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const GaussDiagram& d) {
  std::ostringstream out;
  if (d.base() != 0) out << "base " << d.base() << '\n';
  for (int k = 0; k < d.component_count(); ++k) {
    if (k > 0) out << '\n';
    int start = d.component_start(k);
    for (int i = 0; i < d.component_size(k); ++i) {
      const Endpoint& e = d.slot(start + i);
      if (i > 0) out << ' ';
      out << (e.tail ? 'O' : 'U') << e.arrow << (d.arrow(e.arrow).sign > 0 ? '+' : '-');
    }
  }
  // A trailing newline keeps a final crossingless component of a link.
  if (d.component_count() > 1) out << '\n';
  return out.str();
}

int writhe(const GaussDiagram& d) noexcept {
  int w = 0;
  for (const Arrow& a : d.arrows()) w += a.sign;
  return w;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

// Encodes the diagram read with component k starting at offset[k]. Labels
// are assigned by first appearance; `order` receives the arrow ids in label
// order.
std::string encode(const GaussDiagram& d, const std::vector<int>& offset, std::vector<int>* order) {
  std::string key;
  key.reserve(static_cast<std::size_t>(2 * d.slot_count() + 2 * d.component_count()));
  std::vector<std::pair<int, int>> labels;  // (arrow id, label), tiny
  labels.reserve(static_cast<std::size_t>(d.crossing_count()));
  auto label_of = [&](int id) {
    for (const auto& [a, l] : labels)
      if (a == id) return l;
    int l = static_cast<int>(labels.size()) + 1;
    labels.emplace_back(id, l);
    if (order != nullptr) order->push_back(id);
    return l;
  };
  for (int k = 0; k < d.component_count(); ++k) {
    int start = d.component_start(k);
    int size = d.component_size(k);
    key.push_back(static_cast<char>(0x7f));
    key.push_back(static_cast<char>(size & 0x7f));
    key.push_back(static_cast<char>((size >> 7) & 0x7f));
    for (int i = 0; i < size; ++i) {
      const Endpoint& e = d.slot(start + (offset[static_cast<std::size_t>(k)] + i) % size);
      int l = label_of(e.arrow);
      int sign = d.arrow(e.arrow).sign;
      key.push_back(static_cast<char>(l & 0x7f));
      key.push_back(static_cast<char>(((l >> 7) & 0x1f) << 2 | (e.tail ? 2 : 0) | (sign > 0 ? 1 : 0)));
    }
  }
  return key;
}

struct Best {
  std::string key;
  std::vector<int> offset;
};

Best best_rotation(const GaussDiagram& d, BaseMode mode) {
  const int comps = d.component_count();
  std::vector<int> offset(static_cast<std::size_t>(comps), 0);
  offset[0] = d.base();
  std::vector<int> lo(static_cast<std::size_t>(comps), 0), hi(static_cast<std::size_t>(comps), 1);
  for (int k = 0; k < comps; ++k) hi[static_cast<std::size_t>(k)] = std::max(1, d.component_size(k));
  if (mode == BaseMode::keep) {
    lo[0] = d.base();
    hi[0] = d.base() + 1;
  }
  // Odometer over all rotation tuples; link components are few and small.
  for (int k = 0; k < comps; ++k) offset[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
  Best best;
  bool have = false;
  while (true) {
    std::string key = encode(d, offset, nullptr);
    if (!have || key < best.key) {
      best.key = std::move(key);
      best.offset = offset;
      have = true;
    }
    int k = comps - 1;
    while (k >= 0) {
      auto ku = static_cast<std::size_t>(k);
      if (++offset[ku] < hi[ku]) break;
      offset[ku] = lo[ku];
      --k;
    }
    if (k < 0) break;
  }
  return best;
}

}  // namespace

std::string canonical_key(const GaussDiagram& d, BaseMode mode) { return best_rotation(d, mode).key; }

GaussDiagram canonical_form(const GaussDiagram& d, BaseMode mode) {
  Best best = best_rotation(d, mode);
  std::vector<int> order;
  encode(d, best.offset, &order);
  std::vector<int> new_label(static_cast<std::size_t>(d.max_id() + 1), 0);
  for (std::size_t i = 0; i < order.size(); ++i) new_label[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;

  std::vector<std::vector<Endpoint>> cycles;
  for (int k = 0; k < d.component_count(); ++k) {
    int start = d.component_start(k);
    int size = d.component_size(k);
    std::vector<Endpoint> c;
    c.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      const Endpoint& e = d.slot(start + (best.offset[static_cast<std::size_t>(k)] + i) % size);
      c.push_back({new_label[static_cast<std::size_t>(e.arrow)], e.tail});
    }
    cycles.push_back(std::move(c));
  }
  std::vector<ArrowSign> signs;
  for (const Arrow& a : d.arrows()) signs.push_back({new_label[static_cast<std::size_t>(a.id)], a.sign});
  std::sort(signs.begin(), signs.end(), [](const ArrowSign& x, const ArrowSign& y) { return x.id < y.id; });
  return GaussDiagram::from_cycles(cycles, signs, 0);
}

bool same_diagram(const GaussDiagram& a, const GaussDiagram& b, BaseMode mode) {
  if (a.slot_count() != b.slot_count() || a.component_count() != b.component_count()) return false;
  return canonical_key(a, mode) == canonical_key(b, mode);
}

// ---------------------------------------------------------------------------
// Constructions

GaussDiagram relabel(const GaussDiagram& d, const std::vector<std::pair<int, int>>& mapping) {
  std::map<int, int> m(mapping.begin(), mapping.end());
  auto lookup = [&](int id) {
    auto it = m.find(id);
    if (it == m.end()) throw DomainError("relabel mapping misses arrow " + std::to_string(id));
    return it->second;
  };
  auto cycles = d.cycles();
  for (auto& c : cycles)
    for (auto& e : c) e.arrow = lookup(e.arrow);
  std::vector<ArrowSign> signs;
  for (const Arrow& a : d.arrows()) signs.push_back({lookup(a.id), a.sign});
  return GaussDiagram::from_cycles(cycles, signs, 0).with_base(d.base());
}

GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2) {
  if (!d1.is_knot() || !d2.is_knot()) throw DomainError("connected sum needs single-component diagrams");
  const int offset = d1.max_id();
  std::vector<Endpoint> seq;
  seq.reserve(static_cast<std::size_t>(d1.slot_count() + d2.slot_count()));
  auto s1 = d1.slots();
  seq.insert(seq.end(), s1.begin(), s1.begin() + d1.base());
  const auto c2 = d2.cycles();
  for (const Endpoint& e : c2[0]) seq.push_back({e.arrow + offset, e.tail});
  seq.insert(seq.end(), s1.begin() + d1.base(), s1.end());

  std::vector<ArrowSign> signs = d1.signs();
  for (const Arrow& a : d2.arrows()) signs.push_back({a.id + offset, a.sign});
  return GaussDiagram::from_cycles({seq}, signs, d1.base());
}

GaussDiagram mirror(const GaussDiagram& d) {
  auto cycles = d.cycles();
  for (auto& c : cycles)
    for (auto& e : c) e.tail = !e.tail;
  auto signs = d.signs();
  for (auto& s : signs) s.sign = -s.sign;
  return GaussDiagram::from_cycles(cycles, signs, 0).with_base(d.base());
}

GaussDiagram smooth(const GaussDiagram& d, int crossing_id) {
  const Arrow& a = d.arrow(crossing_id);
  // Work on cycles() so that component 0 starts at the base point; each
  // endpoint carries its position in component 0 (or -1) to recover the base.
  struct Tagged {
    Endpoint e;
    int order0;
  };
  auto cycles = d.cycles();
  std::vector<std::vector<Tagged>> tagged;
  int ca = -1, ia = -1, cb = -1, ib = -1;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    std::vector<Tagged> t;
    for (std::size_t i = 0; i < cycles[k].size(); ++i) {
      const Endpoint& e = cycles[k][i];
      t.push_back({e, k == 0 ? static_cast<int>(i) : -1});
      if (e.arrow == crossing_id) {
        if (ca < 0) {
          ca = static_cast<int>(k);
          ia = static_cast<int>(i);
        } else {
          cb = static_cast<int>(k);
          ib = static_cast<int>(i);
        }
      }
    }
    tagged.push_back(std::move(t));
  }
  (void)a;

  // Walk the cyclic sequence strictly after `from` up to strictly before `to`.
  auto span_between = [](const std::vector<Tagged>& c, int from, int to) {
    std::vector<Tagged> out;
    int n = static_cast<int>(c.size());
    for (int i = (from + 1) % n; i != to; i = (i + 1) % n) out.push_back(c[static_cast<std::size_t>(i)]);
    return out;
  };

  std::vector<std::vector<Tagged>> result;
  if (ca == cb) {
    const auto& c = tagged[static_cast<std::size_t>(ca)];
    auto inner = span_between(c, ia, ib);
    auto outer = span_between(c, ib, ia);
    for (int k = 0; k < static_cast<int>(tagged.size()); ++k) {
      if (k == ca) {
        result.push_back(std::move(inner));
        result.push_back(std::move(outer));
      } else {
        result.push_back(tagged[static_cast<std::size_t>(k)]);
      }
    }
  } else {
    const auto& x = tagged[static_cast<std::size_t>(ca)];
    const auto& y = tagged[static_cast<std::size_t>(cb)];
    auto merged = span_between(x, ia, ia);
    if (x.size() == 1) merged.clear();
    auto tail = span_between(y, ib, ib);
    if (y.size() == 1) tail.clear();
    merged.insert(merged.end(), tail.begin(), tail.end());
    for (int k = 0; k < static_cast<int>(tagged.size()); ++k) {
      if (k == ca) result.push_back(merged);
      else if (k != cb) result.push_back(tagged[static_cast<std::size_t>(k)]);
    }
  }

  // Component holding the first surviving slot of old component 0 goes first,
  // rotated to begin with it.
  int best_comp = -1, best_pos = -1, best_order = -1;
  for (std::size_t k = 0; k < result.size(); ++k)
    for (std::size_t i = 0; i < result[k].size(); ++i) {
      int o = result[k][i].order0;
      if (o >= 0 && (best_order < 0 || o < best_order)) {
        best_order = o;
        best_comp = static_cast<int>(k);
        best_pos = static_cast<int>(i);
      }
    }
  if (best_comp > 0) std::rotate(result.begin(), result.begin() + best_comp, result.begin() + best_comp + 1);
  if (best_comp >= 0) std::rotate(result[0].begin(), result[0].begin() + best_pos, result[0].end());

  std::vector<std::vector<Endpoint>> out;
  for (const auto& c : result) {
    std::vector<Endpoint> e;
    for (const auto& t : c) e.push_back(t.e);
    out.push_back(std::move(e));
  }
  std::vector<ArrowSign> signs;
  for (const Arrow& b : d.arrows())
    if (b.id != crossing_id) signs.push_back({b.id, b.sign});
  return GaussDiagram::from_cycles(out, signs, 0);
}

// ---------------------------------------------------------------------------
// Rotation system and genus

namespace {

// Half-edge h = 4 * vertex + rotation position. Counter-clockwise rotation:
// positive (o_out, u_out, o_in, u_in), negative (o_out, u_in, o_in, u_out).
struct RotationSystem {
  std::vector<int> opposite;
  std::vector<int> edge;  // slot whose outgoing edge carries the half-edge
};

RotationSystem rotation_system(const GaussDiagram& d) {
  const int n = d.crossing_count();
  const auto& arrows = d.arrows();
  auto vertex_of = [&](int id) {
    auto it = std::lower_bound(arrows.begin(), arrows.end(), id, [](const Arrow& a, int v) { return a.id < v; });
    return static_cast<int>(it - arrows.begin());
  };
  auto half_edge = [&](int slot, bool out) {
    const Endpoint& e = d.slot(slot);
    int v = vertex_of(e.arrow);
    int sign = arrows[static_cast<std::size_t>(v)].sign;
    int r = 0;
    if (e.tail) r = out ? 0 : 2;
    else if (sign > 0) r = out ? 1 : 3;
    else r = out ? 3 : 1;
    return 4 * v + r;
  };
  RotationSystem rs{std::vector<int>(static_cast<std::size_t>(4 * n), -1),
                    std::vector<int>(static_cast<std::size_t>(4 * n), -1)};
  for (int s = 0; s < d.slot_count(); ++s) {
    int h_out = half_edge(s, true);
    int h_in = half_edge(d.next_slot(s), false);
    rs.opposite[static_cast<std::size_t>(h_out)] = h_in;
    rs.opposite[static_cast<std::size_t>(h_in)] = h_out;
    rs.edge[static_cast<std::size_t>(h_out)] = s;
    rs.edge[static_cast<std::size_t>(h_in)] = s;
  }
  return rs;
}

// Face orbits as lists of half-edges.
std::vector<std::vector<int>> face_orbits(const RotationSystem& rs) {
  const auto count = rs.opposite.size();
  std::vector<std::vector<int>> out;
  std::vector<char> seen(count, 0);
  for (std::size_t h = 0; h < count; ++h) {
    if (seen[h]) continue;
    out.emplace_back();
    int cur = static_cast<int>(h);
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      out.back().push_back(cur);
      int o = rs.opposite[static_cast<std::size_t>(cur)];
      cur = 4 * (o / 4) + (o % 4 + 1) % 4;
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> diagram_faces(const GaussDiagram& d) {
  RotationSystem rs = rotation_system(d);
  std::vector<std::vector<int>> out;
  for (const auto& orbit : face_orbits(rs)) {
    out.emplace_back();
    for (int h : orbit) out.back().push_back(rs.edge[static_cast<std::size_t>(h)]);
  }
  return out;
}

int supporting_genus(const GaussDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return 0;
  RotationSystem rs = rotation_system(d);

  // Connected pieces of the 4-valent graph.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v)
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (int h = 0; h < 4 * n; ++h) {
    int a = find(h / 4), b = find(rs.opposite[static_cast<std::size_t>(h)] / 4);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }

  std::vector<int> faces(static_cast<std::size_t>(n), 0), verts(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(find(v))] += 1;
  for (const auto& orbit : face_orbits(rs)) faces[static_cast<std::size_t>(find(orbit.front() / 4))] += 1;
  int genus = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) genus += (2 + verts[static_cast<std::size_t>(v)] - faces[static_cast<std::size_t>(v)]) / 2;
  return genus;
}

}  // namespace triplehom
