#include "triplehom/homotopy.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "triplehom/error.hpp"
#include "triplehom/invariants.hpp"

namespace triplehom {

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

int to_int(std::string_view word, std::string_view line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size() || v < 0)
    throw ParseError("bad number '" + std::string(word) + "' in '" + std::string(line) + "'");
  return v;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

std::string format_event(const MoveEvent& e) {
  std::ostringstream out;
  switch (e.kind) {
    case MoveKind::r1:
      if (e.insert) {
        out << "R1 + " << e.gap[0];
        if (e.variant != 0) out << ' ' << e.variant;
      } else {
        out << "R1 - " << e.ids[0];
      }
      break;
    case MoveKind::r2:
      if (e.insert) {
        out << "R2 + " << e.gap[0] << ' ' << e.gap[1];
        if (e.variant != 0) out << ' ' << e.variant;
      } else {
        out << "R2 - " << e.ids[0] << ' ' << e.ids[1];
      }
      break;
    case MoveKind::r3: out << "R3 " << e.ids[0] << ' ' << e.ids[1] << ' ' << e.ids[2] << ' ' << e.variant; break;
    case MoveKind::triple_braid:
    case MoveKind::triple_star:
      out << (e.kind == MoveKind::triple_braid ? "T3 braid " : "T3 star ") << e.ids[0] << ' ' << e.ids[1] << ' '
          << e.ids[2];
      if (e.variant != 0) out << ' ' << e.variant;
      break;
  }
  return out.str();
}

MoveEvent parse_event(std::string_view line) {
  auto w = split_words(strip_comment(line));
  auto fail = [&](const char* why) { return ParseError(std::string(why) + ": '" + std::string(line) + "'"); };
  if (w.empty()) throw fail("empty event");
  MoveEvent e;
  auto numbers = [&](std::size_t from, std::size_t need, std::size_t optional) {
    if (w.size() < from + need || w.size() > from + need + optional) throw fail("wrong number of fields");
    std::vector<int> v;
    for (std::size_t i = from; i < w.size(); ++i) v.push_back(to_int(w[i], line));
    return v;
  };
  if (w[0] == "R1" || w[0] == "R2") {
    e.kind = w[0] == "R1" ? MoveKind::r1 : MoveKind::r2;
    if (w.size() < 2 || (w[1] != "+" && w[1] != "-")) throw fail("expected '+' or '-'");
    e.insert = w[1] == "+";
    std::size_t arity = e.kind == MoveKind::r1 ? 1 : 2;
    auto v = numbers(2, arity, e.insert ? 1 : 0);
    for (std::size_t i = 0; i < arity; ++i) (e.insert ? e.gap[i] : e.ids[i]) = v[i];
    if (v.size() > arity) e.variant = v[arity];
    return e;
  }
  if (w[0] == "R3") {
    e.kind = MoveKind::r3;
    auto v = numbers(1, 4, 0);
    e.ids = {v[0], v[1], v[2]};
    e.variant = v[3];
    return e;
  }
  if (w[0] == "T3") {
    if (w.size() < 2 || (w[1] != "braid" && w[1] != "star")) throw fail("expected 'braid' or 'star'");
    e.kind = w[1] == "braid" ? MoveKind::triple_braid : MoveKind::triple_star;
    auto v = numbers(2, 3, 1);
    e.ids = {v[0], v[1], v[2]};
    if (v.size() > 3) e.variant = v[3];
    return e;
  }
  throw fail("unknown event");
}

Trace parse_trace(std::string_view text) {
  Trace t;
  bool have_init = false, events_started = false;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t nl = text.find('\n', at);
    std::string_view raw = text.substr(at, nl == std::string_view::npos ? std::string_view::npos : nl - at);
    at = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::string_view line = strip_comment(raw);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (!have_init) {
      if (words[0] != "init") throw ParseError("trace must start with 'init <code>'");
      auto code = line.substr(line.find("init") + 4);
      t.initial = parse_gauss_code(code);
      if (!t.initial.is_knot()) throw ParseError("trace start must be a knot");
      have_init = true;
      continue;
    }
    if (words[0] == "base") {
      if (events_started || words.size() != 2) throw ParseError("'base' must directly follow init");
      try {
        t.initial = t.initial.with_base(to_int(words[1], line));
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      continue;
    }
    events_started = true;
    t.events.push_back(parse_event(line));
  }
  if (!have_init) throw ParseError("trace must start with 'init <code>'");
  return t;
}

std::string serialize_trace(const Trace& t) {
  std::string out = "init " + serialize(t.initial.with_base(0)) + "\n";
  if (t.initial.base() != 0) out += "base " + std::to_string(t.initial.base()) + "\n";
  for (const MoveEvent& e : t.events) out += format_event(e) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Replay and invariants

std::vector<GaussDiagram> validate(const Trace& t) {
  if (!t.initial.is_knot()) throw ValidationError(0, "trace start must be a knot");
  std::vector<GaussDiagram> out{t.initial};
  out.reserve(t.events.size() + 1);
  for (std::size_t k = 0; k < t.events.size(); ++k) {
    try {
      out.push_back(apply_move(out.back(), t.events[k]));
    } catch (const Error& e) {
      throw ValidationError(static_cast<int>(k), e.what());
    }
  }
  return out;
}

GaussDiagram end_diagram(const Trace& t) { return validate(t).back(); }

int trace_index(const Trace& t) {
  auto steps = validate(t);
  int total = 0;
  for (std::size_t k = 0; k < t.events.size(); ++k) total += move_index(t.events[k], steps[k]);
  return total;
}

bool is_regular(const Trace& t) {
  return std::none_of(t.events.begin(), t.events.end(), [](const MoveEvent& e) { return e.kind == MoveKind::r1; });
}

bool is_closed(const Trace& t) { return same_diagram(t.initial, end_diagram(t), BaseMode::quotient); }

void assert_regular_loop_index(const Trace& t) {
  if (!is_regular(t) || !is_closed(t)) return;
  int index = trace_index(t);
  if (index != 0) throw DomainError("regular loop with index " + std::to_string(index));
}

Theorem2Report check_theorem2(const Trace& t) {
  auto steps = validate(t);
  Theorem2Report r;
  for (std::size_t k = 0; k < t.events.size(); ++k) {
    const MoveEvent& e = t.events[k];
    if (e.kind == MoveKind::triple_star) throw DomainError("star-like move at step " + std::to_string(k) + "; rewrite it first");
    EventCheck c{static_cast<int>(k), e.kind, move_index(e, steps[k]), 0};
    if (e.kind == MoveKind::triple_braid) c.w = triple_writhe(steps[k], resolve_site(steps[k], e));
    r.index += c.index;
    r.w_total += c.index * c.w;
    r.events.push_back(c);
  }
  r.v2_start = v2(steps.front());
  r.v2_end = v2(steps.back());
  r.pass = r.w_total == r.v2_end - r.v2_start;
  return r;
}

int w_total(const Trace& t) { return check_theorem2(t).w_total; }

// ---------------------------------------------------------------------------
// Rewrites
//
// A rewrite fixes the diagrams a new trace must pass through (up to
// relabelling and rotation) and the kinds of events between them; the
// events themselves are then recovered by trying every candidate of the
// right kind, backtracking on dead ends.

namespace {

struct EventShape {
  MoveKind kind;
  bool insert;
  std::vector<int> prefer;  // ids tried first
};

struct Segment {
  std::vector<EventShape> shapes;
  std::string goal;  // canonical key after the last event
};

EventShape shape_of(const MoveEvent& e) {
  EventShape s{e.kind, e.insert, {}};
  if (!e.insert) s.prefer.assign(e.ids.begin(), e.ids.end());
  return s;
}

EventShape inverse_shape(const MoveEvent& e) {
  if (e.kind == MoveKind::r1 || e.kind == MoveKind::r2) return {e.kind, !e.insert, {}};
  return {e.kind, false, {}};
}

class Realizer {
 public:
  Realizer(std::vector<Segment> segments, BaseMode mode) : segments_(std::move(segments)), mode_(mode) {}

  std::vector<MoveEvent> run(const GaussDiagram& start) {
    if (!step(start, 0, 0)) throw DomainError("no sequence of moves realizes the rewritten trace");
    return events_;
  }

 private:
  bool step(const GaussDiagram& cur, std::size_t seg, std::size_t sub) {
    if (seg == segments_.size()) return true;
    if (--budget_ < 0) throw DomainError("rewrite search budget exhausted");
    const Segment& s = segments_[seg];
    const EventShape& shape = s.shapes[sub];
    auto candidates = candidate_events(cur, shape.kind, shape.insert, 1 << 20);
    if (!shape.prefer.empty()) {
      auto score = [&](const MoveEvent& e) {
        int hits = 0;
        for (int id : e.ids)
          if (id != 0 && std::find(shape.prefer.begin(), shape.prefer.end(), id) != shape.prefer.end()) ++hits;
        return hits;
      };
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](const MoveEvent& a, const MoveEvent& b) { return score(a) > score(b); });
    }
    const bool last = sub + 1 == s.shapes.size();
    for (const MoveEvent& e : candidates) {
      GaussDiagram next;
      try {
        next = apply_move(cur, e);
      } catch (const InvalidMove&) {
        continue;
      }
      if (last && canonical_key(next, mode_) != s.goal) continue;
      events_.push_back(e);
      if (last ? step(next, seg + 1, 0) : step(next, seg, sub + 1)) return true;
      events_.pop_back();
    }
    return false;
  }

  std::vector<Segment> segments_;
  BaseMode mode_;
  std::vector<MoveEvent> events_;
  long budget_ = 200000;
};

// One segment per original event, reproducing its diagram sequence.
std::vector<Segment> replay_segments(const Trace& t, const std::vector<GaussDiagram>& targets, BaseMode mode) {
  std::vector<Segment> out;
  for (std::size_t k = 0; k < t.events.size(); ++k)
    out.push_back({{shape_of(t.events[k])}, canonical_key(targets[k + 1], mode)});
  return out;
}

}  // namespace

Trace reverse(const Trace& t) {
  auto steps = validate(t);
  std::vector<Segment> segs;
  for (std::size_t k = t.events.size(); k-- > 0;)
    segs.push_back({{inverse_shape(t.events[k])}, canonical_key(steps[k])});
  Trace r{steps.back(), {}};
  r.events = Realizer(std::move(segs), BaseMode::keep).run(r.initial);
  return r;
}

Trace compose(const Trace& t1, const Trace& t2) {
  GaussDiagram mid = end_diagram(t1);
  auto steps = validate(t2);
  BaseMode mode = BaseMode::keep;
  if (!same_diagram(mid, t2.initial, BaseMode::keep)) {
    if (!same_diagram(mid, t2.initial, BaseMode::quotient)) throw DomainError("compose: end of first trace is not the start of the second");
    mode = BaseMode::quotient;
  }
  Trace out{t1.initial, t1.events};
  auto tail = Realizer(replay_segments(t2, steps, mode), mode).run(mid);
  out.events.insert(out.events.end(), tail.begin(), tail.end());
  return out;
}

Trace connect_sum_trace(const Trace& t, const GaussDiagram& knot) {
  if (!knot.is_knot()) throw DomainError("connect_sum_trace needs a knot");
  auto steps = validate(t);
  std::vector<GaussDiagram> summed;
  for (const GaussDiagram& d : steps) summed.push_back(connected_sum(d, knot));
  Trace out{summed.front(), {}};
  try {
    out.events = Realizer(replay_segments(t, summed, BaseMode::keep), BaseMode::keep).run(out.initial);
  } catch (const DomainError&) {
    throw DomainError("connect_sum_trace: a move site meets the base point");
  }
  return out;
}

Trace star_to_braid(const Trace& t) {
  auto steps = validate(t);
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < t.events.size(); ++k) {
    const MoveEvent& e = t.events[k];
    std::string goal = canonical_key(steps[k + 1]);
    if (e.kind == MoveKind::triple_star)
      segs.push_back({{{MoveKind::r2, true, {}}, {MoveKind::triple_braid, false, {}}, {MoveKind::r2, false, {}}}, goal});
    else
      segs.push_back({{shape_of(e)}, goal});
  }
  Trace out{t.initial, {}};
  out.events = Realizer(std::move(segs), BaseMode::keep).run(t.initial);
  return out;
}

namespace {

std::vector<int> touched_ids(const MoveEvent& e, const GaussDiagram& before) {
  if (!e.insert) {
    std::vector<int> ids;
    for (int id : e.ids)
      if (id != 0) ids.push_back(id);
    if (e.kind == MoveKind::r1) ids.resize(1);
    if (e.kind == MoveKind::r2) ids.resize(2);
    return ids;
  }
  std::vector<int> ids{before.max_id() + 1};
  if (e.kind == MoveKind::r2) ids.push_back(before.max_id() + 2);
  return ids;
}

}  // namespace

Trace commute_disjoint(const Trace& t, int k) {
  auto steps = validate(t);
  if (k < 0 || k + 1 >= static_cast<int>(t.events.size())) throw DomainError("commute_disjoint: no events at " + std::to_string(k));
  const auto ku = static_cast<std::size_t>(k);
  auto first = touched_ids(t.events[ku], steps[ku]);
  auto second = touched_ids(t.events[ku + 1], steps[ku + 1]);
  for (int id : first)
    if (std::find(second.begin(), second.end(), id) != second.end())
      throw DomainError("commute_disjoint: events share crossing " + std::to_string(id));

  std::vector<Segment> segs;
  segs.push_back({{shape_of(t.events[ku + 1]), shape_of(t.events[ku])}, canonical_key(steps[ku + 2])});
  for (std::size_t i = ku + 2; i < t.events.size(); ++i) segs.push_back({{shape_of(t.events[i])}, canonical_key(steps[i + 1])});
  Trace out{t.initial, {t.events.begin(), t.events.begin() + k}};
  try {
    auto rest = Realizer(std::move(segs), BaseMode::keep).run(steps[ku]);
    out.events.insert(out.events.end(), rest.begin(), rest.end());
  } catch (const DomainError&) {
    throw DomainError("commute_disjoint: the two sites overlap");
  }
  return out;
}

}  // namespace triplehom
