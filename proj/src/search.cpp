#include "triplehom/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <unordered_map>

#include "triplehom/error.hpp"

namespace triplehom {

namespace {

void require_knot_seed(const GaussDiagram& d) {
  if (!d.is_knot()) throw DomainError("random traces need a knot");
}

void check_bounds(const SearchBounds& b) {
  if (b.max_crossings <= 0 || b.max_depth <= 0 || b.node_budget <= 0)
    throw DomainError("search bounds must all be positive");
}

SuccessorOptions options_for(const SearchBounds& b) {
  SuccessorOptions opt;
  opt.max_crossings = b.max_crossings;
  opt.allow_star = !b.braid_only && !b.isotopy_only;
  opt.allow_braid = !b.isotopy_only;
  opt.keep_base_clear = b.keep_base_clear;
  return opt;
}

struct Child {
  MoveEvent event;
  GaussDiagram diagram;
  std::string key;
};

// Successors of every frontier node, in frontier order. The parallel and
// serial versions produce identical output.
std::vector<std::vector<Child>> expand(const std::vector<const GaussDiagram*>& frontier, const SuccessorOptions& opt,
                                       bool parallel) {
  const BaseMode mode = opt.keep_base_clear ? BaseMode::keep : BaseMode::quotient;
  std::vector<std::vector<Child>> out(frontier.size());
  auto work = [&](std::size_t i) {
    for (auto& [e, r] : successors(*frontier[i], opt)) {
      std::string key = canonical_key(r, mode);
      out[i].push_back({e, std::move(r), std::move(key)});
    }
  };
  if (parallel) {
    const auto n = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < frontier.size(); ++i) work(i);
  }
  return out;
}

struct Node {
  GaussDiagram diagram;
  int parent;
  MoveEvent event;
  int index;
};

Trace extract(const std::vector<Node>& nodes, int at) {
  std::vector<MoveEvent> events;
  while (nodes[static_cast<std::size_t>(at)].parent >= 0) {
    events.push_back(nodes[static_cast<std::size_t>(at)].event);
    at = nodes[static_cast<std::size_t>(at)].parent;
  }
  std::reverse(events.begin(), events.end());
  return Trace{nodes[static_cast<std::size_t>(at)].diagram, std::move(events)};
}

int index_of(const MoveEvent& e, const GaussDiagram& before, const GaussDiagram& after) {
  if (!is_triple(e.kind)) return 0;
  return writhe(after) > writhe(before) ? 1 : -1;
}

// Breadth-first search over (diagram class, accumulated index) states when
// `track_index`, otherwise over diagram classes. `visit` sees every new node
// and returns true to stop.
template <class Visit>
bool bfs(const GaussDiagram& start, const SearchBounds& b, bool track_index, std::vector<Node>& nodes, Visit visit,
         bool& exhausted) {
  check_bounds(b);
  if (!start.is_knot()) throw DomainError("search needs a knot");
  const SuccessorOptions opt = options_for(b);
  std::unordered_map<std::string, int> seen;
  auto state_key = [&](const std::string& key, int index) {
    return track_index ? key + '|' + std::to_string(index) : key;
  };
  nodes.push_back({start, -1, {}, 0});
  seen.emplace(state_key(canonical_key(start, b.keep_base_clear ? BaseMode::keep : BaseMode::quotient), 0), 0);
  exhausted = false;
  if (visit(0)) return true;
  std::vector<int> frontier{0};
  for (int depth = 0; depth < b.max_depth && !frontier.empty(); ++depth) {
    std::vector<const GaussDiagram*> ptrs;
    for (int id : frontier) ptrs.push_back(&nodes[static_cast<std::size_t>(id)].diagram);
    auto children = expand(ptrs, opt, b.parallel);
    std::vector<int> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int parent = frontier[i];
      for (Child& c : children[i]) {
        const Node& p = nodes[static_cast<std::size_t>(parent)];
        int index = p.index + index_of(c.event, p.diagram, c.diagram);
        if (!seen.emplace(state_key(c.key, index), static_cast<int>(nodes.size())).second) continue;
        if (static_cast<long>(nodes.size()) >= b.node_budget) {
          exhausted = true;
          return false;
        }
        nodes.push_back({std::move(c.diagram), parent, c.event, index});
        next.push_back(static_cast<int>(nodes.size()) - 1);
        if (visit(static_cast<int>(nodes.size()) - 1)) return true;
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

SearchResult find_triple_homotopy(const GaussDiagram& start, const GaussDiagram& goal, const SearchBounds& b) {
  if (!goal.is_knot()) throw DomainError("search needs a knot");
  const std::string target = canonical_key(goal, BaseMode::quotient);
  std::vector<Node> nodes;
  int hit = -1;
  bool exhausted = false;
  bfs(start, b, false, nodes,
      [&](int id) {
        if (canonical_key(nodes[static_cast<std::size_t>(id)].diagram, BaseMode::quotient) != target) return false;
        hit = id;
        return true;
      },
      exhausted);
  SearchResult r;
  r.nodes = static_cast<long>(nodes.size());
  if (hit >= 0) {
    r.status = SearchStatus::found;
    r.trace = extract(nodes, hit);
  } else {
    r.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::not_found;
  }
  return r;
}

UnknottingResult unknotting_indices(const GaussDiagram& k, const SearchBounds& b) {
  std::vector<Node> nodes;
  UnknottingResult r;
  std::map<int, int> first_hit;
  bfs(k, b, true, nodes,
      [&](int id) {
        const Node& n = nodes[static_cast<std::size_t>(id)];
        if (n.diagram.crossing_count() == 0) first_hit.emplace(n.index, id);
        return false;
      },
      r.exhausted);
  for (auto& [index, id] : first_hit) {
    r.indices.insert(index);
    r.witnesses.push_back(extract(nodes, id));
  }
  return r;
}

Reachable enumerate_reachable(const GaussDiagram& seed, const SearchBounds& b) {
  std::vector<Node> nodes;
  Reachable r;
  bfs(seed, b, false, nodes, [](int) { return false; }, r.partial);
  for (Node& n : nodes) r.diagrams.push_back(std::move(n.diagram));
  return r;
}

namespace {

// One random applicable event: pick a move family, then candidates of that
// family in random order until one applies. Empty families are skipped.
std::optional<std::pair<MoveEvent, GaussDiagram>> random_event(const GaussDiagram& d, std::mt19937_64& rng,
                                                                const SuccessorOptions& opt, bool want_triple) {
  struct Family {
    MoveKind kind;
    bool insert;
  };
  std::vector<Family> triples, others;
  if (opt.allow_braid) triples.push_back({MoveKind::triple_braid, false});
  if (opt.allow_star) triples.push_back({MoveKind::triple_star, false});
  others.push_back({MoveKind::r2, false});
  others.push_back({MoveKind::r3, false});
  if (opt.allow_r2_insert) others.push_back({MoveKind::r2, true});
  if (opt.allow_r1) {
    others.push_back({MoveKind::r1, false});
    others.push_back({MoveKind::r1, true});
  }
  auto try_family = [&](const Family& f) -> std::optional<std::pair<MoveEvent, GaussDiagram>> {
    auto cands = candidate_events(d, f.kind, f.insert, opt.max_crossings);
    std::shuffle(cands.begin(), cands.end(), rng);
    for (const MoveEvent& e : cands) {
      if (opt.keep_base_clear && meets_base(d, e)) continue;
      try {
        return std::make_pair(e, apply_move(d, e));
      } catch (const InvalidMove&) {
      }
    }
    return std::nullopt;
  };
  auto try_all = [&](std::vector<Family> fs) -> std::optional<std::pair<MoveEvent, GaussDiagram>> {
    std::shuffle(fs.begin(), fs.end(), rng);
    for (const Family& f : fs)
      if (auto r = try_family(f)) return r;
    return std::nullopt;
  };
  if (want_triple)
    if (auto r = try_all(triples)) return r;
  auto all = others;
  all.insert(all.end(), triples.begin(), triples.end());
  return try_all(all);
}

}  // namespace

Trace random_trace(const GaussDiagram& seed, int length, std::mt19937_64& rng, const SuccessorOptions& opt) {
  if (length < 1) throw DomainError("random_trace needs at least one event");
  require_knot_seed(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Trace t{seed, {}};
    GaussDiagram d = seed;
    bool has_triple = false;
    for (int step = 0; step < length; ++step) {
      // Favour triple moves, and insist on one in the last step if none yet.
      const bool want_triple = rng() % 3 == 0 || (!has_triple && step + 1 == length);
      auto picked = random_event(d, rng, opt, want_triple);
      if (!picked) break;
      has_triple = has_triple || is_triple(picked->first.kind);
      t.events.push_back(picked->first);
      d = std::move(picked->second);
    }
    if (has_triple && static_cast<int>(t.events.size()) == length) return t;
  }
  throw DomainError("could not generate a trace with a triple move from this seed");
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("TRIPLEHOM_SEED");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  unsigned long long s = std::strtoull(v, &end, 10);
  if (end == nullptr || *end != '\0') throw DomainError("TRIPLEHOM_SEED must be a non-negative integer");
  return s;
}

}  // namespace triplehom
