#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "triplehom/gauss.hpp"
#include "triplehom/homotopy.hpp"

namespace triplehom {

struct SearchBounds {
  int max_crossings = 6;
  int max_depth = 6;
  long node_budget = 200000;  // distinct states explored
  bool braid_only = false;    // forbid star-like triple moves
  bool isotopy_only = false;  // forbid every triple move
  bool parallel = true;       // expand each BFS level with OpenMP
  // No move may run through the base point; states then keep their base.
  bool keep_base_clear = false;
};

enum class SearchStatus { found, not_found, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<Trace> trace;
  long nodes = 0;
};

// Shortest trace from start to goal (equal up to base point), breadth first
// with a fixed move order. "not_found" only means: not within the bounds.
SearchResult find_triple_homotopy(const GaussDiagram& start, const GaussDiagram& goal, const SearchBounds& b);

struct UnknottingResult {
  std::set<int> indices;
  std::vector<Trace> witnesses;  // one per index, shortest found
  bool exhausted = false;        // node budget ran out
};

// Indices of the traces from k to the crossingless unknot within bounds.
UnknottingResult unknotting_indices(const GaussDiagram& k, const SearchBounds& b);

struct Reachable {
  std::vector<GaussDiagram> diagrams;  // one representative per class, BFS order
  bool partial = false;                // node budget ran out
};

Reachable enumerate_reachable(const GaussDiagram& seed, const SearchBounds& b);

// Random walk of `length` events from seed containing at least one triple
// move; star-like moves only when allowed.
Trace random_trace(const GaussDiagram& seed, int length, std::mt19937_64& rng, const SuccessorOptions& opt);

// TRIPLEHOM_SEED when set, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace triplehom
