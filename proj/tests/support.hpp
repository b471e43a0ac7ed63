#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "triplehom/error.hpp"
#include "triplehom/gauss.hpp"
#include "triplehom/homotopy.hpp"
#include "triplehom/search.hpp"

namespace support {

inline const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
inline const char* kLeftTrefoil = "U1- O2- U3- O1- U2- O3-";
inline const char* kFigureEight = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(TRIPLEHOM_FIXTURES) + "/" + name; }

inline triplehom::Trace fixture_trace(const std::string& name) {
  return triplehom::parse_trace(read_file(fixture_path(name)));
}

inline triplehom::GaussDiagram knot(const char* code) { return triplehom::parse_gauss_code(code); }

inline triplehom::GaussDiagram fixture_knot(const std::string& name) {
  return triplehom::parse_gauss_code(read_file(fixture_path("knots/" + name)));
}

// Diagrams reachable from the unknot, the trefoil and the figure eight.
inline std::vector<triplehom::GaussDiagram> corpus(int max_crossings, int depth, long per_seed) {
  std::vector<triplehom::GaussDiagram> out;
  for (const char* seed : {"", kTrefoil, kFigureEight}) {
    triplehom::SearchBounds b;
    b.max_crossings = max_crossings;
    b.max_depth = depth;
    b.node_budget = per_seed;
    auto r = triplehom::enumerate_reachable(knot(seed), b);
    out.insert(out.end(), r.diagrams.begin(), r.diagrams.end());
  }
  return out;
}

inline std::uint64_t seed() { return triplehom::seed_from_env(20240601); }

// Random traces with braid-like triple moves only, each holding at least one.
inline std::vector<triplehom::Trace> braid_traces(int count, int min_len, int max_len, int max_crossings) {
  std::mt19937_64 rng(seed());
  triplehom::SuccessorOptions opt;
  opt.allow_star = false;
  opt.max_crossings = max_crossings;
  const std::vector<triplehom::GaussDiagram> seeds{knot(""), knot(kTrefoil), knot(kFigureEight), knot(kLeftTrefoil)};
  std::vector<triplehom::Trace> out;
  std::uniform_int_distribution<int> len(min_len, max_len);
  while (static_cast<int>(out.size()) < count) {
    const auto& s = seeds[out.size() % seeds.size()];
    try {
      out.push_back(triplehom::random_trace(s, len(rng), rng, opt));
    } catch (const triplehom::DomainError&) {
      // seed too small for a triple within this length; try again
    }
  }
  return out;
}

}  // namespace support
