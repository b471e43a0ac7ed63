#pragma once

#include <span>
#include <vector>

#include "triplehom/gauss.hpp"

namespace triplehom {

// Pattern over two interleaved arrows. Reading the circle from the base
// point, the four endpoints come as p1 < p2 < p3 < p4 with the first arrow
// on {p1, p3} and the second on {p2, p4}; each flag says whether that arrow
// is met tail-first.
struct PairConfiguration {
  bool first_tail_first = false;
  bool second_tail_first = true;

  friend bool operator==(const PairConfiguration&, const PairConfiguration&) = default;
};

// The configuration v2 is evaluated with; see docs/conventions.md.
inline constexpr PairConfiguration kV2Configuration{false, true};

// Gauss sum of sign products over pairs matching `config`.
int gauss_sum(const GaussDiagram& d, PairConfiguration config);

// Degree-2 Vassiliev invariant (0 on the unknot, +1 on the trefoil).
int v2(const GaussDiagram& d);

// Independent route: switch crossings to make the diagram descending from the
// base point, accumulating the linking number of each switched crossing's
// smoothing.
int v2_oracle(const GaussDiagram& d);

// v2 mod 2.
int arf(const GaussDiagram& d);

// Half the signed count of crossings between components a and b.
int linking_number(const GaussDiagram& d, int a, int b);

// Serial reference and OpenMP batch evaluation; results are identical.
std::vector<int> v2_batch_serial(std::span<const GaussDiagram> ds);
std::vector<int> v2_batch(std::span<const GaussDiagram> ds);

}  // namespace triplehom
