#pragma once

// Test-only oracle: Alexander polynomial from the Wirtinger presentation of a
// classical knot diagram, and the Conway coefficient c2 derived from it.
// Shares no code with the Gauss-sum or descent routes to v2.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "triplehom/gauss.hpp"

namespace oracle {

using poly = std::vector<std::int64_t>;  // coefficient of t^k at [k]

inline poly mul(const poly& a, const poly& b) {
  if (a.empty() || b.empty()) return {};
  poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void add_to(poly& acc, const poly& p, int sign) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += sign * p[i];
}

// Laplace expansion along rows; each row has at most three nonzero entries.
inline poly det(const std::vector<std::vector<poly>>& m, std::size_t row, std::uint32_t used) {
  if (row == m.size()) return {1};
  poly acc;
  int parity = 0;
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (used & (1u << col)) continue;
    const poly& e = m[row][col];
    bool zero = true;
    for (auto c : e) zero = zero && c == 0;
    if (!zero) add_to(acc, mul(e, det(m, row + 1, used | (1u << col))), parity % 2 ? -1 : 1);
    ++parity;
  }
  return acc;
}

// Symmetrised, Delta(1) = 1; returned with the constant term in the middle.
inline poly alexander(const triplehom::GaussDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return {1};
  const int m = d.slot_count();
  // Arc j starts at the j-th under-passage met from slot 0.
  std::vector<int> arc_at(static_cast<std::size_t>(m));
  int first_under = -1;
  for (int s = 0; s < m; ++s)
    if (!d.slot(s).tail) {
      first_under = s;
      break;
    }
  int arc = n - 1;
  for (int k = 0; k < m; ++k) {
    int s = (first_under + k) % m;
    if (!d.slot(s).tail) arc = (arc + 1) % n;
    arc_at[static_cast<std::size_t>(s)] = arc;
  }
  std::vector<std::vector<poly>> a(static_cast<std::size_t>(n), std::vector<poly>(static_cast<std::size_t>(n), poly{0, 0}));
  int row = 0;
  for (const auto& x : d.arrows()) {
    int over = arc_at[static_cast<std::size_t>(x.tail)];
    int out = arc_at[static_cast<std::size_t>(x.head)];
    int in = (out + n - 1) % n;
    auto& r = a[static_cast<std::size_t>(row++)];
    if (x.sign > 0) {
      r[over][0] += 1, r[over][1] -= 1;
      r[in][1] += 1;
      r[out][0] -= 1;
    } else {
      r[over][0] -= 1, r[over][1] += 1;
      r[in][0] += 1;
      r[out][1] -= 1;
    }
  }
  // Drop the last row and column.
  a.pop_back();
  for (auto& r : a) r.pop_back();
  poly p = det(a, 0, 0);
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::size_t lo = 0;
  while (lo < p.size() && p[lo] == 0) ++lo;
  p.erase(p.begin(), p.begin() + static_cast<long>(lo));
  if (p.empty()) throw std::logic_error("alexander oracle: zero determinant");
  std::int64_t at_one = 0;
  for (auto c : p) at_one += c;
  if (at_one != 1 && at_one != -1) throw std::logic_error("alexander oracle: |Delta(1)| != 1");
  for (auto& c : p) c *= at_one;
  return p;
}

// c2 of the Conway polynomial, equal to v2.
inline std::int64_t conway_c2(const triplehom::GaussDiagram& d) {
  poly p = alexander(d);
  if (p.size() % 2 == 0) throw std::logic_error("alexander oracle: not symmetric");
  const auto mid = static_cast<std::int64_t>(p.size() / 2);
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t k = static_cast<std::int64_t>(i) - mid;
    if (p[i] != p[p.size() - 1 - i]) throw std::logic_error("alexander oracle: not symmetric");
    twice += p[i] * k * k;
  }
  return twice / 2;
}

}  // namespace oracle
