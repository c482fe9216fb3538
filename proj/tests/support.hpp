#pragma once
// Test-only oracles, independent of the search code they check.

#include <cstdint>
#include <optional>
#include <vector>

#include "vtg/covering.hpp"
#include "vtg/graph.hpp"
#include "vtg/metric.hpp"

namespace vtg_test {

// Exhaustive minimum sphere cover over every subset of size <= kmax of the
// complete candidate set B(origin, 2r-1). Coverage is decided pair by pair
// with capped BFS distances; nothing is shared with the branch-and-bound
// solver except the metric primitive itself.
inline std::optional<int> brute_force_min_cover(const vtg::GraphSpec& spec, int r,
                                                int sep, int kmax) {
  using namespace vtg;
  Vertex o = origin(spec);
  std::vector<Vertex> sph = sphere(spec, o, r);
  if (sph.size() > 64) throw std::logic_error("oracle limited to spheres of <= 64 vertices");
  BallTable outer = ball(spec, o, 2 * r - 1);

  std::vector<Vertex> cands;
  for (const Vertex& c : outer.vertices())
    if (*outer.distance_of(c) >= sep) cands.push_back(c);

  int budget = r - 1;
  std::vector<uint64_t> mask(cands.size(), 0);
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t u = 0; u < sph.size(); ++u)
      if (distance(spec, cands[i], sph[u], budget)) mask[i] |= 1ull << u;

  uint64_t full = sph.size() == 64 ? ~0ull : (1ull << sph.size()) - 1;
  auto apart = [&](size_t i, size_t j) {
    if (sep <= 1) return true;
    return !distance(spec, cands[i], cands[j], sep - 1).has_value();
  };

  if (kmax >= 1)
    for (size_t i = 0; i < cands.size(); ++i)
      if (mask[i] == full) return 1;
  if (kmax >= 2)
    for (size_t i = 0; i < cands.size(); ++i)
      for (size_t j = i + 1; j < cands.size(); ++j)
        if ((mask[i] | mask[j]) == full && apart(i, j)) return 2;
  if (kmax >= 3) {
    for (size_t i = 0; i < cands.size(); ++i) {
      for (size_t j = i + 1; j < cands.size(); ++j) {
        uint64_t ij = mask[i] | mask[j];
        for (size_t k = j + 1; k < cands.size(); ++k)
          if ((ij | mask[k]) == full && apart(i, j) && apart(i, k) && apart(j, k))
            return 3;
      }
    }
  }
  return std::nullopt;
}

}  // namespace vtg_test
