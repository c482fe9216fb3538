#pragma once
// Exact word-metric computations by breadth-first search over the implicit
// neighbor function: balls, spheres, and capped point-to-point distances.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vtg/graph.hpp"

namespace vtg {

// Raised when a search would exceed its vertex budget. Results are never
// silently truncated; callers either get an exact table or this error.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(size_t limit)
      : std::runtime_error("search exceeded the vertex capacity of " +
                           std::to_string(limit)),
        limit_(limit) {}
  size_t limit() const { return limit_; }

 private:
  size_t limit_;
};

inline constexpr size_t kDefaultVertexCap = 50'000'000;

// Exact distance table of a metric ball: keys are precisely the vertices at
// distance <= radius from the center.
struct BallTable {
  GraphSpec spec;
  Vertex center;
  int radius = 0;
  std::unordered_map<Vertex, int32_t> dist;

  bool contains(const Vertex& v) const { return dist.find(v) != dist.end(); }

  std::optional<int32_t> distance_of(const Vertex& v) const {
    auto it = dist.find(v);
    if (it == dist.end()) return std::nullopt;
    return it->second;
  }

  size_t size() const { return dist.size(); }

  // All vertices at distance exactly t, sorted by canonical encoding.
  std::vector<Vertex> vertices_at(int t) const {
    std::vector<Vertex> out;
    for (const auto& [v, d] : dist)
      if (d == t) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  // All vertices of the ball, sorted by canonical encoding.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(dist.size());
    for (const auto& [v, d] : dist) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline BallTable ball(const GraphSpec& spec, const Vertex& center, int radius,
                      size_t cap = kDefaultVertexCap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  BallTable table;
  table.spec = spec;
  table.center = center;
  table.radius = radius;
  table.dist.emplace(center, 0);
  std::vector<Vertex> frontier{center};
  for (int t = 1; t <= radius && !frontier.empty(); ++t) {
    std::vector<Vertex> next;
    for (const Vertex& v : frontier) {
      for (Vertex& u : neighbors(spec, v)) {
        auto [it, inserted] = table.dist.emplace(std::move(u), t);
        if (inserted) {
          if (table.dist.size() > cap) throw CapacityError(cap);
          next.push_back(it->first);
        }
      }
    }
    frontier = std::move(next);
  }
  return table;
}

// Vertices at distance exactly r from the center, sorted by encoding.
inline std::vector<Vertex> sphere(const GraphSpec& spec, const Vertex& center,
                                  int r, size_t cap = kDefaultVertexCap) {
  return ball(spec, center, r, cap).vertices_at(r);
}

// Exact d(u,v) when it is <= cap, std::nullopt (beyond cap) otherwise.
// Bidirectional BFS; expands the smaller frontier first.
inline std::optional<int32_t> distance(const GraphSpec& spec, const Vertex& u,
                                       const Vertex& v, int cap,
                                       size_t vertex_cap = kDefaultVertexCap) {
  if (cap < 0) throw std::invalid_argument("distance cap must be >= 0");
  if (u == v) return 0;
  if (cap == 0) return std::nullopt;

  std::unordered_map<Vertex, int32_t> dist_a{{u, 0}}, dist_b{{v, 0}};
  std::vector<Vertex> front_a{u}, front_b{v};
  int ra = 0, rb = 0;
  int32_t best = INT32_MAX;

  while (true) {
    if (best <= ra + rb) break;
    if (ra + rb >= cap) break;
    // Expand whichever side currently holds fewer vertices.
    bool expand_a = dist_a.size() <= dist_b.size();
    auto& dist_self = expand_a ? dist_a : dist_b;
    auto& dist_other = expand_a ? dist_b : dist_a;
    auto& front = expand_a ? front_a : front_b;
    int& radius = expand_a ? ra : rb;

    std::vector<Vertex> next;
    for (const Vertex& w : front) {
      for (Vertex& n : neighbors(spec, w)) {
        auto [it, inserted] = dist_self.emplace(std::move(n), radius + 1);
        if (inserted) {
          if (dist_a.size() + dist_b.size() > vertex_cap)
            throw CapacityError(vertex_cap);
          auto other = dist_other.find(it->first);
          if (other != dist_other.end())
            best = std::min(best, radius + 1 + other->second);
          next.push_back(it->first);
        }
      }
    }
    front = std::move(next);
    ++radius;
    if (front.empty()) break;  // exhausted one side (finite component)
  }
  if (best <= cap) return best;
  return std::nullopt;
}

}  // namespace vtg
