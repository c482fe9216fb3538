#pragma once
// Voronoi decompositions on a ball window, the equivalent simultaneous-growth
// process, the two-species competition process, and cell shape statistics.
//
// Distances are true graph distances: searches may pass through vertices
// outside the window, only the reported assignment is restricted to it.

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vtg/graph.hpp"
#include "vtg/metric.hpp"

namespace vtg {

// A non-empty set of pairwise-distinct Voronoi sites.
struct SiteSet {
  GraphSpec spec;
  std::vector<Vertex> sites;

  SiteSet(GraphSpec s, std::vector<Vertex> vs) : spec(std::move(s)), sites(std::move(vs)) {
    if (sites.empty()) throw std::invalid_argument("site set is empty");
    if (sites.size() > 65535) throw std::invalid_argument("too many sites");
    for (size_t i = 0; i < sites.size(); ++i)
      for (size_t j = i + 1; j < sites.size(); ++j)
        if (sites[i] == sites[j])
          throw std::invalid_argument("sites must be pairwise distinct");
  }

  size_t size() const { return sites.size(); }
};

// Per-vertex nearest-site assignment on the window B(origin, R). A vertex
// belongs to every site realizing its minimal distance, so cells overlap
// exactly on ties.
struct VoronoiAssignment {
  struct Entry {
    int32_t dist = 0;                // distance to the nearest site(s)
    std::vector<uint16_t> nearest;   // sorted indices of all nearest sites
  };

  GraphSpec spec;
  std::vector<Vertex> sites;
  int window_radius = 0;
  BallTable window;  // distances to the origin, defines the domain
  std::unordered_map<Vertex, Entry> assign;

  // Vertices of cell i (including ties), sorted by encoding.
  std::vector<Vertex> cell(size_t i) const {
    std::vector<Vertex> out;
    for (const auto& [v, e] : assign)
      if (std::binary_search(e.nearest.begin(), e.nearest.end(), static_cast<uint16_t>(i)))
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool in_cell(const Vertex& v, size_t i) const {
    auto it = assign.find(v);
    if (it == assign.end()) return false;
    const auto& n = it->second.nearest;
    return std::binary_search(n.begin(), n.end(), static_cast<uint16_t>(i));
  }

  size_t tie_count() const {
    size_t n = 0;
    for (const auto& [v, e] : assign)
      if (e.nearest.size() > 1) ++n;
    return n;
  }

  std::vector<size_t> cell_sizes() const {
    std::vector<size_t> sizes(sites.size(), 0);
    for (const auto& [v, e] : assign)
      for (uint16_t i : e.nearest) ++sizes[i];
    return sizes;
  }

  // Cells containing at least one vertex at window distance exactly R.
  std::vector<bool> boundary_touching() const {
    std::vector<bool> touch(sites.size(), false);
    for (const auto& [v, e] : assign)
      if (*window.distance_of(v) == window_radius)
        for (uint16_t i : e.nearest) touch[i] = true;
    return touch;
  }
};

namespace detail {

inline void require_sites_in_window(const SiteSet& ss, const BallTable& window) {
  for (const auto& s : ss.sites)
    if (!window.contains(s))
      throw std::invalid_argument("all sites must lie within the window ball");
}

}  // namespace detail

// Exact minimum over unordered site pairs, or std::nullopt when every pair is
// beyond the cap. Membership test for the separation classes of site sets.
inline std::optional<int32_t> min_pairwise_distance(const SiteSet& ss, int cap,
                                                    size_t vertex_cap = kDefaultVertexCap) {
  if (ss.sites.size() < 2)
    throw std::invalid_argument("min_pairwise_distance needs at least two sites");
  std::optional<int32_t> best;
  for (size_t i = 0; i < ss.sites.size(); ++i) {
    for (size_t j = i + 1; j < ss.sites.size(); ++j) {
      auto d = distance(ss.spec, ss.sites[i], ss.sites[j], cap, vertex_cap);
      if (d && (!best || *d < *best)) best = *d;
    }
  }
  return best;
}

// Exact metric Voronoi assignment on B(origin, R): multi-source BFS from all
// sites with set-valued labels, propagated along distance-decreasing edges.
inline VoronoiAssignment voronoi_cells(const SiteSet& ss, int window_radius,
                                       size_t cap = kDefaultVertexCap) {
  VoronoiAssignment va;
  va.spec = ss.spec;
  va.sites = ss.sites;
  va.window_radius = window_radius;
  va.window = ball(ss.spec, origin(ss.spec), window_radius, cap);
  detail::require_sites_in_window(ss, va.window);

  struct Node {
    int32_t dist;
    std::vector<uint16_t> labels;
  };
  std::unordered_map<Vertex, Node> table;
  std::vector<Vertex> frontier;
  for (size_t i = 0; i < ss.sites.size(); ++i) {
    auto [it, inserted] = table.try_emplace(ss.sites[i]);
    it->second.dist = 0;
    it->second.labels.push_back(static_cast<uint16_t>(i));
    if (inserted) frontier.push_back(ss.sites[i]);
  }

  size_t unassigned = va.window.size();
  for (const Vertex& s : frontier) unassigned -= va.window.contains(s) ? 1 : 0;

  for (int32_t t = 1; unassigned > 0; ++t) {
    std::vector<Vertex> next;
    for (const Vertex& v : frontier) {
      const auto& labels = table.at(v).labels;
      for (Vertex& u : neighbors(ss.spec, v)) {
        auto [it, inserted] = table.try_emplace(std::move(u));
        Node& node = it->second;
        if (inserted) {
          if (table.size() > cap) throw CapacityError(cap);
          node.dist = t;
          node.labels = labels;
          next.push_back(it->first);
          if (va.window.contains(it->first)) --unassigned;
        } else if (node.dist == t) {
          // Reached simultaneously from another site: merge label sets.
          std::vector<uint16_t> merged;
          std::set_union(node.labels.begin(), node.labels.end(), labels.begin(),
                         labels.end(), std::back_inserter(merged));
          node.labels = std::move(merged);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty() && unassigned > 0)
      throw std::logic_error("window not reachable from sites");
  }

  va.assign.reserve(va.window.size());
  for (const auto& [v, d] : va.window.dist) {
    const Node& node = table.at(v);
    va.assign.emplace(v, VoronoiAssignment::Entry{node.dist, node.labels});
  }
  return va;
}

// The simultaneous unit-speed growth process: every set expands by one step
// per round, and a vertex first reached at round t joins every cell whose set
// it neighbors at round t. Mechanically independent of voronoi_cells.
inline VoronoiAssignment growth_process(const SiteSet& ss, int window_radius,
                                        size_t cap = kDefaultVertexCap) {
  VoronoiAssignment va;
  va.spec = ss.spec;
  va.sites = ss.sites;
  va.window_radius = window_radius;
  va.window = ball(ss.spec, origin(ss.spec), window_radius, cap);
  detail::require_sites_in_window(ss, va.window);

  struct Claim {
    int32_t step;
    std::vector<uint16_t> owners;
  };
  std::unordered_map<Vertex, Claim> claimed;
  std::vector<std::vector<Vertex>> frontiers(ss.sites.size());
  for (size_t i = 0; i < ss.sites.size(); ++i) {
    claimed[ss.sites[i]].step = 0;
    claimed[ss.sites[i]].owners.push_back(static_cast<uint16_t>(i));
    frontiers[i].push_back(ss.sites[i]);
  }

  size_t unassigned = va.window.size();
  for (const auto& [v, c] : claimed) unassigned -= va.window.contains(v) ? 1 : 0;

  for (int32_t step = 1; unassigned > 0; ++step) {
    // Gather this round's additions: vertex -> set of cells reaching it now.
    std::unordered_map<Vertex, std::vector<uint16_t>> additions;
    for (size_t i = 0; i < frontiers.size(); ++i) {
      for (const Vertex& v : frontiers[i]) {
        for (Vertex& u : neighbors(ss.spec, v)) {
          if (claimed.find(u) != claimed.end()) continue;
          auto& owners = additions[std::move(u)];
          if (owners.empty() || owners.back() != static_cast<uint16_t>(i))
            owners.push_back(static_cast<uint16_t>(i));
        }
      }
    }
    for (auto& f : frontiers) f.clear();
    for (auto& [v, owners] : additions) {
      if (claimed.size() >= cap) throw CapacityError(cap);
      claimed.emplace(v, Claim{step, owners});
      for (uint16_t i : owners) frontiers[i].push_back(v);
      if (va.window.contains(v)) --unassigned;
    }
    if (additions.empty() && unassigned > 0)
      throw std::logic_error("window not reachable from sites");
  }

  va.assign.reserve(va.window.size());
  for (const auto& [v, d] : va.window.dist) {
    const Claim& c = claimed.at(v);
    va.assign.emplace(v, VoronoiAssignment::Entry{c.step, c.owners});
  }
  return va;
}

struct EquivalenceReport {
  bool equal = true;
  std::optional<Vertex> first_difference;  // smallest differing vertex
};

// Compares growth_process and voronoi_cells vertexwise.
inline EquivalenceReport check_growth_equivalence(const SiteSet& ss, int window_radius,
                                                  size_t cap = kDefaultVertexCap) {
  VoronoiAssignment metric = voronoi_cells(ss, window_radius, cap);
  VoronoiAssignment grown = growth_process(ss, window_radius, cap);
  EquivalenceReport rep;
  for (const Vertex& v : metric.window.vertices()) {
    const auto& a = metric.assign.at(v);
    const auto& b = grown.assign.at(v);
    if (a.dist != b.dist || a.nearest != b.nearest) {
      rep.equal = false;
      rep.first_difference = v;
      break;
    }
  }
  return rep;
}

// ---- Competition process ----

enum class CompetitionStatus { running, y_trapped, x_trapped, both_escaping };

inline const char* to_string(CompetitionStatus s) {
  switch (s) {
    case CompetitionStatus::running: return "running";
    case CompetitionStatus::y_trapped: return "y_trapped";
    case CompetitionStatus::x_trapped: return "x_trapped";
    case CompetitionStatus::both_escaping: return "both_escaping";
  }
  return "unknown";
}

struct CompetitionState {
  GraphSpec spec;
  int m = 1;
  int window_radius = 0;
  int steps = 0;
  CompetitionStatus status = CompetitionStatus::running;
  std::unordered_set<Vertex> x, y;
  bool x_clipped = false;  // X attempted growth beyond the window
  bool y_clipped = false;
  std::vector<std::pair<size_t, size_t>> size_history;  // (|X|, |Y|) per step
};

namespace detail {

// One expansion round for a competition set: `folds` one-step expansions that
// never step onto the opponent. Additions outside the window are counted as
// clip attempts, not added. Returns the unclipped candidate count.
inline size_t expand_set(const GraphSpec& spec, std::unordered_set<Vertex>& members,
                         std::vector<Vertex>& frontier,
                         const std::unordered_set<Vertex>& opponent, int folds,
                         const BallTable& window, bool& clipped,
                         std::vector<Vertex>& added_out) {
  size_t candidates = 0;
  std::vector<Vertex> layer = frontier;
  added_out.clear();
  for (int f = 0; f < folds; ++f) {
    std::vector<Vertex> next;
    for (const Vertex& v : layer) {
      for (Vertex& u : neighbors(spec, v)) {
        if (members.count(u) || opponent.count(u)) continue;
        ++candidates;
        if (!window.contains(u)) {
          clipped = true;
          continue;
        }
        members.insert(u);
        next.push_back(u);
        added_out.push_back(std::move(u));
      }
    }
    layer = std::move(next);
  }
  frontier = added_out;
  return candidates;
}

}  // namespace detail

// Runs the two-species process: X expands by m (avoiding Y), then Y expands
// by 1 (avoiding the updated X). A set is trapped when it has no candidate
// growth at all while never having touched the window boundary; clipping at
// the boundary counts as escaping evidence, never as a trap.
inline CompetitionState competition_run(const GraphSpec& spec, const Vertex& x0,
                                        const Vertex& y0, int m, int window_radius,
                                        int max_steps = 1'000'000,
                                        size_t cap = kDefaultVertexCap) {
  if (m < 1) throw std::invalid_argument("competition speed m must be >= 1");
  if (x0 == y0) throw std::invalid_argument("competition needs distinct start vertices");
  CompetitionState st;
  st.spec = spec;
  st.m = m;
  st.window_radius = window_radius;
  BallTable window = ball(spec, origin(spec), window_radius, cap);
  if (!window.contains(x0) || !window.contains(y0))
    throw std::invalid_argument("start vertices must lie within the window");

  st.x.insert(x0);
  st.y.insert(y0);
  std::vector<Vertex> fx{x0}, fy{y0};
  std::vector<Vertex> added;

  while (st.steps < max_steps) {
    size_t x_candidates =
        detail::expand_set(spec, st.x, fx, st.y, m, window, st.x_clipped, added);
    size_t y_candidates =
        detail::expand_set(spec, st.y, fy, st.x, 1, window, st.y_clipped, added);
    ++st.steps;
    st.size_history.emplace_back(st.x.size(), st.y.size());

    bool x_trap = x_candidates == 0 && !st.x_clipped;
    bool y_trap = y_candidates == 0 && !st.y_clipped;
    if (y_trap) {
      st.status = CompetitionStatus::y_trapped;
      return st;
    }
    if (x_trap) {
      st.status = CompetitionStatus::x_trapped;
      return st;
    }
    if (fx.empty() && fy.empty()) {
      // No growth inside the window is possible for either set; both have
      // touched the boundary (otherwise a trap would have fired above).
      st.status = CompetitionStatus::both_escaping;
      return st;
    }
  }
  st.status = CompetitionStatus::running;
  return st;
}

// ---- Cell shape statistics ----

struct DegreeProfile {
  std::map<int, size_t> histogram;      // within-cell degree -> count
  std::vector<Vertex> degree_one;       // interior degree-1 vertices, sorted
  size_t interior_count = 0;
  size_t boundary_excluded = 0;
};

// Within-cell degree profile of cell i. Window-boundary vertices are skipped
// (their neighborhood is not fully observable) but still count as neighbors.
inline DegreeProfile cell_degree_profile(const VoronoiAssignment& va, size_t i) {
  if (i >= va.sites.size()) throw std::invalid_argument("cell index out of range");
  DegreeProfile prof;
  for (const Vertex& v : va.cell(i)) {
    if (*va.window.distance_of(v) == va.window_radius) {
      ++prof.boundary_excluded;
      continue;
    }
    int deg = 0;
    for (const Vertex& u : neighbors(va.spec, v))
      if (va.in_cell(u, i)) ++deg;
    ++prof.histogram[deg];
    ++prof.interior_count;
    if (deg == 1) prof.degree_one.push_back(v);
  }
  std::sort(prof.degree_one.begin(), prof.degree_one.end());
  return prof;
}

}  // namespace vtg
