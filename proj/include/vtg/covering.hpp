#pragma once
// Sphere-cover certificates: exact cover checking, exact minimum cover search
// under separation constraints, survival-number probes, sphere witnesses, and
// the sprawl statistic.
//
// Candidate completeness: a ball of radius < r that meets the sphere
// d(0,.) = r has its center within distance 2r-1 of the origin (triangle
// inequality), so B(origin, 2r-1) is a complete candidate universe and
// exhaustion over it certifies NoCover results.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vtg/graph.hpp"
#include "vtg/metric.hpp"
#include "vtg/rng.hpp"

namespace vtg {

// Minimal dynamic bitset over the sphere indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  size_t size() const { return n_; }

  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w_) c += static_cast<size_t>(__builtin_popcountll(x));
    return c;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }

  bool all() const { return count() == n_; }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  // this \ o
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const = default;

  // Index of the lowest set bit, or n when empty.
  size_t first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + static_cast<size_t>(__builtin_ctzll(w_[i]));
    return n_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        f((i << 6) + static_cast<size_t>(__builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// A sphere-cover question: can ∂B(0,r) be covered by at most max_balls balls
// of radius radius_budget whose centers are pairwise >= sep apart and >= sep
// from the origin?
struct CoverInstance {
  GraphSpec spec;
  int r;
  int sep = 1;
  int radius_budget;  // must be < r
  int max_balls = 8;
  size_t vertex_cap = kDefaultVertexCap;
  uint64_t node_budget = 10'000'000;

  CoverInstance(GraphSpec s, int r_, int sep_ = 1, std::optional<int> budget = std::nullopt,
                int max_balls_ = 8)
      : spec(std::move(s)), r(r_), sep(sep_), radius_budget(budget.value_or(r_ - 1)),
        max_balls(max_balls_) {
    if (r < 1) throw std::invalid_argument("sphere radius must be >= 1");
    if (sep < 0) throw std::invalid_argument("separation must be >= 0");
    if (radius_budget < 0 || radius_budget >= r)
      throw std::invalid_argument("radius budget must lie in [0, r)");
    if (max_balls < 1) throw std::invalid_argument("max_balls must be >= 1");
  }
};

enum class CoverStatus { Cover, NoCover, BudgetExceeded };

inline const char* to_string(CoverStatus s) {
  switch (s) {
    case CoverStatus::Cover: return "Cover";
    case CoverStatus::NoCover: return "NoCover";
    case CoverStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "unknown";
}

struct CoverResult {
  CoverStatus status = CoverStatus::NoCover;
  std::optional<int> min_size;
  std::vector<Vertex> centers;  // witness cover, lexicographically smallest
  size_t candidate_count = 0;
  uint64_t nodes_explored = 0;
  int64_t wall_ms = 0;
};

// ---- Candidate generation ----

struct Candidate {
  Vertex center;
  int32_t origin_dist = 0;
  Bitset covers;  // sphere indices within radius_budget of the center
};

struct CandidateSet {
  std::vector<Vertex> sphere;        // sorted by encoding; bit i = sphere[i]
  std::vector<Candidate> candidates; // sorted by center encoding; complete
};

// Every vertex of B(origin, 2r-1) covering at least one sphere vertex, with
// its coverage bitset. No dominance dedup is applied: with separation
// constraints a dominated center can still be the only feasible choice, and
// NoCover certificates must stay exhaustive.
inline CandidateSet candidate_centers(const GraphSpec& spec, int r, int radius_budget,
                                      size_t cap = kDefaultVertexCap) {
  if (r < 1) throw std::invalid_argument("sphere radius must be >= 1");
  if (radius_budget < 0 || radius_budget >= r)
    throw std::invalid_argument("radius budget must lie in [0, r)");
  CandidateSet cs;
  Vertex o = origin(spec);
  BallTable outer = ball(spec, o, 2 * r - 1, cap);
  cs.sphere = outer.vertices_at(r);

  std::unordered_map<Vertex, Bitset> cover_of;
  for (size_t i = 0; i < cs.sphere.size(); ++i) {
    BallTable reach = ball(spec, cs.sphere[i], radius_budget, cap);
    for (const auto& [c, d] : reach.dist) {
      if (!outer.contains(c)) continue;
      auto [it, inserted] = cover_of.try_emplace(c, Bitset(cs.sphere.size()));
      it->second.set(i);
    }
  }
  cs.candidates.reserve(cover_of.size());
  for (auto& [c, bits] : cover_of)
    cs.candidates.push_back(Candidate{c, *outer.distance_of(c), std::move(bits)});
  std::sort(cs.candidates.begin(), cs.candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.center < b.center; });
  return cs;
}

// ---- Cover verification ----

struct CoverCheck {
  bool ok = false;
  // One of "", "uncovered", "centers_too_close", "center_too_close_to_origin".
  std::string violation;
  std::optional<Vertex> uncovered_witness;
  std::optional<std::pair<Vertex, Vertex>> close_pair;
};

// Verifies the three cover conditions; on failure reports the first violated
// one with a concrete witness (separation first, then coverage).
inline CoverCheck cover_check(const CoverInstance& inst, const std::vector<Vertex>& centers,
                              size_t cap = kDefaultVertexCap) {
  for (size_t i = 0; i < centers.size(); ++i)
    for (size_t j = i + 1; j < centers.size(); ++j)
      if (centers[i] == centers[j])
        throw std::invalid_argument("cover centers must be distinct");
  CoverCheck res;
  Vertex o = origin(inst.spec);

  if (inst.sep > 0) {
    for (const Vertex& c : centers) {
      if (c == o || (inst.sep > 1 && distance(inst.spec, c, o, inst.sep - 1, cap))) {
        res.violation = "center_too_close_to_origin";
        res.close_pair = {c, o};
        return res;
      }
    }
    if (inst.sep > 1) {
      for (size_t i = 0; i < centers.size(); ++i) {
        for (size_t j = i + 1; j < centers.size(); ++j) {
          if (distance(inst.spec, centers[i], centers[j], inst.sep - 1, cap)) {
            res.violation = "centers_too_close";
            res.close_pair = {centers[i], centers[j]};
            return res;
          }
        }
      }
    }
  }

  std::vector<Vertex> sph = sphere(inst.spec, o, inst.r, cap);
  std::unordered_set<Vertex> covered;
  for (const Vertex& c : centers) {
    BallTable reach = ball(inst.spec, c, inst.radius_budget, cap);
    for (const auto& [v, d] : reach.dist) covered.insert(v);
  }
  for (const Vertex& u : sph) {
    if (!covered.count(u)) {
      res.violation = "uncovered";
      res.uncovered_witness = u;
      return res;
    }
  }
  res.ok = true;
  return res;
}

// ---- Exact minimum cover search ----

namespace detail {

// Memoized "centers at least sep apart" test.
class SeparationOracle {
 public:
  SeparationOracle(const GraphSpec& spec, int sep, size_t cap)
      : spec_(spec), sep_(sep), cap_(cap) {}

  bool apart(size_t i, size_t j, const std::vector<Candidate>& cands) {
    if (sep_ <= 1) return true;  // distinct vertices are always >= 1 apart
    if (i > j) std::swap(i, j);
    uint64_t key = (static_cast<uint64_t>(i) << 32) | j;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = !distance(spec_, cands[i].center, cands[j].center, sep_ - 1, cap_).has_value();
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  const GraphSpec& spec_;
  int sep_;
  size_t cap_;
  std::unordered_map<uint64_t, bool> memo_;
};

struct SearchContext {
  const std::vector<Candidate>* cands;
  std::vector<Bitset> co_cover;           // element -> co-coverable elements
  std::vector<std::vector<uint32_t>> by_element;  // element -> covering candidates
  std::vector<size_t> pack_order;         // elements by increasing co-cover size
  uint64_t nodes = 0;
  uint64_t node_budget = 0;
  bool budget_hit = false;
};

// Greedy lower bound: a set of uncovered elements no single candidate can
// cover two of needs one ball each.
inline int packing_bound(const SearchContext& ctx, const Bitset& uncovered) {
  Bitset blocked(uncovered.size());
  int lb = 0;
  for (size_t e : ctx.pack_order) {
    if (!uncovered.test(e) || blocked.test(e)) continue;
    ++lb;
    blocked |= ctx.co_cover[e];
  }
  return lb;
}

inline void search_min(SearchContext& ctx, SeparationOracle& sep_oracle,
                       std::vector<uint32_t>& chosen, const Bitset& uncovered,
                       int& best, std::vector<uint32_t>& best_set, int max_balls) {
  if (ctx.budget_hit) return;
  if (++ctx.nodes > ctx.node_budget) {
    ctx.budget_hit = true;
    return;
  }
  if (!uncovered.any()) {
    if (static_cast<int>(chosen.size()) < best) {
      best = static_cast<int>(chosen.size());
      best_set = chosen;
    }
    return;
  }
  int lb = packing_bound(ctx, uncovered);
  int needed = static_cast<int>(chosen.size()) + lb;
  if (needed >= best || needed > max_balls) return;

  // Branch on the uncovered element with the fewest covering candidates.
  size_t branch_e = uncovered.size();
  size_t fewest = SIZE_MAX;
  uncovered.for_each([&](size_t e) {
    if (ctx.by_element[e].size() < fewest) {
      fewest = ctx.by_element[e].size();
      branch_e = e;
    }
  });
  if (branch_e == uncovered.size()) return;

  for (uint32_t c : ctx.by_element[branch_e]) {
    bool feasible = true;
    for (uint32_t prev : chosen) {
      if (!sep_oracle.apart(prev, c, *ctx.cands)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Bitset rest = uncovered;
    rest.subtract((*ctx.cands)[c].covers);
    chosen.push_back(c);
    search_min(ctx, sep_oracle, chosen, rest, best, best_set, max_balls);
    chosen.pop_back();
    if (ctx.budget_hit) return;
  }
}

// Finds the lexicographically smallest feasible cover of size exactly k
// (candidate indices ascending, which is ascending center encodings).
inline bool search_lex(SearchContext& ctx, SeparationOracle& sep_oracle,
                       const std::vector<Bitset>& suffix_union,
                       std::vector<uint32_t>& chosen, const Bitset& uncovered,
                       uint32_t from, int k, std::vector<uint32_t>& out) {
  if (ctx.budget_hit) return false;
  if (++ctx.nodes > ctx.node_budget) {
    ctx.budget_hit = true;
    return false;
  }
  if (!uncovered.any()) {
    out = chosen;
    return true;
  }
  int slots = k - static_cast<int>(chosen.size());
  if (slots <= 0) return false;
  if (packing_bound(ctx, uncovered) > slots) return false;

  const auto& cands = *ctx.cands;
  for (uint32_t c = from; c < cands.size(); ++c) {
    if (static_cast<int>(cands.size() - c) < slots) break;
    // Even taking every remaining candidate cannot finish the cover.
    Bitset rest_all = uncovered;
    rest_all.subtract(suffix_union[c]);
    if (rest_all.any()) break;
    if (!cands[c].covers.intersects(uncovered)) continue;
    bool feasible = true;
    for (uint32_t prev : chosen) {
      if (!sep_oracle.apart(prev, c, cands)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Bitset rest = uncovered;
    rest.subtract(cands[c].covers);
    chosen.push_back(c);
    if (search_lex(ctx, sep_oracle, suffix_union, chosen, rest, c + 1, k, out)) return true;
    chosen.pop_back();
    if (ctx.budget_hit) return false;
  }
  return false;
}

}  // namespace detail

// Exact minimum sphere cover by branch and bound over the complete candidate
// set. Search-order independent: the witness is the lexicographically
// smallest minimum cover by center encodings.
inline CoverResult min_cover(const CoverInstance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  CandidateSet cs = candidate_centers(inst.spec, inst.r, inst.radius_budget, inst.vertex_cap);

  // Enforce the center-to-origin separation up front.
  std::vector<Candidate> cands;
  for (auto& c : cs.candidates)
    if (c.origin_dist >= inst.sep) cands.push_back(std::move(c));

  CoverResult res;
  res.candidate_count = cands.size();

  size_t n = cs.sphere.size();
  detail::SearchContext ctx;
  ctx.cands = &cands;
  ctx.node_budget = inst.node_budget;
  ctx.co_cover.assign(n, Bitset(n));
  ctx.by_element.assign(n, {});
  for (uint32_t ci = 0; ci < cands.size(); ++ci) {
    cands[ci].covers.for_each([&](size_t e) {
      ctx.co_cover[e] |= cands[ci].covers;
      ctx.by_element[e].push_back(ci);
    });
  }
  ctx.pack_order.resize(n);
  for (size_t i = 0; i < n; ++i) ctx.pack_order[i] = i;
  std::vector<size_t> co_sizes(n);
  for (size_t i = 0; i < n; ++i) co_sizes[i] = ctx.co_cover[i].count();
  std::stable_sort(ctx.pack_order.begin(), ctx.pack_order.end(),
                   [&](size_t a, size_t b) { return co_sizes[a] < co_sizes[b]; });

  // Rank each element's candidates by decreasing coverage so good covers are
  // found early; ties by index keep the order deterministic.
  for (auto& list : ctx.by_element) {
    std::stable_sort(list.begin(), list.end(), [&](uint32_t a, uint32_t b) {
      return cands[a].covers.count() > cands[b].covers.count();
    });
  }

  detail::SeparationOracle sep_oracle(inst.spec, inst.sep, inst.vertex_cap);
  Bitset all(n);
  for (size_t i = 0; i < n; ++i) all.set(i);

  int best = inst.max_balls + 1;
  std::vector<uint32_t> best_set, chosen;
  detail::search_min(ctx, sep_oracle, chosen, all, best, best_set, inst.max_balls);

  auto finish = [&](CoverResult& r) {
    r.nodes_explored = ctx.nodes;
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  };

  if (ctx.budget_hit) {
    res.status = CoverStatus::BudgetExceeded;
    finish(res);
    return res;
  }
  if (best > inst.max_balls) {
    res.status = CoverStatus::NoCover;
    finish(res);
    return res;
  }

  // Canonicalize the witness: lexicographically smallest cover of size best.
  std::vector<Bitset> suffix_union(cands.size() + 1, Bitset(n));
  for (size_t i = cands.size(); i-- > 0;) {
    suffix_union[i] = suffix_union[i + 1];
    suffix_union[i] |= cands[i].covers;
  }
  chosen.clear();
  std::vector<uint32_t> lex_set;
  bool found = detail::search_lex(ctx, sep_oracle, suffix_union, chosen, all, 0, best, lex_set);
  if (ctx.budget_hit) {
    res.status = CoverStatus::BudgetExceeded;
    finish(res);
    return res;
  }
  if (!found) throw std::logic_error("lex pass lost a known cover");

  res.status = CoverStatus::Cover;
  res.min_size = best;
  for (uint32_t c : lex_set) res.centers.push_back(cands[c].center);
  std::sort(res.centers.begin(), res.centers.end());
  finish(res);
  return res;
}

// ---- Survival-number probe ----

struct ProbeRow {
  int r = 0;
  CoverResult result;
};

// Finite-r evidence table for s(G): exact minimum cover sizes k(r) at a fixed
// separation. Evidence only; finitely many radii cannot decide the
// infinitely-many-r quantifier in the covering characterization.
struct SurvivalProbe {
  int sep = 0;
  std::vector<ProbeRow> rows;

  // Smallest/largest exact k(r) over rows that completed.
  std::optional<int> min_k() const { return fold(true); }
  std::optional<int> max_k() const { return fold(false); }
  bool all_covered() const {
    for (const auto& row : rows)
      if (row.result.status != CoverStatus::Cover) return false;
    return !rows.empty();
  }

 private:
  std::optional<int> fold(bool take_min) const {
    std::optional<int> acc;
    for (const auto& row : rows) {
      if (row.result.status != CoverStatus::Cover) continue;
      int k = *row.result.min_size;
      if (!acc || (take_min ? k < *acc : k > *acc)) acc = k;
    }
    return acc;
  }
};

inline SurvivalProbe survival_probe(const GraphSpec& spec, int sep,
                                    const std::vector<int>& r_list, int max_balls = 8,
                                    size_t cap = kDefaultVertexCap,
                                    uint64_t node_budget = 10'000'000) {
  if (r_list.empty()) throw std::invalid_argument("radius list is empty");
  for (size_t i = 1; i < r_list.size(); ++i)
    if (r_list[i - 1] >= r_list[i])
      throw std::invalid_argument("radius list must be strictly increasing");
  SurvivalProbe probe;
  probe.sep = sep;
  for (int r : r_list) {
    CoverInstance inst(spec, r, sep, std::nullopt, max_balls);
    inst.vertex_cap = cap;
    inst.node_budget = node_budget;
    probe.rows.push_back(ProbeRow{r, min_cover(inst)});
  }
  return probe;
}

// ---- Sphere witnesses ----

struct AntipodalWitness {
  bool found = false;
  Vertex u, w;
  int distance = 0;  // exactly 2r when found
  size_t pairs_checked = 0;
};

namespace detail {

// Sphere ordered simplest-first: shorter encodings (fewer lamps / letters)
// come before longer ones, ties by byte order.
inline std::vector<Vertex> sphere_simple_first(const GraphSpec& spec, int r, size_t cap) {
  std::vector<Vertex> sph = sphere(spec, origin(spec), r, cap);
  std::stable_sort(sph.begin(), sph.end(), [](const Vertex& a, const Vertex& b) {
    if (a.bytes().size() != b.bytes().size()) return a.bytes().size() < b.bytes().size();
    return a < b;
  });
  return sph;
}

}  // namespace detail

// Searches ∂B(0,r) for two vertices at distance exactly 2r (the maximum the
// triangle inequality allows). NotFound is exact: all pairs were checked.
inline AntipodalWitness antipodal_witness(const GraphSpec& spec, int r,
                                          size_t cap = kDefaultVertexCap) {
  if (r < 1) throw std::invalid_argument("radius must be >= 1");
  std::vector<Vertex> sph = detail::sphere_simple_first(spec, r, cap);
  AntipodalWitness res;
  for (size_t j = 1; j < sph.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      ++res.pairs_checked;
      if (!distance(spec, sph[i], sph[j], 2 * r - 1, cap)) {
        res.found = true;
        res.u = sph[i];
        res.w = sph[j];
        res.distance = 2 * r;  // d <= 2r via the origin and > 2r-1 by the check
        return res;
      }
    }
  }
  return res;
}

struct SpreadWitness {
  bool found = false;
  std::vector<Vertex> witnesses;
  std::vector<std::vector<int32_t>> pair_distances;  // exact, BFS-verified
  size_t pairs_checked = 0;
};

namespace detail {

// Lamp-path sphere vertices for lamplighter families: light every lamp along
// a base-lattice geodesic from the origin and stand at its far end. Such a
// vertex lies exactly on ∂B(0,r); n of them in spread directions stay far
// apart because morphing one into another forces the lamplighter to walk both
// paths.
inline std::vector<Vertex> lamp_path_candidates(const GraphSpec& spec, int r, int n) {
  std::vector<Vertex> out;
  if (spec.family == Family::LamplighterLine) {
    LampLineState right, left;
    for (int32_t i = 0; i <= r; ++i) right.lamps.push_back(i);
    right.pos = r;
    for (int32_t i = -r; i <= 0; ++i) left.lamps.push_back(i);
    left.pos = -r;
    out.push_back(encode_lamp_line(right));
    out.push_back(encode_lamp_line(left));
    return out;
  }
  if (spec.family != Family::LamplighterPlane) return out;

  // Base sphere of Z^2 in counterclockwise order starting at (r, 0).
  auto base_point = [&](int k) -> PlaneCoord {
    int seg = k / r, t = k % r;
    switch (seg) {
      case 0: return {r - t, t};
      case 1: return {-t, r - t};
      case 2: return {-r + t, -t};
      default: return {t, -r + t};
    }
  };
  for (int i = 0; i < n; ++i) {
    PlaneCoord p = base_point(static_cast<int>(static_cast<int64_t>(i) * 4 * r / n));
    int32_t dx = std::abs(p[0]), dy = std::abs(p[1]);
    int32_t sx = p[0] >= 0 ? 1 : -1, sy = p[1] >= 0 ? 1 : -1;
    LampPlaneState s;
    // Staircase geodesic hugging the straight segment from 0 to p.
    for (int32_t t = 0; t <= r; ++t) {
      int32_t x = r == 0 ? 0 : static_cast<int32_t>((2 * static_cast<int64_t>(t) * dx + r) / (2 * r));
      s.lamps.push_back({sx * x, sy * (t - x)});
    }
    std::sort(s.lamps.begin(), s.lamps.end());
    s.lamps.erase(std::unique(s.lamps.begin(), s.lamps.end()), s.lamps.end());
    s.pos = {sx * dx, sy * dy};
    out.push_back(encode_lamp_plane(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool spread_dfs(const GraphSpec& spec, const std::vector<Vertex>& cands,
                       int min_pair, size_t n, size_t from, std::vector<size_t>& chosen,
                       std::map<std::pair<size_t, size_t>, bool>& memo,
                       size_t& pairs_checked, size_t cap) {
  if (chosen.size() == n) return true;
  for (size_t c = from; c < cands.size(); ++c) {
    if (cands.size() - c < n - chosen.size()) break;
    bool ok = true;
    for (size_t prev : chosen) {
      auto key = std::make_pair(prev, c);
      auto it = memo.find(key);
      bool apart;
      if (it != memo.end()) {
        apart = it->second;
      } else {
        ++pairs_checked;
        apart = !distance(spec, cands[prev], cands[c], min_pair - 1, cap).has_value();
        memo.emplace(key, apart);
      }
      if (!apart) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    if (spread_dfs(spec, cands, min_pair, n, c + 1, chosen, memo, pairs_checked, cap))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Finds n sphere vertices pairwise at least min_pair apart, by greedy search
// with backtracking. For lamplighter families, lamp-path vertices are tried
// before the rest of the sphere. NotFound is exact at desk scale.
inline SpreadWitness spread_witness(const GraphSpec& spec, int r, int n, int min_pair,
                                    size_t cap = kDefaultVertexCap) {
  if (n < 2) throw std::invalid_argument("spread witness needs n >= 2");
  if (r < 1) throw std::invalid_argument("radius must be >= 1");
  SpreadWitness res;

  std::vector<Vertex> cands;
  for (Vertex& seed : detail::lamp_path_candidates(spec, r, n)) {
    // Construction sanity: seeds must lie exactly on the sphere.
    if (distance(spec, origin(spec), seed, r, cap) == r) cands.push_back(std::move(seed));
  }
  size_t seed_count = cands.size();
  std::map<std::pair<size_t, size_t>, bool> memo;
  std::vector<size_t> chosen;

  bool found = false;
  if (seed_count >= static_cast<size_t>(n))
    found = detail::spread_dfs(spec, cands, min_pair, n, 0, chosen, memo,
                               res.pairs_checked, cap);
  if (!found) {
    // Extend with the full sphere (seeds first, duplicates dropped).
    std::unordered_set<Vertex> seen(cands.begin(), cands.end());
    for (Vertex& v : detail::sphere_simple_first(spec, r, cap))
      if (seen.insert(v).second) cands.push_back(std::move(v));
    memo.clear();
    chosen.clear();
    found = detail::spread_dfs(spec, cands, min_pair, n, 0, chosen, memo,
                               res.pairs_checked, cap);
  }
  if (!found) return res;

  res.found = true;
  for (size_t c : chosen) res.witnesses.push_back(cands[c]);
  res.pair_distances.assign(n, std::vector<int32_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto d = distance(spec, res.witnesses[i], res.witnesses[j], 2 * r, cap);
      if (!d) throw std::logic_error("sphere pair beyond 2r");
      res.pair_distances[i][j] = res.pair_distances[j][i] = *d;
    }
  }
  return res;
}

// ---- Lamplighter eight-vertex cover ----

// The eight LL(Z) cover centers at scale d. The eighth vertex's lamp block is
// read as {-3d-1 .. -4d}, mirroring the seventh; `corrected=false` keeps the
// literal one-sided block {-3d-1 .. 4d} for comparison.
inline std::vector<Vertex> ll_z_eight_centers(int d, bool corrected = true) {
  if (d < 1) throw std::invalid_argument("separation scale d must be >= 1");
  auto make = [](int32_t pos, std::vector<int32_t> lamps) {
    std::sort(lamps.begin(), lamps.end());
    LampLineState s;
    s.lamps = std::move(lamps);
    s.pos = pos;
    return encode_lamp_line(s);
  };
  auto range = [](int32_t a, int32_t b) {  // inclusive, either order
    std::vector<int32_t> v;
    for (int32_t i = std::min(a, b); i <= std::max(a, b); ++i) v.push_back(i);
    return v;
  };
  auto with_zero = [](std::vector<int32_t> v) {
    v.push_back(0);
    return v;
  };
  std::vector<Vertex> out;
  out.push_back(make(1, range(1, d)));
  out.push_back(make(1, range(-1, -d)));
  out.push_back(make(1, with_zero(range(d + 1, 2 * d))));
  out.push_back(make(1, with_zero(range(-d - 1, -2 * d))));
  out.push_back(make(-1, range(2 * d + 1, 3 * d)));
  out.push_back(make(-1, range(-2 * d - 1, -3 * d)));
  out.push_back(make(-1, with_zero(range(3 * d + 1, 4 * d))));
  if (corrected) {
    out.push_back(make(-1, with_zero(range(-3 * d - 1, -4 * d))));
  } else {
    out.push_back(make(-1, range(-3 * d - 1, 4 * d)));  // 0 lies inside the block
  }
  return out;
}

struct EightCoverResult {
  std::vector<Vertex> centers;
  bool centers_valid = false;  // pairwise >= d apart and >= d from the origin
  std::optional<std::pair<Vertex, Vertex>> invalid_pair;
  CoverCheck cover;
};

// Builds the eight centers at scale d and checks that they cover ∂B(0,r)
// with radius-(r-1) balls under separation d.
inline EightCoverResult ll_z_eight_cover(int d, int r, size_t cap = kDefaultVertexCap,
                                         bool corrected = true) {
  GraphSpec spec = GraphSpec::lamplighter_line();
  EightCoverResult res;
  res.centers = ll_z_eight_centers(d, corrected);

  Vertex o = origin(spec);
  res.centers_valid = true;
  auto apart = [&](const Vertex& a, const Vertex& b) {
    if (a == b) return false;
    return d <= 1 || !distance(spec, a, b, d - 1, cap).has_value();
  };
  for (size_t i = 0; i < res.centers.size() && res.centers_valid; ++i) {
    if (!apart(res.centers[i], o)) {
      res.centers_valid = false;
      res.invalid_pair = {res.centers[i], o};
    }
    for (size_t j = i + 1; j < res.centers.size() && res.centers_valid; ++j) {
      if (!apart(res.centers[i], res.centers[j])) {
        res.centers_valid = false;
        res.invalid_pair = {res.centers[i], res.centers[j]};
      }
    }
  }

  CoverInstance inst(spec, r, d, std::nullopt, 8);
  inst.vertex_cap = cap;
  res.cover = cover_check(inst, res.centers, cap);
  return res;
}

// ---- Sprawl ----

struct SprawlResult {
  int r = 0;
  bool exact = false;
  uint64_t pairs = 0;       // ordered pairs, x = y included
  double mean = 0.0;        // average of d(x,y)/r
  double std_error = 0.0;   // 0 in exact mode
  uint64_t seed = 0;
  size_t sphere_size = 0;
};

// Mean normalized distance between sphere points. Exact mode enumerates all
// ordered pairs; sampled mode draws pairs uniformly with replacement and is
// reproducible from its seed.
inline SprawlResult sprawl_estimate(const GraphSpec& spec, int r,
                                    std::optional<uint64_t> sample_pairs = std::nullopt,
                                    uint64_t seed = 0, size_t cap = kDefaultVertexCap) {
  if (r < 1) throw std::invalid_argument("radius must be >= 1");
  std::vector<Vertex> sph = sphere(spec, origin(spec), r, cap);
  SprawlResult res;
  res.r = r;
  res.sphere_size = sph.size();

  if (!sample_pairs) {
    res.exact = true;
    res.pairs = static_cast<uint64_t>(sph.size()) * sph.size();
    std::unordered_set<Vertex> targets(sph.begin(), sph.end());
    long double total = 0;
    for (const Vertex& x : sph) {
      // BFS from x until every sphere vertex is reached (depth <= 2r).
      std::unordered_map<Vertex, int32_t> dist{{x, 0}};
      std::vector<Vertex> frontier{x};
      size_t found = 1;  // the (x, x) pair contributes distance 0
      for (int32_t t = 1; found < sph.size(); ++t) {
        std::vector<Vertex> next;
        for (const Vertex& v : frontier) {
          for (Vertex& u : neighbors(spec, v)) {
            auto [it, inserted] = dist.emplace(std::move(u), t);
            if (inserted) {
              if (dist.size() > cap) throw CapacityError(cap);
              if (targets.count(it->first)) {
                total += t;
                ++found;
              }
              next.push_back(it->first);
            }
          }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
        if (t > 2 * r) throw std::logic_error("sphere pair beyond 2r");
      }
      if (found < sph.size()) throw std::logic_error("sphere not fully reachable");
    }
    res.mean = static_cast<double>(total / (static_cast<long double>(res.pairs) * r));
    return res;
  }

  if (*sample_pairs < 1) throw std::invalid_argument("sample count must be >= 1");
  res.pairs = *sample_pairs;
  res.seed = seed;
  Rng rng(seed);
  long double sum = 0, sum_sq = 0;
  for (uint64_t k = 0; k < *sample_pairs; ++k) {
    const Vertex& x = sph[rng.below(sph.size())];
    const Vertex& y = sph[rng.below(sph.size())];
    auto d = distance(spec, x, y, 2 * r, cap);
    if (!d) throw std::logic_error("sphere pair beyond 2r");
    double val = static_cast<double>(*d) / r;
    sum += val;
    sum_sq += static_cast<long double>(val) * val;
  }
  uint64_t n = *sample_pairs;
  res.mean = static_cast<double>(sum / n);
  if (n > 1) {
    long double var = (sum_sq - sum * sum / n) / (n - 1);
    if (var < 0) var = 0;
    res.std_error = static_cast<double>(std::sqrt(static_cast<double>(var) / n));
  }
  return res;
}

}  // namespace vtg
