// Acceptance suite: runs the headline reproduction checks end to end and
// prints one PASS/FAIL line per criterion. Each criterion is exact (integer
// equalities and statuses); there are no tunable tolerances. Exit status is
// the number of failed criteria.
//
// Usage: acceptance [N]   (run criterion N only; default all)

#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "vtg/covering.hpp"
#include "vtg/graph.hpp"
#include "vtg/metric.hpp"
#include "vtg/rng.hpp"
#include "vtg/voronoi.hpp"

using namespace vtg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Vertex lat2(const GraphSpec& spec, int32_t x, int32_t y) {
  return encode_lattice(spec, LatticePoint{{x, y}});
}

// 1. Square lattice: the minimum cover of every sphere r in 4..14 at
// separation 1 is exactly four balls, and the four axis points (0,+-r),
// (+-r,0) are accepted as a cover at radius r-1.
Outcome square_lattice_four_cover() {
  GraphSpec z2 = GraphSpec::lattice_std(2);
  Outcome out;
  std::ostringstream detail;
  for (int r = 4; r <= 14; ++r) {
    CoverResult res = min_cover(CoverInstance(z2, r, 1));
    if (res.status != CoverStatus::Cover || res.min_size != 4) {
      out.pass = false;
      detail << " min_cover(r=" << r << ") != 4;";
      continue;
    }
    CoverInstance inst(z2, r, 1);
    std::vector<Vertex> axis{lat2(z2, 0, r), lat2(z2, r, 0), lat2(z2, 0, -r),
                             lat2(z2, -r, 0)};
    CoverCheck chk = cover_check(inst, axis);
    if (!chk.ok) {
      out.pass = false;
      detail << " axis centers rejected at r=" << r << " ("
             << (chk.uncovered_witness ? format_vertex(z2, *chk.uncovered_witness)
                                       : chk.violation)
             << " uncovered);";
    }
  }
  if (out.pass) {
    out.detail = "min_size 4 and axis centers accepted for every r in 4..14";
  } else {
    out.detail = "min_size is 4 at every r in 4..14, but the four axis balls of radius "
                 "r-1 miss the diagonal sphere points at even r:" +
                 detail.str() +
                 " (at even r the point (r/2, r/2) is at distance exactly r from all "
                 "four axis points, so the stated centers only work at odd r)";
  }
  return out;
}

// 2. Diagonal lattice: the three published centers scale with d and cover all
// spheres from a computed threshold onward, and the exact minimum at r=12,
// sep=1 is three balls.
Outcome diagonal_lattice_three_cover() {
  GraphSpec diag = GraphSpec::lattice_diag();
  Outcome out;
  std::ostringstream detail;
  for (int d = 1; d <= 3; ++d) {
    std::vector<Vertex> centers{lat2(diag, d, -d), lat2(diag, d, 2 * d),
                                lat2(diag, -2 * d, -d)};
    int r0 = -1;
    for (int r = 2; r <= 40; ++r) {
      if (cover_check(CoverInstance(diag, r, d), centers).ok) {
        r0 = r;
        break;
      }
    }
    if (r0 < 0) {
      out.pass = false;
      detail << " no threshold found for d=" << d << " with r <= 40;";
      continue;
    }
    detail << " r0(" << d << ")=" << r0;
    for (int r = r0; r <= r0 + 6; ++r) {
      if (!cover_check(CoverInstance(diag, r, d), centers).ok) {
        out.pass = false;
        detail << " cover lost at r=" << r << " (d=" << d << ");";
      }
    }
  }
  CoverResult res = min_cover(CoverInstance(diag, 12, 1));
  if (res.status != CoverStatus::Cover || res.min_size != 3) {
    out.pass = false;
    detail << " min_cover(r=12, sep=1) != 3;";
  } else {
    detail << "; min_cover(r=12, sep=1) = 3";
  }
  out.detail = "thresholds" + detail.str();
  return out;
}

// 3. Diagonal lattice lower bound: no single ball of radius r-1 covers three
// of the six hexagon corners of the sphere, for any center in the complete
// candidate ball B(0, 2r-1).
Outcome diagonal_lattice_lower_bound() {
  GraphSpec diag = GraphSpec::lattice_diag();
  Outcome out;
  std::ostringstream detail;
  for (int r = 6; r <= 12; ++r) {
    std::vector<Vertex> corners{lat2(diag, 0, r),  lat2(diag, r, r),   lat2(diag, r, 0),
                                lat2(diag, 0, -r), lat2(diag, -r, -r), lat2(diag, -r, 0)};
    std::unordered_map<Vertex, int> covered_corners;
    for (const Vertex& c : corners)
      for (const auto& [v, dist] : ball(diag, c, r - 1).dist) ++covered_corners[v];
    BallTable outer = ball(diag, origin(diag), 2 * r - 1);
    int worst = 0;
    for (const auto& [v, count] : covered_corners) {
      if (!outer.contains(v)) continue;
      worst = std::max(worst, count);
    }
    detail << " r=" << r << ":max" << worst;
    if (worst > 2) out.pass = false;
  }
  out.detail = "corners co-coverable per candidate:" + detail.str();
  return out;
}

// 4. Lamplighter line: the eight listed centers at d=1 are pairwise separated
// and cover every sphere from the computed threshold up to r=12.
Outcome lamplighter_eight_cover() {
  Outcome out;
  int r0 = -1;
  for (int r = 2; r <= 12; ++r) {
    EightCoverResult res = ll_z_eight_cover(1, r);
    if (res.centers_valid && res.cover.ok) {
      r0 = r;
      break;
    }
  }
  if (r0 < 0) return {false, "no threshold radius found up to 12"};
  std::ostringstream detail;
  detail << "threshold r0=" << r0 << ", cover holds for r in " << r0 << "..12";
  for (int r = r0; r <= 12; ++r) {
    EightCoverResult res = ll_z_eight_cover(1, r);
    if (!res.centers_valid) {
      out.pass = false;
      detail << "; centers lose separation at r=" << r;
    }
    if (!res.cover.ok) {
      out.pass = false;
      detail << "; cover fails at r=" << r;
    }
  }
  out.detail = detail.str();
  return out;
}

// 5. Lamplighter plane: three lamp-path sphere vertices at r=6 with verified
// pairwise distances >= 2r-4 (desk-scale stand-in for the asymptotic claim;
// evidence, not proof).
Outcome lamplighter_plane_spread() {
  GraphSpec ll2 = GraphSpec::lamplighter_plane();
  int r = 6, n = 3, min_pair = 2 * r - 4;
  SpreadWitness sw = spread_witness(ll2, r, n, min_pair);
  if (!sw.found) return {false, "no spread witness found"};
  std::ostringstream detail;
  Outcome out;
  for (int i = 0; i < n; ++i) {
    const Vertex& w = sw.witnesses[i];
    if (distance(ll2, origin(ll2), w, r) != r) {
      out.pass = false;
      detail << " witness " << i << " off the sphere;";
    }
    // Geodesic configuration: the lamps form a unit-step path from the
    // origin to the lamplighter with strictly growing norm.
    LampPlaneState s = decode_lamp_plane(w);
    bool path_like = static_cast<int>(s.lamps.size()) == r + 1;
    std::vector<PlaneCoord> by_norm = s.lamps;
    std::sort(by_norm.begin(), by_norm.end(), [](PlaneCoord a, PlaneCoord b) {
      return std::abs(a[0]) + std::abs(a[1]) < std::abs(b[0]) + std::abs(b[1]);
    });
    for (int t = 0; path_like && t <= r; ++t) {
      path_like = std::abs(by_norm[t][0]) + std::abs(by_norm[t][1]) == t;
      if (t > 0 && path_like)
        path_like = std::abs(by_norm[t][0] - by_norm[t - 1][0]) +
                        std::abs(by_norm[t][1] - by_norm[t - 1][1]) ==
                    1;
    }
    if (path_like) path_like = by_norm.back() == s.pos;
    if (!path_like) {
      out.pass = false;
      detail << " witness " << i << " is not a lamp geodesic;";
    }
  }
  int min_seen = INT32_MAX;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) min_seen = std::min(min_seen, sw.pair_distances[i][j]);
  if (min_seen < min_pair) {
    out.pass = false;
    detail << " pairwise distance " << min_seen << " < " << min_pair << ";";
  }
  detail << " three geodesic-configuration vertices on the sphere, minimum pairwise "
            "distance "
         << min_seen << " (bound " << min_pair << ", evidence only)";
  out.detail = detail.str();
  return out;
}

// 6. Degree-3 tree: minimum covers at separation 1 for r in {3,5,7}, checked
// against exhaustive enumeration at r=3 and recorded values, and asserted to
// be strictly increasing in r.
Outcome tree_cover_growth() {
  GraphSpec tree = GraphSpec::regular_tree(3);
  const std::vector<int> radii{3, 5, 7};
  const std::vector<int> recorded{3, 3, 3};  // first-computation values
  Outcome out;
  std::vector<int> ks;
  for (int r : radii) {
    CoverResult res = min_cover(CoverInstance(tree, r, 1, std::nullopt, 16));
    if (res.status != CoverStatus::Cover) return {false, "solver failed"};
    ks.push_back(*res.min_size);
  }
  auto oracle = vtg_test::brute_force_min_cover(tree, 3, 1, 3);
  std::ostringstream detail;
  detail << "k(3)=" << ks[0] << " k(5)=" << ks[1] << " k(7)=" << ks[2];
  if (!oracle || *oracle != ks[0]) {
    out.pass = false;
    detail << "; exhaustive check at r=3 disagrees";
  } else {
    detail << "; r=3 verified exhaustively";
  }
  for (size_t i = 0; i < radii.size(); ++i) {
    if (ks[i] != recorded[i]) {
      out.pass = false;
      detail << "; k(" << radii[i] << ") moved from recorded " << recorded[i];
    }
  }
  bool increasing = ks[0] < ks[1] && ks[1] < ks[2];
  if (!increasing) {
    out.pass = false;
    // At separation 1 the three balls of radius r-1 around the depth-1
    // vertices cover every sphere, so k(r) is constant in r. The unbounded
    // growth shows up in the separation parameter instead.
    std::vector<int> by_sep;
    for (int sep : {1, 2, 4})
      by_sep.push_back(*min_cover(CoverInstance(tree, 7, sep, std::nullopt, 16)).min_size);
    detail << "; not strictly increasing in r: three depth-1 balls always cover at "
              "separation 1; growth appears in the separation instead: k(r=7, sep=1,2,4) = "
           << by_sep[0] << "," << by_sep[1] << "," << by_sep[2];
  }
  out.detail = detail.str();
  return out;
}

// 7. Diagonal ladder: the minimum cover is two balls for every r in 4..12.
Outcome ladder_two_cover() {
  GraphSpec lad = GraphSpec::ladder_diag();
  Outcome out;
  for (int r = 4; r <= 12; ++r) {
    CoverResult res = min_cover(CoverInstance(lad, r, 1));
    if (res.status != CoverStatus::Cover || res.min_size != 2) {
      out.pass = false;
      out.detail += " r=" + std::to_string(r) + " != 2;";
    }
  }
  if (out.pass) out.detail = "min_size 2 for every r in 4..12";
  return out;
}

// 8. Every family has two sphere points at distance exactly 2r for r in 3..6.
Outcome antipodal_all_families() {
  std::vector<GraphSpec> fams{GraphSpec::lattice_std(2),  GraphSpec::lamplighter_line(),
                              GraphSpec::lamplighter_plane(), GraphSpec::free_product_23(),
                              GraphSpec::regular_tree(3), GraphSpec::ladder_diag()};
  Outcome out;
  for (const GraphSpec& spec : fams) {
    for (int r = 3; r <= 6; ++r) {
      AntipodalWitness w = antipodal_witness(spec, r);
      bool ok = w.found && w.distance == 2 * r &&
                distance(spec, w.u, w.w, 2 * r) == 2 * r &&
                distance(spec, origin(spec), w.u, r) == r &&
                distance(spec, origin(spec), w.w, r) == r;
      if (!ok) {
        out.pass = false;
        out.detail += " " + spec.to_string() + " r=" + std::to_string(r) + " failed;";
      }
    }
  }
  if (out.pass) out.detail = "verified pairs at distance 2r on all six families, r in 3..6";
  return out;
}

// 9. The simultaneous growth process reproduces the metric Voronoi assignment
// on 50 random site sets per family.
Outcome growth_equivalence_sweep() {
  struct Setup {
    GraphSpec spec;
    int window;
    int spread;
  };
  std::vector<Setup> setups{{GraphSpec::lattice_std(2), 9, 4},
                            {GraphSpec::lamplighter_line(), 7, 3},
                            {GraphSpec::lamplighter_plane(), 4, 2},
                            {GraphSpec::free_product_23(), 9, 4},
                            {GraphSpec::regular_tree(3), 9, 4},
                            {GraphSpec::ladder_diag(), 9, 4}};
  Rng rng(0xC0FFEE);
  Outcome out;
  int runs = 0;
  for (const Setup& su : setups) {
    auto pool = ball(su.spec, origin(su.spec), su.spread).vertices();
    for (int trial = 0; trial < 50; ++trial) {
      size_t k = 2 + rng.below(3);
      std::set<Vertex> picks;
      while (picks.size() < k) picks.insert(pool[rng.below(pool.size())]);
      SiteSet ss(su.spec, std::vector<Vertex>(picks.begin(), picks.end()));
      EquivalenceReport rep = check_growth_equivalence(ss, su.window);
      ++runs;
      if (!rep.equal) {
        out.pass = false;
        out.detail += " mismatch on " + su.spec.to_string() + " trial " +
                      std::to_string(trial) + ";";
      }
    }
  }
  if (out.pass)
    out.detail = "growth == metric assignment on " + std::to_string(runs) + " site sets";
  return out;
}

// 10. Competition on the square lattice: speed 2 traps the slow set with a
// window-independent size; speed 1 lets both escape.
Outcome competition_statuses() {
  GraphSpec z2 = GraphSpec::lattice_std(2);
  Vertex x0 = lat2(z2, 0, 0), y0 = lat2(z2, 4, 0);
  const size_t recorded_y = 49;  // first-computation value
  Outcome out;
  std::ostringstream detail;
  std::set<size_t> y_sizes;
  for (int R : {30, 40, 50}) {
    CompetitionState fast = competition_run(z2, x0, y0, 2, R);
    if (fast.status != CompetitionStatus::y_trapped) {
      out.pass = false;
      detail << " m=2 R=" << R << " status=" << to_string(fast.status) << ";";
    }
    y_sizes.insert(fast.y.size());
    CompetitionState fair = competition_run(z2, x0, y0, 1, R);
    if (fair.status != CompetitionStatus::both_escaping) {
      out.pass = false;
      detail << " m=1 R=" << R << " status=" << to_string(fair.status) << ";";
    }
  }
  if (y_sizes.size() != 1 || *y_sizes.begin() != recorded_y) {
    out.pass = false;
    detail << " |Y| not stable at " << recorded_y << ";";
  } else {
    detail << "y_trapped with |Y|=" << recorded_y << " at R=30,40,50; both_escaping at m=1";
  }
  out.detail = detail.str();
  return out;
}

// 11. Free product cells are not alike: the cell of `a` has an interior
// degree-one vertex, the cell of `b` has none.
Outcome free_product_cell_asymmetry() {
  GraphSpec fp = GraphSpec::free_product_23();
  SiteSet ss(fp, {parse_vertex(fp, "a"), parse_vertex(fp, "b")});
  VoronoiAssignment va = voronoi_cells(ss, 10);
  DegreeProfile cell_a = cell_degree_profile(va, 0);
  DegreeProfile cell_b = cell_degree_profile(va, 1);
  Outcome out;
  out.pass = !cell_a.degree_one.empty() && cell_b.degree_one.empty();
  out.detail = "degree-1 interior vertices: cell(a)=" +
               std::to_string(cell_a.degree_one.size()) +
               ", cell(b)=" + std::to_string(cell_b.degree_one.size());
  return out;
}

// 12. The branch-and-bound solver agrees with exhaustive enumeration over
// every subset of size <= 3 of the complete candidate ball.
Outcome solver_matches_enumeration() {
  std::vector<GraphSpec> fams{GraphSpec::lattice_std(1), GraphSpec::lattice_std(2),
                              GraphSpec::lattice_diag(), GraphSpec::ladder_diag(),
                              GraphSpec::regular_tree(3)};
  Outcome out;
  int checked = 0;
  for (const GraphSpec& spec : fams) {
    for (int r = 1; r <= 5; ++r) {
      auto oracle = vtg_test::brute_force_min_cover(spec, r, 1, 3);
      CoverResult solver = min_cover(CoverInstance(spec, r, 1, std::nullopt, 3));
      bool agree = oracle ? (solver.status == CoverStatus::Cover && *solver.min_size == *oracle)
                          : solver.status == CoverStatus::NoCover;
      ++checked;
      if (!agree) {
        out.pass = false;
        out.detail += " " + spec.to_string() + " r=" + std::to_string(r) + " disagrees;";
      }
    }
  }
  if (out.pass)
    out.detail = "solver == enumeration on " + std::to_string(checked) + " instances";
  return out;
}

// 13. Sprawl: the exact mean on z:2 at r=3 sits within three standard errors
// of a 10^5-pair Monte Carlo run, and z:1 is exactly 1.
Outcome sprawl_consistency() {
  GraphSpec z2 = GraphSpec::lattice_std(2);
  SprawlResult exact = sprawl_estimate(z2, 3);
  SprawlResult mc = sprawl_estimate(z2, 3, 100000, 20250809);
  GraphSpec z1 = GraphSpec::lattice_std(1);
  SprawlResult line = sprawl_estimate(z1, 5);
  Outcome out;
  std::ostringstream detail;
  detail.precision(9);
  double gap = std::abs(exact.mean - mc.mean);
  if (gap > 3 * mc.std_error) {
    out.pass = false;
    detail << "monte carlo off by " << gap << " > 3se=" << 3 * mc.std_error << "; ";
  }
  if (line.mean != 1.0) {
    out.pass = false;
    detail << "line sprawl " << line.mean << " != 1; ";
  }
  detail << "exact=" << exact.mean << " mc=" << mc.mean << " se=" << mc.std_error
         << " line=" << line.mean;
  out.detail = detail.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"square lattice spheres need exactly four balls", square_lattice_four_cover},
      {"diagonal lattice covers with three balls past a threshold",
       diagonal_lattice_three_cover},
      {"no ball covers three hexagon corners", diagonal_lattice_lower_bound},
      {"lamplighter line eight-vertex cover", lamplighter_eight_cover},
      {"lamplighter plane spread witnesses", lamplighter_plane_spread},
      {"tree cover growth", tree_cover_growth},
      {"ladder spheres need exactly two balls", ladder_two_cover},
      {"antipodal sphere pairs on every family", antipodal_all_families},
      {"growth process reproduces voronoi cells", growth_equivalence_sweep},
      {"competition statuses on the square lattice", competition_statuses},
      {"free product cell asymmetry", free_product_cell_asymmetry},
      {"exact solver matches exhaustive enumeration", solver_matches_enumeration},
      {"sprawl estimator consistency", sprawl_consistency},
  };

  int only = 0;
  if (argc > 1 && std::strcmp(argv[1], "all") != 0) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: acceptance [1..%zu]\n", criteria.size());
    return 64;
  }

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s — %2zu. %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}
