// vtg: Voronoi cells, competition processes, and sphere-cover certificates on
// implicit vertex-transitive graphs. JSON-lines output on stdout, diagnostics
// on stderr.
//
// Exit codes: 0 success, 1 check failed / witness not found, 2 usage error,
// 3 capacity exceeded, 4 search budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vtg/covering.hpp"
#include "vtg/graph.hpp"
#include "vtg/metric.hpp"
#include "vtg/serialize.hpp"
#include "vtg/voronoi.hpp"

namespace {

using vtg::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitBudget = 4;

struct CommonOpts {
  std::string graph;
  std::string out = "json";
  int threads = 0;  // accepted for interface stability; runs single-threaded
  size_t cap_vertices = vtg::kDefaultVertexCap;
  uint64_t cap_nodes = 10'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_grid) {
  cmd->add_option("--graph", opts.graph,
                  "graph spec: z:<d>[:std|diag|custom=(x,y);...], ll-z, ll-z2, "
                  "free23, tree:<k>, ladder")
      ->required();
  cmd->add_option("--out", opts.out, "output mode")
      ->check(CLI::IsMember(with_grid ? std::vector<std::string>{"json", "text", "grid"}
                                      : std::vector<std::string>{"json", "text"}));
  cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--cap-vertices", opts.cap_vertices, "search vertex budget");
  cmd->add_option("--cap-nodes", opts.cap_nodes, "branch-and-bound node budget");
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

// ---- voronoi ----

struct VoronoiOpts {
  CommonOpts common;
  std::vector<std::string> sites;
  int window = 6;
  std::string mode = "metric";
  bool check_equiv = false;
  bool profile = false;
};

char cell_char(const std::vector<uint16_t>& cells) {
  if (cells.size() > 1) return '*';
  return cells[0] < 26 ? static_cast<char>('A' + cells[0]) : '?';
}

void render_grid(const vtg::VoronoiAssignment& va) {
  const vtg::GraphSpec& spec = va.spec;
  int R = va.window_radius;
  if (spec.family == vtg::Family::Lattice && spec.dim == 2) {
    for (int y = R; y >= -R; --y) {
      std::string line;
      for (int x = -R; x <= R; ++x) {
        vtg::Vertex v = vtg::encode_lattice(spec, vtg::LatticePoint{{x, y}});
        auto it = va.assign.find(v);
        line.push_back(it == va.assign.end() ? ' ' : cell_char(it->second.nearest));
      }
      std::cout << line << "\n";
    }
    return;
  }
  if (spec.family == vtg::Family::LadderDiag) {
    for (int side = 1; side >= 0; --side) {
      std::string line;
      for (int n = -R; n <= R; ++n) {
        vtg::Vertex v = vtg::encode_ladder({n, static_cast<uint8_t>(side)});
        auto it = va.assign.find(v);
        line.push_back(it == va.assign.end() ? ' ' : cell_char(it->second.nearest));
      }
      std::cout << line << "\n";
    }
    return;
  }
  throw std::logic_error("grid mode requires a planar family");
}

int run_voronoi(const VoronoiOpts& opts) {
  vtg::GraphSpec spec = vtg::parse_graph_spec(opts.common.graph);
  std::vector<vtg::Vertex> sites;
  for (const std::string& s : opts.sites) sites.push_back(vtg::parse_vertex_any(spec, s));
  vtg::SiteSet ss(spec, sites);

  if (opts.check_equiv) {
    auto rep = vtg::check_growth_equivalence(ss, opts.window, opts.common.cap_vertices);
    json rec;
    rec["v"] = 1;
    rec["type"] = "equivalence";
    rec["graph"] = spec.to_string();
    rec["R"] = opts.window;
    rec["equal"] = rep.equal;
    if (rep.first_difference) rec["first_difference"] = vtg::to_hex(*rep.first_difference);
    emit(rec);
    return rep.equal ? kExitOk : kExitCheckFailed;
  }

  vtg::VoronoiAssignment va = opts.mode == "growth"
                                  ? vtg::growth_process(ss, opts.window, opts.common.cap_vertices)
                                  : vtg::voronoi_cells(ss, opts.window, opts.common.cap_vertices);

  bool grid_ok = (spec.family == vtg::Family::Lattice && spec.dim == 2) ||
                 spec.family == vtg::Family::LadderDiag;
  std::string out = opts.common.out;
  if (out == "grid" && !grid_ok) {
    std::cerr << "grid mode supports z:2 and ladder only; falling back to json\n";
    out = "json";
  }

  if (out == "grid") {
    render_grid(va);
  } else if (out == "text") {
    auto sizes = va.cell_sizes();
    auto touch = va.boundary_touching();
    for (size_t i = 0; i < sizes.size(); ++i)
      std::cout << "cell " << i << " (" << vtg::format_vertex(spec, va.sites[i])
                << "): size " << sizes[i] << (touch[i] ? ", touches boundary" : "") << "\n";
    std::cout << "ties: " << va.tie_count() << "\n";
  } else {
    json meta;
    meta["v"] = 1;
    meta["type"] = "voronoi";
    meta["graph"] = spec.to_string();
    meta["R"] = opts.window;
    meta["mode"] = opts.mode;
    json site_list = json::array();
    for (const vtg::Vertex& s : va.sites) site_list.push_back(vtg::format_vertex(spec, s));
    meta["sites"] = std::move(site_list);
    meta["cap_vertices"] = opts.common.cap_vertices;
    emit(meta);
    for (const vtg::Vertex& v : va.window.vertices())
      emit(vtg::assignment_vertex_record(va, v));
    emit(vtg::assignment_summary_record(va));
  }

  if (opts.profile) {
    for (size_t i = 0; i < va.sites.size(); ++i) {
      vtg::DegreeProfile prof = vtg::cell_degree_profile(va, i);
      if (out == "text" || out == "grid") {
        std::cout << "cell " << i << ": interior " << prof.interior_count
                  << ", degree-1 vertices " << prof.degree_one.size() << "\n";
      } else {
        json rec;
        rec["v"] = 1;
        rec["type"] = "profile";
        rec["cell"] = i;
        rec["interior"] = prof.interior_count;
        rec["boundary_excluded"] = prof.boundary_excluded;
        json hist;
        for (const auto& [deg, count] : prof.histogram) hist[std::to_string(deg)] = count;
        rec["histogram"] = std::move(hist);
        json ones = json::array();
        for (const vtg::Vertex& v : prof.degree_one) ones.push_back(vtg::to_hex(v));
        rec["degree_one"] = std::move(ones);
        emit(rec);
      }
    }
  }
  return kExitOk;
}

// ---- compete ----

struct CompeteOpts {
  CommonOpts common;
  std::string x0, y0;
  int m = 1;
  int window = 20;
  int max_steps = 100000;
};

int run_compete(const CompeteOpts& opts) {
  vtg::GraphSpec spec = vtg::parse_graph_spec(opts.common.graph);
  vtg::Vertex x0 = vtg::parse_vertex_any(spec, opts.x0);
  vtg::Vertex y0 = vtg::parse_vertex_any(spec, opts.y0);
  vtg::CompetitionState st = vtg::competition_run(spec, x0, y0, opts.m, opts.window,
                                                  opts.max_steps, opts.common.cap_vertices);
  if (opts.common.out == "text") {
    std::cout << "status " << vtg::to_string(st.status) << " after " << st.steps
              << " steps; |X| = " << st.x.size() << ", |Y| = " << st.y.size() << "\n";
  } else {
    for (size_t i = 0; i < st.size_history.size(); ++i) {
      json rec;
      rec["v"] = 1;
      rec["type"] = "step";
      rec["n"] = i + 1;
      rec["x_size"] = st.size_history[i].first;
      rec["y_size"] = st.size_history[i].second;
      emit(rec);
    }
    json fin;
    fin["v"] = 1;
    fin["type"] = "final";
    fin["graph"] = spec.to_string();
    fin["m"] = st.m;
    fin["R"] = st.window_radius;
    fin["status"] = vtg::to_string(st.status);
    fin["steps"] = st.steps;
    fin["x_size"] = st.x.size();
    fin["y_size"] = st.y.size();
    fin["x_clipped"] = st.x_clipped;
    fin["y_clipped"] = st.y_clipped;
    fin["cap_vertices"] = opts.common.cap_vertices;
    emit(fin);
  }
  return kExitOk;
}

// ---- cover ----

struct CoverOpts {
  CommonOpts common;
  bool search = false;
  bool probe = false;
  bool eight = false;
  std::vector<std::string> centers;  // non-empty selects verify mode
  std::string radii;                 // single r, or a:b range for probe
  int sep = 1;
  std::optional<int> budget;
  int max_balls = 8;
};

std::vector<int> parse_radii(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {static_cast<int>(vtg::detail::parse_int(text))};
  int lo = static_cast<int>(vtg::detail::parse_int(text.substr(0, colon)));
  int hi = static_cast<int>(vtg::detail::parse_int(text.substr(colon + 1)));
  if (lo > hi) throw std::invalid_argument("radius range must be increasing");
  std::vector<int> out;
  for (int r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

json check_record(const vtg::GraphSpec& spec, const vtg::CoverInstance& inst,
                  const vtg::CoverCheck& chk) {
  json rec;
  rec["v"] = 1;
  rec["type"] = "check";
  rec["graph"] = spec.to_string();
  rec["r"] = inst.r;
  rec["sep"] = inst.sep;
  rec["budget"] = inst.radius_budget;
  rec["ok"] = chk.ok;
  if (!chk.ok) rec["violation"] = chk.violation;
  if (chk.uncovered_witness) rec["witness"] = vtg::to_hex(*chk.uncovered_witness);
  if (chk.close_pair) {
    rec["pair"] = json::array(
        {vtg::to_hex(chk.close_pair->first), vtg::to_hex(chk.close_pair->second)});
  }
  return rec;
}

int run_cover(const CoverOpts& opts) {
  vtg::GraphSpec spec = vtg::parse_graph_spec(opts.common.graph);
  std::vector<int> radii = parse_radii(opts.radii);

  int modes = static_cast<int>(opts.search) + static_cast<int>(opts.probe) +
              static_cast<int>(opts.eight) + static_cast<int>(!opts.centers.empty());
  if (modes != 1)
    throw CLI::ValidationError("cover", "choose exactly one of --search, --probe, --eight, --center");

  if (opts.eight) {
    if (spec.family != vtg::Family::LamplighterLine)
      throw CLI::ValidationError("cover", "--eight applies to ll-z");
    if (radii.size() != 1) throw CLI::ValidationError("cover", "--eight takes a single -r");
    auto res = vtg::ll_z_eight_cover(opts.sep, radii[0], opts.common.cap_vertices);
    json rec;
    rec["v"] = 1;
    rec["type"] = "eight";
    rec["graph"] = spec.to_string();
    rec["r"] = radii[0];
    rec["sep"] = opts.sep;
    rec["centers_valid"] = res.centers_valid;
    rec["status"] = res.cover.ok && res.centers_valid ? "Cover" : "NotCover";
    if (!res.cover.ok) rec["violation"] = res.cover.violation;
    if (res.cover.uncovered_witness)
      rec["witness"] = vtg::to_hex(*res.cover.uncovered_witness);
    json centers = json::array();
    for (const vtg::Vertex& c : res.centers) centers.push_back(vtg::to_hex(c));
    rec["centers"] = std::move(centers);
    emit(rec);
    return res.cover.ok && res.centers_valid ? kExitOk : kExitCheckFailed;
  }

  if (!opts.centers.empty()) {
    if (radii.size() != 1) throw CLI::ValidationError("cover", "verify takes a single -r");
    vtg::CoverInstance inst(spec, radii[0], opts.sep, opts.budget,
                            std::max<int>(8, opts.centers.size()));
    inst.vertex_cap = opts.common.cap_vertices;
    std::vector<vtg::Vertex> centers;
    for (const std::string& c : opts.centers)
      centers.push_back(vtg::parse_vertex_any(spec, c));
    vtg::CoverCheck chk = vtg::cover_check(inst, centers, opts.common.cap_vertices);
    emit(check_record(spec, inst, chk));
    return chk.ok ? kExitOk : kExitCheckFailed;
  }

  if (opts.search) {
    if (radii.size() != 1) throw CLI::ValidationError("cover", "--search takes a single -r");
    vtg::CoverInstance inst(spec, radii[0], opts.sep, opts.budget, opts.max_balls);
    inst.vertex_cap = opts.common.cap_vertices;
    inst.node_budget = opts.common.cap_nodes;
    vtg::CoverResult res = vtg::min_cover(inst);
    emit(vtg::cover_result_record(spec, inst, res));
    return res.status == vtg::CoverStatus::BudgetExceeded ? kExitBudget : kExitOk;
  }

  // --probe
  vtg::SurvivalProbe probe = vtg::survival_probe(spec, opts.sep, radii, opts.max_balls,
                                                 opts.common.cap_vertices, opts.common.cap_nodes);
  bool budget_hit = false;
  for (const vtg::ProbeRow& row : probe.rows) {
    vtg::CoverInstance inst(spec, row.r, opts.sep, std::nullopt, opts.max_balls);
    emit(vtg::cover_result_record(spec, inst, row.result));
    budget_hit |= row.result.status == vtg::CoverStatus::BudgetExceeded;
  }
  json ev;
  ev["v"] = 1;
  ev["type"] = "evidence";
  ev["graph"] = spec.to_string();
  ev["sep"] = opts.sep;
  if (probe.min_k()) {
    ev["min_k"] = *probe.min_k();
    ev["max_k"] = *probe.max_k();
    ev["lower_bound_evidence"] = "s(G) >= " + std::to_string(*probe.min_k());
    if (probe.all_covered())
      ev["upper_bound_evidence"] = "s(G) <= " + std::to_string(*probe.max_k());
  }
  ev["max_balls"] = opts.max_balls;
  ev["cap_nodes"] = opts.common.cap_nodes;
  ev["label"] = "EVIDENCE";  // finitely many radii never decide the supremum
  emit(ev);
  return budget_hit ? kExitBudget : kExitOk;
}

// ---- witness ----

struct WitnessOpts {
  CommonOpts common;
  bool antipodal = false;
  bool spread = false;
  bool sprawl = false;
  int r = 4;
  int n = 3;
  int min_pair = 2;
  bool exact = false;
  uint64_t samples = 0;
  uint64_t seed = 0;
};

int run_witness(const WitnessOpts& opts) {
  vtg::GraphSpec spec = vtg::parse_graph_spec(opts.common.graph);
  int modes = static_cast<int>(opts.antipodal) + static_cast<int>(opts.spread) +
              static_cast<int>(opts.sprawl);
  if (modes != 1)
    throw CLI::ValidationError("witness", "choose exactly one of --antipodal, --spread, --sprawl");

  if (opts.antipodal) {
    vtg::AntipodalWitness w = vtg::antipodal_witness(spec, opts.r, opts.common.cap_vertices);
    json rec;
    rec["v"] = 1;
    rec["type"] = "antipodal";
    rec["graph"] = spec.to_string();
    rec["r"] = opts.r;
    rec["found"] = w.found;
    if (w.found) {
      rec["u"] = vtg::to_hex(w.u);
      rec["w"] = vtg::to_hex(w.w);
      rec["u_text"] = vtg::format_vertex(spec, w.u);
      rec["w_text"] = vtg::format_vertex(spec, w.w);
      rec["distance"] = w.distance;
    }
    rec["pairs_checked"] = w.pairs_checked;
    emit(rec);
    return w.found ? kExitOk : kExitCheckFailed;
  }

  if (opts.spread) {
    vtg::SpreadWitness w =
        vtg::spread_witness(spec, opts.r, opts.n, opts.min_pair, opts.common.cap_vertices);
    json rec;
    rec["v"] = 1;
    rec["type"] = "spread";
    rec["graph"] = spec.to_string();
    rec["r"] = opts.r;
    rec["n"] = opts.n;
    rec["min_pair"] = opts.min_pair;
    rec["found"] = w.found;
    if (w.found) {
      json ws = json::array(), texts = json::array();
      for (const vtg::Vertex& v : w.witnesses) {
        ws.push_back(vtg::to_hex(v));
        texts.push_back(vtg::format_vertex(spec, v));
      }
      rec["witnesses"] = std::move(ws);
      rec["witness_texts"] = std::move(texts);
      rec["pair_distances"] = w.pair_distances;
    }
    rec["pairs_checked"] = w.pairs_checked;
    emit(rec);
    return w.found ? kExitOk : kExitCheckFailed;
  }

  // --sprawl
  if (opts.exact == (opts.samples > 0))
    throw CLI::ValidationError("witness", "--sprawl needs exactly one of --exact, --samples");
  vtg::SprawlResult s =
      opts.exact
          ? vtg::sprawl_estimate(spec, opts.r, std::nullopt, 0, opts.common.cap_vertices)
          : vtg::sprawl_estimate(spec, opts.r, opts.samples, opts.seed, opts.common.cap_vertices);
  json rec;
  rec["v"] = 1;
  rec["type"] = "sprawl";
  rec["graph"] = spec.to_string();
  rec["r"] = opts.r;
  rec["mode"] = s.exact ? "exact" : "sampled";
  rec["sphere"] = s.sphere_size;
  rec["pairs"] = s.pairs;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", s.mean);
  rec["mean"] = buf;
  if (!s.exact) {
    std::snprintf(buf, sizeof(buf), "%.6f", s.std_error);
    rec["std_error"] = buf;
    rec["seed"] = s.seed;
  }
  emit(rec);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voronoi decompositions and sphere-cover certificates on "
               "vertex-transitive graphs"};
  app.require_subcommand(1);

  VoronoiOpts vopts;
  CLI::App* voronoi = app.add_subcommand("voronoi", "Voronoi cells on a ball window");
  add_common(voronoi, vopts.common, true);
  voronoi->add_option("--site", vopts.sites, "site vertex (literal or hex:...)")
      ->required()
      ->take_all();
  voronoi->add_option("-R,--window", vopts.window, "window radius")->required();
  voronoi->add_option("--mode", vopts.mode, "engine")
      ->check(CLI::IsMember({"metric", "growth"}));
  voronoi->add_flag("--check-equiv", vopts.check_equiv,
                    "compare growth and metric engines vertexwise");
  voronoi->add_flag("--profile", vopts.profile, "report within-cell degree profiles");

  CompeteOpts copts;
  CLI::App* compete = app.add_subcommand("compete", "two-species competition process");
  add_common(compete, copts.common, false);
  compete->add_option("--x", copts.x0, "start vertex of the fast set")->required();
  compete->add_option("--y", copts.y0, "start vertex of the slow set")->required();
  compete->add_option("-m,--speed", copts.m, "speed of the fast set");
  compete->add_option("-R,--window", copts.window, "window radius")->required();
  compete->add_option("--max-steps", copts.max_steps, "step cap");

  CoverOpts kopts;
  CLI::App* cover = app.add_subcommand("cover", "sphere-cover certificates");
  add_common(cover, kopts.common, false);
  cover->add_flag("--search", kopts.search, "exact minimum cover");
  cover->add_flag("--probe", kopts.probe, "minimum covers over a radius range");
  cover->add_flag("--eight", kopts.eight, "the eight-vertex lamplighter cover");
  cover->add_option("--center", kopts.centers, "verify these centers")->take_all();
  cover->add_option("-r,--radius", kopts.radii, "sphere radius (or a:b range for --probe)")
      ->required();
  cover->add_option("-d,--sep", kopts.sep, "minimum center separation");
  cover->add_option("--budget", kopts.budget, "ball radius budget (default r-1)");
  cover->add_option("--max-balls", kopts.max_balls, "largest cover size searched");

  WitnessOpts wopts;
  CLI::App* witness = app.add_subcommand("witness", "sphere witnesses and sprawl");
  add_common(witness, wopts.common, false);
  witness->add_flag("--antipodal", wopts.antipodal, "two sphere points at distance 2r");
  witness->add_flag("--spread", wopts.spread, "n sphere points pairwise far apart");
  witness->add_flag("--sprawl", wopts.sprawl, "mean normalized sphere distance");
  witness->add_option("-r,--radius", wopts.r, "sphere radius")->required();
  witness->add_option("-n,--count", wopts.n, "number of spread witnesses");
  witness->add_option("--min-pair", wopts.min_pair, "minimum pairwise distance");
  witness->add_flag("--exact", wopts.exact, "enumerate all sphere pairs");
  witness->add_option("--samples", wopts.samples, "sampled pairs");
  witness->add_option("--seed", wopts.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (voronoi->parsed()) return run_voronoi(vopts);
    if (compete->parsed()) return run_compete(copts);
    if (cover->parsed()) return run_cover(kopts);
    return run_witness(wopts);
  } catch (const vtg::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
