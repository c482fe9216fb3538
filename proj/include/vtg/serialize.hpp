#pragma once
// JSON-lines records shared by the CLI and tests. Every record is a single
// line; field order is fixed so byte-identical output is reproducible.

#include <json.hpp>

#include "vtg/covering.hpp"
#include "vtg/graph.hpp"
#include "vtg/metric.hpp"
#include "vtg/voronoi.hpp"

namespace vtg {

using json = nlohmann::ordered_json;

inline json assignment_vertex_record(const VoronoiAssignment& va, const Vertex& v) {
  const auto& e = va.assign.at(v);
  json rec;
  rec["v"] = to_hex(v);
  rec["d"] = e.dist;
  rec["cells"] = e.nearest;
  return rec;
}

inline json assignment_summary_record(const VoronoiAssignment& va) {
  json rec;
  rec["v"] = 1;
  rec["type"] = "summary";
  rec["window"] = va.window.size();
  rec["cell_sizes"] = va.cell_sizes();
  rec["ties"] = va.tie_count();
  json touching = json::array();
  auto touch = va.boundary_touching();
  for (size_t i = 0; i < touch.size(); ++i)
    if (touch[i]) touching.push_back(i);
  rec["boundary_cells"] = std::move(touching);
  return rec;
}

inline json cover_result_record(const GraphSpec& spec, const CoverInstance& inst,
                                const CoverResult& res) {
  json rec;
  rec["v"] = 1;
  rec["graph"] = spec.to_string();
  rec["r"] = inst.r;
  rec["sep"] = inst.sep;
  rec["budget"] = inst.radius_budget;
  rec["status"] = to_string(res.status);
  if (res.min_size) rec["min_size"] = *res.min_size;
  if (!res.centers.empty()) {
    json centers = json::array();
    for (const Vertex& c : res.centers) centers.push_back(to_hex(c));
    rec["centers"] = std::move(centers);
  }
  rec["nodes_explored"] = res.nodes_explored;
  rec["candidates"] = res.candidate_count;
  rec["wall_ms"] = res.wall_ms;
  return rec;
}

inline json ball_meta_record(const BallTable& bt) {
  json rec;
  rec["v"] = 1;
  rec["type"] = "ball";
  rec["graph"] = bt.spec.to_string();
  rec["center"] = to_hex(bt.center);
  rec["radius"] = bt.radius;
  rec["size"] = bt.size();
  return rec;
}

// One line per vertex of the ball, sorted by encoding, after a meta line.
inline std::vector<json> to_json_lines(const BallTable& bt) {
  std::vector<json> lines{ball_meta_record(bt)};
  for (const Vertex& v : bt.vertices()) {
    json rec;
    rec["v"] = to_hex(v);
    rec["d"] = *bt.distance_of(v);
    lines.push_back(std::move(rec));
  }
  return lines;
}

}  // namespace vtg
