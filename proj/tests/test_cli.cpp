#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "vtg/serialize.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(VTG_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

// Wall-clock fields vary run to run; pin them before comparing.
std::string normalize(std::string text) {
  static const std::regex wall("\"wall_ms\":[0-9]+");
  return std::regex_replace(text, wall, "\"wall_ms\":0");
}

void check_golden(const std::string& name, const std::string& args) {
  RunResult res = run_cli(args);
  CHECK(res.exit_code == 0);
  std::string got = normalize(res.out);

  std::string path = std::string(VTG_GOLDEN_DIR) + "/" + name + ".txt";
  if (std::getenv("VTG_UPDATE_GOLDENS")) {
    std::ofstream(path) << got;
    SUCCEED();
    return;
  }
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream want;
  want << in.rdbuf();
  CHECK(got == want.str());
}

}  // namespace

TEST_CASE("golden outputs are byte stable") {
  check_golden("voronoi_line", "voronoi --graph z:1:std --site=-2 --site=2 -R 5");
  check_golden("voronoi_grid", "voronoi --graph z:2:std --site=0,0 --site=3,0 -R 6 --out grid");
  check_golden("voronoi_profile", "voronoi --graph free23 --site=a --site=b -R 6 --profile");
  check_golden("voronoi_equiv", "voronoi --graph z:2:diag --site=0,0 --site=5,1 -R 9 --check-equiv");
  check_golden("voronoi_ladder", "voronoi --graph ladder --site=-3,0 --site=3,1 -R 5 --out grid");
  check_golden("compete_plane", "compete --graph z:2:std --x=0,0 --y=4,0 -m 2 -R 30");
  check_golden("compete_tree", "compete --graph tree:3 --x=e --y=g1 -m 1 -R 6 --out text");
  check_golden("cover_search", "cover --graph z:2:std --search -r 6 -d 1");
  check_golden("cover_verify",
               "cover --graph z:2:std --center=0,5 --center=5,0 --center=0,-5 --center=-5,0 "
               "-r 5 -d 1");
  check_golden("cover_probe", "cover --graph tree:3 --probe -d 1 -r 3:5");
  check_golden("cover_eight", "cover --graph ll-z --eight -d 1 -r 8");
  check_golden("witness_sprawl",
               "witness --graph z:2:std --sprawl -r 3 --samples 2000 --seed 42");
}

TEST_CASE("identical configs produce byte-identical output") {
  std::string args = "witness --graph z:2:std --sprawl -r 3 --samples 500 --seed 7";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("growth engine emits the same assignment records") {
  RunResult metric = run_cli("voronoi --graph tree:3 --site=g1 --site=g2g3 -R 5");
  RunResult growth = run_cli("voronoi --graph tree:3 --site=g1 --site=g2g3 -R 5 --mode growth");
  CHECK(metric.exit_code == 0);
  CHECK(growth.exit_code == 0);
  auto body = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
  CHECK(body(metric.out) == body(growth.out));  // identical below the meta line
  CHECK(metric.out.find("\"mode\":\"metric\"") != std::string::npos);
  CHECK(growth.out.find("\"mode\":\"growth\"") != std::string::npos);
}

TEST_CASE("every json record is one line with a version field") {
  RunResult res = run_cli("voronoi --graph z:1:std --site=-1 --site=1 -R 3");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  size_t records = 0;
  while (std::getline(lines, line)) {
    auto rec = vtg::json::parse(line);  // every line parses alone
    CHECK(rec.contains("v"));
    ++records;
  }
  CHECK(records == 9);  // meta + 7 window vertices + summary
}

TEST_CASE("exit codes") {
  CHECK(run_cli("cover --graph nope --search -r 3").exit_code == 2);
  CHECK(run_cli("voronoi --graph z:2:std -R 5").exit_code == 2);  // no sites
  CHECK(run_cli("voronoi --graph z:2:std --site=9,9,9 -R 5").exit_code == 2);
  CHECK(run_cli("cover --graph z:2:std --search --probe -r 3").exit_code == 2);

  // A missing compass point leaves an uncovered witness: check failure.
  RunResult fail =
      run_cli("cover --graph z:2:std --center=0,5 --center=5,0 --center=0,-5 -r 5 -d 1");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("\"violation\":\"uncovered\"") != std::string::npos);

  CHECK(run_cli("witness --graph z:1:std --spread -r 5 -n 3 --min-pair 6").exit_code == 1);
  CHECK(run_cli("voronoi --graph z:2:std --site=0,0 -R 30 --cap-vertices 10").exit_code == 3);
  CHECK(run_cli("cover --graph z:2:std --search -r 6 -d 1 --cap-nodes 0").exit_code == 4);
  CHECK(run_cli("witness --graph ll-z --antipodal -r 4").exit_code == 0);
}

TEST_CASE("spread and antipodal witnesses through the cli") {
  RunResult spread = run_cli("witness --graph tree:3 --spread -r 4 -n 3 --min-pair 8");
  CHECK(spread.exit_code == 0);
  CHECK(spread.out.find("\"found\":true") != std::string::npos);
  CHECK(spread.out.find("\"pair_distances\"") != std::string::npos);

  RunResult anti = run_cli("witness --graph ll-z --antipodal -r 5");
  CHECK(anti.exit_code == 0);
  CHECK(anti.out.find("\"u_text\":\"pos=5;lamps=\"") != std::string::npos);
  CHECK(anti.out.find("\"w_text\":\"pos=-5;lamps=\"") != std::string::npos);
  CHECK(anti.out.find("\"distance\":10") != std::string::npos);
}

TEST_CASE("grid mode falls back to json for non-planar families") {
  RunResult res = run_cli("voronoi --graph ll-z '--site=pos=0;lamps=' '--site=pos=3;lamps=' "
                          "-R 4 --out grid",
                          true);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("falling back to json") != std::string::npos);
  CHECK(res.out.find("\"type\":\"voronoi\"") != std::string::npos);
}

TEST_CASE("ball tables serialize to json lines") {
  vtg::GraphSpec z1 = vtg::GraphSpec::lattice_std(1);
  vtg::BallTable bt = vtg::ball(z1, vtg::origin(z1), 2);
  auto lines = vtg::to_json_lines(bt);
  REQUIRE(lines.size() == 6);  // meta + 5 vertices
  CHECK(lines[0]["type"] == "ball");
  CHECK(lines[0]["size"] == 5);
  for (size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].contains("v"));
    CHECK(lines[i]["d"].get<int>() <= 2);
  }
}
