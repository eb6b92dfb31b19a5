#include "doctest.h"
#include "helpers.hpp"
#include "gridshell/runner.hpp"

using namespace gs;

namespace {

RunConfig base(const std::string& command, const std::string& grid) {
  RunConfig cfg;
  cfg.command = command;
  cfg.grid_paths = {gstest::corpus_path(grid)};
  cfg.json = true;
  return cfg;
}

}  // namespace

TEST_CASE("homology command emits the documented schema") {
  RunConfig cfg = base("homology", "unknot-2");
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report.find("\"version\": \"tilde\"") != std::string::npos);
  CHECK(res.report.find("\"dims\"") != std::string::npos);
  CHECK(res.report.find("\"valid_above\": null") != std::string::npos);
  // dims [[M, A, dim], ...] sorted by (A, M): [[-1,-1,1],[0,0,1]]
  CHECK(res.report.find("[\n      -1,\n      -1,\n      1\n    ]") !=
        std::string::npos);
}

TEST_CASE("minus homology requires a floor and reports the band") {
  RunConfig cfg = base("homology", "unknot-2");
  cfg.flavor = "minus";
  const RunResult missing = run(cfg);
  CHECK(missing.exit_code == 1);

  cfg.floor = -6;
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report.find("\"valid_above\": -5") != std::string::npos);

  cfg.sector = -1;
  const RunResult sector = run(cfg);
  REQUIRE(sector.exit_code == 0);
  CHECK(sector.report.find("-2,\n      -1,\n      1") != std::string::npos);
}

TEST_CASE("shelling command sweeps cleanly") {
  RunConfig cfg = base("shelling", "unknot-3");
  cfg.interval_cap = 4;
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report.find("\"el_failures\": 0") != std::string::npos);
}

TEST_CASE("flowcat command sweeps cleanly") {
  RunConfig cfg = base("flowcat", "unknot-3");
  cfg.gap_cap = 3;
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report.find("\"ball_failures\": 0") != std::string::npos);
}

TEST_CASE("verify passes on the corpus and fails on corrupt input") {
  RunConfig cfg = base("verify", "unknot-2");
  cfg.grid_paths.push_back(gstest::corpus_path("unknot-3"));
  const RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.report.find("\"failures\": 0") != std::string::npos);

  RunConfig bad;
  bad.command = "verify";
  bad.grid_texts = {{"broken", "XX\nOO"}};
  const RunResult broken = run(bad);
  CHECK(broken.exit_code == 1);
  CHECK(!broken.error.empty());
}

TEST_CASE("single- and multi-threaded reports are byte identical") {
  for (const char* cmd : {"shelling", "flowcat"}) {
    RunConfig cfg = base(cmd, "unknot-3");
    cfg.threads = 1;
    const RunResult one = run(cfg);
    cfg.threads = 4;
    const RunResult four = run(cfg);
    REQUIRE(one.exit_code == 0);
    CHECK(one.report == four.report);
  }
}

TEST_CASE("unknown command maps to an input error") {
  RunConfig cfg = base("nonsense", "unknot-2");
  CHECK(run(cfg).exit_code == 1);
}
