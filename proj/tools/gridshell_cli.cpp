// Command line front end. Talks to the library exclusively through the
// C API in gridshell.h.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridshell.h"

namespace {

struct CommonOpts {
  std::vector<std::string> grids;
  std::string flavor = "tilde";
  int sector = 0;
  bool sector_set = false;
  int floor = 0;
  bool floor_set = false;
  double line_pos = 0.0;
  bool line_set = false;
  int interval_cap = 4;
  int gap_cap = 3;
  long long budget = 1000000;
  bool json = false;
  bool facets = false;
  int threads = 1;
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("grid", o.grids, "grid diagram file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_flag("--json", o.json, "emit a JSON report");
  sub->add_option("--budget", o.budget, "chain enumeration budget");
  sub->add_option("--threads", o.threads, "worker threads");
}

int run_command(const char* command, const CommonOpts& o) {
  gs_session* s = gs_session_new();
  auto bail = [&](const char* msg) {
    std::fprintf(stderr, "gridshell: %s\n", msg);
    gs_session_free(s);
    return 1;
  };

  for (const auto& path : o.grids)
    if (gs_add_grid_file(s, path.c_str()) != GS_OK)
      return bail("cannot register grid file");

  auto set = [&](const char* key, const std::string& value) {
    return gs_set_option(s, key, value.c_str()) == GS_OK;
  };
  bool ok = set("flavor", o.flavor) &&
            set("format", o.json ? "json" : "text") &&
            set("interval-cap", std::to_string(o.interval_cap)) &&
            set("gap-cap", std::to_string(o.gap_cap)) &&
            set("budget", std::to_string(o.budget)) &&
            set("threads", std::to_string(o.threads)) &&
            set("facets", o.facets ? "1" : "0");
  if (ok && o.sector_set) ok = set("sector", std::to_string(o.sector));
  if (ok && o.floor_set) ok = set("floor", std::to_string(o.floor));
  if (ok && o.line_set) ok = set("line-pos", std::to_string(o.line_pos));
  if (!ok) return bail(gs_last_error(s));

  const gs_status st = gs_run(s, command);
  const char* report = gs_report(s);
  if (report && report[0]) std::fputs(report, stdout);
  if (st != GS_OK) {
    const char* err = gs_last_error(s);
    if (err && err[0]) std::fprintf(stderr, "gridshell: %s\n", err);
  }
  gs_session_free(s);
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid diagram homology, shellability and flow categories"};
  app.require_subcommand(1);

  CommonOpts ho, so, fo, vo;

  CLI::App* homology =
      app.add_subcommand("homology", "bigraded homology of a grid diagram");
  add_common(homology, ho);
  homology->add_option("--flavor", ho.flavor, "tilde or minus")
      ->check(CLI::IsMember({"tilde", "minus"}));
  homology->add_option("--sector", ho.sector, "Alexander sector")
      ->each([&](const std::string&) { ho.sector_set = true; });
  homology->add_option("--floor", ho.floor, "Maslov floor (minus flavor)")
      ->each([&](const std::string&) { ho.floor_set = true; });

  CLI::App* shelling = app.add_subcommand(
      "shelling", "verify the edge labeling shells every closed interval");
  add_common(shelling, so);
  shelling->add_option("--interval-cap", so.interval_cap,
                       "max interval length swept");
  shelling->add_option("--line-pos", so.line_pos,
                       "one placement of the reference line (default: all)")
      ->each([&](const std::string&) { so.line_set = true; });

  CLI::App* flowcat = app.add_subcommand(
      "flowcat", "certify morphism spaces and compositions");
  add_common(flowcat, fo);
  flowcat->add_option("--gap-cap", fo.gap_cap, "max Maslov gap swept");
  flowcat->add_flag("--facets", fo.facets,
                    "include certificates and facet lists");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the invariant suite over the given grids");
  add_common(verify, vo);

  CLI11_PARSE(app, argc, argv);

  if (homology->parsed()) return run_command("homology", ho);
  if (shelling->parsed()) return run_command("shelling", so);
  if (flowcat->parsed()) return run_command("flowcat", fo);
  if (verify->parsed()) return run_command("verify", vo);
  return 1;
}
