#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridshell/flowcat.hpp"
#include "gridshell/homology.hpp"
#include "gridshell/shelling.hpp"

namespace gs {

// One resolved invocation. Grids come either from paths or from preloaded
// (name, text) pairs; verify consumes all of them, the other commands the
// first.
struct RunConfig {
  std::string command;
  std::vector<std::string> grid_paths;
  std::vector<std::pair<std::string, std::string>> grid_texts;

  std::string flavor = "tilde";    // homology: tilde | minus
  std::optional<int> sector;       // homology: Alexander sector filter
  std::optional<int> floor;        // homology: Maslov floor (minus only)
  std::optional<double> line_pos;  // shelling: one placement of the line
  int interval_cap = 4;            // shelling: max interval length swept
  int gap_cap = 3;                 // flowcat: max Maslov gap
  long long budget = 1000000;      // chain enumeration budget
  bool json = false;
  bool facets = false;  // flowcat: include certificates and facet lists
  int threads = 1;
  int gen_cap = 8;
};

struct RunResult {
  int exit_code = 0;
  std::string report;  // stdout payload
  std::string error;   // diagnostic on nonzero exit
};

// Executes a command. Never throws; failures land in exit_code/error.
RunResult run(const RunConfig& cfg);

// Helpers shared with tests.
std::string grid_fingerprint(const GridDiagram& g);
std::vector<int> minus_sectors(const GridDiagram& g, int m_floor, int cap);

}  // namespace gs
