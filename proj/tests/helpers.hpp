#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "gridshell/grid.hpp"
#include "gridshell/states.hpp"

namespace gstest {

inline std::string corpus_path(const std::string& name) {
  return std::string(GRIDSHELL_CORPUS_DIR) + "/" + name + ".grid";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline gs::GridDiagram corpus_grid(const std::string& name) {
  return gs::GridDiagram::parse(read_file(corpus_path(name)));
}

// The 2x2 unknot: X in columns (0,1) at rows (1,0); O at rows (0,1).
inline gs::GridDiagram unknot2() {
  return gs::GridDiagram::parse("XO\nOX\n");
}

inline gs::Generator perm(std::vector<int> sigma) {
  return gs::Generator{std::move(sigma)};
}

}  // namespace gstest
