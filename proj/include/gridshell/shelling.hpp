#pragma once

#include <string>
#include <vector>

#include "gridshell/poset.hpp"

namespace gs {

// The vertical reference circle, disjoint from the beta circles: it runs
// at x = cell + 1/2.
struct CutLine {
  int cell = 0;

  static CutLine rightmost(const GridDiagram& g) { return CutLine{g.n() - 1}; }
  double position() const { return cell + 0.5; }
};

// The label of a cover rectangle: s is 0 when the rectangle meets the
// line, i counts beta circles from the line to the rectangle's left edge
// (inclusive; leftward when s = 0, rightward when s = 1), t is the width.
// Triples compare lexicographically.
struct LabelTriple {
  int s = 0;
  int i = 0;
  int t = 0;

  bool operator==(const LabelTriple& o) const {
    return s == o.s && i == o.i && t == o.t;
  }
  bool operator<(const LabelTriple& o) const {
    if (s != o.s) return s < o.s;
    if (i != o.i) return i < o.i;
    return t < o.t;
  }
  bool operator<=(const LabelTriple& o) const { return *this < o || *this == o; }
};

LabelTriple label(const GridDiagram& g, CutLine l, const Rectangle& r);

// Labels of the consecutive covers of a maximal chain, bottom to top.
std::vector<LabelTriple> chain_labeling(const GridDiagram& g, CutLine l,
                                        const Interval& iv,
                                        const std::vector<int>& chain);

struct ELReport {
  std::string interval_id;
  long long chain_count = 0;
  std::vector<std::vector<LabelTriple>> labelings;
  std::vector<int> weak_increasing;    // indices of weakly increasing chains
  std::vector<int> strict_increasing;  // indices of strictly increasing ones
  int lex_min_chain = -1;
  bool labelings_distinct = false;
  bool lex_min_is_increasing = false;
  bool verdict_el_weak = false;    // exactly one weakly increasing, the lex min
  bool verdict_el_strict = false;  // same in the strict reading
};

ELReport verify_el(const GridDiagram& g, CutLine l, const Interval& iv,
                   long long budget = 1000000);

// Maximal chains sorted by their labelings (lexicographically; ties, which
// never arise, fall back to the chains themselves).
std::vector<std::vector<int>> shelling_order(const GridDiagram& g, CutLine l,
                                             const Interval& iv,
                                             long long budget = 1000000);

// The shelling condition, verbatim: for all i < j there are k < j and a
// vertex v of facet j with f_i cap f_j contained in f_k cap f_j = f_j - v.
bool verify_bjorner(const std::vector<std::vector<int>>& facets);

enum class ThinClass { Thin, Subthin, Neither };

// Counts, for every submaximal chain, the maximal chains covering it.
// Posets whose maximal chains have unequal lengths classify as Neither.
ThinClass classify_thin(const FinitePoset& p);

// Number of beta circles on which the boundary of the union of two
// rectangles is nonzero. For a strictly decreasing pair of consecutive
// covers this is 3 or 4.
int beta_support(int n, const Rectangle& r1, const Rectangle& r2);

struct ShellingSweepOptions {
  int max_gap = 3;
  std::vector<int> line_cells;  // empty means every placement 0..n-1
  long long budget = 1000000;
  int threads = 1;
  bool check_bjorner = true;
  int gen_cap = 8;
  int max_examples = 3;
};

struct ShellingSweepStats {
  long long intervals = 0;
  long long verifications = 0;  // interval x line placements
  long long chains = 0;
  long long el_failures = 0;
  long long weak_strict_mismatches = 0;
  long long hexagons_checked = 0;
  long long hexagon_violations = 0;
  long long bjorner_checked = 0;
  long long bjorner_failures = 0;
  std::vector<std::string> failures;

  long long failure_total() const {
    return el_failures + hexagon_violations + bjorner_failures;
  }
};

// Verifies the EL property over every closed interval of Maslov gap at
// most max_gap whose top has zero U exponents; every interval of the grid
// poset is a U-translate of one of these.
ShellingSweepStats shelling_sweep(const GridDiagram& g,
                                  const MarkingNumbering& num,
                                  const ShellingSweepOptions& opts);

struct ThinnessStats {
  long long intervals = 0;
  long long violations = 0;
  std::vector<std::string> failures;
};

// Exhaustive check that every length-3 interval has exactly two maximal
// chains.
ThinnessStats thinness_sweep(const GridDiagram& g, const MarkingNumbering& num,
                             int threads = 1, int gen_cap = 8);

}  // namespace gs
