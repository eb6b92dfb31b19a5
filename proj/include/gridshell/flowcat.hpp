#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridshell/shelling.hpp"

namespace gs {

// The morphism space from x down to y: the order complex of the poset of
// chains of [y,x] containing both endpoints. Pure of dimension
// M(x) - M(y) - 1; its vertices are those chains.
struct MorSpace {
  GridState x;
  GridState y;
  int dim = 0;
  Interval iv;
  ChainPosetAbove bary;
  SimplicialComplex complex;
};

MorSpace mor_complex(const GridDiagram& g, const MarkingNumbering& num,
                     const GridState& y, const GridState& x,
                     int length_cap = 7, long long budget = 1000000);

// Facets formed by the ridges lying in exactly one facet. Pure input only.
SimplicialComplex boundary_complex(const SimplicialComplex& s);

enum class CertVerdict { Ball, Sphere, Unknown };

struct BallCertificate {
  CertVerdict verdict = CertVerdict::Unknown;
  bool pure = false;
  bool pseudomanifold = false;  // every ridge in at most 2 facets
  bool has_free_ridge = false;  // some ridge in exactly 1 facet
  bool shelled = false;
  std::vector<int> shelling;  // facet indices in shelling order
  long long euler = 0;
  std::vector<long long> f_vec;
  long long boundary_facets = 0;
  long long boundary_euler = 0;
};

// Shelling search (greedy with backtracking under a node budget) plus the
// pseudomanifold/Euler bookkeeping that upgrades "shellable" to a ball or
// sphere recognition. Unknown only when the search exhausts its budget or
// the complex fails the structural requirements.
BallCertificate certify(const SimplicialComplex& s,
                        const std::vector<int>* seed_order = nullptr,
                        long long node_budget = 200000);

// Composition axioms for a triple z < y < x:
//   iso:      chains-pairs multiply to the poset of chains through y,
//   embed:    the induced simplicial map is injective into the boundary,
//   coverage: every boundary facet of Mor(x,z) comes from some middle y',
//   counts:   image facet counts over all y' add up to the boundary facets.
struct CompositionCheck {
  bool iso_ok = false;
  bool embed_ok = false;
  bool coverage_ok = false;
  bool counts_ok = false;
  bool pass() const { return iso_ok && embed_ok && coverage_ok && counts_ok; }
};

CompositionCheck verify_composition(const GridDiagram& g,
                                    const MarkingNumbering& num,
                                    const GridState& z, const GridState& y,
                                    const GridState& x, int length_cap = 7,
                                    long long budget = 1000000);

struct FlowcatSweepOptions {
  int max_gap = 3;
  int length_cap = 7;
  long long budget = 1000000;
  long long shell_budget = 200000;
  int threads = 1;
  int gen_cap = 8;
  int max_examples = 3;
  bool compositions = true;
};

struct FlowcatSweepStats {
  long long mor_spaces = 0;
  long long balls = 0;
  long long ball_failures = 0;
  long long boundaries_checked = 0;
  long long sphere_failures = 0;
  long long subthin_checked = 0;
  long long subthin_failures = 0;
  long long compositions = 0;
  long long composition_failures = 0;
  std::vector<std::string> failures;

  long long failure_total() const {
    return ball_failures + sphere_failures + subthin_failures +
           composition_failures;
  }
};

// Certifies every morphism space with Maslov gap <= max_gap below each
// zero-exponent top, and every composition triple with total gap within
// the cap.
FlowcatSweepStats flowcat_sweep(const GridDiagram& g,
                                const MarkingNumbering& num,
                                const FlowcatSweepOptions& opts);

// One facet per line, vertices rendered as canonical chain strings.
std::string facet_listing(const MorSpace& mor);

}  // namespace gs
