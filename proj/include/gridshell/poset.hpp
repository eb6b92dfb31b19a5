#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridshell/domains.hpp"
#include "gridshell/homology.hpp"

namespace gs {

// upper covers lower: the rectangle is an empty rectangle from upper.gen to
// lower.gen crossing no X marking, and lower.u_exp = upper.u_exp plus the
// rectangle's O multiplicities. Covers drop the Maslov grading by exactly 1
// and preserve the Alexander grading.
struct CoverRelation {
  GridState upper;
  GridState lower;
  Rectangle rect;
};

std::vector<CoverRelation> covers_down(const GridDiagram& g,
                                       const MarkingNumbering& num,
                                       const GridState& x);

std::vector<CoverRelation> covers_up(const GridDiagram& g,
                                     const MarkingNumbering& num,
                                     const GridState& z);

// y below-or-equal x in the grid poset, decided by graded breadth-first
// search through covers. Agrees with positivity of the connecting domain.
bool leq(const GridDiagram& g, const MarkingNumbering& num, const GridState& y,
         const GridState& x);

// The cover DAG hanging below one state, to a bounded Maslov gap. States
// are interned level by level in canonical order, so ids are deterministic.
struct DownDag {
  std::vector<GridState> states;
  std::vector<int> gap;  // Maslov distance below the top
  std::vector<std::vector<std::pair<int, Rectangle>>> down;  // id -> children
  int top_id = 0;
  int top_maslov = 0;
};

DownDag down_dag(const GridDiagram& g, const MarkingNumbering& num,
                 const GridState& top, int max_gap);

// A closed interval [bottom, top], materialized: elements sorted by
// (Maslov, state), covers between them labeled with their rectangles.
struct Interval {
  GridState bottom;
  GridState top;
  std::vector<GridState> elements;
  std::vector<int> maslov_of;
  int bottom_id = 0;
  int top_id = 0;

  struct Cover {
    int upper = 0;
    int lower = 0;
    Rectangle rect;
  };
  std::vector<Cover> covers;
  std::vector<std::vector<int>> ups;    // element -> covering elements
  std::vector<std::vector<int>> downs;  // element -> covered elements

  int size() const { return static_cast<int>(elements.size()); }
  // Number of elements in a maximal chain (the interval is graded by M).
  int length() const { return maslov_of[top_id] - maslov_of[bottom_id] + 1; }
  const Rectangle& cover_rect(int upper, int lower) const;
};

// Throws empty_interval when y is not below x, cap_exceeded past the cap.
Interval interval(const GridDiagram& g, const MarkingNumbering& num,
                  const GridState& y, const GridState& x, int length_cap = 7);

// Same interval, carved out of a precomputed DAG below its top.
Interval interval_from_dag(const DownDag& dag, int y_id);

// Descending reachability inside a DAG: reach[u][v] iff v is below or
// equal u.
std::vector<std::vector<char>> dag_reachability(const DownDag& dag);

// The interval between two DAG states, using a precomputed reachability
// matrix. Throws empty_interval when lower is not below upper.
Interval interval_between(const DownDag& dag,
                          const std::vector<std::vector<char>>& reach,
                          int upper_id, int lower_id);

// All maximal chains, bottom to top, as element id sequences, in
// lexicographic order of the sequences. Throws cap_exceeded past budget.
std::vector<std::vector<int>> maximal_chains(const Interval& iv,
                                             long long budget = 1000000);

// A finite poset presented by its cover digraph. up[i] lists the elements
// covering i.
struct FinitePoset {
  int n = 0;
  std::vector<std::vector<int>> up;
  std::optional<std::vector<int>> grading;

  std::vector<std::vector<int>> down_adj() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  // Reflexive-transitive closure: leq[a][b] iff a is below or equal b.
  std::vector<std::vector<char>> leq_closure() const;
  // Maximal chains as ascending id sequences, lexicographic order.
  std::vector<std::vector<int>> maximal_chains() const;
};

// The poset of chains of [y,x] that contain both endpoints, ordered by
// inclusion. chains[i] lists the interval element ids of poset element i in
// ascending Maslov order; the grading is chain size minus 2.
struct ChainPosetAbove {
  FinitePoset poset;
  std::vector<std::vector<int>> chains;
};

ChainPosetAbove barycentric_above(const Interval& iv);

// Cartesian product; element (i, j) gets id i * q.n + j.
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

// A pure-or-not simplicial complex given by its facets (sorted vertex
// lists, pairwise incomparable under inclusion).
struct SimplicialComplex {
  int nverts = 0;
  std::vector<std::vector<int>> facets;

  bool pure() const;
  int dim() const;
  std::vector<std::vector<int>> all_faces() const;
  long long euler_char() const;
  std::vector<long long> f_vector() const;
};

// Normalizes: sorts vertices and facets, drops duplicates and faces
// contained in other faces.
SimplicialComplex make_complex(int nverts,
                               std::vector<std::vector<int>> facets);

// Order complex: vertices are the poset elements, facets its maximal
// chains.
SimplicialComplex order_complex(const FinitePoset& p);

// The chain complex of the grid poset restricted to one Alexander grading
// and truncated below the Maslov floor; covers leaving the band are
// dropped, which quotients by the subcomplex under the floor.
ChainComplexF2 gt_chain_complex(const GridDiagram& g,
                                const MarkingNumbering& num, int alexander,
                                int m_floor, int cap = 8);

}  // namespace gs
