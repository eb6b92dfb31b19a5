#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gridshell/states.hpp"

namespace gs {

// A bigraded chain complex over the two-element field. Column i of the
// boundary lists the basis indices hit by basis element i; targets sit one
// Maslov grading lower in the same Alexander grading. The states vector
// carries the underlying grid states when the complex comes from a diagram
// (it may be empty for synthetic complexes).
struct ChainComplexF2 {
  std::vector<Bigrading> grading;
  std::vector<std::vector<int>> boundary;
  std::vector<GridState> states;

  int size() const { return static_cast<int>(grading.size()); }
};

// Dimensions keyed by (alexander, maslov); the map ordering fixes report
// order.
struct BigradedDims {
  std::map<std::pair<int, int>, int> dims;

  int dim(int maslov, int alexander) const {
    auto it = dims.find({alexander, maslov});
    return it == dims.end() ? 0 : it->second;
  }
  long long total_rank() const {
    long long t = 0;
    for (const auto& [k, v] : dims) t += v;
    return t;
  }
};

// Rank over F_2 of a sparse 0/1 matrix given as columns of row indices.
// The input is not modified.
int rank_f2(const std::vector<std::vector<int>>& columns, int nrows);

// True when the composite of consecutive boundaries vanishes.
bool is_complex(const ChainComplexF2& c);

// Bigraded homology: dim ker - rank of the incoming boundary, sector by
// sector. Throws not_a_complex when the boundary does not square to zero.
BigradedDims homology(const ChainComplexF2& c);

// The fully finite complex on the n! generators whose boundary counts
// empty rectangles crossing no X and no O marking.
ChainComplexF2 tilde_complex(const GridDiagram& g, const MarkingNumbering& num,
                             int cap = 8);
BigradedDims tilde_homology(const GridDiagram& g, const MarkingNumbering& num,
                            int cap = 8);

// Homology of the Maslov-truncated complex in one Alexander sector.
// Dimensions at gradings strictly above valid_above agree with the
// untruncated complex (the cut states span a subcomplex; the band is the
// quotient).
struct TruncatedDims {
  BigradedDims dims;
  int valid_above = 0;
};
TruncatedDims minus_homology_truncated(const GridDiagram& g,
                                       const MarkingNumbering& num,
                                       int alexander, int m_floor,
                                       int cap = 8);

}  // namespace gs
