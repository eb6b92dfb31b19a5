#pragma once

#include <optional>
#include <vector>

#include "gridshell/states.hpp"

namespace gs {

// A cyclic rectangle on the torus with bottom-left lattice corner
// (col, row), width w and height h, each in 1..n-1. It occupies the cells
// (col+s mod n, row+t mod n) for 0 <= s < w, 0 <= t < h. The bottom-left
// and top-right corners are points of the initial generator, the other two
// corners points of the terminal one.
struct Rectangle {
  int col = 0;
  int row = 0;
  int w = 1;
  int h = 1;

  bool operator==(const Rectangle& o) const {
    return col == o.col && row == o.row && w == o.w && h == o.h;
  }
  bool covers_cell(int c, int r, int n) const {
    return mod(c - col, n) < w && mod(r - row, n) < h;
  }
  // Strict interior, for the emptiness test against generator points.
  bool interior_contains(int c, int r, int n) const {
    const int dc = mod(c - col, n);
    const int dr = mod(r - row, n);
    return dc > 0 && dc < w && dr > 0 && dr < h;
  }
};

// An integer 2-chain connecting generator `from` to generator `to`:
// cell (c, r) carries multiplicity mult[c*n + r], and the jump conditions
// of the boundary match to - from at every lattice point.
struct Domain {
  Generator from;
  Generator to;
  int n = 0;
  std::vector<int> mult;

  int at(int c, int r) const { return mult[c * n + r]; }
  int& at(int c, int r) { return mult[c * n + r]; }
  bool is_zero() const {
    for (int m : mult)
      if (m != 0) return false;
    return true;
  }
};

// Multiplicities at the markings, indexed by label-1 (MarkingNumbering).
struct MarkingCount {
  std::vector<int> o_counts;
  std::vector<int> x_counts;
};

MarkingCount marking_counts(const GridDiagram& g, const MarkingNumbering& num,
                            const Domain& d);
MarkingCount marking_counts(const GridDiagram& g, const MarkingNumbering& num,
                            const Rectangle& r);

// The generator reached from `from` by the rectangle (its two exchanged
// columns get their rows swapped).
Generator rectangle_terminal(const Generator& from, const Rectangle& r, int n);

Domain rectangle_domain(const GridDiagram& g, const Generator& from,
                        const Rectangle& r);

// Checks the lattice-point jump conditions defining a domain from x to y.
bool is_valid_domain(const Domain& d);

bool is_positive(const Domain& d);

// Maslov index via the grading relation:
// mu(D) = M(from) - M(to) + 2 * sum of O multiplicities.
int maslov_index(const GridDiagram& g, const MarkingNumbering& num,
                 const Domain& d);

// The unique domain connecting the decorated states x and y (X multiplicity
// zero everywhere, O_i multiplicity y.u_exp[i] - x.u_exp[i]) or nullopt
// when no such domain exists. Uniqueness holds because full row/column
// annuli are the only marking-free adjustments and the marking incidence
// graph of a knot diagram is connected.
std::optional<Domain> solve_domain(const GridDiagram& g,
                                   const MarkingNumbering& num,
                                   const GridState& x, const GridState& y);

// An empty rectangle out of a generator together with the generator it
// reaches. "Empty" means no point of the initial (equivalently terminal)
// generator lies in the open interior.
struct RectangleMove {
  Rectangle rect;
  Generator to;
};

// All empty rectangles with the given initial generator, in deterministic
// order (by column pair, then orientation).
std::vector<RectangleMove> rectangles_from(const GridDiagram& g,
                                           const Generator& from);

// Writes a positive domain as an ordered sum of empty rectangles through a
// chain of generators, following the maximal-rectangle/shrink argument.
// The result has exactly mu(D) parts; the moves' terminal generators end at
// d.to. Throws not_positive on negative input and internal if the search
// ever fails (which the decomposition lemma rules out).
std::vector<RectangleMove> decompose(const GridDiagram& g, const Domain& d);

}  // namespace gs
