#pragma once

#include <string>
#include <vector>

#include "gridshell/util.hpp"

namespace gs {

// An index-n grid diagram on the torus: one X and one O marking per row and
// per column, stored as column -> row permutations. Cells are addressed
// (col, row) with rows increasing upward; the cell (c, r) occupies
// [c, c+1] x [r, r+1] in the planar picture cut along x = 0, y = 0, and its
// marking (if any) sits at the center (c + 1/2, r + 1/2). Alpha circles are
// the horizontal lines y = i, beta circles the vertical lines x = i.
//
// Validation additionally requires the markings to trace a single closed
// X -> O (same row) -> X (same column) cycle, i.e. the diagram presents a
// knot rather than a link. Instances are immutable once constructed.
class GridDiagram {
 public:
  // Builds and validates. Throws Error on violation of any invariant.
  static GridDiagram from_permutations(std::vector<int> x_col_to_row,
                                       std::vector<int> o_col_to_row);

  // Parses the text format: n lines of n characters from {., X, O}, the
  // first line being the top row (row n-1). Trailing newline optional.
  static GridDiagram parse(const std::string& text);

  int n() const { return n_; }
  int x_row(int col) const { return x_col_to_row_[col]; }
  int o_row(int col) const { return o_col_to_row_[col]; }
  int x_col(int row) const { return x_row_to_col_[row]; }
  int o_col(int row) const { return o_row_to_col_[row]; }
  const std::vector<int>& x_rows() const { return x_col_to_row_; }
  const std::vector<int>& o_rows() const { return o_col_to_row_; }

  // Emits the text format, rows top to bottom, with a trailing newline.
  std::string serialize() const;

  // The same torus diagram cut open along a different pair of circles: all
  // rows shifted up by row_shift and columns right by col_shift, cyclically.
  GridDiagram recut(int row_shift, int col_shift) const;

  bool operator==(const GridDiagram& other) const {
    return x_col_to_row_ == other.x_col_to_row_ &&
           o_col_to_row_ == other.o_col_to_row_;
  }

 private:
  GridDiagram() = default;

  int n_ = 0;
  std::vector<int> x_col_to_row_;
  std::vector<int> o_col_to_row_;
  std::vector<int> x_row_to_col_;
  std::vector<int> o_row_to_col_;
};

// Marking labels 1..n with X_i and O_i sharing a row and O_i, X_{i+1}
// sharing a column (indices mod n). The cyclic shift is pinned by giving
// label 1 to the X in column 0.
struct MarkingNumbering {
  std::vector<int> x_label_of_col;  // label of the X marking in each column
  std::vector<int> o_label_of_col;  // label of the O marking in each column
  std::vector<int> col_of_x_label;  // inverse, indexed by label-1
  std::vector<int> col_of_o_label;
};

MarkingNumbering derive_numbering(const GridDiagram& g);

}  // namespace gs
