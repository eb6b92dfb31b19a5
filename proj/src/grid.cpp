#include "gridshell/grid.hpp"

namespace gs {

namespace {

std::vector<int> invert_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

GridDiagram GridDiagram::from_permutations(std::vector<int> x_col_to_row,
                                           std::vector<int> o_col_to_row) {
  GridDiagram g;
  g.n_ = static_cast<int>(x_col_to_row.size());
  if (g.n_ < 2) fail(Errc::index_too_small, "grid index must be at least 2");
  if (o_col_to_row.size() != x_col_to_row.size())
    fail(Errc::not_permutation, "X and O marking lists differ in length");
  if (!is_permutation(x_col_to_row) || !is_permutation(o_col_to_row))
    fail(Errc::not_permutation, "markings do not give one per row and column");
  for (int c = 0; c < g.n_; ++c)
    if (x_col_to_row[c] == o_col_to_row[c])
      fail(Errc::shared_cell,
           "X and O share the cell in column " + std::to_string(c));
  g.x_col_to_row_ = std::move(x_col_to_row);
  g.o_col_to_row_ = std::move(o_col_to_row);
  g.x_row_to_col_ = invert_permutation(g.x_col_to_row_);
  g.o_row_to_col_ = invert_permutation(g.o_col_to_row_);

  // Trace X -> O in the same row, then O -> X in the same column. A knot
  // visits all n X markings in one cycle.
  int visited = 0;
  int col = 0;
  do {
    int row = g.x_col_to_row_[col];   // X in this column
    int ocol = g.o_row_to_col_[row];  // the O sharing its row
    col = ocol;                       // the next X lives in the O's column
    ++visited;
  } while (col != 0 && visited <= g.n_);
  if (visited != g.n_)
    fail(Errc::multi_component, "markings trace more than one component");
  return g;
}

GridDiagram GridDiagram::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  const int n = static_cast<int>(lines.size());
  if (n == 0) fail(Errc::non_square, "empty grid file");
  for (const auto& line : lines)
    if (static_cast<int>(line.size()) != n)
      fail(Errc::non_square, "grid is not square: " + std::to_string(n) +
                                 " lines but a line of length " +
                                 std::to_string(line.size()));
  if (n < 2) fail(Errc::index_too_small, "grid index must be at least 2");

  std::vector<int> xr(n, -1), orr(n, -1);
  for (int k = 0; k < n; ++k) {
    const int row = n - 1 - k;  // first line is the top row
    for (int c = 0; c < n; ++c) {
      char ch = lines[k][c];
      if (ch == '.') continue;
      if (ch == 'X') {
        if (xr[c] != -1)
          fail(Errc::not_permutation,
               "column " + std::to_string(c) + " has more than one X");
        xr[c] = row;
      } else if (ch == 'O') {
        if (orr[c] != -1)
          fail(Errc::not_permutation,
               "column " + std::to_string(c) + " has more than one O");
        orr[c] = row;
      } else {
        fail(Errc::bad_character,
             std::string("unexpected character '") + ch + "'");
      }
    }
  }
  for (int c = 0; c < n; ++c) {
    if (xr[c] == -1)
      fail(Errc::not_permutation, "column " + std::to_string(c) + " has no X");
    if (orr[c] == -1)
      fail(Errc::not_permutation, "column " + std::to_string(c) + " has no O");
  }
  return from_permutations(std::move(xr), std::move(orr));
}

std::string GridDiagram::serialize() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ + 1));
  for (int row = n_ - 1; row >= 0; --row) {
    for (int c = 0; c < n_; ++c) {
      if (x_col_to_row_[c] == row)
        out.push_back('X');
      else if (o_col_to_row_[c] == row)
        out.push_back('O');
      else
        out.push_back('.');
    }
    out.push_back('\n');
  }
  return out;
}

GridDiagram GridDiagram::recut(int row_shift, int col_shift) const {
  std::vector<int> xr(n_), orr(n_);
  for (int c = 0; c < n_; ++c) {
    int nc = mod(c + col_shift, n_);
    xr[nc] = mod(x_col_to_row_[c] + row_shift, n_);
    orr[nc] = mod(o_col_to_row_[c] + row_shift, n_);
  }
  return from_permutations(std::move(xr), std::move(orr));
}

MarkingNumbering derive_numbering(const GridDiagram& g) {
  const int n = g.n();
  MarkingNumbering num;
  num.x_label_of_col.assign(n, 0);
  num.o_label_of_col.assign(n, 0);
  num.col_of_x_label.assign(n, 0);
  num.col_of_o_label.assign(n, 0);
  int col = 0;  // X_1 is the X in column 0
  for (int label = 1; label <= n; ++label) {
    num.x_label_of_col[col] = label;
    num.col_of_x_label[label - 1] = col;
    const int row = g.x_row(col);     // X_label and O_label share this row
    const int ocol = g.o_col(row);
    num.o_label_of_col[ocol] = label;
    num.col_of_o_label[label - 1] = ocol;
    col = ocol;  // O_label and X_{label+1} share this column
  }
  return num;
}

}  // namespace gs
