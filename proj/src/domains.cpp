#include "gridshell/domains.hpp"

#include <algorithm>

namespace gs {

MarkingCount marking_counts(const GridDiagram& g, const MarkingNumbering& num,
                            const Domain& d) {
  const int n = g.n();
  MarkingCount mc{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int c = 0; c < n; ++c) {
    mc.x_counts[num.x_label_of_col[c] - 1] = d.at(c, g.x_row(c));
    mc.o_counts[num.o_label_of_col[c] - 1] = d.at(c, g.o_row(c));
  }
  return mc;
}

MarkingCount marking_counts(const GridDiagram& g, const MarkingNumbering& num,
                            const Rectangle& r) {
  const int n = g.n();
  MarkingCount mc{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int s = 0; s < r.w; ++s) {
    const int c = mod(r.col + s, n);
    if (r.covers_cell(c, g.x_row(c), n))
      mc.x_counts[num.x_label_of_col[c] - 1] = 1;
    if (r.covers_cell(c, g.o_row(c), n))
      mc.o_counts[num.o_label_of_col[c] - 1] = 1;
  }
  return mc;
}

Generator rectangle_terminal(const Generator& from, const Rectangle& r,
                             int n) {
  Generator to = from;
  const int c1 = r.col;
  const int c2 = mod(r.col + r.w, n);
  std::swap(to.sigma[c1], to.sigma[c2]);
  return to;
}

Domain rectangle_domain(const GridDiagram& g, const Generator& from,
                        const Rectangle& r) {
  const int n = g.n();
  Domain d{from, rectangle_terminal(from, r, n), n,
           std::vector<int>(n * n, 0)};
  for (int s = 0; s < r.w; ++s)
    for (int t = 0; t < r.h; ++t)
      d.at(mod(r.col + s, n), mod(r.row + t, n)) = 1;
  return d;
}

bool is_valid_domain(const Domain& d) {
  const int n = d.n;
  // At the lattice point (a, b) the second difference of the multiplicity
  // pattern over the four adjacent cells must equal to(a,b) - from(a,b).
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int nw = d.at(mod(a - 1, n), b);
      const int se = d.at(a, mod(b - 1, n));
      const int ne = d.at(a, b);
      const int sw = d.at(mod(a - 1, n), mod(b - 1, n));
      int expect = 0;
      if (d.to.sigma[a] == b) expect += 1;
      if (d.from.sigma[a] == b) expect -= 1;
      if (nw + se - ne - sw != expect) return false;
    }
  }
  return true;
}

bool is_positive(const Domain& d) {
  return std::all_of(d.mult.begin(), d.mult.end(),
                     [](int m) { return m >= 0; });
}

int maslov_index(const GridDiagram& g, const MarkingNumbering& num,
                 const Domain& d) {
  const MarkingCount mc = marking_counts(g, num, d);
  int osum = 0;
  for (int v : mc.o_counts) osum += v;
  return maslov(g, d.from) - maslov(g, d.to) + 2 * osum;
}

std::optional<Domain> solve_domain(const GridDiagram& g,
                                   const MarkingNumbering& num,
                                   const GridState& x, const GridState& y) {
  const int n = g.n();

  // Base domain from x.gen to y.gen: compose transposition rectangles along
  // a greedy sorting path. Any base works; annulus corrections absorb the
  // choice.
  Domain d{x.gen, y.gen, n, std::vector<int>(n * n, 0)};
  Generator cur = x.gen;
  while (!(cur == y.gen)) {
    int c1 = 0;
    while (cur.sigma[c1] == y.gen.sigma[c1]) ++c1;
    int c2 = c1 + 1;
    while (cur.sigma[c2] != y.gen.sigma[c1]) ++c2;
    Rectangle r{c1, cur.sigma[c1], mod(c2 - c1, n),
                mod(cur.sigma[c2] - cur.sigma[c1], n)};
    for (int s = 0; s < r.w; ++s)
      for (int t = 0; t < r.h; ++t)
        d.at(mod(r.col + s, n), mod(r.row + t, n)) += 1;
    cur = rectangle_terminal(cur, r, n);
  }

  // Adjust by integer multiples of full row/column annuli so that every X
  // cell gets multiplicity 0 and every O_i cell gets l_i - k_i. Cell (c,r)
  // changes by row_adj[r] + col_adj[c]; the constraints live on the marking
  // cells only. Rows and columns form a graph with one edge per marking;
  // the knot condition makes it connected, so a BFS determines everything
  // from col 0 and leaves a single cycle to check for consistency.
  struct Edge {
    int row;
    int col;
    int target;  // required row_adj[row] + col_adj[col]
  };
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (int c = 0; c < n; ++c) {
    edges.push_back({g.x_row(c), c, -d.at(c, g.x_row(c))});
    const int lbl = num.o_label_of_col[c] - 1;
    const int want = y.u_exp[lbl] - x.u_exp[lbl];
    edges.push_back({g.o_row(c), c, want - d.at(c, g.o_row(c))});
  }

  std::vector<int> row_adj(n, 0), col_adj(n, 0);
  std::vector<char> row_known(n, 0), col_known(n, 0);
  col_known[0] = 1;
  // Repeated relaxation; at most 2n passes are ever needed on a connected
  // graph of 2n edges.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Edge& e : edges) {
      if (col_known[e.col] && !row_known[e.row]) {
        row_adj[e.row] = e.target - col_adj[e.col];
        row_known[e.row] = 1;
        progress = true;
      } else if (row_known[e.row] && !col_known[e.col]) {
        col_adj[e.col] = e.target - row_adj[e.row];
        col_known[e.col] = 1;
        progress = true;
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (!col_known[c] || !row_known[c])
      fail(Errc::internal, "marking incidence graph is disconnected");
  for (const Edge& e : edges)
    if (row_adj[e.row] + col_adj[e.col] != e.target) return std::nullopt;

  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) d.at(c, r) += row_adj[r] + col_adj[c];
  return d;
}

std::vector<RectangleMove> rectangles_from(const GridDiagram& g,
                                           const Generator& from) {
  const int n = g.n();
  std::vector<RectangleMove> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Two candidates per column pair: bottom-left corner at point i or at
      // point j, spans measured cyclically toward the other point.
      for (int flip = 0; flip < 2; ++flip) {
        const int a = flip ? j : i;
        const int b = flip ? i : j;
        Rectangle r{a, from.sigma[a], mod(b - a, n),
                    mod(from.sigma[b] - from.sigma[a], n)};
        bool empty = true;
        for (int c = 0; c < n && empty; ++c)
          if (r.interior_contains(c, from.sigma[c], n)) empty = false;
        if (empty) out.push_back({r, rectangle_terminal(from, r, n)});
      }
    }
  }
  return out;
}

std::vector<RectangleMove> decompose(const GridDiagram& g, const Domain& d) {
  if (!is_positive(d)) fail(Errc::not_positive, "domain has negative cells");
  const int n = g.n();
  Domain rest = d;
  Generator cur = d.from;
  std::vector<RectangleMove> parts;

  auto contained = [&](const Rectangle& r) {
    for (int s = 0; s < r.w; ++s)
      for (int t = 0; t < r.h; ++t)
        if (rest.at(mod(r.col + s, n), mod(r.row + t, n)) < 1) return false;
    return true;
  };

  while (!rest.is_zero()) {
    // A generator point with a nonzero cell at its top-right or bottom-left.
    int pcol = -1;
    bool top_right = false;
    for (int c = 0; c < n && pcol < 0; ++c) {
      const int r = cur.sigma[c];
      if (rest.at(c, r) > 0) {
        pcol = c;
        top_right = true;
      } else if (rest.at(mod(c - 1, n), mod(r - 1, n)) > 0) {
        pcol = c;
        top_right = false;
      }
    }
    if (pcol < 0)
      fail(Errc::internal, "positive domain with no corner to peel");

    // Smallest rectangle inside the remaining domain with this point as a
    // corner and another generator point at the opposite corner; it is
    // automatically empty (an interior point would give a smaller one).
    Rectangle best{};
    bool found = false;
    const int prow = cur.sigma[pcol];
    for (int w = 1; w < n && !found; ++w) {
      for (int h = 1; h < n && !found; ++h) {
        Rectangle r = top_right
                          ? Rectangle{pcol, prow, w, h}
                          : Rectangle{mod(pcol - w, n), mod(prow - h, n), w, h};
        const int ocol = top_right ? mod(pcol + w, n) : mod(pcol - w, n);
        const int orow = top_right ? mod(prow + h, n) : mod(prow - h, n);
        if (cur.sigma[ocol] != orow) continue;
        if (!contained(r)) continue;
        best = r;
        found = true;
      }
    }
    if (!found)
      fail(Errc::internal, "no peelable rectangle at a nonzero corner");
    for (int c = 0; c < n; ++c)
      if (best.interior_contains(c, cur.sigma[c], n))
        fail(Errc::internal, "minimal rectangle is not empty");

    for (int s = 0; s < best.w; ++s)
      for (int t = 0; t < best.h; ++t)
        rest.at(mod(best.col + s, n), mod(best.row + t, n)) -= 1;
    cur = rectangle_terminal(cur, best, n);
    parts.push_back({best, cur});
  }
  if (!(cur == d.to))
    fail(Errc::internal, "decomposition did not reach the target generator");
  return parts;
}

}  // namespace gs
