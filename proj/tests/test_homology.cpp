#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "alexander.hpp"
#include "gridshell/homology.hpp"

using namespace gs;

namespace {

// Dense elimination oracle for ranks over the two-element field.
int dense_rank(std::vector<std::vector<int>> rows, int ncols) {
  int rank = 0;
  int pivot_col = 0;
  const int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<char>> m(nrows, std::vector<char>(ncols, 0));
  for (int r = 0; r < nrows; ++r)
    for (int c : rows[r]) m[r][c] = 1;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (m[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < nrows; ++r)
      if (r != rank && m[r][col])
        for (int c = col; c < ncols; ++c) m[r][c] ^= m[rank][c];
    ++rank;
    ++pivot_col;
  }
  (void)pivot_col;
  return rank;
}

}  // namespace

TEST_CASE("rank over F2 on fixed matrices") {
  CHECK(rank_f2({{0}, {1}, {2}}, 3) == 3);          // identity
  CHECK(rank_f2({{}, {}, {}}, 3) == 0);             // zero matrix
  CHECK(rank_f2({{0, 1}, {1, 2}, {0, 2}}, 3) == 2); // dependent columns
}

TEST_CASE("sparse rank equals the dense oracle on random matrices") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int nrows = 20;
    const int ncols = 20;
    std::vector<std::vector<int>> cols(ncols);
    std::vector<std::vector<int>> rows(nrows);
    for (int c = 0; c < ncols; ++c) {
      for (int r = 0; r < nrows; ++r) {
        if (rng() % 3 == 0) {
          cols[c].push_back(r);
          rows[r].push_back(c);
        }
      }
    }
    CHECK(rank_f2(cols, nrows) == dense_rank(rows, ncols));
  }
}

TEST_CASE("homology of synthetic complexes") {
  // Zero differential: dimensions are the chain group sizes.
  ChainComplexF2 c;
  c.grading = {Bigrading{0, 0}, Bigrading{0, 0}, Bigrading{-1, 0}};
  c.boundary = {{}, {}, {}};
  const BigradedDims dims = homology(c);
  CHECK(dims.dim(0, 0) == 2);
  CHECK(dims.dim(-1, 0) == 1);
  CHECK(dims.total_rank() == 3);

  // F2 -> F2 identity: homology vanishes.
  ChainComplexF2 id2;
  id2.grading = {Bigrading{1, 0}, Bigrading{0, 0}};
  id2.boundary = {{1}, {}};
  CHECK(homology(id2).total_rank() == 0);

  // A non-complex must be rejected.
  ChainComplexF2 bad;
  bad.grading = {Bigrading{2, 0}, Bigrading{1, 0}, Bigrading{0, 0}};
  bad.boundary = {{1}, {2}, {}};
  CHECK_THROWS_AS(homology(bad), Error);
}

TEST_CASE("tilde homology of the unknots") {
  const GridDiagram g2 = gstest::unknot2();
  const BigradedDims d2 = tilde_homology(g2, derive_numbering(g2));
  CHECK(d2.total_rank() == 2);
  CHECK(d2.dim(0, 0) == 1);
  CHECK(d2.dim(-1, -1) == 1);

  const GridDiagram g3 = gstest::corpus_grid("unknot-3");
  const BigradedDims d3 = tilde_homology(g3, derive_numbering(g3));
  CHECK(d3.total_rank() == 4);
  // Rank 4 = 2^{3-1} times the unknot's rank-1 invariant.
}

TEST_CASE("tilde homology of both trefoil presentations") {
  const GridDiagram a = gstest::corpus_grid("trefoil-5a");
  const GridDiagram b = gstest::corpus_grid("trefoil-5b");
  const BigradedDims da = tilde_homology(a, derive_numbering(a));
  const BigradedDims db = tilde_homology(b, derive_numbering(b));
  CHECK(da.total_rank() == 48);
  CHECK(db.total_rank() == 48);
  CHECK(da.dims == db.dims);
}

TEST_CASE("minus tower of the 2x2 unknot") {
  const GridDiagram g = gstest::unknot2();
  const MarkingNumbering num = derive_numbering(g);
  for (int a = 0; a >= -2; --a) {
    const TruncatedDims td = minus_homology_truncated(g, num, a, -6);
    CHECK(td.valid_above == -5);
    CHECK(td.dims.dim(2 * a, a) == 1);
    // Within the safely valid band nothing else survives.
    for (const auto& [key, dim] : td.dims.dims) {
      if (key.second > td.valid_above) {
        CHECK(key == std::make_pair(a, 2 * a));
        CHECK(dim == 1);
      }
    }
  }
}

TEST_CASE("tilde differential preserves A and drops M by one") {
  const GridDiagram g = gstest::corpus_grid("trefoil-5a");
  const ChainComplexF2 cc = tilde_complex(g, derive_numbering(g));
  CHECK(is_complex(cc));
  for (int i = 0; i < cc.size(); ++i) {
    for (int j : cc.boundary[i]) {
      CHECK(cc.grading[j].maslov == cc.grading[i].maslov - 1);
      CHECK(cc.grading[j].alexander == cc.grading[i].alexander);
    }
  }
}

TEST_CASE("corpus knot types via the Alexander polynomial") {
  using gstest::alexander_polynomial;
  CHECK(alexander_polynomial(gstest::corpus_grid("unknot-2")) ==
        std::vector<long long>{1});
  CHECK(alexander_polynomial(gstest::corpus_grid("unknot-3")) ==
        std::vector<long long>{1});
  CHECK(alexander_polynomial(gstest::corpus_grid("trefoil-5a")) ==
        std::vector<long long>{1, -1, 1});
  CHECK(alexander_polynomial(gstest::corpus_grid("trefoil-5b")) ==
        std::vector<long long>{1, -1, 1});
}

TEST_CASE("homology dims do not depend on basis enumeration order") {
  // Shuffle the basis of the tilde complex of the 3x3 unknot and recompute.
  const GridDiagram g = gstest::corpus_grid("unknot-3");
  const ChainComplexF2 cc = tilde_complex(g, derive_numbering(g));
  const BigradedDims reference = homology(cc);

  std::mt19937_64 rng(321);
  std::vector<int> pi(cc.size());
  for (int i = 0; i < cc.size(); ++i) pi[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<int> inv(cc.size());
    for (int i = 0; i < cc.size(); ++i) inv[pi[i]] = i;
    ChainComplexF2 shuffled;
    shuffled.grading.resize(cc.size());
    shuffled.boundary.resize(cc.size());
    for (int i = 0; i < cc.size(); ++i) {
      shuffled.grading[inv[i]] = cc.grading[i];
      std::vector<int> col;
      for (int j : cc.boundary[i]) col.push_back(inv[j]);
      std::sort(col.begin(), col.end());
      shuffled.boundary[inv[i]] = std::move(col);
    }
    CHECK(homology(shuffled).dims == reference.dims);
  }
}
