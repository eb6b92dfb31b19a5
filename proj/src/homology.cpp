#include "gridshell/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "gridshell/poset.hpp"

namespace gs {

int rank_f2(const std::vector<std::vector<int>>& columns, int nrows) {
  const int words = (nrows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<int> pivot_pos;
  int rank = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& col : columns) {
    std::fill(v.begin(), v.end(), 0);
    for (int r : col) v[r >> 6] ^= 1ull << (r & 63);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      const int p = pivot_pos[t];
      if (v[p >> 6] >> (p & 63) & 1)
        for (int w = 0; w < words; ++w) v[w] ^= pivots[t][w];
    }
    int p = -1;
    for (int w = 0; w < words && p < 0; ++w)
      if (v[w]) p = w * 64 + std::countr_zero(v[w]);
    if (p >= 0) {
      pivots.push_back(v);
      pivot_pos.push_back(p);
      ++rank;
    }
  }
  return rank;
}

bool is_complex(const ChainComplexF2& c) {
  std::unordered_map<int, int> counts;
  for (int i = 0; i < c.size(); ++i) {
    counts.clear();
    for (int j : c.boundary[i])
      for (int k : c.boundary[j]) counts[k] ^= 1;
    for (const auto& [k, parity] : counts) {
      (void)k;
      if (parity) return false;
    }
  }
  return true;
}

BigradedDims homology(const ChainComplexF2& c) {
  if (!is_complex(c))
    fail(Errc::not_a_complex, "boundary map does not square to zero");

  // Sector blocks keyed by (alexander, maslov).
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (int i = 0; i < c.size(); ++i)
    blocks[{c.grading[i].alexander, c.grading[i].maslov}].push_back(i);

  std::vector<int> pos(c.size(), -1);
  for (auto& [key, members] : blocks) {
    (void)key;
    for (std::size_t t = 0; t < members.size(); ++t)
      pos[members[t]] = static_cast<int>(t);
  }

  // Rank of the boundary leaving each block.
  std::map<std::pair<int, int>, int> out_rank;
  for (const auto& [key, members] : blocks) {
    std::vector<std::vector<int>> cols;
    cols.reserve(members.size());
    std::size_t target_size = 0;
    for (int i : members) {
      std::vector<int> col;
      col.reserve(c.boundary[i].size());
      for (int j : c.boundary[i]) col.push_back(pos[j]);
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    auto below = blocks.find({key.first, key.second - 1});
    if (below != blocks.end()) target_size = below->second.size();
    out_rank[key] =
        target_size == 0 ? 0 : rank_f2(cols, static_cast<int>(target_size));
  }

  BigradedDims dims;
  for (const auto& [key, members] : blocks) {
    const int rk_out = out_rank[key];
    auto above = out_rank.find({key.first, key.second + 1});
    const int rk_in = above == out_rank.end() ? 0 : above->second;
    const int d = static_cast<int>(members.size()) - rk_out - rk_in;
    if (d != 0) dims.dims[key] = d;
  }
  return dims;
}

ChainComplexF2 tilde_complex(const GridDiagram& g, const MarkingNumbering& num,
                             int cap) {
  ChainComplexF2 cc;
  const std::vector<Generator> gens = enumerate_generators(g, cap);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < gens.size(); ++i)
    index.emplace(gens[i].sigma, static_cast<int>(i));

  const int n = g.n();
  cc.boundary.resize(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cc.states.push_back(zero_state(gens[i], n));
    cc.grading.push_back(
        Bigrading{maslov(g, gens[i]), alexander(g, gens[i])});
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const RectangleMove& m : rectangles_from(g, gens[i])) {
      const MarkingCount mc = marking_counts(g, num, m.rect);
      bool clean = true;
      for (int t = 0; t < n && clean; ++t)
        if (mc.x_counts[t] || mc.o_counts[t]) clean = false;
      if (!clean) continue;
      cc.boundary[i].push_back(index.at(m.to.sigma));
    }
    std::sort(cc.boundary[i].begin(), cc.boundary[i].end());
  }
  return cc;
}

BigradedDims tilde_homology(const GridDiagram& g, const MarkingNumbering& num,
                            int cap) {
  return homology(tilde_complex(g, num, cap));
}

TruncatedDims minus_homology_truncated(const GridDiagram& g,
                                       const MarkingNumbering& num,
                                       int alexander, int m_floor, int cap) {
  TruncatedDims out;
  out.dims = homology(gt_chain_complex(g, num, alexander, m_floor, cap));
  out.valid_above = m_floor + 1;
  return out;
}

}  // namespace gs
