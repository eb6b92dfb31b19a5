#include "gridshell/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gs {

namespace {

bool any_nonzero(const std::vector<int>& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
}

}  // namespace

std::vector<CoverRelation> covers_down(const GridDiagram& g,
                                       const MarkingNumbering& num,
                                       const GridState& x) {
  std::vector<CoverRelation> out;
  for (const RectangleMove& m : rectangles_from(g, x.gen)) {
    const MarkingCount mc = marking_counts(g, num, m.rect);
    if (any_nonzero(mc.x_counts)) continue;
    std::vector<int> u = x.u_exp;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += mc.o_counts[i];
    out.push_back({x, GridState{m.to, std::move(u)}, m.rect});
  }
  return out;
}

std::vector<CoverRelation> covers_up(const GridDiagram& g,
                                     const MarkingNumbering& num,
                                     const GridState& z) {
  const int n = g.n();
  std::vector<CoverRelation> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Generator w = z.gen;
      std::swap(w.sigma[i], w.sigma[j]);
      for (int flip = 0; flip < 2; ++flip) {
        const int a = flip ? j : i;
        const int b = flip ? i : j;
        Rectangle r{a, w.sigma[a], mod(b - a, n),
                    mod(w.sigma[b] - w.sigma[a], n)};
        bool empty = true;
        for (int c = 0; c < n && empty; ++c)
          if (r.interior_contains(c, w.sigma[c], n)) empty = false;
        if (!empty) continue;
        const MarkingCount mc = marking_counts(g, num, r);
        if (any_nonzero(mc.x_counts)) continue;
        std::vector<int> k = z.u_exp;
        bool ok = true;
        for (std::size_t t = 0; t < k.size(); ++t) {
          k[t] -= mc.o_counts[t];
          if (k[t] < 0) ok = false;
        }
        if (!ok) continue;
        out.push_back({GridState{w, std::move(k)}, z, r});
      }
    }
  }
  return out;
}

bool leq(const GridDiagram& g, const MarkingNumbering& num, const GridState& y,
         const GridState& x) {
  if (x == y) return true;
  const Bigrading bx = bigrading(g, x);
  const Bigrading by = bigrading(g, y);
  if (bx.alexander != by.alexander || bx.maslov <= by.maslov) return false;
  const int steps = bx.maslov - by.maslov;
  std::unordered_set<GridState, StateHash> frontier{x};
  for (int step = 0; step < steps; ++step) {
    std::unordered_set<GridState, StateHash> next;
    for (const GridState& s : frontier)
      for (const CoverRelation& cr : covers_down(g, num, s))
        next.insert(cr.lower);
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return frontier.count(y) > 0;
}

DownDag down_dag(const GridDiagram& g, const MarkingNumbering& num,
                 const GridState& top, int max_gap) {
  DownDag dag;
  dag.states.push_back(top);
  dag.gap.push_back(0);
  dag.down.emplace_back();
  dag.top_id = 0;
  dag.top_maslov = bigrading(g, top).maslov;

  std::unordered_map<GridState, int, StateHash> index;
  index.emplace(top, 0);
  std::vector<int> level{0};
  for (int d = 1; d <= max_gap && !level.empty(); ++d) {
    struct Pending {
      int parent;
      GridState child;
      Rectangle rect;
    };
    std::vector<Pending> pend;
    for (int id : level)
      for (CoverRelation& cr : covers_down(g, num, dag.states[id]))
        pend.push_back({id, std::move(cr.lower), cr.rect});

    std::vector<GridState> kids;
    kids.reserve(pend.size());
    for (const Pending& p : pend) kids.push_back(p.child);
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());

    std::vector<int> next_level;
    next_level.reserve(kids.size());
    for (GridState& k : kids) {
      const int id = static_cast<int>(dag.states.size());
      index.emplace(k, id);
      dag.states.push_back(std::move(k));
      dag.gap.push_back(d);
      dag.down.emplace_back();
      next_level.push_back(id);
    }
    for (Pending& p : pend)
      dag.down[p.parent].push_back({index.at(p.child), p.rect});
    for (int id : level)
      std::sort(dag.down[id].begin(), dag.down[id].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    level = std::move(next_level);
  }
  return dag;
}

namespace {

Interval pack_interval(const DownDag& dag, std::vector<int> marked,
                       int upper_id, int lower_id) {
  std::sort(marked.begin(), marked.end(), [&](int a, int b) {
    if (dag.gap[a] != dag.gap[b]) return dag.gap[a] > dag.gap[b];
    return dag.states[a] < dag.states[b];
  });

  Interval iv;
  iv.top = dag.states[upper_id];
  iv.bottom = dag.states[lower_id];
  std::vector<int> newid(dag.states.size(), -1);
  for (std::size_t i = 0; i < marked.size(); ++i) {
    newid[marked[i]] = static_cast<int>(i);
    iv.elements.push_back(dag.states[marked[i]]);
    iv.maslov_of.push_back(dag.top_maslov - dag.gap[marked[i]]);
  }
  iv.bottom_id = newid[lower_id];
  iv.top_id = newid[upper_id];
  iv.ups.assign(marked.size(), {});
  iv.downs.assign(marked.size(), {});
  for (int id : marked) {
    for (const auto& [cid, rect] : dag.down[id]) {
      if (newid[cid] < 0) continue;
      iv.covers.push_back({newid[id], newid[cid], rect});
      iv.ups[newid[cid]].push_back(newid[id]);
      iv.downs[newid[id]].push_back(newid[cid]);
    }
  }
  std::sort(iv.covers.begin(), iv.covers.end(),
            [](const Interval::Cover& a, const Interval::Cover& b) {
              return a.upper != b.upper ? a.upper < b.upper : a.lower < b.lower;
            });
  for (auto& v : iv.ups) std::sort(v.begin(), v.end());
  for (auto& v : iv.downs) std::sort(v.begin(), v.end());
  return iv;
}

}  // namespace

Interval interval_from_dag(const DownDag& dag, int y_id) {
  const int total = static_cast<int>(dag.states.size());
  std::vector<char> reaches(total, 0);
  reaches[y_id] = 1;
  // Children always carry larger ids, so one reverse pass suffices.
  for (int id = total - 1; id >= 0; --id) {
    if (reaches[id]) continue;
    for (const auto& [cid, rect] : dag.down[id]) {
      (void)rect;
      if (reaches[cid]) {
        reaches[id] = 1;
        break;
      }
    }
  }
  if (!reaches[dag.top_id])
    fail(Errc::empty_interval, "state is not below the requested top");

  std::vector<int> marked;
  for (int id = 0; id < total; ++id)
    if (reaches[id] && dag.gap[id] <= dag.gap[y_id]) marked.push_back(id);
  return pack_interval(dag, std::move(marked), dag.top_id, y_id);
}

std::vector<std::vector<char>> dag_reachability(const DownDag& dag) {
  const int total = static_cast<int>(dag.states.size());
  std::vector<std::vector<char>> reach(total, std::vector<char>(total, 0));
  for (int id = total - 1; id >= 0; --id) {
    reach[id][id] = 1;
    for (const auto& [cid, rect] : dag.down[id]) {
      (void)rect;
      // Everything below a child has a larger id than the child.
      for (int t = cid; t < total; ++t)
        if (reach[cid][t]) reach[id][t] = 1;
    }
  }
  return reach;
}

Interval interval_between(const DownDag& dag,
                          const std::vector<std::vector<char>>& reach,
                          int upper_id, int lower_id) {
  if (!reach[upper_id][lower_id])
    fail(Errc::empty_interval, "lower state is not below the upper one");
  std::vector<int> marked;
  for (int id = 0; id < static_cast<int>(dag.states.size()); ++id)
    if (reach[upper_id][id] && reach[id][lower_id]) marked.push_back(id);
  return pack_interval(dag, std::move(marked), upper_id, lower_id);
}

const Rectangle& Interval::cover_rect(int upper, int lower) const {
  for (const Cover& c : covers)
    if (c.upper == upper && c.lower == lower) return c.rect;
  fail(Errc::internal, "no cover between the given interval elements");
}

Interval interval(const GridDiagram& g, const MarkingNumbering& num,
                  const GridState& y, const GridState& x, int length_cap) {
  const Bigrading bx = bigrading(g, x);
  const Bigrading by = bigrading(g, y);
  if (!(x == y) &&
      (bx.alexander != by.alexander || bx.maslov <= by.maslov))
    fail(Errc::empty_interval, "states are not comparable");
  const int gap = bx.maslov - by.maslov;
  if (gap + 1 > length_cap)
    fail(Errc::cap_exceeded,
         "interval length " + std::to_string(gap + 1) + " exceeds cap " +
             std::to_string(length_cap));
  DownDag dag = down_dag(g, num, x, gap);
  int y_id = -1;
  for (std::size_t i = 0; i < dag.states.size(); ++i)
    if (dag.gap[i] == gap && dag.states[i] == y) {
      y_id = static_cast<int>(i);
      break;
    }
  if (y_id < 0) fail(Errc::empty_interval, "no positive path between states");
  return interval_from_dag(dag, y_id);
}

std::vector<std::vector<int>> maximal_chains(const Interval& iv,
                                             long long budget) {
  std::vector<std::vector<int>> chains;
  std::vector<int> cur{iv.bottom_id};
  std::function<void(int)> dfs = [&](int e) {
    if (e == iv.top_id) {
      if (static_cast<long long>(chains.size()) >= budget)
        fail(Errc::cap_exceeded, "maximal chain enumeration exceeded budget");
      chains.push_back(cur);
      return;
    }
    for (int u : iv.ups[e]) {
      cur.push_back(u);
      dfs(u);
      cur.pop_back();
    }
  };
  if (iv.size() > 0) dfs(iv.bottom_id);
  return chains;
}

std::vector<std::vector<int>> FinitePoset::down_adj() const {
  std::vector<std::vector<int>> down(n);
  for (int i = 0; i < n; ++i)
    for (int j : up[i]) down[j].push_back(i);
  for (auto& v : down) std::sort(v.begin(), v.end());
  return down;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<char> has_below(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : up[i]) has_below[j] = 1;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!has_below[i]) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (up[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::vector<char>> FinitePoset::leq_closure() const {
  std::vector<std::vector<char>> closure(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    std::vector<int> stack{a};
    closure[a][a] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : up[v])
        if (!closure[a][w]) {
          closure[a][w] = 1;
          stack.push_back(w);
        }
    }
  }
  return closure;
}

std::vector<std::vector<int>> FinitePoset::maximal_chains() const {
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(int)> dfs = [&](int e) {
    cur.push_back(e);
    if (up[e].empty()) {
      chains.push_back(cur);
    } else {
      for (int u : up[e]) dfs(u);
    }
    cur.pop_back();
  };
  for (int m : minimal_elements()) dfs(m);
  return chains;
}

ChainPosetAbove barycentric_above(const Interval& iv) {
  const int m = iv.size();
  // Comparability inside the interval.
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a) {
    std::vector<int> stack{a};
    below[a][a] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : iv.ups[v])
        if (!below[a][w]) {
          below[a][w] = 1;
          stack.push_back(w);
        }
    }
  }

  std::vector<int> middles;
  for (int e = 0; e < m; ++e)
    if (e != iv.bottom_id && e != iv.top_id) middles.push_back(e);

  // Chains of the open interval; element ids ascend with the Maslov
  // grading, so enumerating by increasing id visits each chain once.
  ChainPosetAbove out;
  std::vector<int> cur;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::vector<int> full;
    full.reserve(cur.size() + 2);
    full.push_back(iv.bottom_id);
    full.insert(full.end(), cur.begin(), cur.end());
    full.push_back(iv.top_id);
    out.chains.push_back(std::move(full));
    for (std::size_t t = from; t < middles.size(); ++t) {
      const int mid = middles[t];
      if (!cur.empty() && !(below[cur.back()][mid] && cur.back() != mid))
        continue;
      cur.push_back(mid);
      extend(t + 1);
      cur.pop_back();
    }
  };
  if (m > 0 && iv.bottom_id != iv.top_id) {
    extend(0);
  } else if (m > 0) {
    out.chains.push_back({iv.bottom_id});
  }

  std::sort(out.chains.begin(), out.chains.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  const int cnt = static_cast<int>(out.chains.size());
  out.poset.n = cnt;
  out.poset.up.assign(cnt, {});
  std::vector<int> grading(cnt);
  for (int i = 0; i < cnt; ++i)
    grading[i] = static_cast<int>(out.chains[i].size()) - 2;
  for (int i = 0; i < cnt; ++i) {
    for (int j = 0; j < cnt; ++j) {
      if (out.chains[j].size() != out.chains[i].size() + 1) continue;
      std::vector<int> a = out.chains[i];
      std::vector<int> b = out.chains[j];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        out.poset.up[i].push_back(j);
    }
    std::sort(out.poset.up[i].begin(), out.poset.up[i].end());
  }
  out.poset.grading = std::move(grading);
  return out;
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  FinitePoset r;
  r.n = p.n * q.n;
  r.up.assign(r.n, {});
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < q.n; ++j) {
      const int id = i * q.n + j;
      for (int i2 : p.up[i]) r.up[id].push_back(i2 * q.n + j);
      for (int j2 : q.up[j]) r.up[id].push_back(i * q.n + j2);
      std::sort(r.up[id].begin(), r.up[id].end());
    }
  }
  if (p.grading && q.grading) {
    std::vector<int> grading(r.n);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < q.n; ++j)
        grading[i * q.n + j] = (*p.grading)[i] + (*q.grading)[j];
    r.grading = std::move(grading);
  }
  return r;
}

bool SimplicialComplex::pure() const {
  for (const auto& f : facets)
    if (f.size() != facets.front().size()) return false;
  return true;
}

int SimplicialComplex::dim() const {
  std::size_t mx = 0;
  for (const auto& f : facets) mx = std::max(mx, f.size());
  return static_cast<int>(mx) - 1;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
  std::set<std::vector<int>> faces;
  for (const auto& f : facets) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) face.push_back(f[b]);
      faces.insert(std::move(face));
    }
  }
  return {faces.begin(), faces.end()};
}

long long SimplicialComplex::euler_char() const {
  long long chi = 0;
  for (const auto& f : all_faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> fv(static_cast<std::size_t>(dim()) + 1, 0);
  for (const auto& f : all_faces()) fv[f.size() - 1] += 1;
  return fv;
}

SimplicialComplex make_complex(int nverts,
                               std::vector<std::vector<int>> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<std::vector<int>> keep;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < facets.size() && maximal; ++j) {
      if (i == j || facets[j].size() <= facets[i].size()) continue;
      if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                        facets[i].end()))
        maximal = false;
    }
    if (maximal) keep.push_back(facets[i]);
  }
  return SimplicialComplex{nverts, std::move(keep)};
}

SimplicialComplex order_complex(const FinitePoset& p) {
  return make_complex(p.n, p.maximal_chains());
}

ChainComplexF2 gt_chain_complex(const GridDiagram& g,
                                const MarkingNumbering& num, int alexander_in,
                                int m_floor, int cap) {
  const int n = g.n();
  ChainComplexF2 cc;
  std::unordered_map<GridState, int, StateHash> index;

  std::vector<int> k(n, 0);
  std::function<void(const Generator&, int, int, int)> emit =
      [&](const Generator& gen, int mgen, int pos, int remaining) {
        if (pos == n - 1) {
          k[pos] = remaining;
          GridState st{gen, k};
          index.emplace(st, cc.size());
          cc.states.push_back(std::move(st));
          cc.grading.push_back(Bigrading{mgen, alexander_in});
          return;
        }
        for (int v = 0; v <= remaining; ++v) {
          k[pos] = v;
          emit(gen, mgen, pos + 1, remaining - v);
        }
      };

  for (const Generator& gen : enumerate_generators(g, cap)) {
    const int a = alexander(g, gen);
    const int m = maslov(g, gen);
    const int s = a - alexander_in;
    if (s < 0) continue;
    const int mstate = m - 2 * s;
    if (mstate < m_floor) continue;
    emit(gen, mstate, 0, s);
  }

  cc.boundary.resize(cc.size());
  for (int i = 0; i < cc.size(); ++i) {
    for (const CoverRelation& cr : covers_down(g, num, cc.states[i])) {
      auto it = index.find(cr.lower);
      if (it == index.end()) {
        if (cc.grading[i].maslov - 1 >= m_floor)
          fail(Errc::internal, "cover target missing inside the band");
        continue;  // dropped by the truncation
      }
      cc.boundary[i].push_back(it->second);
    }
    std::sort(cc.boundary[i].begin(), cc.boundary[i].end());
  }
  return cc;
}

}  // namespace gs
