#include "gridshell/shelling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gs {

LabelTriple label(const GridDiagram& g, CutLine l, const Rectangle& r) {
  const int n = g.n();
  const int offset = mod(l.cell - r.col, n);
  if (offset < r.w) {
    // The line runs through the rectangle: count leftward from the line
    // to the left edge, both endpoints' circles included.
    return LabelTriple{0, offset + 1, r.w};
  }
  // Count rightward from the line to the left edge.
  return LabelTriple{1, mod(r.col - l.cell, n), r.w};
}

std::vector<LabelTriple> chain_labeling(const GridDiagram& g, CutLine l,
                                        const Interval& iv,
                                        const std::vector<int>& chain) {
  std::vector<LabelTriple> out;
  out.reserve(chain.size() - 1);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    out.push_back(label(g, l, iv.cover_rect(chain[k + 1], chain[k])));
  return out;
}

namespace {

bool weakly_increasing(const std::vector<LabelTriple>& labels) {
  for (std::size_t k = 0; k + 1 < labels.size(); ++k)
    if (labels[k + 1] < labels[k]) return false;
  return true;
}

bool strictly_increasing(const std::vector<LabelTriple>& labels) {
  for (std::size_t k = 0; k + 1 < labels.size(); ++k)
    if (!(labels[k] < labels[k + 1])) return false;
  return true;
}

std::string interval_name(const Interval& iv) {
  return "[" + to_string(iv.bottom) + ", " + to_string(iv.top) + "]";
}

}  // namespace

ELReport verify_el(const GridDiagram& g, CutLine l, const Interval& iv,
                   long long budget) {
  ELReport rep;
  rep.interval_id = interval_name(iv);
  const auto chains = maximal_chains(iv, budget);
  rep.chain_count = static_cast<long long>(chains.size());
  rep.labelings.reserve(chains.size());
  for (const auto& c : chains)
    rep.labelings.push_back(chain_labeling(g, l, iv, c));

  for (std::size_t idx = 0; idx < chains.size(); ++idx) {
    if (weakly_increasing(rep.labelings[idx]))
      rep.weak_increasing.push_back(static_cast<int>(idx));
    if (strictly_increasing(rep.labelings[idx]))
      rep.strict_increasing.push_back(static_cast<int>(idx));
  }

  rep.lex_min_chain = 0;
  for (std::size_t idx = 1; idx < chains.size(); ++idx)
    if (rep.labelings[idx] < rep.labelings[rep.lex_min_chain])
      rep.lex_min_chain = static_cast<int>(idx);

  auto sorted = rep.labelings;
  std::sort(sorted.begin(), sorted.end());
  rep.labelings_distinct =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  rep.lex_min_is_increasing =
      weakly_increasing(rep.labelings[rep.lex_min_chain]);
  rep.verdict_el_weak = rep.weak_increasing.size() == 1 &&
                        rep.weak_increasing[0] == rep.lex_min_chain;
  rep.verdict_el_strict = rep.strict_increasing.size() == 1 &&
                          rep.strict_increasing[0] == rep.lex_min_chain;
  return rep;
}

std::vector<std::vector<int>> shelling_order(const GridDiagram& g, CutLine l,
                                             const Interval& iv,
                                             long long budget) {
  const auto chains = maximal_chains(iv, budget);
  std::vector<std::vector<LabelTriple>> labelings;
  labelings.reserve(chains.size());
  for (const auto& c : chains)
    labelings.push_back(chain_labeling(g, l, iv, c));
  std::vector<int> order(chains.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (labelings[a] != labelings[b]) return labelings[a] < labelings[b];
    return chains[a] < chains[b];
  });
  std::vector<std::vector<int>> out;
  out.reserve(chains.size());
  for (int idx : order) out.push_back(chains[idx]);
  return out;
}

bool verify_bjorner(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<int>> sorted = facets;
  for (auto& f : sorted) std::sort(f.begin(), f.end());

  auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };

  for (std::size_t j = 1; j < sorted.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::vector<int> ij = intersect(sorted[i], sorted[j]);
      bool witnessed = false;
      for (std::size_t k = 0; k < j && !witnessed; ++k) {
        const std::vector<int> kj = intersect(sorted[k], sorted[j]);
        if (kj.size() + 1 != sorted[j].size()) continue;
        if (std::includes(kj.begin(), kj.end(), ij.begin(), ij.end()))
          witnessed = true;
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

ThinClass classify_thin(const FinitePoset& p) {
  const auto chains = p.maximal_chains();
  if (chains.empty()) return ThinClass::Neither;
  const std::size_t len = chains.front().size();
  for (const auto& c : chains)
    if (c.size() != len) return ThinClass::Neither;

  // Count, for every submaximal chain (a maximal chain minus one element,
  // as a set), how many maximal chains cover it. Dropping from a length-1
  // chain leaves the empty chain, which participates like any other.
  std::map<std::vector<int>, int> covered_by;
  for (const auto& c : chains) {
    std::vector<int> key = c;
    std::sort(key.begin(), key.end());
    for (std::size_t drop = 0; drop < len; ++drop) {
      std::vector<int> sub;
      sub.reserve(len - 1);
      for (std::size_t t = 0; t < len; ++t)
        if (t != drop) sub.push_back(key[t]);
      covered_by[sub] += 1;
    }
  }
  bool all_two = true;
  for (const auto& [sub, cnt] : covered_by) {
    (void)sub;
    if (cnt > 2) return ThinClass::Neither;
    if (cnt != 2) all_two = false;
  }
  return all_two ? ThinClass::Thin : ThinClass::Subthin;
}

int beta_support(int n, const Rectangle& r1, const Rectangle& r2) {
  std::vector<int> mult(n * n, 0);
  auto add = [&](const Rectangle& r) {
    for (int s = 0; s < r.w; ++s)
      for (int t = 0; t < r.h; ++t)
        mult[mod(r.col + s, n) * n + mod(r.row + t, n)] += 1;
  };
  add(r1);
  add(r2);
  int support = 0;
  for (int c = 0; c < n; ++c) {
    const int left = mod(c - 1, n);
    for (int r = 0; r < n; ++r) {
      if (mult[left * n + r] != mult[c * n + r]) {
        ++support;
        break;
      }
    }
  }
  return support;
}

ShellingSweepStats shelling_sweep(const GridDiagram& g,
                                  const MarkingNumbering& num,
                                  const ShellingSweepOptions& opts) {
  const auto gens = enumerate_generators(g, opts.gen_cap);
  std::vector<int> lines = opts.line_cells;
  if (lines.empty()) {
    lines.resize(g.n());
    std::iota(lines.begin(), lines.end(), 0);
  }

  std::vector<ShellingSweepStats> per_gen(gens.size());
  parallel_for(gens.size(), opts.threads, [&](std::size_t gi) {
    ShellingSweepStats& st = per_gen[gi];
    const GridState top = zero_state(gens[gi], g.n());
    const DownDag dag = down_dag(g, num, top, opts.max_gap);
    for (int id = 1; id < static_cast<int>(dag.states.size()); ++id) {
      const Interval iv = interval_from_dag(dag, id);
      st.intervals += 1;
      for (int cell : lines) {
        const CutLine l{cell};
        const ELReport rep = verify_el(g, l, iv, opts.budget);
        st.verifications += 1;
        st.chains += rep.chain_count;
        if (!rep.verdict_el_weak || !rep.labelings_distinct) {
          st.el_failures += 1;
          if (static_cast<int>(st.failures.size()) < opts.max_examples)
            st.failures.push_back("EL failure at " + rep.interval_id +
                                  " line " + std::to_string(l.position()));
        }
        if (rep.weak_increasing != rep.strict_increasing)
          st.weak_strict_mismatches += 1;

        // Hexagon dichotomy along every strictly decreasing consecutive
        // pair of covers.
        const auto chains = maximal_chains(iv, opts.budget);
        for (std::size_t ci = 0; ci < chains.size(); ++ci) {
          const auto& labels = rep.labelings[ci];
          for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
            if (!(labels[k + 1] < labels[k])) continue;
            st.hexagons_checked += 1;
            const Rectangle& r1 =
                iv.cover_rect(chains[ci][k + 1], chains[ci][k]);
            const Rectangle& r2 =
                iv.cover_rect(chains[ci][k + 2], chains[ci][k + 1]);
            const int support = beta_support(g.n(), r1, r2);
            if (support != 3 && support != 4) {
              st.hexagon_violations += 1;
              if (static_cast<int>(st.failures.size()) < opts.max_examples)
                st.failures.push_back("hexagon support " +
                                      std::to_string(support) + " at " +
                                      rep.interval_id);
            }
          }
        }

        if (opts.check_bjorner && rep.chain_count >= 2) {
          st.bjorner_checked += 1;
          if (!verify_bjorner(shelling_order(g, l, iv, opts.budget))) {
            st.bjorner_failures += 1;
            if (static_cast<int>(st.failures.size()) < opts.max_examples)
              st.failures.push_back("shelling condition failed at " +
                                    rep.interval_id);
          }
        }
      }
    }
  });

  ShellingSweepStats total;
  for (const auto& st : per_gen) {
    total.intervals += st.intervals;
    total.verifications += st.verifications;
    total.chains += st.chains;
    total.el_failures += st.el_failures;
    total.weak_strict_mismatches += st.weak_strict_mismatches;
    total.hexagons_checked += st.hexagons_checked;
    total.hexagon_violations += st.hexagon_violations;
    total.bjorner_checked += st.bjorner_checked;
    total.bjorner_failures += st.bjorner_failures;
    for (const auto& f : st.failures)
      if (static_cast<int>(total.failures.size()) < opts.max_examples)
        total.failures.push_back(f);
  }
  return total;
}

ThinnessStats thinness_sweep(const GridDiagram& g, const MarkingNumbering& num,
                             int threads, int gen_cap) {
  const auto gens = enumerate_generators(g, gen_cap);
  std::vector<ThinnessStats> per_gen(gens.size());
  parallel_for(gens.size(), threads, [&](std::size_t gi) {
    ThinnessStats& st = per_gen[gi];
    const GridState top = zero_state(gens[gi], g.n());
    const DownDag dag = down_dag(g, num, top, 2);
    for (int id = 1; id < static_cast<int>(dag.states.size()); ++id) {
      if (dag.gap[id] != 2) continue;
      const Interval iv = interval_from_dag(dag, id);
      st.intervals += 1;
      const auto chains = maximal_chains(iv);
      if (chains.size() != 2) {
        st.violations += 1;
        if (st.failures.size() < 3)
          st.failures.push_back(interval_name(iv) + " has " +
                                std::to_string(chains.size()) +
                                " maximal chains");
      }
    }
  });
  ThinnessStats total;
  for (const auto& st : per_gen) {
    total.intervals += st.intervals;
    total.violations += st.violations;
    for (const auto& f : st.failures)
      if (total.failures.size() < 3) total.failures.push_back(f);
  }
  return total;
}

}  // namespace gs
