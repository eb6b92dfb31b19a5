#include "gridshell/flowcat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gs {

MorSpace mor_complex(const GridDiagram& g, const MarkingNumbering& num,
                     const GridState& y, const GridState& x, int length_cap,
                     long long budget) {
  MorSpace mor;
  mor.x = x;
  mor.y = y;
  mor.iv = interval(g, num, y, x, length_cap);
  if (mor.iv.size() < 2)
    fail(Errc::empty_interval, "morphism space needs y strictly below x");
  mor.dim = mor.iv.length() - 2;
  mor.bary = barycentric_above(mor.iv);
  mor.complex = order_complex(mor.bary.poset);
  if (static_cast<long long>(mor.complex.facets.size()) > budget)
    fail(Errc::cap_exceeded, "morphism space facet count over budget");
  return mor;
}

SimplicialComplex boundary_complex(const SimplicialComplex& s) {
  if (!s.pure()) fail(Errc::not_pure, "boundary of a non-pure complex");
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& f : s.facets) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> ridge;
      ridge.reserve(f.size() - 1);
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != drop) ridge.push_back(f[t]);
      ridge_count[ridge] += 1;
    }
  }
  std::vector<std::vector<int>> facets;
  for (const auto& [ridge, cnt] : ridge_count)
    if (cnt == 1 && !ridge.empty()) facets.push_back(ridge);
  return make_complex(s.nverts, std::move(facets));
}

namespace {

// The partial shelling extends by f when f meets the placed part in a
// nonempty union of its own ridges.
bool placeable(const std::vector<std::vector<int>>& facets,
               const std::vector<int>& placed, int f) {
  const std::size_t fsize = facets[f].size();
  std::vector<std::vector<int>> inters;
  inters.reserve(placed.size());
  bool some_ridge = false;
  for (int p : placed) {
    std::vector<int> ii;
    std::set_intersection(facets[p].begin(), facets[p].end(),
                          facets[f].begin(), facets[f].end(),
                          std::back_inserter(ii));
    if (ii.size() + 1 == fsize) some_ridge = true;
    inters.push_back(std::move(ii));
  }
  if (!some_ridge) return false;
  for (const auto& ii : inters) {
    bool dominated = false;
    for (const auto& qq : inters) {
      if (qq.size() + 1 != fsize) continue;
      if (std::includes(qq.begin(), qq.end(), ii.begin(), ii.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

bool search_shelling(const std::vector<std::vector<int>>& facets,
                     const std::vector<int>& order_hint,
                     std::vector<int>& placed, std::vector<char>& used,
                     long long& budget) {
  if (placed.size() == facets.size()) return true;
  for (int f : order_hint) {
    if (used[f]) continue;
    if (--budget <= 0) return false;
    if (!placed.empty() && !placeable(facets, placed, f)) continue;
    used[f] = 1;
    placed.push_back(f);
    if (search_shelling(facets, order_hint, placed, used, budget)) return true;
    placed.pop_back();
    used[f] = 0;
  }
  return false;
}

}  // namespace

BallCertificate certify(const SimplicialComplex& s,
                        const std::vector<int>* seed_order,
                        long long node_budget) {
  BallCertificate cert;
  if (s.facets.empty()) return cert;
  cert.pure = s.pure();
  cert.euler = s.euler_char();
  cert.f_vec = s.f_vector();

  if (cert.pure) {
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& f : s.facets) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != drop) ridge.push_back(f[t]);
        ridge_count[ridge] += 1;
      }
    }
    cert.pseudomanifold = true;
    for (const auto& [ridge, cnt] : ridge_count) {
      if (cnt > 2) cert.pseudomanifold = false;
      if (cnt == 1) {
        cert.has_free_ridge = true;
        if (!ridge.empty()) cert.boundary_facets += 1;
      }
    }
    if (s.dim() >= 1) cert.boundary_euler = boundary_complex(s).euler_char();
  }

  std::vector<int> hint(s.facets.size());
  std::iota(hint.begin(), hint.end(), 0);
  if (seed_order && seed_order->size() == s.facets.size()) hint = *seed_order;

  std::vector<int> placed;
  std::vector<char> used(s.facets.size(), 0);
  long long budget = node_budget;
  if (search_shelling(s.facets, hint, placed, used, budget)) {
    cert.shelled = true;
    cert.shelling = placed;
  }

  if (cert.pure && cert.shelled && cert.pseudomanifold) {
    const int d = s.dim();
    const long long sphere_euler = (d % 2 == 0) ? 2 : 0;
    if (cert.has_free_ridge && cert.euler == 1)
      cert.verdict = CertVerdict::Ball;
    else if (!cert.has_free_ridge && cert.euler == sphere_euler)
      cert.verdict = CertVerdict::Sphere;
  }
  return cert;
}

namespace {

std::vector<GridState> chain_states(const Interval& iv,
                                    const std::vector<int>& chain) {
  std::vector<GridState> out;
  out.reserve(chain.size());
  for (int id : chain) out.push_back(iv.elements[id]);
  std::sort(out.begin(), out.end());
  return out;
}

// Everything derived from [z,x] that the composition checks share.
struct ZxContext {
  const Interval* iv = nullptr;
  ChainPosetAbove above;
  SimplicialComplex bdry;
  std::map<std::vector<GridState>, int> index;  // chain state-set -> element

  explicit ZxContext(const Interval& iv_zx) : iv(&iv_zx) {
    above = barycentric_above(iv_zx);
    bdry = boundary_complex(order_complex(above.poset));
    for (std::size_t i = 0; i < above.chains.size(); ++i)
      index.emplace(chain_states(iv_zx, above.chains[i]),
                    static_cast<int>(i));
  }
};

// (a) + (b): the pairing of chain posets is an isomorphism onto the chains
// through y, and the induced simplicial map embeds into the boundary.
void check_iso_embed(const ZxContext& zx, const Interval& iv_yx,
                     const Interval& iv_zy, const GridState& y,
                     CompositionCheck& out) {
  const ChainPosetAbove above_yx = barycentric_above(iv_yx);
  const ChainPosetAbove above_zy = barycentric_above(iv_zy);

  std::vector<int> through_y;
  std::vector<char> contains_y(zx.above.chains.size(), 0);
  for (std::size_t i = 0; i < zx.above.chains.size(); ++i) {
    for (int id : zx.above.chains[i]) {
      if (zx.iv->elements[id] == y) {
        contains_y[i] = 1;
        through_y.push_back(static_cast<int>(i));
        break;
      }
    }
  }

  const FinitePoset prod = product(above_yx.poset, above_zy.poset);
  const int qn = above_zy.poset.n;
  std::vector<int> image(prod.n, -1);
  for (int i = 0; i < above_yx.poset.n; ++i) {
    for (int j = 0; j < qn; ++j) {
      std::vector<GridState> states = chain_states(iv_yx, above_yx.chains[i]);
      for (const GridState& st : chain_states(iv_zy, above_zy.chains[j]))
        states.push_back(st);
      std::sort(states.begin(), states.end());
      states.erase(std::unique(states.begin(), states.end()), states.end());
      auto it = zx.index.find(states);
      if (it == zx.index.end() || !contains_y[it->second]) return;
      image[i * qn + j] = it->second;
    }
  }

  std::vector<int> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  if (sorted_image != through_y) return;  // through_y is sorted ascending
  if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) !=
      sorted_image.end())
    return;

  const auto leq_prod = prod.leq_closure();
  const auto leq_zx = zx.above.poset.leq_closure();
  for (int a = 0; a < prod.n; ++a)
    for (int b = 0; b < prod.n; ++b)
      if (leq_prod[a][b] != leq_zx[image[a]][image[b]]) return;
  out.iso_ok = true;

  for (const auto& pf : prod.maximal_chains()) {
    std::vector<int> mapped;
    mapped.reserve(pf.size());
    for (int v : pf) mapped.push_back(image[v]);
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
      return;
    bool inside = false;
    for (const auto& bf : zx.bdry.facets) {
      if (std::includes(bf.begin(), bf.end(), mapped.begin(), mapped.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) return;
  }
  out.embed_ok = true;
}

// (c): boundary facets are exactly the images over the middles, counted.
void check_coverage_counts(
    const ZxContext& zx,
    const std::function<std::pair<const Interval*, const Interval*>(
        const GridState&)>& mid_intervals,
    CompositionCheck& out) {
  bool coverage = true;
  std::map<std::vector<GridState>, long long> facets_by_min;
  for (const auto& bf : zx.bdry.facets) {
    int min_vertex = bf.front();
    for (int v : bf)
      if (zx.above.chains[v].size() < zx.above.chains[min_vertex].size())
        min_vertex = v;
    const auto& min_chain = zx.above.chains[min_vertex];
    bool ok = min_chain.size() == 3;
    if (ok) {
      std::vector<int> a = min_chain;
      std::sort(a.begin(), a.end());
      for (int v : bf) {
        std::vector<int> b = zx.above.chains[v];
        std::sort(b.begin(), b.end());
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) ok = false;
      }
    }
    if (!ok) {
      coverage = false;
      continue;
    }
    facets_by_min[chain_states(*zx.iv, min_chain)] += 1;
  }
  out.coverage_ok = coverage;

  bool per_middle_ok = true;
  long long expected_total = 0;
  for (int e = 0; e < zx.iv->size(); ++e) {
    if (e == zx.iv->bottom_id || e == zx.iv->top_id) continue;
    const GridState& mid = zx.iv->elements[e];
    std::vector<GridState> key{zx.iv->bottom, mid, zx.iv->top};
    std::sort(key.begin(), key.end());
    long long count = 0;
    if (auto it = facets_by_min.find(key); it != facets_by_min.end())
      count = it->second;

    const auto [iv_mx, iv_zm] = mid_intervals(mid);
    const long long expect = static_cast<long long>(
        product(barycentric_above(*iv_mx).poset,
                barycentric_above(*iv_zm).poset)
            .maximal_chains()
            .size());
    if (count != expect) per_middle_ok = false;
    expected_total += expect;
  }
  out.counts_ok =
      per_middle_ok &&
      expected_total == static_cast<long long>(zx.bdry.facets.size());
}

}  // namespace

CompositionCheck verify_composition(const GridDiagram& g,
                                    const MarkingNumbering& num,
                                    const GridState& z, const GridState& y,
                                    const GridState& x, int length_cap,
                                    long long budget) {
  (void)budget;
  CompositionCheck out;
  const Interval iv_yx = interval(g, num, y, x, length_cap);
  const Interval iv_zy = interval(g, num, z, y, length_cap);
  const Interval iv_zx = interval(g, num, z, x, length_cap);
  const ZxContext zx(iv_zx);
  check_iso_embed(zx, iv_yx, iv_zy, y, out);
  std::map<GridState, std::pair<Interval, Interval>> cache;
  check_coverage_counts(
      zx,
      [&](const GridState& mid) {
        auto it = cache.find(mid);
        if (it == cache.end())
          it = cache
                   .emplace(mid, std::make_pair(
                                     interval(g, num, mid, x, length_cap),
                                     interval(g, num, z, mid, length_cap)))
                   .first;
        return std::make_pair(&it->second.first, &it->second.second);
      },
      out);
  return out;
}

std::string facet_listing(const MorSpace& mor) {
  std::string out;
  for (const auto& facet : mor.complex.facets) {
    for (std::size_t t = 0; t < facet.size(); ++t) {
      if (t) out += " ";
      const auto& chain = mor.bary.chains[facet[t]];
      out += "{";
      for (std::size_t e = 0; e < chain.size(); ++e) {
        if (e) out += "<";
        out += to_string(mor.iv.elements[chain[e]]);
      }
      out += "}";
    }
    out += "\n";
  }
  return out;
}

FlowcatSweepStats flowcat_sweep(const GridDiagram& g,
                                const MarkingNumbering& num,
                                const FlowcatSweepOptions& opts) {
  const auto gens = enumerate_generators(g, opts.gen_cap);
  std::vector<FlowcatSweepStats> per_gen(gens.size());
  parallel_for(gens.size(), opts.threads, [&](std::size_t gi) {
    FlowcatSweepStats& st = per_gen[gi];
    const GridState top = zero_state(gens[gi], g.n());
    const DownDag dag = down_dag(g, num, top, opts.max_gap);
    const int total = static_cast<int>(dag.states.size());
    const auto reach = dag_reachability(dag);

    auto note = [&](const std::string& msg) {
      if (static_cast<int>(st.failures.size()) < opts.max_examples)
        st.failures.push_back(msg);
    };

    std::map<std::pair<int, int>, Interval> iv_cache;
    auto interval_of = [&](int uid, int vid) -> const Interval& {
      auto key = std::make_pair(uid, vid);
      auto it = iv_cache.find(key);
      if (it == iv_cache.end())
        it = iv_cache.emplace(key, interval_between(dag, reach, uid, vid))
                 .first;
      return it->second;
    };

    for (int id = 1; id < total; ++id) {
      const Interval& iv = interval_of(dag.top_id, id);
      MorSpace mor;
      mor.x = top;
      mor.y = dag.states[id];
      mor.iv = iv;
      mor.dim = iv.length() - 2;
      mor.bary = barycentric_above(iv);
      mor.complex = order_complex(mor.bary.poset);
      st.mor_spaces += 1;

      const BallCertificate cert =
          certify(mor.complex, nullptr, opts.shell_budget);
      const bool ok = mor.complex.pure() && mor.complex.dim() == mor.dim &&
                      cert.verdict == CertVerdict::Ball && cert.euler == 1;
      if (ok)
        st.balls += 1;
      else {
        st.ball_failures += 1;
        note("ball certification failed for Mor(" + to_string(mor.x) + ", " +
             to_string(mor.y) + ")");
      }

      if (mor.dim >= 1) {
        st.boundaries_checked += 1;
        const SimplicialComplex bdry = boundary_complex(mor.complex);
        const BallCertificate bcert = certify(bdry, nullptr, opts.shell_budget);
        const long long expect_euler = ((mor.dim - 1) % 2 == 0) ? 2 : 0;
        if (!(bcert.verdict == CertVerdict::Sphere &&
              bcert.euler == expect_euler)) {
          st.sphere_failures += 1;
          note("boundary sphere failed for Mor(" + to_string(mor.x) + ", " +
               to_string(mor.y) + ")");
        }
      }

      if (iv.length() >= 3) {
        st.subthin_checked += 1;
        if (classify_thin(mor.bary.poset) != ThinClass::Subthin) {
          st.subthin_failures += 1;
          note("subthin classification failed for [" + to_string(mor.y) +
               ", " + to_string(mor.x) + "]");
        }
      }
    }

    if (opts.compositions) {
      for (int zid = 1; zid < total; ++zid) {
        if (dag.gap[zid] < 2) continue;
        // Middles strictly between z and the top.
        std::vector<int> mids;
        for (int yid = 1; yid < total; ++yid)
          if (yid != zid && reach[yid][zid] && dag.gap[yid] >= 1)
            mids.push_back(yid);
        if (mids.empty()) continue;

        const Interval& iv_zx = interval_of(dag.top_id, zid);
        const ZxContext zx(iv_zx);
        CompositionCheck shared;
        check_coverage_counts(
            zx,
            [&](const GridState& mid) {
              int mid_id = -1;
              for (int yid : mids)
                if (dag.states[yid] == mid) {
                  mid_id = yid;
                  break;
                }
              if (mid_id < 0)
                fail(Errc::internal, "interval middle missing from DAG");
              return std::make_pair(&interval_of(dag.top_id, mid_id),
                                    &interval_of(mid_id, zid));
            },
            shared);

        for (int yid : mids) {
          st.compositions += 1;
          CompositionCheck cc;
          cc.coverage_ok = shared.coverage_ok;
          cc.counts_ok = shared.counts_ok;
          check_iso_embed(zx, interval_of(dag.top_id, yid),
                          interval_of(yid, zid), dag.states[yid], cc);
          if (!cc.pass()) {
            st.composition_failures += 1;
            note("composition failed for (" + to_string(dag.states[zid]) +
                 ", " + to_string(dag.states[yid]) + ", " + to_string(top) +
                 ")");
          }
        }
      }
    }
  });

  FlowcatSweepStats total;
  for (const auto& st : per_gen) {
    total.mor_spaces += st.mor_spaces;
    total.balls += st.balls;
    total.ball_failures += st.ball_failures;
    total.boundaries_checked += st.boundaries_checked;
    total.sphere_failures += st.sphere_failures;
    total.subthin_checked += st.subthin_checked;
    total.subthin_failures += st.subthin_failures;
    total.compositions += st.compositions;
    total.composition_failures += st.composition_failures;
    for (const auto& f : st.failures)
      if (static_cast<int>(total.failures.size()) < opts.max_examples)
        total.failures.push_back(f);
  }
  return total;
}

}  // namespace gs
