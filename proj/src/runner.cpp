#include "gridshell/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gs {

namespace {

using ordered_json = nlohmann::ordered_json;

struct NamedGrid {
  std::string name;
  GridDiagram g;
  MarkingNumbering num;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open grid file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<NamedGrid> load_grids(const RunConfig& cfg) {
  std::vector<NamedGrid> grids;
  for (const auto& [name, text] : cfg.grid_texts) {
    GridDiagram g = GridDiagram::parse(text);
    MarkingNumbering num = derive_numbering(g);
    grids.push_back({name, std::move(g), std::move(num)});
  }
  for (const auto& path : cfg.grid_paths) {
    GridDiagram g = GridDiagram::parse(read_file(path));
    MarkingNumbering num = derive_numbering(g);
    grids.push_back({path, std::move(g), std::move(num)});
  }
  if (grids.empty()) fail(Errc::bad_config, "no grid given");
  return grids;
}

ordered_json dims_to_json(const BigradedDims& dims) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, d] : dims.dims)
    arr.push_back({key.second, key.first, d});  // [M, A, dim]
  return arr;
}

std::string dims_to_text(const BigradedDims& dims) {
  std::string out;
  for (const auto& [key, d] : dims.dims)
    out += "  M=" + std::to_string(key.second) +
           " A=" + std::to_string(key.first) + "  dim " + std::to_string(d) +
           "\n";
  out += "  total rank " + std::to_string(dims.total_rank()) + "\n";
  return out;
}

int line_cell_from_position(const GridDiagram& g, double pos) {
  const double cell = pos - 0.5;
  const int c = static_cast<int>(std::lround(cell));
  if (std::abs(cell - c) > 1e-9 || c < 0 || c >= g.n())
    fail(Errc::bad_config,
         "line position must be k + 0.5 with 0 <= k < n, got " +
             std::to_string(pos));
  return c;
}

RunResult finish(const RunConfig& cfg, const ordered_json& j,
                 const std::string& text, int exit_code = 0,
                 const std::string& error = "") {
  RunResult res;
  res.exit_code = exit_code;
  res.report = cfg.json ? j.dump(2) + "\n" : text;
  res.error = error;
  return res;
}

RunResult cmd_homology(const RunConfig& cfg) {
  const auto grids = load_grids(cfg);
  const NamedGrid& ng = grids.front();

  ordered_json j;
  std::string text;
  if (cfg.flavor == "tilde") {
    const BigradedDims dims = tilde_homology(ng.g, ng.num, cfg.gen_cap);
    j["version"] = "tilde";
    j["grid"] = grid_fingerprint(ng.g);
    j["dims"] = dims_to_json(dims);
    j["valid_above"] = nullptr;
    text = "tilde homology of " + ng.name + " (grid " +
           grid_fingerprint(ng.g) + ")\n" + dims_to_text(dims);
  } else if (cfg.flavor == "minus") {
    if (!cfg.floor)
      fail(Errc::bad_config, "--floor is required for the minus flavor");
    const int floor = *cfg.floor;
    if (floor < -200)
      fail(Errc::bad_config, "floor below -200 is not supported");
    std::vector<int> sectors;
    if (cfg.sector)
      sectors.push_back(*cfg.sector);
    else
      sectors = minus_sectors(ng.g, floor, cfg.gen_cap);
    BigradedDims merged;
    for (int a : sectors) {
      const TruncatedDims td =
          minus_homology_truncated(ng.g, ng.num, a, floor, cfg.gen_cap);
      for (const auto& [k, v] : td.dims.dims) merged.dims[k] = v;
    }
    j["version"] = "minus";
    j["grid"] = grid_fingerprint(ng.g);
    j["dims"] = dims_to_json(merged);
    j["valid_above"] = floor + 1;
    text = "minus homology of " + ng.name + " (floor " +
           std::to_string(floor) + ", valid above " +
           std::to_string(floor + 1) + ")\n" + dims_to_text(merged);
  } else {
    fail(Errc::bad_config, "unknown flavor: " + cfg.flavor);
  }
  return finish(cfg, j, text);
}

RunResult cmd_shelling(const RunConfig& cfg) {
  const auto grids = load_grids(cfg);
  const NamedGrid& ng = grids.front();

  ShellingSweepOptions opts;
  opts.max_gap = cfg.interval_cap - 1;
  opts.budget = cfg.budget;
  opts.threads = cfg.threads;
  opts.gen_cap = cfg.gen_cap;
  if (cfg.line_pos)
    opts.line_cells = {line_cell_from_position(ng.g, *cfg.line_pos)};
  const ShellingSweepStats st = shelling_sweep(ng.g, ng.num, opts);

  ordered_json j;
  j["command"] = "shelling";
  j["grid"] = grid_fingerprint(ng.g);
  j["interval_cap"] = cfg.interval_cap;
  j["lines"] = opts.line_cells.empty()
                   ? ordered_json("all")
                   : ordered_json(opts.line_cells);
  j["intervals"] = st.intervals;
  j["verifications"] = st.verifications;
  j["chains"] = st.chains;
  j["el_failures"] = st.el_failures;
  j["weak_strict_mismatches"] = st.weak_strict_mismatches;
  j["hexagons_checked"] = st.hexagons_checked;
  j["hexagon_violations"] = st.hexagon_violations;
  j["bjorner_checked"] = st.bjorner_checked;
  j["bjorner_failures"] = st.bjorner_failures;
  j["failures"] = st.failures;

  std::string text = "shelling sweep of " + ng.name + "\n";
  text += "  intervals " + std::to_string(st.intervals) + ", verifications " +
          std::to_string(st.verifications) + ", chains " +
          std::to_string(st.chains) + "\n";
  text += "  EL failures " + std::to_string(st.el_failures) +
          ", weak/strict mismatches " +
          std::to_string(st.weak_strict_mismatches) + "\n";
  text += "  hexagons " + std::to_string(st.hexagons_checked) +
          " (violations " + std::to_string(st.hexagon_violations) + ")\n";
  text += "  shelling condition checked " + std::to_string(st.bjorner_checked) +
          " (failures " + std::to_string(st.bjorner_failures) + ")\n";
  for (const auto& f : st.failures) text += "  ! " + f + "\n";

  const bool ok = st.failure_total() == 0;
  return finish(cfg, j, text, ok ? 0 : 3,
                ok ? "" : "shelling invariants failed");
}

RunResult cmd_flowcat(const RunConfig& cfg) {
  const auto grids = load_grids(cfg);
  const NamedGrid& ng = grids.front();

  FlowcatSweepOptions opts;
  opts.max_gap = cfg.gap_cap;
  opts.budget = cfg.budget;
  opts.threads = cfg.threads;
  opts.gen_cap = cfg.gen_cap;
  const FlowcatSweepStats st = flowcat_sweep(ng.g, ng.num, opts);

  ordered_json j;
  j["command"] = "flowcat";
  j["grid"] = grid_fingerprint(ng.g);
  j["gap_cap"] = cfg.gap_cap;
  j["mor_spaces"] = st.mor_spaces;
  j["balls"] = st.balls;
  j["ball_failures"] = st.ball_failures;
  j["boundaries_checked"] = st.boundaries_checked;
  j["sphere_failures"] = st.sphere_failures;
  j["subthin_checked"] = st.subthin_checked;
  j["subthin_failures"] = st.subthin_failures;
  j["compositions"] = st.compositions;
  j["composition_failures"] = st.composition_failures;
  j["failures"] = st.failures;

  std::string text = "flow category sweep of " + ng.name + " (gap cap " +
                     std::to_string(cfg.gap_cap) + ")\n";
  text += "  morphism spaces " + std::to_string(st.mor_spaces) + ", balls " +
          std::to_string(st.balls) + " (failures " +
          std::to_string(st.ball_failures) + ")\n";
  text += "  boundaries " + std::to_string(st.boundaries_checked) +
          " (sphere failures " + std::to_string(st.sphere_failures) + ")\n";
  text += "  subthin checked " + std::to_string(st.subthin_checked) +
          " (failures " + std::to_string(st.subthin_failures) + ")\n";
  text += "  compositions " + std::to_string(st.compositions) +
          " (failures " + std::to_string(st.composition_failures) + ")\n";
  for (const auto& f : st.failures) text += "  ! " + f + "\n";

  if (cfg.facets) {
    ordered_json certs = ordered_json::array();
    std::string facet_text;
    const auto gens = enumerate_generators(ng.g, cfg.gen_cap);
    for (const auto& gen : gens) {
      const GridState top = zero_state(gen, ng.g.n());
      const DownDag dag = down_dag(ng.g, ng.num, top, cfg.gap_cap);
      for (int id = 1; id < static_cast<int>(dag.states.size()); ++id) {
        MorSpace mor;
        mor.x = top;
        mor.y = dag.states[id];
        mor.iv = interval_from_dag(dag, id);
        mor.dim = mor.iv.length() - 2;
        mor.bary = barycentric_above(mor.iv);
        mor.complex = order_complex(mor.bary.poset);
        const BallCertificate cert = certify(mor.complex);
        ordered_json c;
        c["x"] = to_string(mor.x);
        c["y"] = to_string(mor.y);
        c["dim"] = mor.dim;
        c["verdict"] = cert.verdict == CertVerdict::Ball     ? "Ball"
                       : cert.verdict == CertVerdict::Sphere ? "Sphere"
                                                             : "Unknown";
        c["euler"] = cert.euler;
        c["f_vector"] = cert.f_vec;
        c["boundary_facets"] = cert.boundary_facets;
        certs.push_back(std::move(c));
        facet_text += "Mor(" + to_string(mor.x) + ", " + to_string(mor.y) +
                      ") dim " + std::to_string(mor.dim) + "\n" +
                      facet_listing(mor);
      }
    }
    j["certificates"] = std::move(certs);
    text += facet_text;
  }

  const bool ok = st.failure_total() == 0;
  return finish(cfg, j, text, ok ? 0 : 3,
                ok ? "" : "flow category invariants failed");
}

struct CheckOutcome {
  std::string name;
  std::string grid;
  bool pass = true;
  std::string details;
};

// Random positive domains as short sums of empty rectangles; checks the
// decomposition returns mu(D) parts that re-sum to D.
CheckOutcome check_decomposition(const NamedGrid& ng, int trials,
                                 std::uint64_t seed) {
  CheckOutcome out{"decomposition_roundtrip", ng.name, true, ""};
  std::mt19937_64 rng(seed);
  const auto gens = enumerate_generators(ng.g, 8);
  int done = 0;
  for (int t = 0; t < trials; ++t) {
    const Generator& start = gens[rng() % gens.size()];
    Domain d{start, start, ng.g.n(),
             std::vector<int>(ng.g.n() * ng.g.n(), 0)};
    Generator cur = start;
    const int parts = 1 + static_cast<int>(rng() % 3);
    int mu = 0;
    for (int p = 0; p < parts; ++p) {
      const auto moves = rectangles_from(ng.g, cur);
      if (moves.empty()) break;
      const RectangleMove& mv = moves[rng() % moves.size()];
      for (int s = 0; s < mv.rect.w; ++s)
        for (int tt = 0; tt < mv.rect.h; ++tt)
          d.at(mod(mv.rect.col + s, ng.g.n()),
               mod(mv.rect.row + tt, ng.g.n())) += 1;
      cur = mv.to;
      ++mu;
    }
    d.to = cur;
    const auto decomposition = decompose(ng.g, d);
    if (static_cast<int>(decomposition.size()) !=
        maslov_index(ng.g, ng.num, d)) {
      out.pass = false;
      out.details = "part count differs from the Maslov index";
      return out;
    }
    Domain resum{d.from, d.to, ng.g.n(),
                 std::vector<int>(ng.g.n() * ng.g.n(), 0)};
    for (const auto& mv : decomposition)
      for (int s = 0; s < mv.rect.w; ++s)
        for (int tt = 0; tt < mv.rect.h; ++tt)
          resum.at(mod(mv.rect.col + s, ng.g.n()),
                   mod(mv.rect.row + tt, ng.g.n())) += 1;
    if (resum.mult != d.mult) {
      out.pass = false;
      out.details = "re-summed rectangles differ from the domain";
      return out;
    }
    ++done;
  }
  out.details = std::to_string(done) + " random domains";
  return out;
}

CheckOutcome check_grading_invariance(const NamedGrid& ng) {
  CheckOutcome out{"grading_cut_invariance", ng.name, true, ""};
  const int n = ng.g.n();
  const auto gens = enumerate_generators(ng.g, 8);
  for (int dr = 0; dr < n && out.pass; ++dr) {
    for (int dc = 0; dc < n && out.pass; ++dc) {
      const GridDiagram h = ng.g.recut(dr, dc);
      for (const auto& gen : gens) {
        const Generator moved = recut_generator(ng.g, gen, dr, dc);
        if (maslov(ng.g, gen) != maslov(h, moved) ||
            alexander(ng.g, gen) != alexander(h, moved)) {
          out.pass = false;
          out.details = "grading changed under recut(" + std::to_string(dr) +
                        "," + std::to_string(dc) + ")";
          break;
        }
      }
    }
  }
  if (out.pass) out.details = "all recuts agree";
  return out;
}

CheckOutcome check_leq_oracle(const NamedGrid& ng, int max_gap) {
  CheckOutcome out{"leq_vs_domain_oracle", ng.name, true, ""};
  if (ng.g.n() > 3) {
    out.details = "skipped (index above 3)";
    return out;
  }
  const auto gens = enumerate_generators(ng.g, 8);
  long long pairs = 0;
  for (const auto& gx : gens) {
    const GridState x = zero_state(gx, ng.g.n());
    const Bigrading bx = bigrading(ng.g, x);
    for (const auto& gy : gens) {
      const int ay = alexander(ng.g, gy);
      const int my = maslov(ng.g, gy);
      const int s = ay - bx.alexander;
      if (s < 0) continue;
      if (my - 2 * s < bx.maslov - max_gap || my - 2 * s > bx.maslov)
        continue;
      // All exponent vectors with the right sum.
      std::vector<int> k(ng.g.n(), 0);
      std::function<bool(int, int)> walk = [&](int pos, int rem) -> bool {
        if (pos == ng.g.n() - 1) {
          k[pos] = rem;
          const GridState y{gy, k};
          const auto dom = solve_domain(ng.g, ng.num, x, y);
          const bool by_domain = dom.has_value() && is_positive(*dom);
          const bool by_bfs = leq(ng.g, ng.num, y, x);
          ++pairs;
          if (by_domain != by_bfs) {
            out.pass = false;
            out.details = "disagreement at y=" + to_string(y) +
                          " x=" + to_string(x);
            return false;
          }
          return true;
        }
        for (int v = 0; v <= rem; ++v) {
          k[pos] = v;
          if (!walk(pos + 1, rem - v)) return false;
        }
        return true;
      };
      if (!walk(0, s)) return out;
    }
  }
  out.details = std::to_string(pairs) + " state pairs";
  return out;
}

CheckOutcome check_d2(const NamedGrid& ng, int gen_cap) {
  CheckOutcome out{"d_squared_zero", ng.name, true, ""};
  const ChainComplexF2 tilde = tilde_complex(ng.g, ng.num, gen_cap);
  if (!is_complex(tilde)) {
    out.pass = false;
    out.details = "tilde complex boundary does not square to zero";
    return out;
  }
  // Structural check for the full complex: composing covers twice from any
  // zero-exponent state cancels mod 2; U-translation covers every state.
  const auto gens = enumerate_generators(ng.g, gen_cap);
  for (const auto& gen : gens) {
    const GridState x = zero_state(gen, ng.g.n());
    std::map<GridState, int> counts;
    for (const CoverRelation& c1 : covers_down(ng.g, ng.num, x))
      for (const CoverRelation& c2 : covers_down(ng.g, ng.num, c1.lower))
        counts[c2.lower] ^= 1;
    for (const auto& [state, parity] : counts) {
      if (parity) {
        out.pass = false;
        out.details = "two-step covers do not cancel from " + to_string(x) +
                      " to " + to_string(state);
        return out;
      }
    }
  }
  // Truncated sectors, matrix level. Sectors below the generator range are
  // populated by U-translates; a couple of them exercise the truncation.
  const int depth = ng.g.n() <= 3 ? 8 : ng.g.n() <= 5 ? 6 : 3;
  int a_max = alexander(ng.g, gens.front());
  int a_min = a_max;
  for (const auto& gen : gens) {
    const int a = alexander(ng.g, gen);
    a_max = std::max(a_max, a);
    a_min = std::min(a_min, a);
  }
  int checked = 0;
  for (int a = a_max; a >= a_min - 2; --a) {
    int m_max = 0;
    bool seen = false;
    for (const auto& gen : gens) {
      const int s = alexander(ng.g, gen) - a;
      if (s < 0) continue;
      const int m = maslov(ng.g, gen) - 2 * s;
      if (!seen || m > m_max) m_max = m;
      seen = true;
    }
    if (!seen) continue;
    const ChainComplexF2 cc =
        gt_chain_complex(ng.g, ng.num, a, m_max - depth, gen_cap);
    if (!is_complex(cc)) {
      out.pass = false;
      out.details =
          "truncated sector A=" + std::to_string(a) + " fails d^2 = 0";
      return out;
    }
    ++checked;
  }
  out.details = "tilde + " + std::to_string(checked) + " truncated sectors";
  return out;
}

CheckOutcome check_thinness(const NamedGrid& ng, int threads) {
  CheckOutcome out{"local_thinness", ng.name, true, ""};
  const ThinnessStats st = thinness_sweep(ng.g, ng.num, threads);
  if (st.violations != 0) {
    out.pass = false;
    out.details = st.failures.empty() ? "violations found" : st.failures[0];
  } else {
    out.details = std::to_string(st.intervals) + " length-3 intervals";
  }
  return out;
}

RunResult cmd_verify(const RunConfig& cfg) {
  const auto grids = load_grids(cfg);
  std::vector<CheckOutcome> checks;

  for (const auto& ng : grids) {
    checks.push_back(check_d2(ng, cfg.gen_cap));
    checks.push_back(check_thinness(ng, cfg.threads));
    checks.push_back(check_grading_invariance(ng));
    checks.push_back(check_leq_oracle(ng, 4));
    if (ng.g.n() <= 4)
      checks.push_back(check_decomposition(ng, 2000, 0x5eed5eedull));
  }

  // Rank invariance across the supplied presentations of one knot.
  if (grids.size() > 1) {
    CheckOutcome rk{"normalized_rank_invariance", "all", true, ""};
    std::vector<long long> normalized;
    for (const auto& ng : grids) {
      const BigradedDims dims = tilde_homology(ng.g, ng.num, cfg.gen_cap);
      const long long total = dims.total_rank();
      const long long denom = 1ll << (ng.g.n() - 1);
      if (total % denom != 0) {
        rk.pass = false;
        rk.details = "total rank of " + ng.name + " is not divisible by 2^" +
                     std::to_string(ng.g.n() - 1);
        break;
      }
      normalized.push_back(total / denom);
    }
    if (rk.pass) {
      for (std::size_t i = 1; i < normalized.size(); ++i)
        if (normalized[i] != normalized[0]) {
          rk.pass = false;
          rk.details = "normalized ranks differ: " +
                       std::to_string(normalized[0]) + " vs " +
                       std::to_string(normalized[i]);
        }
      if (rk.pass)
        rk.details = "normalized rank " + std::to_string(normalized[0]);
    }
    checks.push_back(rk);

    // Equal-index presentations must agree bigrading by bigrading.
    for (std::size_t i = 1; i < grids.size(); ++i) {
      if (grids[i].g.n() != grids[0].g.n()) continue;
      CheckOutcome eq{"bigraded_dims_agree", grids[i].name, true, ""};
      const BigradedDims a =
          tilde_homology(grids[0].g, grids[0].num, cfg.gen_cap);
      const BigradedDims b =
          tilde_homology(grids[i].g, grids[i].num, cfg.gen_cap);
      eq.pass = a.dims == b.dims;
      eq.details = eq.pass ? "identical bigraded dimensions"
                           : "dimension tables differ";
      checks.push_back(eq);
    }
  }

  long long failures = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failures;

  ordered_json j;
  j["command"] = "verify";
  ordered_json grid_list = ordered_json::array();
  for (const auto& ng : grids)
    grid_list.push_back({{"name", ng.name},
                         {"hash", grid_fingerprint(ng.g)},
                         {"n", ng.g.n()}});
  j["grids"] = std::move(grid_list);
  ordered_json check_list = ordered_json::array();
  for (const auto& c : checks)
    check_list.push_back({{"name", c.name},
                          {"grid", c.grid},
                          {"pass", c.pass},
                          {"details", c.details}});
  j["checks"] = std::move(check_list);
  j["failures"] = failures;

  std::string text = "verify\n";
  for (const auto& c : checks)
    text += std::string("  [") + (c.pass ? "ok" : "FAIL") + "] " + c.name +
            " (" + c.grid + "): " + c.details + "\n";
  text += failures == 0 ? "all checks passed\n"
                        : std::to_string(failures) + " check(s) failed\n";

  return finish(cfg, j, text, failures == 0 ? 0 : 3,
                failures == 0 ? "" : "invariant checks failed");
}

}  // namespace

std::string grid_fingerprint(const GridDiagram& g) {
  return hex64(fnv1a64(g.serialize()));
}

std::vector<int> minus_sectors(const GridDiagram& g, int m_floor, int cap) {
  const auto gens = enumerate_generators(g, cap);
  std::set<int> sectors;
  for (const auto& gen : gens) {
    const int a = alexander(g, gen);
    const int m = maslov(g, gen);
    // Sector a - s is populated by this generator while M - 2s stays in
    // the band.
    for (int s = 0; m - 2 * s >= m_floor; ++s) sectors.insert(a - s);
  }
  return {sectors.rbegin(), sectors.rend()};
}

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.command == "homology") return cmd_homology(cfg);
    if (cfg.command == "shelling") return cmd_shelling(cfg);
    if (cfg.command == "flowcat") return cmd_flowcat(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    fail(Errc::bad_config, "unknown command: " + cfg.command);
  } catch (const Error& e) {
    return RunResult{e.exit_code(), "", e.what()};
  } catch (const std::exception& e) {
    return RunResult{4, "", e.what()};
  }
}

}  // namespace gs
