#include "gridshell/states.hpp"

#include <algorithm>
#include <numeric>

namespace gs {

GridState make_state(Generator gen, std::vector<int> u_exp) {
  for (int k : u_exp)
    if (k < 0) fail(Errc::internal, "negative U exponent");
  return GridState{std::move(gen), std::move(u_exp)};
}

GridState zero_state(const Generator& gen, int n) {
  return GridState{gen, std::vector<int>(n, 0)};
}

std::string to_string(const GridState& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.gen.sigma.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(s.gen.sigma[i]);
  }
  out += "|";
  for (std::size_t i = 0; i < s.u_exp.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(s.u_exp[i]);
  }
  out += ")";
  return out;
}

std::int64_t j_pairing_x8(const FormalSum& a, const FormalSum& b) {
  std::int64_t total = 0;
  for (const auto& p : a) {
    for (const auto& q : b) {
      const std::int64_t dx = p.x2 - q.x2;
      const std::int64_t dy = p.y2 - q.y2;
      if (dx * dy > 0)
        total += static_cast<std::int64_t>(p.coeff2) * q.coeff2;
    }
  }
  return total;
}

std::vector<Generator> enumerate_generators(const GridDiagram& g, int cap) {
  if (g.n() > cap)
    fail(Errc::cap_exceeded, "generator enumeration capped at index " +
                                 std::to_string(cap) + ", grid has " +
                                 std::to_string(g.n()));
  std::vector<int> sigma(g.n());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Generator> out;
  do {
    out.push_back(Generator{sigma});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

FormalSum generator_points(const Generator& x, int coeff2) {
  FormalSum s;
  s.reserve(x.sigma.size());
  for (int c = 0; c < static_cast<int>(x.sigma.size()); ++c)
    s.push_back({2 * c, 2 * x.sigma[c], coeff2});
  return s;
}

FormalSum marking_points(const std::vector<int>& col_to_row, int coeff2) {
  FormalSum s;
  s.reserve(col_to_row.size());
  for (int c = 0; c < static_cast<int>(col_to_row.size()); ++c)
    s.push_back({2 * c + 1, 2 * col_to_row[c] + 1, coeff2});
  return s;
}

void append(FormalSum& dst, const FormalSum& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

int maslov(const GridDiagram& g, const Generator& x) {
  FormalSum a = generator_points(x, 2);
  append(a, marking_points(g.o_rows(), -2));
  const std::int64_t m8 = j_pairing_x8(a, a) + 8;
  if (m8 % 8 != 0) fail(Errc::internal, "Maslov grading is not an integer");
  return static_cast<int>(m8 / 8);
}

int alexander(const GridDiagram& g, const Generator& x) {
  FormalSum a = generator_points(x, 2);
  append(a, marking_points(g.x_rows(), -1));
  append(a, marking_points(g.o_rows(), -1));
  FormalSum b = marking_points(g.x_rows(), 2);
  append(b, marking_points(g.o_rows(), -2));
  const std::int64_t a8 = j_pairing_x8(a, b) - 4 * (g.n() - 1);
  if (a8 % 8 != 0) fail(Errc::internal, "Alexander grading is not an integer");
  return static_cast<int>(a8 / 8);
}

Bigrading bigrading(const GridDiagram& g, const GridState& x) {
  const long long s = x.total_u();
  return Bigrading{static_cast<int>(maslov(g, x.gen) - 2 * s),
                   static_cast<int>(alexander(g, x.gen) - s)};
}

Generator recut_generator(const GridDiagram& g, const Generator& x,
                          int row_shift, int col_shift) {
  const int n = g.n();
  std::vector<int> sigma(n);
  for (int c = 0; c < n; ++c)
    sigma[mod(c + col_shift, n)] = mod(x.sigma[c] + row_shift, n);
  return Generator{std::move(sigma)};
}

}  // namespace gs
