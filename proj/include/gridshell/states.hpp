#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridshell/grid.hpp"

namespace gs {

// A generator: one point on each alpha and each beta circle, i.e. a
// permutation sigma with point j at the lattice point (j, sigma(j)).
struct Generator {
  std::vector<int> sigma;

  bool operator==(const Generator& o) const { return sigma == o.sigma; }
  bool operator<(const Generator& o) const { return sigma < o.sigma; }
};

// A generator decorated with exponents of the formal variables U_1..U_n,
// indexed by O label (u_exp[i] is the exponent of U_{i+1}).
struct GridState {
  Generator gen;
  std::vector<int> u_exp;

  bool operator==(const GridState& o) const {
    return gen == o.gen && u_exp == o.u_exp;
  }
  bool operator<(const GridState& o) const {
    if (gen.sigma != o.gen.sigma) return gen.sigma < o.gen.sigma;
    return u_exp < o.u_exp;
  }
  long long total_u() const {
    long long s = 0;
    for (int k : u_exp) s += k;
    return s;
  }
};

GridState make_state(Generator gen, std::vector<int> u_exp);
GridState zero_state(const Generator& gen, int n);
std::string to_string(const GridState& s);

struct StateHash {
  std::size_t operator()(const GridState& s) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b9u;
      h *= 1099511628211ull;
    };
    for (int v : s.gen.sigma) mix(v);
    for (int v : s.u_exp) mix(~v);
    return static_cast<std::size_t>(h);
  }
};

struct Bigrading {
  int maslov = 0;
  int alexander = 0;
  bool operator==(const Bigrading& o) const {
    return maslov == o.maslov && alexander == o.alexander;
  }
};

// A formal sum of planar points with coefficients in (1/2)Z. Coordinates
// and coefficients are stored doubled so everything stays in integers:
// lattice points have even coordinates, marking centers odd ones.
struct WeightedPoint {
  int x2 = 0;      // doubled x coordinate
  int y2 = 0;      // doubled y coordinate
  int coeff2 = 0;  // doubled coefficient
};
using FormalSum = std::vector<WeightedPoint>;

// The pairing J(a,b) = sum over point pairs of c_p c_q j(p,q) with
// j(p,q) = 1/2 when (p1-q1)(p2-q2) > 0 and 0 otherwise, returned scaled by
// 8 (the doubled coefficients contribute a factor 4, j another 2).
std::int64_t j_pairing_x8(const FormalSum& a, const FormalSum& b);

// All n! generators in lexicographic order of sigma. Throws cap_exceeded
// when n exceeds the cap.
std::vector<Generator> enumerate_generators(const GridDiagram& g, int cap = 8);

// Maslov grading M = J(x - O, x - O) + 1 of an undecorated generator.
int maslov(const GridDiagram& g, const Generator& x);

// Alexander grading A = J(x - (X+O)/2, X - O) - (n-1)/2.
int alexander(const GridDiagram& g, const Generator& x);

// Extends the gradings over the U variables: each U_i shifts by (-2,-1).
Bigrading bigrading(const GridDiagram& g, const GridState& x);

// The image of a generator under the recut that shifts rows and columns.
Generator recut_generator(const GridDiagram& g, const Generator& x,
                          int row_shift, int col_shift);

}  // namespace gs
