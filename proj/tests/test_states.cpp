#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace gs;

TEST_CASE("pointwise pairing follows the sign of the product") {
  // j((0,0),(1,1)) = 1/2, j((0,1),(1,0)) = 0, j(p,p) = 0.
  const FormalSum a{{0, 0, 2}};
  const FormalSum b{{2, 2, 2}};
  CHECK(j_pairing_x8(a, b) == 4);  // 8 * 1/2 = 4
  const FormalSum c{{0, 2, 2}};
  const FormalSum d{{2, 0, 2}};
  CHECK(j_pairing_x8(c, d) == 0);
  CHECK(j_pairing_x8(a, a) == 0);
}

TEST_CASE("pairing expands bilinearly") {
  // J(a1+a2, a1+a2) with a1=(0,0), a2=(1,1): four terms, two worth 1/2.
  const FormalSum s{{0, 0, 2}, {2, 2, 2}};
  CHECK(j_pairing_x8(s, s) == 8);  // J = 1
}

TEST_CASE("pairing is symmetric and additive on random sums") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_sum = [&](int size) {
      FormalSum s;
      for (int i = 0; i < size; ++i)
        s.push_back({static_cast<int>(rng() % 13) - 6,
                     static_cast<int>(rng() % 13) - 6,
                     static_cast<int>(rng() % 9) - 4});
      return s;
    };
    const FormalSum a = random_sum(1 + trial % 4);
    const FormalSum a2 = random_sum(1 + trial % 3);
    const FormalSum b = random_sum(1 + trial % 5);
    CHECK(j_pairing_x8(a, b) == j_pairing_x8(b, a));
    FormalSum sum = a;
    sum.insert(sum.end(), a2.begin(), a2.end());
    CHECK(j_pairing_x8(sum, b) == j_pairing_x8(a, b) + j_pairing_x8(a2, b));
  }
}

TEST_CASE("generator enumeration is lexicographic and capped") {
  const GridDiagram g2 = gstest::unknot2();
  const auto gens2 = enumerate_generators(g2);
  REQUIRE(gens2.size() == 2);
  CHECK(gens2[0].sigma == std::vector<int>{0, 1});
  CHECK(gens2[1].sigma == std::vector<int>{1, 0});

  const auto g5 = gstest::corpus_grid("trefoil-5a");
  CHECK(enumerate_generators(g5).size() == 120);

  CHECK_THROWS_AS(enumerate_generators(g5, 4), Error);
}

TEST_CASE("gradings of the 2x2 unknot generators") {
  const GridDiagram g = gstest::unknot2();
  const Generator sw = gstest::perm({1, 0});
  const Generator id = gstest::perm({0, 1});
  CHECK(maslov(g, sw) == 0);
  CHECK(alexander(g, sw) == 0);
  CHECK(maslov(g, id) == -1);
  CHECK(alexander(g, id) == -1);
}

TEST_CASE("U variables shift the bigrading by (-2,-1)") {
  const GridDiagram g = gstest::unknot2();
  const GridState base{gstest::perm({1, 0}), {0, 0}};
  CHECK(bigrading(g, base) == Bigrading{0, 0});
  const GridState shifted{gstest::perm({1, 0}), {1, 0}};
  CHECK(bigrading(g, shifted) == Bigrading{-2, -1});

  const auto g5 = gstest::corpus_grid("trefoil-5a");
  std::mt19937_64 rng(11);
  const auto gens = enumerate_generators(g5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> u(5);
    for (auto& k : u) k = static_cast<int>(rng() % 3);
    const GridState x{gens[rng() % gens.size()], u};
    const Bigrading bx = bigrading(g5, x);
    for (int i = 0; i < 5; ++i) {
      GridState xi = x;
      xi.u_exp[i] += 1;
      const Bigrading bxi = bigrading(g5, xi);
      CHECK(bxi.maslov == bx.maslov - 2);
      CHECK(bxi.alexander == bx.alexander - 1);
    }
  }
}

TEST_CASE("gradings are invariant under every recut") {
  for (const char* name : {"unknot-2", "unknot-3", "trefoil-5a", "trefoil-5b"}) {
    const GridDiagram g = gstest::corpus_grid(name);
    const auto gens = enumerate_generators(g);
    for (int dr = 0; dr < g.n(); ++dr) {
      for (int dc = 0; dc < g.n(); ++dc) {
        const GridDiagram h = g.recut(dr, dc);
        for (const auto& x : gens) {
          const Generator y = recut_generator(g, x, dr, dc);
          CHECK(maslov(g, x) == maslov(h, y));
          CHECK(alexander(g, x) == alexander(h, y));
        }
      }
    }
  }
}

TEST_CASE("grading integrality holds across the corpus") {
  // maslov/alexander throw on a half-integer result; exercising them over
  // every generator is the integrality check.
  for (const char* name : {"unknot-3", "trefoil-5a", "trefoil-5b"}) {
    const GridDiagram g = gstest::corpus_grid(name);
    for (const auto& x : enumerate_generators(g)) {
      CHECK_NOTHROW(maslov(g, x));
      CHECK_NOTHROW(alexander(g, x));
    }
  }
}
