#include "doctest.h"
#include "helpers.hpp"

using namespace gs;

TEST_CASE("parse reads the minimal unknot grid") {
  const GridDiagram g = GridDiagram::parse("XO\nOX");
  CHECK(g.n() == 2);
  CHECK(g.x_row(0) == 1);
  CHECK(g.x_row(1) == 0);
  CHECK(g.o_row(0) == 0);
  CHECK(g.o_row(1) == 1);
}

TEST_CASE("parse rejects malformed inputs") {
  CHECK_THROWS_WITH_AS(GridDiagram::parse("XX\nOO"),
                       doctest::Contains("more than one X"), Error);
  CHECK_THROWS_AS(GridDiagram::parse("XO\nOX\nXO"), Error);  // not square
  CHECK_THROWS_AS(GridDiagram::parse("XQ\nOX"), Error);      // bad character
  CHECK_THROWS_AS(GridDiagram::parse("X"), Error);           // index 1
  // A two-component 4x4 link: two disjoint 2x2 unknots.
  CHECK_THROWS_AS(GridDiagram::parse("XO..\nOX..\n..XO\n..OX"), Error);
  // Same cell carrying both markings is impossible textually, but the
  // permutation-level constructor must reject it.
  CHECK_THROWS_AS(GridDiagram::from_permutations({0, 1}, {0, 1}), Error);
}

TEST_CASE("parse error codes match the error taxonomy") {
  auto code_of = [](const std::string& text) {
    try {
      GridDiagram::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code_of("XX\nOO") == Errc::not_permutation);
  CHECK(code_of("XO\nOX\nXO") == Errc::non_square);
  CHECK(code_of("XQ\nOX") == Errc::bad_character);
  CHECK(code_of("X") == Errc::index_too_small);
  CHECK(code_of("XO..\nOX..\n..XO\n..OX") == Errc::multi_component);
}

TEST_CASE("serialize round-trips bit-exactly") {
  for (const char* name : {"unknot-2", "unknot-3", "trefoil-5a", "trefoil-5b"}) {
    const std::string text = gstest::read_file(gstest::corpus_path(name));
    const GridDiagram g = GridDiagram::parse(text);
    CHECK(g.serialize() == text);
    CHECK(GridDiagram::parse(g.serialize()) == g);
  }
}

TEST_CASE("numbering walks the knot cycle") {
  const GridDiagram g = gstest::unknot2();
  const MarkingNumbering num = derive_numbering(g);
  CHECK(num.x_label_of_col[0] == 1);
  CHECK(num.x_label_of_col[1] == 2);
  // O_1 shares the row of X_1 (row 1), so it sits in column 1.
  CHECK(num.o_label_of_col[1] == 1);
  CHECK(num.o_label_of_col[0] == 2);
}

TEST_CASE("numbering satisfies both adjacency rules on the corpus") {
  for (const char* name : {"unknot-2", "unknot-3", "trefoil-5a", "trefoil-5b"}) {
    const GridDiagram g = gstest::corpus_grid(name);
    const MarkingNumbering num = derive_numbering(g);
    const int n = g.n();
    for (int label = 1; label <= n; ++label) {
      const int xc = num.col_of_x_label[label - 1];
      const int oc = num.col_of_o_label[label - 1];
      CHECK(g.x_row(xc) == g.o_row(oc));  // X_i and O_i share a row
      const int next = label % n + 1;
      CHECK(oc == num.col_of_x_label[next - 1]);  // O_i, X_{i+1} share a column
    }
  }
}

TEST_CASE("recut shifts the planar cut") {
  const GridDiagram g = gstest::unknot2();
  CHECK(g.recut(0, 0) == g);
  CHECK(g.recut(1, 0).serialize() == "OX\nXO\n");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(g.recut(a, b).recut(2 - a, 2 - b) == g);
}

TEST_CASE("recut preserves validity on the corpus") {
  for (const char* name : {"unknot-3", "trefoil-5a"}) {
    const GridDiagram g = gstest::corpus_grid(name);
    for (int a = 0; a < g.n(); ++a)
      for (int b = 0; b < g.n(); ++b)
        CHECK_NOTHROW(derive_numbering(g.recut(a, b)));
  }
}
