#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sturmkit/zero_numbers.hpp"
#include "test_data.hpp"

using namespace sturmkit;

namespace {

SignedZeroMatrix ci2() { return SignedZeroMatrix::from_sigma(Permutation({1, 4, 3, 2, 5})); }
SignedZeroMatrix oct() { return SignedZeroMatrix::from_sigma(testdata::sigma_octahedron()); }

}  // namespace

TEST_CASE("rejects non-Sturm input") {
  CHECK_THROWS_AS(SignedZeroMatrix::from_sigma(Permutation({2, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(SignedZeroMatrix::from_sigma(Permutation({1, 3, 2, 4, 5})),
                  std::invalid_argument);
}

TEST_CASE("Chafee-Infante m=1: all zero counts vanish") {
  const auto zm = SignedZeroMatrix::from_sigma(Permutation::identity(3));
  for (int v = 1; v <= 3; ++v)
    for (int w = 1; w <= 3; ++w) {
      if (v == w) continue;
      CHECK(zm.z(v, w).count == 0);
      CHECK(zm.z(v, w).sign == (v > w ? 1 : -1));
    }
}

TEST_CASE("Chafee-Infante m=2: full frozen matrix") {
  const auto zm = ci2();
  CHECK(zm.morse() == std::vector<int>{0, 1, 2, 1, 0});
  // expected unsigned counts, computed by hand from the attractor structure
  const int expect[5][5] = {{-1, 0, 0, 0, 0},
                            {0, -1, 1, 1, 0},
                            {0, 1, -1, 1, 0},
                            {0, 1, 1, -1, 0},
                            {0, 0, 0, 0, -1}};
  for (int v = 1; v <= 5; ++v)
    for (int w = 1; w <= 5; ++w) {
      if (v == w) continue;
      CHECK(zm.z(v, w).count == expect[v - 1][w - 1]);
      CHECK(zm.z(v, w).count == zm.z(w, v).count);  // unsigned symmetry
    }
}

TEST_CASE("neighbor rule: adjacent pairs carry the minimum Morse number") {
  for (const Permutation& sigma :
       {Permutation::identity(3), Permutation({1, 4, 3, 2, 5}), testdata::sigma_plus(),
        testdata::sigma_minus(), testdata::sigma_octahedron()}) {
    const Meander m = Meander::build(sigma);
    const auto zm = SignedZeroMatrix::from_meander(m);
    for (int pos = 1; pos < m.n(); ++pos) {
      // curve-adjacent
      CHECK(zm.z(pos, pos + 1).count == std::min(zm.morse(pos), zm.morse(pos + 1)));
      // axis-adjacent
      const int a = m.crossing_at_slot(pos), b = m.crossing_at_slot(pos + 1);
      CHECK(zm.z(a, b).count == std::min(zm.morse(a), zm.morse(b)));
    }
  }
}

TEST_CASE("count parity matches the two boundary orders") {
  for (const Permutation& sigma :
       {testdata::sigma_plus(), testdata::sigma_octahedron(), Permutation({1, 4, 3, 2, 5})}) {
    const Meander m = Meander::build(sigma);
    const auto zm = SignedZeroMatrix::from_meander(m);
    for (int v = 1; v <= m.n(); ++v)
      for (int w = v + 1; w <= m.n(); ++w) {
        const int parity = (m.axis_position(w) > m.axis_position(v)) ? 0 : 1;
        CHECK(zm.z(w, v).count % 2 == parity);
      }
  }
}

TEST_CASE("pole identities z(N-O) = 0-, z(S-O) = 0+") {
  for (const Permutation& sigma :
       {testdata::sigma_plus(), testdata::sigma_minus(), testdata::sigma_octahedron()}) {
    const auto zm = SignedZeroMatrix::from_sigma(sigma);
    int o = 0;
    for (int v = 1; v <= zm.n(); ++v)
      if (zm.morse(v) == 3) o = v;
    REQUIRE(o != 0);
    CHECK(zm.z(1, o).count == 0);
    CHECK(zm.z(1, o).sign == -1);
    CHECK(zm.z(zm.n(), o).count == 0);
    CHECK(zm.z(zm.n(), o).sign == +1);
  }
}

TEST_CASE("octahedron: faces sit at z = 2 around O, with signs from the hemispheres") {
  const auto zm = oct();
  const int o = testdata::curve_of_cell(27);
  const std::set<int> east_faces{21, 26};
  for (int cell = 19; cell <= 26; ++cell) {
    const int v = testdata::curve_of_cell(cell);
    CHECK(zm.z(v, o).count == 2);
    CHECK(zm.z(v, o).sign == (east_faces.count(cell) ? +1 : -1));
  }
  // meridian cells at z = 1: WE = {8, 3, 11} positive, EW = {10, 5, 14} negative
  for (int cell : {8, 3, 11}) {
    CHECK(zm.z(testdata::curve_of_cell(cell), o).count == 1);
    CHECK(zm.z(testdata::curve_of_cell(cell), o).sign == +1);
  }
  for (int cell : {10, 5, 14}) {
    CHECK(zm.z(testdata::curve_of_cell(cell), o).count == 1);
    CHECK(zm.z(testdata::curve_of_cell(cell), o).sign == -1);
  }
}

TEST_CASE("blocking and adjacency") {
  const auto zm = ci2();
  // axis-adjacent pairs admit no blocker for any k
  const Meander m = Meander::build(Permutation({1, 4, 3, 2, 5}));
  for (int pos = 1; pos < 5; ++pos) {
    const int a = m.crossing_at_slot(pos), b = m.crossing_at_slot(pos + 1);
    for (int k = 0; k <= 3; ++k) CHECK(k_adjacent(zm, a, b, k));
  }
  // no blocking among the adjacent-index connections of the CI-2 attractor
  for (int v = 1; v <= 5; ++v)
    for (int w = 1; w <= 5; ++w) {
      if (v == w || zm.morse(v) != zm.morse(w) + 1) continue;
      if (!connects(zm, v, w)) continue;
      for (int u = 1; u <= 5; ++u)
        if (u != v && u != w) CHECK_FALSE(blocks(zm, v, w, u));
    }

  // octahedron: nothing blocks O from any target
  const auto zoct = oct();
  const int o = testdata::curve_of_cell(27);
  for (int v = 1; v <= 27; ++v) {
    if (v == o) continue;
    CHECK(connects(zoct, o, v));
    for (int w = 1; w <= 27; ++w)
      if (w != o && w != v) CHECK_FALSE(blocks(zoct, o, v, w));
  }
}

TEST_CASE("Wolfrum criterion on reference pairs") {
  const auto zm = oct();
  CHECK_FALSE(connects(zm, 5, 5));
  // face 19 reaches its boundary vertex 3 but not the far sink 2
  CHECK(connects(zm, testdata::curve_of_cell(19), testdata::curve_of_cell(3)));
  CHECK_FALSE(connects(zm, testdata::curve_of_cell(19), testdata::curve_of_cell(2)));
  // equal Morse indices never connect
  CHECK_FALSE(connects(zm, testdata::curve_of_cell(19), testdata::curve_of_cell(20)));
}

TEST_CASE("connection graph of the smallest attractor") {
  const auto zm = SignedZeroMatrix::from_sigma(Permutation::identity(3));
  const auto g = connection_graph(zm);
  CHECK(g[2] == std::vector<int>{1, 3});
  CHECK(g[1].empty());
  CHECK(g[3].empty());
}

TEST_CASE("connects is transitive with strict Morse drop") {
  for (const Permutation& sigma :
       {testdata::sigma_plus(), testdata::sigma_minus(), testdata::sigma_octahedron()}) {
    const auto zm = SignedZeroMatrix::from_sigma(sigma);
    const int n = zm.n();
    std::vector<std::vector<bool>> conn(n + 1, std::vector<bool>(n + 1, false));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (a != b) conn[a][b] = connects(zm, a, b);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (!conn[a][b]) continue;
        CHECK(zm.morse(a) > zm.morse(b));
        for (int c = 1; c <= n; ++c)
          if (conn[b][c]) CHECK(conn[a][c]);
      }
  }
}

TEST_CASE("hemisphere template: octahedron decomposition of O") {
  const auto t = hemisphere_template(oct());
  const int o = testdata::curve_of_cell(27);
  auto cells = [&](const std::vector<int>& crossings) {
    std::set<int> out;
    for (int v : crossings) out.insert(testdata::h0_octahedron()[v - 1]);
    return out;
  };
  CHECK(cells(t.set(o, 0, 0)) == std::set<int>{1});
  CHECK(cells(t.set(o, 0, 1)) == std::set<int>{2});
  CHECK(cells(t.set(o, 1, 0)) == std::set<int>{10, 5, 14});
  CHECK(cells(t.set(o, 1, 1)) == std::set<int>{8, 3, 11});
  CHECK(cells(t.set(o, 2, 0)) ==
        std::set<int>{19, 20, 22, 23, 24, 25, 9, 12, 13, 15, 16, 17, 18, 4, 6});
  CHECK(cells(t.set(o, 2, 1)) == std::set<int>{21, 26, 7});
}

TEST_CASE("hemisphere template: saddles have singleton endpoint sets") {
  for (const Permutation& sigma : {testdata::sigma_plus(), testdata::sigma_octahedron()}) {
    const auto t = hemisphere_template(SignedZeroMatrix::from_sigma(sigma));
    for (int v = 1; v <= t.n(); ++v)
      if (t.morse(v) == 1) {
        CHECK(t.set(v, 0, 0).size() == 1);
        CHECK(t.set(v, 0, 1).size() == 1);
      }
  }
}

TEST_CASE("hemisphere template: Chafee-Infante ball has singleton hemispheres") {
  const auto t =
      hemisphere_template(SignedZeroMatrix::from_sigma(Permutation({1, 6, 3, 4, 5, 2, 7})));
  const int o = 4;
  REQUIRE(t.morse(o) == 3);
  for (int j = 0; j < 3; ++j)
    for (int s : {0, 1}) CHECK(t.set(o, j, s).size() == 1);
}

TEST_CASE("sigma-plus template: frozen hemisphere sets") {
  const auto t = hemisphere_template(SignedZeroMatrix::from_sigma(testdata::sigma_plus()));
  const int o = 4;
  CHECK(t.set(o, 0, 0) == std::vector<int>{1});
  CHECK(t.set(o, 0, 1) == std::vector<int>{13});
  CHECK(t.set(o, 1, 0) == std::vector<int>{2});
  CHECK(t.set(o, 1, 1) == std::vector<int>{12});
  CHECK(t.set(o, 2, 0) == std::vector<int>{3});
  CHECK(t.set(o, 2, 1) == std::vector<int>{5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("Prop 3.1 invariants for every crossing") {
  for (const Permutation& sigma :
       {Permutation::identity(3), Permutation({1, 4, 3, 2, 5}), testdata::sigma_plus(),
        testdata::sigma_minus(), testdata::sigma_octahedron(),
        Permutation({1, 6, 3, 4, 5, 2, 7})}) {
    const auto zm = SignedZeroMatrix::from_sigma(sigma);
    const auto t = hemisphere_template(zm);
    for (int v = 1; v <= t.n(); ++v) {
      for (int j = 0; j < t.morse(v); ++j) {
        for (int s : {0, 1}) {
          for (int w : t.set(v, j, s)) {
            CHECK(zm.morse(w) <= j);                  // (i)
            CHECK(zm.z(w, v).count <= j);             // (ii)
            CHECK(zm.z(w, v).count == j);             // (iii)
            CHECK(zm.z(w, v).sign == (s ? +1 : -1));  // (iii) sign
          }
          // (iv): closed hemisphere members pairwise at z <= j-1
          std::vector<int> closure = t.set(v, j, s);
          for (int jj = 0; jj < j; ++jj)
            for (int ss : {0, 1})
              for (int w : t.set(v, jj, ss)) closure.push_back(w);
          for (size_t a = 0; a < closure.size(); ++a)
            for (size_t b = a + 1; b < closure.size(); ++b)
              CHECK(zm.z(closure[a], closure[b]).count <= j - 1);
        }
      }
      // partition property: hemisphere sets exhaust the heteroclinic targets
      std::set<int> targets;
      for (int w = 1; w <= t.n(); ++w)
        if (w != v && connects(zm, v, w)) targets.insert(w);
      const auto listed = t.targets(v);
      CHECK(std::set<int>(listed.begin(), listed.end()) == targets);
      CHECK(listed.size() == targets.size());
    }
  }
}
