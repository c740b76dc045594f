#include <doctest.h>

#include <algorithm>
#include <random>

#include "sturmkit/permutation.hpp"
#include "test_data.hpp"

using namespace sturmkit;

TEST_CASE("cycle parsing reproduces the reference involutions") {
  CHECK(parse_permutation("(2 12)(5 11)(8 10)", 13) == testdata::sigma_plus());
  CHECK(parse_permutation("n=13 (2 12)(5 11)(8 10)") == testdata::sigma_plus());
  CHECK(parse_permutation("n=13 (2 12) (3 9) (6 8)") == testdata::sigma_minus());
  CHECK(parse_permutation("n=27 (2 24)(3 19)(6 18)(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)") ==
        testdata::sigma_octahedron());
  CHECK(parse_permutation("1 2 3") == Permutation::identity(3));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_permutation("1 2 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 2 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("n=5 (1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("n=5 (1 2)(2 3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("n=3 (2 4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 2)"), std::invalid_argument);  // cycle form needs n
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
}

TEST_CASE("format round trips both notations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    CHECK(parse_permutation(format_one_line(p)) == p);
    CHECK(parse_permutation(format_cycles(p)) == p);
  }
  CHECK(format_cycles(testdata::sigma_plus()) == "n=13 (2 12) (5 11) (8 10)");
}

TEST_CASE("kappa, inverse, compose") {
  CHECK(format_one_line(Permutation::kappa(3)) == "3 2 1");
  CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));

  std::mt19937 rng(11);
  for (int n : {1, 2, 3, 8, 13, 27, 64}) {
    CHECK(compose(Permutation::kappa(n), Permutation::kappa(n)) == Permutation::identity(n));
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    CHECK(compose(p, p.inverse()) == Permutation::identity(n));
    CHECK(compose(p.inverse(), p) == Permutation::identity(n));
  }
}

TEST_CASE("kappa conjugate matches the direct evaluation") {
  const Permutation sp = testdata::sigma_plus();
  const int n = sp.size();
  // independent route: evaluate k -> n+1 - sigma(n+1-k) directly
  std::vector<int> direct(n);
  for (int k = 1; k <= n; ++k) direct[k - 1] = n + 1 - sp(n + 1 - k);
  CHECK(kappa_conjugate(sp) == Permutation(direct));
  CHECK(kappa_conjugate(sp) ==
        compose(Permutation::kappa(n), compose(sp, Permutation::kappa(n))));
  CHECK(kappa_conjugate(sp) == Permutation({1, 12, 9, 6, 5, 4, 7, 8, 3, 10, 11, 2, 13}));
}

TEST_CASE("trivial equivalence orbit") {
  CHECK(trivial_equivalence_orbit(Permutation::identity(7)) ==
        std::vector<Permutation>{Permutation::identity(7)});

  const auto orbit = trivial_equivalence_orbit(testdata::sigma_plus());
  CHECK(orbit.size() == 2);  // involution, so sigma^-1 = sigma
  CHECK(std::find(orbit.begin(), orbit.end(), testdata::sigma_minus()) == orbit.end());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 15);
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const auto orb = trivial_equivalence_orbit(Permutation(img));
    CHECK(4 % orb.size() == 0);
    // closure under inversion and kappa conjugation, element by element
    for (const auto& s : orb) {
      CHECK(std::find(orb.begin(), orb.end(), s.inverse()) != orb.end());
      CHECK(std::find(orb.begin(), orb.end(), kappa_conjugate(s)) != orb.end());
    }
  }
}
