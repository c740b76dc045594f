// Acceptance suite: every release criterion as one pass/fail line, exact
// values and runtime bounds included. Exit code 0 only when all lines pass.
// The brute-force pair scan (criterion 10) runs only with --exhaustive and is
// excluded from the default ctest run; budget hours, not seconds.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sturmkit/enumeration.hpp"
#include "sturmkit/io.hpp"
#include "sturmkit/path_pairs.hpp"
#include "sturmkit/zero_numbers.hpp"

using namespace sturmkit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
            << "\n";
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

Permutation sigma_plus() { return parse_permutation("n=13 (2 12)(5 11)(8 10)"); }
Permutation sigma_minus() { return parse_permutation("n=13 (2 12)(3 9)(6 8)"); }
Permutation sigma_oct() {
  return parse_permutation("n=27 (2 24)(3 19)(6 18)(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)");
}

const char* kH0 = "1 10 20 9 4 13 24 17 6 18 5 14 25 15 22 16 23 12 19 27 21 7 26 8 3 11 2";
const char* kH1 = "1 8 19 9 4 12 23 17 6 16 3 11 22 15 25 18 24 13 20 27 26 7 21 10 5 14 2";

// The named template family: Chafee-Infante 3-ball, welded disks with up to
// five boundary cells per side family parameter, the octahedron, and the two
// 13-cell reference templates rebuilt from their permutations.
std::vector<std::pair<std::string, DecoratedComplex>> template_family() {
  std::vector<std::pair<std::string, DecoratedComplex>> family;
  family.emplace_back("chafee-infante ball m=3", chafee_infante_ball(3));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; m + n <= 5; ++n) {
      const RegularCellComplex west = disk(m, n);
      const int face = 2 * (m + n) + 1;
      const RegularCellComplex east = west.relabeled({{face, face + 1}});
      family.emplace_back("weld of (" + std::to_string(m) + "," + std::to_string(n) + ") disks",
                          weld(west, east, face + 2));
    }
  family.emplace_back("octahedron 6+2", octahedron({1, 2}, {8, 11}, {10, 14}));
  for (const auto& [name, sigma] :
       std::map<std::string, Permutation>{{"sigma+ template", sigma_plus()},
                                          {"sigma- template", sigma_minus()}}) {
    const auto zm = SignedZeroMatrix::from_sigma(sigma);
    family.emplace_back(name, complex_from_signed_template(hemisphere_template(zm)));
  }
  return family;
}

// Planar members used by the oracle criterion: CI balls m <= 2 and the
// single-source disks.
std::vector<std::pair<std::string, RegularCellComplex>> planar_family() {
  std::vector<std::pair<std::string, RegularCellComplex>> family;
  family.emplace_back("chafee-infante ball m=1", chafee_infante_ball(1).complex);
  family.emplace_back("chafee-infante ball m=2", chafee_infante_ball(2).complex);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; m + n <= 5; ++n)
      family.emplace_back("disk(" + std::to_string(m) + "," + std::to_string(n) + ")", disk(m, n));
  return family;
}

// connects-vs-incidence comparison for one complex with its pair
bool oracle_matches(const RegularCellComplex& c, const std::vector<int>& h0,
                    const Permutation& sigma, std::string& why) {
  const auto zm = SignedZeroMatrix::from_sigma(sigma);
  const int n = zm.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      const bool lhs = connects(zm, a, b);
      const bool rhs = incidence_connects(c, h0[a - 1], h0[b - 1]);
      if (lhs != rhs) {
        why = "connects(" + std::to_string(h0[a - 1]) + "," + std::to_string(h0[b - 1]) +
              ") = " + (lhs ? "true" : "false") + " but incidence says otherwise";
        return false;
      }
    }
  // connection graph == codimension-1 incidence digraph, edge for edge
  const auto graph = connection_graph(zm);
  for (int a = 1; a <= n; ++a) {
    std::set<int> expect;
    for (int w : c.closure_boundary(h0[a - 1]))
      if (c.dim(w) == c.dim(h0[a - 1]) - 1) expect.insert(w);
    std::set<int> got;
    for (int b : graph[a]) got.insert(h0[b - 1]);
    if (got != expect) {
      why = "connection graph mismatch at cell " + std::to_string(h0[a - 1]);
      return false;
    }
  }
  return true;
}

bool prop31_holds(const Permutation& sigma, std::string& why) {
  const auto zm = SignedZeroMatrix::from_sigma(sigma);
  const auto t = hemisphere_template(zm);
  for (int v = 1; v <= t.n(); ++v) {
    std::set<int> targets;
    for (int w = 1; w <= t.n(); ++w)
      if (w != v && connects(zm, v, w)) targets.insert(w);
    std::set<int> listed;
    for (int j = 0; j < t.morse(v); ++j)
      for (int s : {0, 1}) {
        std::vector<int> closure = t.set(v, j, s);
        for (int w : t.set(v, j, s)) {
          listed.insert(w);
          if (zm.morse(w) > j || zm.z(w, v).count != j ||
              zm.z(w, v).sign != (s ? 1 : -1)) {
            why = "Prop 3.1(i)-(iii) fails at v=" + std::to_string(v);
            return false;
          }
        }
        for (int jj = 0; jj < j; ++jj)
          for (int ss : {0, 1})
            for (int w : t.set(v, jj, ss)) closure.push_back(w);
        for (size_t a = 0; a < closure.size(); ++a)
          for (size_t b = a + 1; b < closure.size(); ++b)
            if (zm.z(closure[a], closure[b]).count > j - 1) {
              why = "Prop 3.1(iv) fails at v=" + std::to_string(v);
              return false;
            }
      }
    if (listed != targets) {
      why = "partition property fails at v=" + std::to_string(v);
      return false;
    }
  }
  return true;
}

void criterion_1() {
  const auto t0 = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    const DecoratedComplex t = octahedron({1, 2}, {8, 11}, {10, 14});
    const PathPair p = szs_pair(t);
    const Permutation sigma = sigma_from_pair(p);
    const bool h_ok = join(p.h0) == kH0 && join(p.h1) == kH1;
    const bool s_ok =
        format_one_line(sigma) ==
        "1 24 19 4 5 18 17 8 9 16 25 26 15 14 13 10 7 6 3 20 23 22 21 2 11 12 27";
    const double dt = seconds_since(t0);
    pass = h_ok && s_ok && dt < 1.0;
    detail = std::string("h0/h1 ") + (h_ok ? "byte-equal" : "MISMATCH") + ", sigma " +
             (s_ok ? "byte-equal" : "MISMATCH") + ", " + std::to_string(dt) + "s";
  } catch (const std::exception& e) {
    detail = e.what();
  }
  line(1, pass, "octahedron golden path: " + detail);
}

void criterion_2() {
  const BarycenterGraph g = barycenter_graph(octahedron_base());
  const auto t0 = Clock::now();
  const std::uint64_t adjacent = count_hamiltonian_paths(g, 1, 2);
  const double t_adj = seconds_since(t0);
  const auto t1 = Clock::now();
  const std::uint64_t antipodal = count_hamiltonian_paths(g, 1, 6);
  const double t_anti = seconds_since(t1);
  const bool pass = adjacent == 62552 && antipodal == 70944 && t_adj < 60 && t_anti < 60;
  line(2, pass,
       "Hamiltonian counts: adjacent " + std::to_string(adjacent) + " (want 62552, " +
           std::to_string(t_adj) + "s), antipodal " + std::to_string(antipodal) +
           " (want 70944, " + std::to_string(t_anti) + "s)");
}

void criterion_3() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  const auto antipodal = enumerate_octahedron_templates(PoleChoice::antipodal);
  if (!antipodal.empty()) {
    pass = false;
    detail += "antipodal set not empty; ";
  }
  const auto adjacent = enumerate_octahedron_templates(PoleChoice::adjacent);
  int two_six = 0;
  std::set<std::string> two_six_keys;
  for (const auto& t : adjacent) {
    int wf = 0, ef = 0;
    for (int id : t.decoration.west) wf += t.complex.dim(id) == 2;
    for (int id : t.decoration.east) ef += t.complex.dim(id) == 2;
    if (t.decoration.meridian_ew.size() > 2 || t.decoration.meridian_we.size() > 2) {
      pass = false;
      detail += "meridian with more than two edges; ";
    }
    if (std::min(wf, ef) > 2) {
      pass = false;
      detail += "no small hemisphere; ";
    }
    if (std::min(wf, ef) == 2) {
      ++two_six;
      two_six_keys.insert(decoration_orbit_key(t));
    }
  }
  if (two_six == 0 || two_six_keys.size() != 1) {
    pass = false;
    detail += "2+6 survivors do not form one orbit; ";
  } else if (!two_six_keys.count(decoration_orbit_key(octahedron({1, 2}, {8, 11}, {10, 14})))) {
    pass = false;
    detail += "reference template not in the 2+6 orbit; ";
  }
  const double dt = seconds_since(t0);
  if (dt >= 60) pass = false;
  line(3, pass,
       "octahedron enumeration: antipodal " + std::to_string(antipodal.size()) + ", adjacent " +
           std::to_string(adjacent.size()) + " (2+6: " + std::to_string(two_six) +
           " in one orbit), " + std::to_string(dt) + "s" + (detail.empty() ? "" : "; " + detail));
}

void criterion_4() {
  const auto t0 = Clock::now();
  const Meander plus = Meander::build(sigma_plus());
  const Meander minus = Meander::build(sigma_minus());
  const auto orbit = trivial_equivalence_orbit(sigma_plus());
  const bool orbit_ok =
      std::find(orbit.begin(), orbit.end(), sigma_minus()) == orbit.end();
  const double dt = seconds_since(t0);
  const bool pass = plus.is_sturm() && minus.is_sturm() && plus.is_three_meander_template() &&
                    minus.is_three_meander_template() && orbit_ok && dt < 1.0;
  line(4, pass,
       std::string("sigma+/sigma- suite: both Sturm 3-meander templates, orbits ") +
           (orbit_ok ? "separate" : "OVERLAP") + ", " + std::to_string(dt) + "s");
}

void criterion_5() {
  bool pass = true;
  std::string detail;
  int count = 0;
  for (const auto& [name, t] : template_family()) {
    ++count;
    try {
      const PathPair p = szs_pair(t);
      const Permutation sigma = sigma_from_pair(p);
      const Report lemmas = thm52_report(sigma);
      const Report def13 = Meander::build(sigma).three_meander_template_report();
      if (!lemmas.ok() || !def13.ok()) {
        pass = false;
        detail += name + " failed; ";
      }
    } catch (const std::exception& e) {
      pass = false;
      detail += name + ": " + e.what() + "; ";
    }
  }
  line(5, pass,
       "Thm 5.2 family (" + std::to_string(count) + " templates): Def 1.3(i)-(iv) and Lemma "
       "5.3-5.7 sub-checks" + (detail.empty() ? " all pass" : "; " + detail));
}

void criterion_6() {
  // As stated: whenever the curve recursion closes at zero, the axis
  // recursion must reproduce the identical sequence. The closing condition
  // alone does not imply the agreement (the meander property is also needed),
  // so this criterion records the mismatches instead of hiding them; the
  // library reports such inputs as non-realizable rather than using them.
  std::mt19937_64 rng(20240817);
  int closed = 0, closed_identical = 0, sturm_count = 0;
  bool normalization_ok = true;
  std::string example;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 21);
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const Meander m = Meander::build(Permutation(img));
    if (m.morse().back() == 0) {
      ++closed;
      if (m.morse() == m.morse_by_axis_recursion())
        ++closed_identical;
      else if (example.empty())
        example = format_one_line(m.sigma());
    }
    // Sturm in the curve-recursion sense: dissipative, Morse, Jordan arcs
    bool morse_raw = m.morse().back() == 0;
    for (int i : m.morse()) morse_raw = morse_raw && i >= 0;
    if (m.is_dissipative() && morse_raw && m.is_meander() && n % 2 == 1) {
      ++sturm_count;
      int mn = m.morse()[0];
      for (int i : m.morse()) mn = std::min(mn, i);
      if (mn != 0 || m.morse().front() != 0 || m.morse().back() != 0) normalization_ok = false;
      if (m.morse() != m.morse_by_axis_recursion()) normalization_ok = false;
    }
  }
  const bool pass = closed == closed_identical && normalization_ok;
  std::string detail = "Morse recursions on 10000 random permutations (N <= 21): " +
                       std::to_string(closed_identical) + "/" + std::to_string(closed) +
                       " zero-closed recursions identical, " + std::to_string(sturm_count) +
                       " Sturm instances normalized and consistent";
  if (!example.empty())
    detail += "; first zero-closed mismatch without the meander property: " + example;
  line(6, pass, detail);
}

void criterion_7() {
  bool pass = true;
  std::string detail;
  int members = 0;
  for (const auto& [name, t] : template_family()) {
    ++members;
    try {
      const PathPair p = szs_pair(t);
      const Permutation sigma = sigma_from_pair(p);
      std::string why;
      if (!oracle_matches(t.complex, p.h0, sigma, why) || !prop31_holds(sigma, why)) {
        pass = false;
        detail += name + ": " + why + "; ";
      }
    } catch (const std::exception& e) {
      pass = false;
      detail += name + ": " + e.what() + "; ";
    }
  }
  for (const auto& [name, c] : planar_family()) {
    ++members;
    try {
      const PathPair p = zs_pair(c);
      const Permutation sigma = sigma_from_pair(p);
      std::string why;
      if (!oracle_matches(c, p.h0, sigma, why) || !prop31_holds(sigma, why)) {
        pass = false;
        detail += name + ": " + why + "; ";
      }
    } catch (const std::exception& e) {
      pass = false;
      detail += name + ": " + e.what() + "; ";
    }
  }
  line(7, pass,
       "zero-number oracle equivalence on " + std::to_string(members) +
           " complexes: Wolfrum connects == closure incidence, Prop 3.1 holds" +
           (detail.empty() ? "" : "; " + detail));
}

void criterion_8() {
  bool pass = true;
  std::string detail;

  // builder template -> sigma -> reconstruction, label-preserving
  try {
    const DecoratedComplex t = octahedron({1, 2}, {8, 11}, {10, 14});
    const PathPair p = szs_pair(t);
    const Permutation sigma = sigma_from_pair(p);
    const DecoratedComplex back =
        complex_from_signed_template(hemisphere_template(SignedZeroMatrix::from_sigma(sigma)));
    std::map<int, int> to_cells;
    for (size_t k = 0; k < p.h0.size(); ++k) to_cells[static_cast<int>(k) + 1] = p.h0[k];
    if (!(back.complex.relabeled(to_cells) == t.complex)) {
      pass = false;
      detail += "octahedron complex mismatch; ";
    }
  } catch (const std::exception& e) {
    pass = false;
    detail += std::string("octahedron: ") + e.what() + "; ";
  }

  // sigma -> reconstruction -> szs pair -> sigma, exactly
  for (const auto& [name, sigma] :
       std::map<std::string, Permutation>{{"sigma+", sigma_plus()},
                                          {"sigma-", sigma_minus()},
                                          {"sigma-oct", sigma_oct()}}) {
    try {
      const DecoratedComplex t =
          complex_from_signed_template(hemisphere_template(SignedZeroMatrix::from_sigma(sigma)));
      const Permutation back = sigma_from_pair(szs_pair(t));
      if (!(back == sigma)) {
        pass = false;
        detail += name + " does not round trip; ";
      }
    } catch (const std::exception& e) {
      pass = false;
      detail += name + ": " + e.what() + "; ";
    }
  }
  line(8, pass, "signed-template round trips" + (detail.empty() ? " exact" : ": " + detail));
}

void criterion_9() {
  bool pass = false;
  std::string detail;
  try {
    const Meander m = Meander::build(sigma_oct());
    const Meander scooped = scoop(m, ScoopSide::east);
    const bool n_ok = scooped.n() == 23;
    const bool sturm_ok = scooped.is_sturm();
    const bool serpent_ok = scooped.is_full(scooped.polar_serpent(0, Pole::south));

    const auto zm = SignedZeroMatrix::from_meander(scooped);
    const PlanarComplex planar =
        planar_complex_from_template(hemisphere_template(zm), PlanarStyle::sz);
    const DecoratedComplex t = octahedron({1, 2}, {8, 11}, {10, 14});
    const PathPair p = szs_pair(t);
    std::map<int, int> to_cells;
    int k = 0;
    for (int cell : p.h0) {
      if (cell == 27 || cell == 21 || cell == 7 || cell == 26) continue;  // removed with E
      to_cells[++k] = cell;
    }
    const bool complex_ok =
        planar.complex.relabeled(to_cells) == closed_hemisphere(t, Hemisphere::west);
    pass = n_ok && sturm_ok && serpent_ok && complex_ok;
    detail = std::string("23 crossings ") + (n_ok ? "yes" : "NO") + ", Sturm " +
             (sturm_ok ? "yes" : "NO") + ", full S-polar h0-serpent " +
             (serpent_ok ? "yes" : "NO") + ", clos W reconstruction " +
             (complex_ok ? "exact" : "MISMATCH");
  } catch (const std::exception& e) {
    detail = e.what();
  }
  line(9, pass, "eastern scoop: " + detail);
}

void criterion_10() {
  const BarycenterGraph g = barycenter_graph(octahedron_base());
  const DecoratedComplex t = octahedron({1, 2}, {8, 11}, {10, 14});
  const PathPair reference = szs_pair(t);

  const auto t0 = Clock::now();
  const ScanStats adj = scan_sturm_pairs(g, {1, 2}, &reference);
  const double t_adj = seconds_since(t0);
  const auto t1 = Clock::now();
  const ScanStats anti = scan_sturm_pairs(g, {1, 6});
  const double t_anti = seconds_since(t1);

  const bool pass = adj.sturm_pairs > 0 && adj.reference_hit && anti.sturm_pairs == 0;
  line(10, pass,
       "exhaustive scan: adjacent " + std::to_string(adj.sturm_pairs) + " Sturm pairs of " +
           std::to_string(adj.pairs_tested) + " (reference pair " +
           (adj.reference_hit ? "hit" : "MISSED") + ", " + std::to_string(t_adj) +
           "s), antipodal " + std::to_string(anti.sturm_pairs) + " of " +
           std::to_string(anti.pairs_tested) + " (" + std::to_string(t_anti) + "s)");
}

}  // namespace

int main(int argc, char** argv) {
  bool exhaustive = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--exhaustive") == 0) exhaustive = true;

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (exhaustive)
    criterion_10();
  else
    std::cout << "criterion 10: SKIP - exhaustive pair scan (run with --exhaustive; budget hours)\n";

  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures ? 1 : 0;
}
