#include "sturmkit/meander.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmkit {

namespace {
int sign(int x) { return (x > 0) - (x < 0); }
}  // namespace

Meander::Meander(Permutation sigma) : sigma_(std::move(sigma)) {
  const int n = sigma_.size();
  q_.resize(n);
  for (int slot = 1; slot <= n; ++slot) q_[sigma_(slot) - 1] = slot;

  // Morse numbers along the curve: i_{m+1} = i_m + (-1)^{m+1} sign(q_{m+1} - q_m).
  morse_.assign(n, 0);
  for (int m = 1; m < n; ++m) {
    const int step = (m % 2 == 1) ? 1 : -1;
    morse_[m] = morse_[m - 1] + step * sign(q_[m] - q_[m - 1]);
  }

  // Independent recursion along the axis, anchored at the same crossing
  // sigma(1): i_{sigma(m+1)} = i_{sigma(m)} + (-1)^{m+1} sign(sigma(m+1) - sigma(m)).
  morse_axis_.assign(n, 0);
  morse_axis_[sigma_(1) - 1] = 0;
  for (int m = 1; m < n; ++m) {
    const int step = (m % 2 == 1) ? 1 : -1;
    morse_axis_[sigma_(m + 1) - 1] =
        morse_axis_[sigma_(m) - 1] + step * sign(sigma_(m + 1) - sigma_(m));
  }

  morse_consistent_ = (morse_[n - 1] == 0) && (morse_ == morse_axis_);

  for (int m = 1; m < n; ++m) {
    Arc arc;
    arc.a = m;
    arc.b = m + 1;
    arc.left = std::min(q_[m - 1], q_[m]);
    arc.right = std::max(q_[m - 1], q_[m]);
    arc.upper = (m % 2 == 1);
    (arc.upper ? upper_ : lower_).push_back(arc);
  }
}

Meander Meander::build(Permutation sigma) { return Meander(std::move(sigma)); }

bool Meander::is_dissipative() const {
  return sigma_(1) == 1 && sigma_(n()) == n();
}

bool Meander::is_morse() const {
  if (!morse_consistent_) return false;
  return std::all_of(morse_.begin(), morse_.end(), [](int i) { return i >= 0; });
}

bool Meander::is_meander() const {
  auto conflict_free = [](const std::vector<Arc>& arcs) {
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j) {
        const Arc &x = arcs[i], &y = arcs[j];
        const bool disjoint = x.right < y.left || y.right < x.left;
        const bool x_in_y = y.left < x.left && x.right < y.right;
        const bool y_in_x = x.left < y.left && y.right < x.right;
        if (!disjoint && !x_in_y && !y_in_x) return false;
      }
    return true;
  };
  return conflict_free(upper_) && conflict_free(lower_);
}

bool Meander::is_sturm() const {
  return n() % 2 == 1 && is_dissipative() && is_morse() && is_meander();
}

Serpent Meander::polar_serpent(int iota, Pole pole) const {
  if (n() < 3 || !is_sturm())
    throw std::invalid_argument("polar_serpent: requires a Sturm meander with n >= 3");
  const int N = n();
  Serpent s;
  s.iota = iota;
  s.pole = pole;
  // The run may not absorb the opposite pole: it lives inside [1, N-1] for the
  // North pole and [2, N] for the South pole.
  if (pole == Pole::north) {
    s.lo = s.hi = 1;
    while (s.hi + 1 <= N - 1 && morse_[crossing(iota, s.hi + 1) - 1] <= 1) ++s.hi;
  } else {
    s.lo = s.hi = N;
    while (s.lo - 1 >= 2 && morse_[crossing(iota, s.lo - 1) - 1] <= 1) --s.lo;
  }
  for (int p = s.lo; p <= s.hi; ++p) s.members.push_back(crossing(iota, p));
  return s;
}

bool Meander::is_full(const Serpent& s) const {
  const int other = 1 - s.iota;
  // Saddle adjacent to the opposite pole, in the other order.
  const int target =
      s.pole == Pole::north ? crossing(other, n() - 1) : crossing(other, 2);
  return std::find(s.members.begin(), s.members.end(), target) != s.members.end();
}

std::vector<int> Meander::overlap(const Serpent& a, const Serpent& b) {
  std::vector<int> out;
  std::vector<int> sa = a.members, sb = b.members;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

int Meander::o_crossing() const {
  int found = 0, count = 0;
  for (int v = 1; v <= n(); ++v)
    if (morse_[v - 1] == 3) {
      found = v;
      ++count;
    }
  if (count != 1)
    throw std::invalid_argument("o_crossing: expected exactly one Morse-3 crossing, found " +
                                std::to_string(count));
  return found;
}

std::pair<int, int> Meander::neighbors(int iota) const {
  const int o = o_crossing();
  const int pos = position(iota, o);
  if (pos <= 1 || pos >= n())
    throw std::invalid_argument("neighbors: Morse-3 crossing at the boundary of the order");
  return {crossing(iota, pos - 1), crossing(iota, pos + 1)};
}

std::pair<int, int> Meander::extreme_sources(int iota) const {
  int first = 0, last = 0;
  for (int p = 1; p <= n(); ++p) {
    const int v = crossing(iota, p);
    if (morse_[v - 1] == 2) {
      if (first == 0) first = v;
      last = v;
    }
  }
  if (first == 0) throw std::invalid_argument("extreme_sources: no Morse-2 crossing");
  return {first, last};
}

Report Meander::three_meander_template_report() const {
  if (!is_sturm())
    throw std::invalid_argument("three_meander_template_report: requires a Sturm meander");
  Report r;

  // (i) a single Morse-3 crossing, everything else at most 2
  int o = 0, n3 = 0, maxi = 0;
  for (int v = 1; v <= n(); ++v) {
    if (morse_[v - 1] == 3) {
      o = v;
      ++n3;
    } else {
      maxi = std::max(maxi, morse_[v - 1]);
    }
  }
  const bool cond_i = (n3 == 1) && (maxi <= 2);
  r.add("Def 1.3(i)", cond_i,
        n3 == 1 ? "one i=3 crossing, max other Morse " + std::to_string(maxi)
                : std::to_string(n3) + " crossings with i=3");
  if (!cond_i) {
    r.add("Def 1.3(ii)", false, "skipped: (i) failed");
    r.add("Def 1.3(iii)", false, "skipped: (i) failed");
    r.add("Def 1.3(iv)", false, "skipped: (i) failed");
    return r;
  }

  const Serpent n0 = polar_serpent(0, Pole::north);
  const Serpent s0 = polar_serpent(0, Pole::south);
  const Serpent n1 = polar_serpent(1, Pole::north);
  const Serpent s1 = polar_serpent(1, Pole::south);

  // (ii) polar serpents overlap their anti-polar partners
  const bool ov_a = !overlap(n0, s1).empty();
  const bool ov_b = !overlap(s0, n1).empty();
  r.add("Def 1.3(ii)", ov_a && ov_b,
        std::string("N-h0/S-h1 ") + (ov_a ? "overlap" : "disjoint") + ", S-h0/N-h1 " +
            (ov_b ? "overlap" : "disjoint"));

  // (iii) O sits between the endpoints of every pole-incident arc, in the
  // order of the other labeling
  bool cond_iii = true;
  for (int iota : {0, 1}) {
    const int other = 1 - iota;
    for (Pole pole : {Pole::north, Pole::south}) {
      const int pa = pole == Pole::north ? 1 : n();
      const int pb = pole == Pole::north ? 2 : n() - 1;
      const int a = position(other, crossing(iota, pa));
      const int b = position(other, crossing(iota, pb));
      const int po = position(other, o);
      if (!(std::min(a, b) < po && po < std::max(a, b))) cond_iii = false;
    }
  }
  r.add("Def 1.3(iii)", cond_iii,
        cond_iii ? "polar arcs overarch O in the opposite order" : "a polar arc misses O");

  // (iv) the h_iota neighbors of O are the h_{1-iota}-extreme sources
  bool cond_iv = true;
  for (int iota : {0, 1}) {
    const auto nb = neighbors(iota);
    const auto ex = extreme_sources(1 - iota);
    const bool match = (std::min(nb.first, nb.second) == std::min(ex.first, ex.second)) &&
                       (std::max(nb.first, nb.second) == std::max(ex.first, ex.second));
    if (!match) cond_iv = false;
  }
  r.add("Def 1.3(iv)", cond_iv,
        cond_iv ? "w^0,w^1 neighbors are the extreme sources" : "neighbor/extreme-source mismatch");
  return r;
}

bool Meander::is_three_meander_template() const {
  return three_meander_template_report().ok();
}

}  // namespace sturmkit
