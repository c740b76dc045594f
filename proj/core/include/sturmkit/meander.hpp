#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sturmkit/permutation.hpp"
#include "sturmkit/report.hpp"

namespace sturmkit {

enum class Pole { north, south };

/// A maximal run of crossings with Morse number 0 or 1 at one pole, in one of
/// the two orders. `members` lists crossing ids in h_iota order; `lo..hi` is
/// the position interval. The run never absorbs the opposite pole.
struct Serpent {
  int iota = 0;
  Pole pole = Pole::north;
  int lo = 0, hi = 0;        // h_iota positions, inclusive
  std::vector<int> members;  // crossing ids
};

/// The arch diagram of a permutation, with the h0 = id convention: crossing k
/// is the k-th point along the curve, and sigma places the crossings on the
/// horizontal axis (the crossing at axis slot s is sigma(s)).
///
/// Arcs alternate starting above the axis: the curve arrives from the
/// Southwest and crosses upward at the first crossing, so the arc joining
/// curve positions (2k-1, 2k) is an upper arc and (2k, 2k+1) a lower arc.
class Meander {
 public:
  struct Arc {
    int a = 0, b = 0;        // crossing ids, a = curve-earlier endpoint
    int left = 0, right = 0; // axis slot interval spanned
    bool upper = false;
  };

  static Meander build(Permutation sigma);

  int n() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  int axis_position(int crossing) const { return q_[crossing - 1]; }
  int crossing_at_slot(int slot) const { return sigma_(slot); }

  /// Morse numbers by crossing id, from the curve-order recursion anchored at
  /// i = 0 on the first crossing.
  const std::vector<int>& morse() const { return morse_; }
  /// The independent axis-order recursion (same anchor crossing).
  const std::vector<int>& morse_by_axis_recursion() const { return morse_axis_; }
  /// True iff the two recursions agree and the last curve crossing closes at 0.
  /// A failure marks a non-realizable permutation; it is reported here rather
  /// than thrown so enumeration scans can discard candidates cheaply.
  bool morse_consistent() const { return morse_consistent_; }

  const std::vector<Arc>& upper_arcs() const { return upper_; }
  const std::vector<Arc>& lower_arcs() const { return lower_; }

  bool is_dissipative() const;
  bool is_morse() const;
  /// Jordan-curve condition: upper arcs pairwise nested or disjoint as axis
  /// intervals, and the same below the axis.
  bool is_meander() const;
  bool is_sturm() const;

  /// Requires a Sturm meander with n >= 3.
  Serpent polar_serpent(int iota, Pole pole) const;
  /// Full serpents reach the saddle h_{1-iota}-adjacent to the opposite pole.
  bool is_full(const Serpent& s) const;
  static std::vector<int> overlap(const Serpent& a, const Serpent& b);

  /// The unique crossing with Morse number 3; throws if absent or ambiguous.
  int o_crossing() const;
  /// h_iota predecessor and successor crossings of the Morse-3 crossing.
  std::pair<int, int> neighbors(int iota) const;
  /// First and last Morse-2 crossings in the h_iota order; throws if none.
  std::pair<int, int> extreme_sources(int iota) const;

  /// Def 1.3 conditions (i)-(iv), one report line each. Requires is_sturm().
  Report three_meander_template_report() const;
  bool is_three_meander_template() const;

 private:
  explicit Meander(Permutation sigma);

  int position(int iota, int crossing) const {
    return iota == 0 ? crossing : q_[crossing - 1];
  }
  int crossing(int iota, int pos) const {
    return iota == 0 ? pos : sigma_(pos);
  }

  Permutation sigma_;
  std::vector<int> q_;  // axis slot of each crossing, q = sigma^{-1}
  std::vector<int> morse_;
  std::vector<int> morse_axis_;
  bool morse_consistent_ = false;
  std::vector<Arc> upper_, lower_;
};

}  // namespace sturmkit
