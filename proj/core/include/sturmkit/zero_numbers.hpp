#pragma once

#include <array>
#include <vector>

#include "sturmkit/meander.hpp"
#include "sturmkit/permutation.hpp"

namespace sturmkit {

/// A signed zero count j_pm: j strict sign changes, sign of the difference at
/// the left boundary. sign is +1 or -1.
struct SignedZero {
  int count = 0;
  int sign = +1;
  friend bool operator==(const SignedZero&, const SignedZero&) = default;
};

/// All signed zero numbers z(v - w) of a Sturm permutation, with the Morse
/// numbers on the diagonal. Crossings are named 1..n in curve order, so the
/// sign of z(v - w) is + exactly when v > w.
///
/// The unsigned counts are computed from the arch diagram by a rotation
/// count: z(v_k - v_j), j < k, equals the seed min(i_j, i_{j+1}) plus the
/// number of clockwise half-turns the chord from crossing j sweeps while its
/// far end walks the curve from crossing j+1 to crossing k. Each arc of the
/// walk contributes -1, 0, or +1 according to whether it carries the moving
/// end across the axis slot of crossing j, and on which side of the axis it
/// does so. Adjacent pairs (in either order) come out as min of the Morse
/// numbers, and the count parity always matches the boundary-order parity;
/// both facts are exercised by the test suite, as is the equivalence with the
/// closure-incidence oracle on the reference complexes.
class SignedZeroMatrix {
 public:
  /// Throws std::invalid_argument unless sigma is Sturm.
  static SignedZeroMatrix from_sigma(const Permutation& sigma);
  static SignedZeroMatrix from_meander(const Meander& m);

  int n() const { return n_; }
  int morse(int v) const { return morse_[v - 1]; }
  const std::vector<int>& morse() const { return morse_; }

  /// z(v - w) for v != w.
  SignedZero z(int v, int w) const {
    SignedZero out;
    out.count = count_[index(v, w)];
    out.sign = v > w ? +1 : -1;
    return out;
  }

 private:
  SignedZeroMatrix() = default;
  size_t index(int v, int w) const {
    return static_cast<size_t>(v - 1) * n_ + (w - 1);
  }

  int n_ = 0;
  std::vector<int> morse_;
  std::vector<int> count_;  // unsigned z, symmetric
};

/// Blocking in the sense of (4.9a)/(4.9b): w prevents v_minus ~> v_plus either
/// by carrying equal zero numbers z(v_plus - w) = z(v_minus - w) = z(v_plus -
/// v_minus) with opposite signs, or by z(v_plus - w) > z(v_minus - w).
bool blocks(const SignedZeroMatrix& zm, int v_minus, int v_plus, int w);

/// k-adjacency: no third crossing w has z(v_plus - w) = z(v_minus - w) = k
/// with opposite sign indices. (Such a w automatically lies strictly between
/// v_minus and v_plus in both boundary orders.)
bool k_adjacent(const SignedZeroMatrix& zm, int v_minus, int v_plus, int k);

/// Wolfrum's criterion: v_minus ~> v_plus iff i(v_minus) > i(v_plus) and the
/// pair is z(v_plus - v_minus)-adjacent.
bool connects(const SignedZeroMatrix& zm, int v_minus, int v_plus);

/// Directed graph on crossings; edge v -> w iff connects(v, w) and the Morse
/// numbers drop by exactly one.
std::vector<std::vector<int>> connection_graph(const SignedZeroMatrix& zm);

/// For each crossing v and 0 <= j < i(v), the signed hemisphere sets
/// E^j_-(v), E^j_+(v): the targets w with v ~> w and z(w - v) = j_sign.
class SignedHemisphereTemplate {
 public:
  int n() const { return n_; }
  int morse(int v) const { return morse_[v - 1]; }
  const std::vector<int>& morse() const { return morse_; }

  /// sign_index 0 = minus, 1 = plus. Sorted crossing ids.
  const std::vector<int>& set(int v, int j, int sign_index) const {
    return sets_[v - 1][j][sign_index];
  }
  /// All heteroclinic targets of v (the union of its hemisphere sets).
  std::vector<int> targets(int v) const;

  friend SignedHemisphereTemplate hemisphere_template(const SignedZeroMatrix& zm);

 private:
  int n_ = 0;
  std::vector<int> morse_;
  std::vector<std::vector<std::array<std::vector<int>, 2>>> sets_;
};

/// Computes the template through the displayed equivalence (targets split by
/// signed zero number). Throws std::logic_error if some target carries
/// z(w - v) >= i(v), which would contradict the hemisphere bound.
SignedHemisphereTemplate hemisphere_template(const SignedZeroMatrix& zm);

}  // namespace sturmkit
