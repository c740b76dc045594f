#include "sturmkit/zero_numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmkit {

namespace {
int sign(int x) { return (x > 0) - (x < 0); }
}  // namespace

SignedZeroMatrix SignedZeroMatrix::from_meander(const Meander& m) {
  if (!m.is_sturm())
    throw std::invalid_argument("zero_matrix: input permutation is not Sturm");
  const int n = m.n();
  SignedZeroMatrix zm;
  zm.n_ = n;
  zm.morse_ = m.morse();
  zm.count_.assign(static_cast<size_t>(n) * n, 0);

  std::vector<int> q(n);
  for (int v = 1; v <= n; ++v) q[v - 1] = m.axis_position(v);

  // For each anchor j walk the curve once; the chord rotation accumulates
  // arc by arc. Arc (l, l+1) moves the chord end across the axis slot of j
  // exactly when the slots of l and l+1 lie on opposite sides of q_j; the
  // half-turn is clockwise on one side of the axis and counterclockwise on
  // the other.
  for (int j = 1; j < n; ++j) {
    int acc = std::min(zm.morse_[j - 1], zm.morse_[j]);  // seed z(v_{j+1} - v_j)
    zm.count_[zm.index(j, j + 1)] = acc;
    zm.count_[zm.index(j + 1, j)] = acc;
    for (int l = j + 1; l < n; ++l) {
      const int sl = sign(q[l - 1] - q[j - 1]);
      const int sr = sign(q[l] - q[j - 1]);
      const int crossing = (sr - sl) / 2;     // -1, 0, +1
      const bool upper = (l % 2 == 1);
      acc += upper ? crossing : -crossing;
      if (acc < 0)
        throw std::logic_error("zero_matrix: negative zero count; permutation not Sturm");
      zm.count_[zm.index(j, l + 1)] = acc;
      zm.count_[zm.index(l + 1, j)] = acc;
    }
  }
  return zm;
}

SignedZeroMatrix SignedZeroMatrix::from_sigma(const Permutation& sigma) {
  return from_meander(Meander::build(sigma));
}

bool blocks(const SignedZeroMatrix& zm, int v_minus, int v_plus, int w) {
  if (w == v_minus || w == v_plus) return false;
  const SignedZero zp = zm.z(v_plus, w);
  const SignedZero zn = zm.z(v_minus, w);
  if (zp.count > zn.count) return true;  // (4.9b)
  const int k = zm.z(v_plus, v_minus).count;
  return zp.count == k && zn.count == k && zp.sign != zn.sign;  // (4.9a)
}

bool k_adjacent(const SignedZeroMatrix& zm, int v_minus, int v_plus, int k) {
  for (int w = 1; w <= zm.n(); ++w) {
    if (w == v_minus || w == v_plus) continue;
    const SignedZero zp = zm.z(v_plus, w);
    const SignedZero zn = zm.z(v_minus, w);
    if (zp.count == k && zn.count == k && zp.sign != zn.sign) return false;
  }
  return true;
}

bool connects(const SignedZeroMatrix& zm, int v_minus, int v_plus) {
  if (v_minus == v_plus) return false;
  if (zm.morse(v_minus) <= zm.morse(v_plus)) return false;
  return k_adjacent(zm, v_minus, v_plus, zm.z(v_plus, v_minus).count);
}

std::vector<std::vector<int>> connection_graph(const SignedZeroMatrix& zm) {
  std::vector<std::vector<int>> adj(zm.n() + 1);
  for (int v = 1; v <= zm.n(); ++v)
    for (int w = 1; w <= zm.n(); ++w)
      if (zm.morse(w) == zm.morse(v) - 1 && connects(zm, v, w)) adj[v].push_back(w);
  return adj;
}

std::vector<int> SignedHemisphereTemplate::targets(int v) const {
  std::vector<int> out;
  for (const auto& level : sets_[v - 1])
    for (const auto& half : level) out.insert(out.end(), half.begin(), half.end());
  std::sort(out.begin(), out.end());
  return out;
}

SignedHemisphereTemplate hemisphere_template(const SignedZeroMatrix& zm) {
  SignedHemisphereTemplate t;
  t.n_ = zm.n();
  t.morse_ = zm.morse();
  t.sets_.resize(zm.n());
  for (int v = 1; v <= zm.n(); ++v) {
    t.sets_[v - 1].resize(zm.morse(v));
    for (int w = 1; w <= zm.n(); ++w) {
      if (w == v || !connects(zm, v, w)) continue;
      const SignedZero z = zm.z(w, v);
      if (z.count >= zm.morse(v))
        throw std::logic_error("hemisphere_template: target with z(w - v) >= i(v)");
      t.sets_[v - 1][z.count][z.sign > 0 ? 1 : 0].push_back(w);
    }
  }
  return t;
}

}  // namespace sturmkit
