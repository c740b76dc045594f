#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sturmkit {

/// A bijection on {1..n}. Symbols are 1-based everywhere in the public API;
/// internal storage is a plain image table. Immutable after construction.
class Permutation {
 public:
  /// one_line[k-1] is the image of k. Throws std::invalid_argument unless the
  /// values are a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The order-reversing involution kappa(j) = n+1-j.
  static Permutation kappa(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on image tables (shorter first); gives deterministic sets.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.img_ < b.img_;
  }

 private:
  std::vector<int> img_;
};

/// (a*b)(k) = a(b(k)); sizes must agree.
Permutation compose(const Permutation& a, const Permutation& b);

/// kappa * sigma * kappa, the u-flip conjugate.
Permutation kappa_conjugate(const Permutation& sigma);

/// The Klein 4-group orbit {sigma, k s k, s^-1, k s^-1 k} with duplicates
/// collapsed; sorted for deterministic comparison. Size divides 4.
std::vector<Permutation> trivial_equivalence_orbit(const Permutation& sigma);

/// Parses one-line ("1 12 3 ...") or cycle notation ("(2 12)(5 11)").
/// Cycle notation needs the symbol count, either via an "n=13" token in the
/// text or the n_hint argument (text wins if both are present).
/// Throws std::invalid_argument on duplicate symbols, out-of-range symbols,
/// or malformed parentheses.
Permutation parse_permutation(std::string_view text, int n_hint = 0);

std::string format_one_line(const Permutation& p);
/// "n=13 (2 12)(5 11)(8 10)"; fixed points are implicit. Identity prints as
/// "n=13 ()" so the round trip stays unambiguous.
std::string format_cycles(const Permutation& p);

}  // namespace sturmkit
