#include "sturmkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sturmkit {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  const int n = static_cast<int>(img_.size());
  if (n == 0) throw std::invalid_argument("permutation: empty image table");
  std::vector<char> seen(n + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation: symbol " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("permutation: duplicate symbol " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::kappa(int n) {
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = n + 1 - k;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int k = 1; k <= size(); ++k) inv[img_[k - 1] - 1] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if (img_[k - 1] != k) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int k = 1; k <= size(); ++k)
    if (img_[img_[k - 1] - 1] != k) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: mismatched sizes " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  std::vector<int> img(a.size());
  for (int k = 1; k <= a.size(); ++k) img[k - 1] = a(b(k));
  return Permutation(std::move(img));
}

Permutation kappa_conjugate(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = n + 1 - sigma(n + 1 - k);
  return Permutation(std::move(img));
}

std::vector<Permutation> trivial_equivalence_orbit(const Permutation& sigma) {
  const Permutation inv = sigma.inverse();
  std::vector<Permutation> orbit{sigma, kappa_conjugate(sigma), inv, kappa_conjugate(inv)};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

namespace {

// Splits off an optional "n=<int>" token; returns remaining text.
std::string_view take_n_header(std::string_view text, int& n_out) {
  size_t pos = text.find("n=");
  if (pos == std::string_view::npos) return text;
  size_t end = pos + 2;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  if (end == pos + 2) throw std::invalid_argument("parse: empty n= header");
  n_out = std::stoi(std::string(text.substr(pos + 2, end - pos - 2)));
  static std::string scratch;
  scratch = std::string(text.substr(0, pos)) + std::string(text.substr(end));
  return scratch;
}

std::vector<int> read_ints(std::string_view text) {
  std::vector<int> vals;
  std::istringstream in{std::string(text)};
  int v;
  while (in >> v) vals.push_back(v);
  if (!in.eof()) throw std::invalid_argument("parse: unexpected token in permutation text");
  return vals;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n_hint) {
  int n = n_hint;
  std::string_view body = take_n_header(text, n);

  const bool cycle_form = body.find('(') != std::string_view::npos;
  if (!cycle_form) {
    std::vector<int> img = read_ints(body);
    if (img.empty()) throw std::invalid_argument("parse: no symbols found");
    if (n != 0 && n != static_cast<int>(img.size()))
      throw std::invalid_argument("parse: one-line length disagrees with n=");
    return Permutation(std::move(img));
  }

  if (n <= 0)
    throw std::invalid_argument("parse: cycle notation requires an explicit n (use \"n=13 (...)\")");

  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::set<int> moved;

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  skip_ws();
  while (i < body.size()) {
    if (body[i] != '(') throw std::invalid_argument("parse: expected '(' in cycle notation");
    size_t close = body.find(')', i);
    if (close == std::string_view::npos)
      throw std::invalid_argument("parse: unbalanced '(' in cycle notation");
    std::vector<int> cyc = read_ints(body.substr(i + 1, close - i - 1));
    for (int v : cyc) {
      if (v < 1 || v > n)
        throw std::invalid_argument("parse: cycle symbol " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
      if (!moved.insert(v).second)
        throw std::invalid_argument("parse: symbol " + std::to_string(v) +
                                    " appears in two cycles");
    }
    for (size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k] - 1] = cyc[k + 1];
    if (cyc.size() > 1) img[cyc.back() - 1] = cyc.front();
    i = close + 1;
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int k = 1; k <= p.size(); ++k) {
    if (k > 1) out += ' ';
    out += std::to_string(p(k));
  }
  return out;
}

std::string format_cycles(const Permutation& p) {
  std::string out = "n=" + std::to_string(p.size());
  std::vector<char> done(p.size() + 1, 0);
  bool any = false;
  for (int k = 1; k <= p.size(); ++k) {
    if (done[k] || p(k) == k) continue;
    any = true;
    out += " (";
    int v = k;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(v);
      done[v] = 1;
      v = p(v);
      first = false;
    } while (v != k);
    out += ')';
  }
  if (!any) out += " ()";
  return out;
}

}  // namespace sturmkit
