#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sturmkit/cell_complex.hpp"

namespace sturmkit {

namespace {

// Chains a signed half (saddle edges plus interior sink vertices) into the
// directed edge path from `from` to `to`. Failure means the template data is
// inconsistent; no repair is attempted.
std::vector<int> chain_half(const RegularCellComplex& c, const std::vector<int>& cells, int from,
                            int to, const std::vector<int>& morse) {
  std::vector<int> edges, verts;
  for (int id : cells) (morse[id - 1] == 1 ? edges : verts).push_back(id);

  std::map<int, int> by_tail;
  for (int e : edges)
    if (!by_tail.emplace(c.tail(e), e).second)
      throw std::invalid_argument("template chain: two edges leave vertex " +
                                  std::to_string(c.tail(e)));
  std::vector<int> path;
  std::set<int> seen_interior;
  int at = from;
  while (at != to) {
    auto it = by_tail.find(at);
    if (it == by_tail.end())
      throw std::invalid_argument("template chain: no edge continues at vertex " +
                                  std::to_string(at));
    path.push_back(it->second);
    at = c.head(it->second);
    if (at != to && !seen_interior.insert(at).second)
      throw std::invalid_argument("template chain: path revisits vertex " + std::to_string(at));
  }
  if (path.size() != edges.size())
    throw std::invalid_argument("template chain: unused edges in signed half");
  std::set<int> vset(verts.begin(), verts.end());
  if (vset != seen_interior)
    throw std::invalid_argument("template chain: interior vertices disagree with signed half");
  return path;
}

std::vector<int> assemble_circuit(const RegularCellComplex& c, int min_v, int max_v,
                                  const std::vector<int>& path_a, const std::vector<int>& path_b) {
  std::vector<int> circuit{min_v};
  int at = min_v;
  for (int e : path_a) {
    circuit.push_back(e);
    at = c.head(e);
    if (at != max_v) circuit.push_back(at);
  }
  circuit.push_back(max_v);
  for (auto it = path_b.rbegin(); it != path_b.rend(); ++it) {
    circuit.push_back(*it);
    at = c.tail(*it);
    if (at != min_v) circuit.push_back(at);
  }
  return circuit;
}

int singleton(const std::vector<int>& v, const char* what) {
  if (v.size() != 1)
    throw std::invalid_argument(std::string("template: expected a single ") + what + ", got " +
                                std::to_string(v.size()));
  return v.front();
}

// Shared skeleton: vertices, oriented edges, and faces with circuits chained
// from the signed halves. `face_minus_is_pa(f)` picks the circuit chirality.
template <typename Pred>
RegularCellComplex build_skeleton(const SignedHemisphereTemplate& t, Pred face_minus_is_pa) {
  RegularCellComplex c;
  for (int v = 1; v <= t.n(); ++v)
    if (t.morse(v) == 0) c.add_vertex(v);
  for (int v = 1; v <= t.n(); ++v)
    if (t.morse(v) == 1)
      c.add_edge(v, singleton(t.set(v, 0, 0), "minus endpoint"),
                 singleton(t.set(v, 0, 1), "plus endpoint"));
  for (int w = 1; w <= t.n(); ++w) {
    if (t.morse(w) != 2) continue;
    const int min_v = singleton(t.set(w, 0, 0), "face minimum");
    const int max_v = singleton(t.set(w, 0, 1), "face maximum");
    const auto minus_chain = chain_half(c, t.set(w, 1, 0), min_v, max_v, t.morse());
    const auto plus_chain = chain_half(c, t.set(w, 1, 1), min_v, max_v, t.morse());
    const bool minus_is_pa = face_minus_is_pa(w);
    c.add_face(w, assemble_circuit(c, min_v, max_v, minus_is_pa ? minus_chain : plus_chain,
                                   minus_is_pa ? plus_chain : minus_chain));
  }
  return c;
}

}  // namespace

DecoratedComplex complex_from_signed_template(const SignedHemisphereTemplate& t) {
  int o = 0;
  for (int v = 1; v <= t.n(); ++v) {
    if (t.morse(v) == 3) {
      if (o) throw std::invalid_argument("template: several Morse-3 crossings");
      o = v;
    } else if (t.morse(v) > 3) {
      throw std::invalid_argument("template: Morse number above 3");
    }
  }
  if (!o) throw std::invalid_argument("template: no Morse-3 crossing");

  std::set<int> west(t.set(o, 2, 0).begin(), t.set(o, 2, 0).end());

  // West faces read their minus half in circuit order, East faces their plus
  // half; that keeps the stored circuits sphere-coherent.
  RegularCellComplex c =
      build_skeleton(t, [&](int w) { return west.count(w) > 0; });
  c.set_ball(o);

  TemplateDecoration d;
  d.north = singleton(t.set(o, 0, 0), "north pole");
  d.south = singleton(t.set(o, 0, 1), "south pole");
  d.meridian_ew = chain_half(c, t.set(o, 1, 0), d.north, d.south, t.morse());
  d.meridian_we = chain_half(c, t.set(o, 1, 1), d.north, d.south, t.morse());
  d.west = t.set(o, 2, 0);
  d.east = t.set(o, 2, 1);
  std::sort(d.west.begin(), d.west.end());
  std::sort(d.east.begin(), d.east.end());

  DecoratedComplex out{std::move(c), std::move(d)};
  const Report check = validate_three_cell_template(out.complex, out.decoration);
  if (!check.ok())
    throw std::logic_error("complex_from_signed_template: reconstruction is not a 3-cell template:\n" +
                           check.to_string());
  return out;
}

PlanarComplex planar_complex_from_template(const SignedHemisphereTemplate& t, PlanarStyle style) {
  for (int v = 1; v <= t.n(); ++v)
    if (t.morse(v) > 2)
      throw std::invalid_argument("planar template: Morse number above 2");

  PlanarComplex out;
  out.complex = build_skeleton(t, [&](int) { return style == PlanarStyle::sz; });
  const auto poles = bipolar_poles(out.complex);
  if (!poles) throw std::logic_error("planar template: reconstruction is not bipolar");
  out.north = poles->first;
  out.south = poles->second;
  return out;
}

}  // namespace sturmkit
