#include <algorithm>
#include <set>
#include <stdexcept>

#include "sturmkit/cell_complex.hpp"

namespace sturmkit {

RegularCellComplex disk(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("disk: need m, n >= 1");
  RegularCellComplex c;
  const int north = 1, south = 2;
  c.add_vertex(north);
  c.add_vertex(south);

  // One pole-to-pole side with 2k-1 alternating saddle/sink cells, ids from
  // `first`; returns the side as [edge, vertex, edge, ...] in N->S order.
  auto make_side = [&](int k, int first) {
    std::vector<int> side;
    int at = north;
    int id = first;
    for (int i = 0; i < k; ++i) {
      const int target = (i == k - 1) ? south : id + 1;
      if (i < k - 1) c.add_vertex(id + 1);
      c.add_edge(id, at, target);
      side.push_back(id);
      if (i < k - 1) side.push_back(id + 1);
      at = target;
      id += 2;
    }
    return side;
  };

  const std::vector<int> minus_side = make_side(m, 3);        // ids 3 .. 2m+1
  const std::vector<int> plus_side = make_side(n, 2 * m + 2); // ids 2m+2 .. 2(m+n)

  // Circuit order runs down the plus side and back up the minus side, so the
  // circuit-order pole-to-pole path P_A is the plus side.
  std::vector<int> circuit{north};
  for (int id : plus_side) circuit.push_back(id);
  circuit.push_back(south);
  for (auto it = minus_side.rbegin(); it != minus_side.rend(); ++it) circuit.push_back(*it);
  c.add_face(2 * (m + n) + 1, std::move(circuit));
  return c;
}

DecoratedComplex chafee_infante_ball(int m) {
  if (m < 1 || m > 3) throw std::invalid_argument("chafee_infante_ball: need 1 <= m <= 3");
  DecoratedComplex out;
  RegularCellComplex& c = out.complex;
  c.add_vertex(1);
  c.add_vertex(2);
  c.add_edge(3, 1, 2);
  out.decoration.north = 1;
  out.decoration.south = 2;
  if (m == 1) return out;

  c.add_edge(4, 1, 2);
  c.add_face(5, {1, 3, 2, 4});
  if (m == 2) return out;

  c.add_face(6, {1, 4, 2, 3});
  c.set_ball(7);
  out.decoration.meridian_ew = {3};
  out.decoration.meridian_we = {4};
  out.decoration.west = {5};
  out.decoration.east = {6};
  return out;
}

RegularCellComplex octahedron_base() {
  RegularCellComplex c;
  for (int v = 1; v <= 6; ++v) c.add_vertex(v);
  // Antipodal pairs (1,6), (2,4), (3,5); default orientations are those of
  // the reference instance and get rewritten by the enumeration anyway.
  c.add_edge(7, 1, 2);
  c.add_edge(8, 1, 3);
  c.add_edge(9, 1, 4);
  c.add_edge(10, 1, 5);
  c.add_edge(11, 3, 2);
  c.add_edge(12, 4, 3);
  c.add_edge(13, 4, 5);
  c.add_edge(14, 5, 2);
  c.add_edge(15, 6, 2);
  c.add_edge(16, 6, 3);
  c.add_edge(17, 4, 6);
  c.add_edge(18, 6, 5);
  // Sphere-coherent circuits (each edge appears once in each direction).
  c.add_face(19, {1, 9, 4, 12, 3, 8});
  c.add_face(20, {1, 10, 5, 13, 4, 9});
  c.add_face(21, {1, 7, 2, 14, 5, 10});
  c.add_face(22, {6, 15, 2, 11, 3, 16});
  c.add_face(23, {4, 17, 6, 16, 3, 12});
  c.add_face(24, {4, 13, 5, 18, 6, 17});
  c.add_face(25, {6, 18, 5, 14, 2, 15});
  c.add_face(26, {1, 8, 3, 11, 2, 7});
  c.set_ball(27);
  return c;
}

namespace {

RegularCellComplex reorient(const RegularCellComplex& base, const std::set<int>& flipped) {
  RegularCellComplex out;
  for (int v : base.cells_of_dim(0)) out.add_vertex(v);
  for (int e : base.cells_of_dim(1)) {
    if (flipped.count(e))
      out.add_edge(e, base.head(e), base.tail(e));
    else
      out.add_edge(e, base.tail(e), base.head(e));
  }
  for (int f : base.cells_of_dim(2)) out.add_face(f, base.circuit(f));
  if (base.ball()) out.set_ball(*base.ball());
  return out;
}

// Hemisphere membership given the meridian circle: the connected components
// of the open sphere cells. Returns false unless there are exactly two.
bool hemisphere_split(const RegularCellComplex& c, const std::set<int>& circle,
                      std::vector<int>& side1, std::vector<int>& side2) {
  std::map<int, int> comp;
  int n_comp = 0;
  for (int id : c.cells()) {
    if (circle.count(id) || c.dim(id) > 2 || comp.count(id)) continue;
    ++n_comp;
    if (n_comp > 2) return false;
    std::vector<int> stack{id};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (comp.count(x)) continue;
      comp[x] = n_comp;
      std::vector<int> nbs;
      if (c.dim(x) == 0) {
        nbs = c.edges_at_vertex(x);
      } else if (c.dim(x) == 1) {
        nbs = {c.tail(x), c.head(x)};
        for (int f : c.faces_with_edge(x)) nbs.push_back(f);
      } else {
        nbs = c.circuit(x);
      }
      for (int nb : nbs)
        if (!circle.count(nb) && c.dim(nb) <= 2 && !comp.count(nb)) stack.push_back(nb);
    }
  }
  if (n_comp != 2) return false;
  side1.clear();
  side2.clear();
  for (const auto& [id, k] : comp) (k == 1 ? side1 : side2).push_back(id);
  return true;
}

int face_count(const RegularCellComplex& c, const std::vector<int>& cells) {
  int k = 0;
  for (int id : cells)
    if (c.dim(id) == 2) ++k;
  return k;
}

}  // namespace

DecoratedComplex octahedron(std::pair<int, int> poles, std::vector<int> we_edges,
                            std::vector<int> ew_edges) {
  const RegularCellComplex base = octahedron_base();
  const auto edges = base.cells_of_dim(1);

  std::vector<DecoratedComplex> hits;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::set<int> flipped;
    for (size_t i = 0; i < edges.size(); ++i)
      if (mask & (1u << i)) flipped.insert(edges[i]);
    RegularCellComplex c = reorient(base, flipped);

    const auto bp = bipolar_poles(c);
    if (!bp || bp->first != poles.first || bp->second != poles.second) continue;
    if (!validate_bipolar(c).ok()) continue;

    TemplateDecoration d;
    d.north = poles.first;
    d.south = poles.second;
    d.meridian_we = we_edges;
    d.meridian_ew = ew_edges;

    std::set<int> circle{d.north, d.south};
    bool path_ok = true;
    for (const auto& mer : {we_edges, ew_edges}) {
      int at = d.north;
      for (int e : mer) {
        if (c.tail(e) != at) {
          path_ok = false;
          break;
        }
        circle.insert(e);
        circle.insert(c.head(e));
        at = c.head(e);
      }
      if (at != d.south) path_ok = false;
    }
    if (!path_ok) continue;

    std::vector<int> side1, side2;
    if (!hemisphere_split(c, circle, side1, side2)) continue;
    // the hemisphere with more faces is West
    if (face_count(c, side1) < face_count(c, side2)) std::swap(side1, side2);
    d.west = side1;
    d.east = side2;

    if (validate_three_cell_template(c, d).ok()) hits.push_back({std::move(c), std::move(d)});
  }
  if (hits.size() != 1)
    throw std::invalid_argument("octahedron: pole/meridian data admits " +
                                std::to_string(hits.size()) +
                                " valid orientations, expected exactly 1");
  return hits.front();
}

DecoratedComplex weld(const RegularCellComplex& west, const RegularCellComplex& east, int o_id) {
  const auto pw = bipolar_poles(west);
  const auto pe = bipolar_poles(east);
  if (!pw || !pe || *pw != *pe)
    throw std::invalid_argument("weld: both disks must be bipolar with identical poles");

  // Boundary circles (cells and orientations) must agree.
  auto boundary_cells = [](const RegularCellComplex& c) {
    std::set<int> out;
    for (int e : c.boundary_edges()) {
      out.insert(e);
      out.insert(c.tail(e));
      out.insert(c.head(e));
    }
    return out;
  };
  const std::set<int> bw = boundary_cells(west);
  const std::set<int> be = boundary_cells(east);
  if (bw != be) throw std::invalid_argument("weld: boundary circles carry different labels");
  for (int e : west.boundary_edges())
    if (west.tail(e) != east.tail(e) || west.head(e) != east.head(e))
      throw std::invalid_argument("weld: boundary edge " + std::to_string(e) +
                                  " oriented differently in the two disks");
  for (int id : west.cells())
    if (!bw.count(id) && east.has_cell(id))
      throw std::invalid_argument("weld: interior cell id " + std::to_string(id) +
                                  " appears in both disks");

  // Assemble: west as-is, east interior with flipped circuits to keep the
  // stored orientations sphere-coherent.
  RegularCellComplex c;
  for (int v : west.cells_of_dim(0)) c.add_vertex(v);
  for (int v : east.cells_of_dim(0))
    if (!c.has_cell(v)) c.add_vertex(v);
  for (int e : west.cells_of_dim(1)) c.add_edge(e, west.tail(e), west.head(e));
  for (int e : east.cells_of_dim(1))
    if (!c.has_cell(e)) c.add_edge(e, east.tail(e), east.head(e));
  for (int f : west.cells_of_dim(2)) c.add_face(f, west.circuit(f));
  const RegularCellComplex east_flipped = east.with_flipped_circuits();
  for (int f : east.cells_of_dim(2)) c.add_face(f, east_flipped.circuit(f));
  c.set_ball(o_id);

  TemplateDecoration d;
  d.north = pw->first;
  d.south = pw->second;

  // Split the shared circle at the poles; the west circuit-order side is EW.
  // Any west boundary face circuit contains the full circle exactly once.
  {
    std::vector<int> wface = west.cells_of_dim(2);
    // boundary circle as a vertex->edge walk from the west side
    std::map<int, int> next_edge;  // tail vertex -> boundary edge
    for (int e : west.boundary_edges()) next_edge[west.tail(e)] = e;
    std::vector<int> side;  // N -> S along one side
    int at = d.north;
    while (at != d.south) {
      const int e = next_edge.at(at);
      side.push_back(e);
      at = west.head(e);
    }
    // `side` follows the orientation; decide which side it is by membership
    // of the first edge in the west face circuit split. Both sides run N->S,
    // so walk the other one over the remaining boundary edges.
    std::set<int> in_side(side.begin(), side.end());
    std::map<int, std::vector<int>> out_edges;
    for (int e : west.boundary_edges())
      if (!in_side.count(e)) out_edges[west.tail(e)].push_back(e);
    std::vector<int> other;
    at = d.north;
    while (at != d.south) {
      const int e = out_edges.at(at).front();
      other.push_back(e);
      at = west.head(e);
    }
    // P_A of the west face (circuit order N->S) is the EW side.
    bool side_is_pa = false;
    for (int f : wface) {
      const auto fc = face_corners(west, f);
      if (fc.min_vertex == d.north && fc.max_vertex == d.south) {
        side_is_pa = fc.w_plus_0 == side.front();
        break;
      }
    }
    d.meridian_ew = side_is_pa ? side : other;
    d.meridian_we = side_is_pa ? other : side;
  }

  std::set<int> circle{d.north, d.south};
  for (const auto& mer : {d.meridian_ew, d.meridian_we})
    for (int e : mer) {
      circle.insert(e);
      circle.insert(c.tail(e));
      circle.insert(c.head(e));
    }
  for (int id : west.cells())
    if (!circle.count(id)) d.west.push_back(id);
  for (int id : east.cells())
    if (!circle.count(id)) d.east.push_back(id);
  std::sort(d.west.begin(), d.west.end());
  std::sort(d.east.begin(), d.east.end());

  DecoratedComplex out{std::move(c), std::move(d)};
  const Report check = validate_three_cell_template(out.complex, out.decoration);
  if (!check.ok())
    throw std::invalid_argument("weld: result is not a 3-cell template:\n" + check.to_string());
  return out;
}

RegularCellComplex closed_hemisphere(const DecoratedComplex& t, Hemisphere h) {
  const RegularCellComplex& c = t.complex;
  const auto& open = h == Hemisphere::west ? t.decoration.west : t.decoration.east;
  std::set<int> keep(open.begin(), open.end());
  keep.insert(t.decoration.north);
  keep.insert(t.decoration.south);
  for (const auto& mer : {t.decoration.meridian_ew, t.decoration.meridian_we})
    for (int e : mer) {
      keep.insert(e);
      keep.insert(c.tail(e));
      keep.insert(c.head(e));
    }
  RegularCellComplex out;
  for (int v : c.cells_of_dim(0))
    if (keep.count(v)) out.add_vertex(v);
  for (int e : c.cells_of_dim(1))
    if (keep.count(e)) out.add_edge(e, c.tail(e), c.head(e));
  for (int f : c.cells_of_dim(2))
    if (keep.count(f)) out.add_face(f, c.circuit(f));
  return out;
}

DecoratedComplex u_flip(const DecoratedComplex& t) {
  // Reversing the bipolar orientation turns every face circuit's min into its
  // max; the circuits flip along so that each face keeps its corner roles.
  DecoratedComplex out;
  out.complex = t.complex.with_reversed_edges().with_flipped_circuits();
  out.decoration.north = t.decoration.south;
  out.decoration.south = t.decoration.north;
  out.decoration.meridian_ew.assign(t.decoration.meridian_we.rbegin(),
                                    t.decoration.meridian_we.rend());
  out.decoration.meridian_we.assign(t.decoration.meridian_ew.rbegin(),
                                    t.decoration.meridian_ew.rend());
  out.decoration.west = t.decoration.east;
  out.decoration.east = t.decoration.west;
  return out;
}

DecoratedComplex x_flip(const DecoratedComplex& t) {
  DecoratedComplex out;
  out.complex = t.complex.with_flipped_circuits();
  out.decoration = t.decoration;
  std::swap(out.decoration.meridian_ew, out.decoration.meridian_we);
  return out;
}

}  // namespace sturmkit
