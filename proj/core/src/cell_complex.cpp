#include "sturmkit/cell_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sturmkit {

void RegularCellComplex::require_new(int id) const {
  if (dim_.count(id))
    throw std::invalid_argument("complex: duplicate cell id " + std::to_string(id));
}

void RegularCellComplex::add_vertex(int id) {
  require_new(id);
  dim_[id] = 0;
}

void RegularCellComplex::add_edge(int id, int tail, int head) {
  require_new(id);
  if (!has_cell(tail) || dim(tail) != 0 || !has_cell(head) || dim(head) != 0)
    throw std::invalid_argument("complex: edge " + std::to_string(id) +
                                " references unknown vertices");
  dim_[id] = 1;
  edges_[id] = {tail, head};
}

void RegularCellComplex::add_face(int id, std::vector<int> circuit) {
  require_new(id);
  if (circuit.size() < 4 || circuit.size() % 2 != 0)
    throw std::invalid_argument("complex: face circuit must alternate v,e,... with >= 2 edges");
  for (size_t i = 0; i < circuit.size(); ++i) {
    const int cell = circuit[i];
    const int want = (i % 2 == 0) ? 0 : 1;
    if (!has_cell(cell) || dim(cell) != want)
      throw std::invalid_argument("complex: face " + std::to_string(id) +
                                  " circuit entry " + std::to_string(cell) +
                                  " is not a known " + (want ? "edge" : "vertex"));
  }
  dim_[id] = 2;
  faces_[id] = std::move(circuit);
}

void RegularCellComplex::set_ball(int id) {
  require_new(id);
  if (ball_) throw std::invalid_argument("complex: second 3-cell");
  dim_[id] = 3;
  ball_ = id;
}

int RegularCellComplex::dim(int id) const {
  auto it = dim_.find(id);
  if (it == dim_.end())
    throw std::invalid_argument("complex: unknown cell id " + std::to_string(id));
  return it->second;
}

std::vector<int> RegularCellComplex::cells() const {
  std::vector<int> out;
  out.reserve(dim_.size());
  for (const auto& [id, d] : dim_) out.push_back(id);
  return out;
}

std::vector<int> RegularCellComplex::cells_of_dim(int d) const {
  std::vector<int> out;
  for (const auto& [id, dd] : dim_)
    if (dd == d) out.push_back(id);
  return out;
}

int RegularCellComplex::tail(int edge) const {
  auto it = edges_.find(edge);
  if (it == edges_.end())
    throw std::invalid_argument("complex: unknown edge " + std::to_string(edge));
  return it->second.first;
}

int RegularCellComplex::head(int edge) const {
  auto it = edges_.find(edge);
  if (it == edges_.end())
    throw std::invalid_argument("complex: unknown edge " + std::to_string(edge));
  return it->second.second;
}

const std::vector<int>& RegularCellComplex::circuit(int face) const {
  auto it = faces_.find(face);
  if (it == faces_.end())
    throw std::invalid_argument("complex: unknown face " + std::to_string(face));
  return it->second;
}

std::vector<int> RegularCellComplex::circuit_vertices(int face) const {
  const auto& c = circuit(face);
  std::vector<int> out;
  for (size_t i = 0; i < c.size(); i += 2) out.push_back(c[i]);
  return out;
}

std::vector<int> RegularCellComplex::circuit_edges(int face) const {
  const auto& c = circuit(face);
  std::vector<int> out;
  for (size_t i = 1; i < c.size(); i += 2) out.push_back(c[i]);
  return out;
}

std::vector<int> RegularCellComplex::faces_with_edge(int edge) const {
  std::vector<int> out;
  for (const auto& [id, circ] : faces_)
    for (size_t i = 1; i < circ.size(); i += 2)
      if (circ[i] == edge) {
        out.push_back(id);
        break;
      }
  return out;
}

std::vector<int> RegularCellComplex::edges_at_vertex(int vertex) const {
  std::vector<int> out;
  for (const auto& [id, ends] : edges_)
    if (ends.first == vertex || ends.second == vertex) out.push_back(id);
  return out;
}

std::vector<int> RegularCellComplex::closure_boundary(int id) const {
  std::set<int> acc;
  const int d = dim(id);
  if (d == 3) {
    for (const auto& [cid, dd] : dim_)
      if (cid != id) acc.insert(cid);
  } else if (d == 2) {
    for (int c : circuit(id)) acc.insert(c);
  } else if (d == 1) {
    acc.insert(tail(id));
    acc.insert(head(id));
  }
  return {acc.begin(), acc.end()};
}

std::vector<int> RegularCellComplex::boundary_edges() const {
  std::vector<int> out;
  for (const auto& [id, ends] : edges_)
    if (faces_with_edge(id).size() <= 1) out.push_back(id);
  return out;
}

RegularCellComplex RegularCellComplex::with_reversed_edges() const {
  RegularCellComplex out = *this;
  for (auto& [id, ends] : out.edges_) std::swap(ends.first, ends.second);
  return out;
}

RegularCellComplex RegularCellComplex::with_flipped_circuits() const {
  RegularCellComplex out = *this;
  for (auto& [id, circ] : out.faces_) {
    // Reverse the cyclic word keeping the leading vertex in place:
    // [v0 e0 v1 e1 ... ] -> [v0 e_{m-1} v_{m-1} ... e0].
    std::reverse(circ.begin() + 1, circ.end());
  }
  return out;
}

RegularCellComplex RegularCellComplex::relabeled(const std::map<int, int>& map) const {
  auto rl = [&map](int id) {
    auto it = map.find(id);
    return it == map.end() ? id : it->second;
  };
  RegularCellComplex out;
  for (const auto& [id, d] : dim_)
    if (d == 0) out.add_vertex(rl(id));
  for (const auto& [id, ends] : edges_) out.add_edge(rl(id), rl(ends.first), rl(ends.second));
  for (const auto& [id, circ] : faces_) {
    std::vector<int> c;
    c.reserve(circ.size());
    for (int x : circ) c.push_back(rl(x));
    out.add_face(rl(id), std::move(c));
  }
  if (ball_) out.set_ball(rl(*ball_));
  return out;
}

namespace {

// Cyclic equality of circuits, same direction, any rotation.
bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  for (size_t s = 0; s < n; s += 2) {  // rotations keep vertex/edge parity
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + s) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool operator==(const RegularCellComplex& a, const RegularCellComplex& b) {
  if (a.dim_ != b.dim_ || a.edges_ != b.edges_ || a.ball_ != b.ball_) return false;
  if (a.faces_.size() != b.faces_.size()) return false;
  for (const auto& [id, circ] : a.faces_) {
    auto it = b.faces_.find(id);
    if (it == b.faces_.end() || !cyclically_equal(circ, it->second)) return false;
  }
  return true;
}

FaceCorners face_corners(const RegularCellComplex& c, int face) {
  const auto& circ = c.circuit(face);
  const size_t m = circ.size() / 2;  // vertex count

  auto vertex_at = [&](size_t i) { return circ[2 * (i % m)]; };
  auto edge_after = [&](size_t i) { return circ[2 * (i % m) + 1]; };
  auto edge_before = [&](size_t i) { return circ[(2 * (i % m) + 2 * m - 1) % (2 * m)]; };

  int min_pos = -1, max_pos = -1;
  for (size_t i = 0; i < m; ++i) {
    const int v = vertex_at(i);
    const bool out_next = c.tail(edge_after(i)) == v;
    const bool out_prev = c.tail(edge_before(i)) == v;
    if (out_next && out_prev) {
      if (min_pos >= 0)
        throw std::invalid_argument("face_corners: face " + std::to_string(face) +
                                    " has several boundary minima");
      min_pos = static_cast<int>(i);
    }
    if (!out_next && !out_prev) {
      if (max_pos >= 0)
        throw std::invalid_argument("face_corners: face " + std::to_string(face) +
                                    " has several boundary maxima");
      max_pos = static_cast<int>(i);
    }
  }
  if (min_pos < 0 || max_pos < 0)
    throw std::invalid_argument("face_corners: face " + std::to_string(face) +
                                " has no bipolar extremum");

  // P_A: edges from min to max in circuit order; P_B: the rest, min to max.
  std::vector<int> path_a, path_b;
  for (size_t i = min_pos; static_cast<int>(i % m) != max_pos; ++i) path_a.push_back(edge_after(i));
  for (size_t i = max_pos; static_cast<int>(i % m) != min_pos; ++i) path_b.push_back(edge_after(i));
  std::reverse(path_b.begin(), path_b.end());

  FaceCorners fc;
  fc.face = face;
  fc.min_vertex = vertex_at(min_pos);
  fc.max_vertex = vertex_at(max_pos);
  fc.w_minus_0 = path_b.back();
  fc.w_plus_0 = path_a.front();
  fc.w_minus_1 = path_a.back();
  fc.w_plus_1 = path_b.front();
  return fc;
}

// ---------------------------------------------------------------------------
// validators

Report validate_regular(const RegularCellComplex& c) {
  Report r;

  bool edge_ok = true;
  std::string edge_detail;
  for (int e : c.cells_of_dim(1))
    if (c.tail(e) == c.head(e)) {
      edge_ok = false;
      edge_detail = "edge " + std::to_string(e) + " has coincident endpoints";
    }
  r.add("regular: edge endpoints", edge_ok, edge_detail);

  bool circ_ok = true;
  std::string circ_detail;
  for (int f : c.cells_of_dim(2)) {
    const auto vs = c.circuit_vertices(f);
    const auto es = c.circuit_edges(f);
    std::set<int> vset(vs.begin(), vs.end()), eset(es.begin(), es.end());
    if (vset.size() != vs.size() || eset.size() != es.size()) {
      circ_ok = false;
      circ_detail = "face " + std::to_string(f) + " circuit is not simple";
      continue;
    }
    const size_t m = vs.size();
    for (size_t i = 0; i < m; ++i) {
      const int a = vs[i], b = vs[(i + 1) % m], e = es[i];
      const bool matches = (c.tail(e) == a && c.head(e) == b) ||
                           (c.tail(e) == b && c.head(e) == a);
      if (!matches) {
        circ_ok = false;
        circ_detail = "face " + std::to_string(f) + " circuit breaks at edge " +
                      std::to_string(e);
      }
    }
  }
  r.add("regular: face circuits simple and incident", circ_ok, circ_detail);

  bool count_ok = true;
  std::string count_detail;
  const bool solid = c.ball().has_value();
  for (int e : c.cells_of_dim(1)) {
    const size_t k = c.faces_with_edge(e).size();
    if ((solid && k != 2) || (!solid && k > 2)) {
      count_ok = false;
      count_detail = "edge " + std::to_string(e) + " lies in " + std::to_string(k) + " faces";
    }
  }
  r.add(solid ? "regular: each edge in exactly two faces" : "regular: each edge in at most two faces",
        count_ok, count_detail);

  if (solid) {
    // Boundary of the 3-cell must close up into a 2-sphere.
    const auto vs = c.cells_of_dim(0);
    const auto es = c.cells_of_dim(1);
    const auto fs = c.cells_of_dim(2);
    const int euler = static_cast<int>(vs.size()) - static_cast<int>(es.size()) +
                      static_cast<int>(fs.size());
    r.add("regular: Euler characteristic V-E+F = 2", euler == 2,
          "V-E+F = " + std::to_string(euler));

    bool link_ok = true;
    std::string link_detail;
    for (int v : vs) {
      // Corners at v: pairs of circuit-adjacent edges in each face. The link
      // is a single cycle iff this multigraph on the incident edges is
      // connected and 2-regular.
      std::map<int, std::vector<int>> link;
      for (int f : fs) {
        const auto fvs = c.circuit_vertices(f);
        const auto fes = c.circuit_edges(f);
        const size_t m = fvs.size();
        for (size_t i = 0; i < m; ++i)
          if (fvs[i] == v) {
            const int e1 = fes[(i + m - 1) % m], e2 = fes[i];
            link[e1].push_back(e2);
            link[e2].push_back(e1);
          }
      }
      const auto incident = c.edges_at_vertex(v);
      bool ok = !incident.empty() && link.size() == incident.size();
      for (int e : incident)
        if (!link.count(e) || link[e].size() != 2) ok = false;
      if (ok) {
        std::set<int> seen;
        std::vector<int> stack{incident.front()};
        while (!stack.empty()) {
          int e = stack.back();
          stack.pop_back();
          if (!seen.insert(e).second) continue;
          for (int nb : link[e]) stack.push_back(nb);
        }
        ok = seen.size() == incident.size();
      }
      if (!ok) {
        link_ok = false;
        link_detail = "vertex " + std::to_string(v) + " link is not a single cycle";
      }
    }
    r.add("regular: vertex links are circles", link_ok, link_detail);
  }
  return r;
}

std::optional<std::pair<int, int>> bipolar_poles(const RegularCellComplex& c) {
  int source = 0, sink = 0;
  for (int v : c.cells_of_dim(0)) {
    int in = 0, out = 0;
    for (int e : c.edges_at_vertex(v)) {
      if (c.tail(e) == v) ++out;
      if (c.head(e) == v) ++in;
    }
    if (in == 0) {
      if (source) return std::nullopt;
      source = v;
    }
    if (out == 0) {
      if (sink) return std::nullopt;
      sink = v;
    }
  }
  if (!source || !sink || source == sink) return std::nullopt;
  return std::make_pair(source, sink);
}

Report validate_bipolar(const RegularCellComplex& c) {
  Report r;

  // acyclicity by Kahn's algorithm
  std::map<int, int> indeg;
  for (int v : c.cells_of_dim(0)) indeg[v] = 0;
  for (int e : c.cells_of_dim(1)) ++indeg[c.head(e)];
  std::vector<int> queue;
  for (auto& [v, d] : indeg)
    if (d == 0) queue.push_back(v);
  size_t removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int e : c.edges_at_vertex(v))
      if (c.tail(e) == v && --indeg[c.head(e)] == 0) queue.push_back(c.head(e));
  }
  const bool acyclic = removed == indeg.size();
  r.add("bipolar: acyclic", acyclic);

  int sources = 0, sinks = 0, n_pole = 0, s_pole = 0;
  for (int v : c.cells_of_dim(0)) {
    int in = 0, out = 0;
    for (int e : c.edges_at_vertex(v)) {
      if (c.tail(e) == v) ++out;
      if (c.head(e) == v) ++in;
    }
    if (in == 0) {
      ++sources;
      n_pole = v;
    }
    if (out == 0) {
      ++sinks;
      s_pole = v;
    }
  }
  r.add("bipolar: unique orientation source", sources == 1,
        std::to_string(sources) + " sources");
  r.add("bipolar: unique orientation sink", sinks == 1, std::to_string(sinks) + " sinks");
  const bool distinct = sources == 1 && sinks == 1 && n_pole != s_pole;
  r.add("bipolar: poles distinct", distinct);

  bool on_boundary = true;
  if (distinct && !c.ball() && !c.cells_of_dim(2).empty()) {
    std::set<int> bverts;
    for (int e : c.boundary_edges()) {
      bverts.insert(c.tail(e));
      bverts.insert(c.head(e));
    }
    on_boundary = bverts.count(n_pole) && bverts.count(s_pole);
  }
  r.add("bipolar: poles on the boundary", on_boundary);
  return r;
}

namespace {

// Meridian edge sequence as a directed vertex path from north to south;
// throws when the decoration is not even structurally a path.
std::vector<int> meridian_vertices(const RegularCellComplex& c, const std::vector<int>& edges,
                                   int north, int south, const char* name) {
  if (edges.empty()) throw std::invalid_argument(std::string("decoration: empty meridian ") + name);
  std::vector<int> verts{north};
  int at = north;
  for (int e : edges) {
    if (!c.has_cell(e) || c.dim(e) != 1)
      throw std::invalid_argument(std::string("decoration: meridian ") + name +
                                  " references non-edge " + std::to_string(e));
    if (c.tail(e) != at)
      throw std::invalid_argument(std::string("decoration: meridian ") + name +
                                  " is not a directed path from the north pole");
    at = c.head(e);
    verts.push_back(at);
  }
  if (at != south)
    throw std::invalid_argument(std::string("decoration: meridian ") + name +
                                " does not end at the south pole");
  return verts;
}

}  // namespace

Report validate_three_cell_template(const RegularCellComplex& c, const TemplateDecoration& d) {
  Report r;
  for (int id : {d.north, d.south})
    if (!c.has_cell(id) || c.dim(id) != 0)
      throw std::invalid_argument("decoration: pole " + std::to_string(id) + " is not a vertex");
  for (const auto& cells : {d.west, d.east})
    for (int id : cells)
      if (!c.has_cell(id))
        throw std::invalid_argument("decoration: unknown hemisphere cell " + std::to_string(id));

  // (i) closure of a single 3-cell
  const Report reg = validate_regular(c);
  const bool has_ball = c.ball().has_value();
  r.add("Def 1.2(i)", reg.ok() && has_ball,
        has_ball ? (reg.ok() ? "regular closure of one 3-cell" : "regularity violated")
                 : "no 3-cell");
  if (!reg.ok() || !has_ball) {
    r.merge(reg);
    return r;
  }

  // (ii) bipolar orientation with two disjoint directed meridians
  const Report bip = validate_bipolar(c);
  const auto poles = bipolar_poles(c);
  bool cond_ii = bip.ok() && poles && poles->first == d.north && poles->second == d.south;
  std::string detail_ii = cond_ii ? "" : "orientation not bipolar from north to south";
  const auto ew_verts = meridian_vertices(c, d.meridian_ew, d.north, d.south, "EW");
  const auto we_verts = meridian_vertices(c, d.meridian_we, d.north, d.south, "WE");
  {
    std::set<int> interior_ew(ew_verts.begin() + 1, ew_verts.end() - 1);
    std::set<int> interior_we(we_verts.begin() + 1, we_verts.end() - 1);
    for (int v : interior_ew)
      if (interior_we.count(v)) {
        cond_ii = false;
        detail_ii = "meridians share vertex " + std::to_string(v);
      }
    std::set<int> e1(d.meridian_ew.begin(), d.meridian_ew.end());
    for (int e : d.meridian_we)
      if (e1.count(e)) {
        cond_ii = false;
        detail_ii = "meridians share edge " + std::to_string(e);
      }
  }
  r.add("Def 1.2(ii)", cond_ii, detail_ii);

  // hemisphere membership: the two components of the sphere minus the circle
  std::set<int> circle;
  circle.insert(d.north);
  circle.insert(d.south);
  for (int v : ew_verts) circle.insert(v);
  for (int v : we_verts) circle.insert(v);
  for (int e : d.meridian_ew) circle.insert(e);
  for (int e : d.meridian_we) circle.insert(e);

  std::vector<int> open_cells;
  for (int id : c.cells())
    if (!circle.count(id) && c.dim(id) <= 2) open_cells.push_back(id);

  std::map<int, int> comp;
  int n_comp = 0;
  for (int seed : open_cells) {
    if (comp.count(seed)) continue;
    ++n_comp;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (comp.count(id)) continue;
      comp[id] = n_comp;
      std::vector<int> nbs;
      if (c.dim(id) == 0) {
        nbs = c.edges_at_vertex(id);
      } else if (c.dim(id) == 1) {
        nbs = {c.tail(id), c.head(id)};
        for (int f : c.faces_with_edge(id)) nbs.push_back(f);
      } else {
        for (int x : c.circuit(id)) nbs.push_back(x);
      }
      for (int nb : nbs)
        if (!circle.count(nb) && c.dim(nb) <= 2 && !comp.count(nb)) stack.push_back(nb);
    }
  }
  std::set<int> west(d.west.begin(), d.west.end()), east(d.east.begin(), d.east.end());
  bool hemi_ok = n_comp == 2;
  if (hemi_ok) {
    std::set<int> comp1, comp2;
    for (int id : open_cells) (comp[id] == 1 ? comp1 : comp2).insert(id);
    hemi_ok = (west == comp1 && east == comp2) || (west == comp2 && east == comp1);
  }
  r.add("Def 1.2(ii) hemispheres", hemi_ok,
        hemi_ok ? "meridian circle splits the sphere into the stored W and E"
                : std::to_string(n_comp) + " components or wrong membership");

  // (iii) boundary edge orientations at non-pole meridian vertices
  bool cond_iii = true;
  std::string detail_iii;
  std::set<int> meridian_vertex_set;
  for (int v : ew_verts) meridian_vertex_set.insert(v);
  for (int v : we_verts) meridian_vertex_set.insert(v);
  for (int e : c.cells_of_dim(1)) {
    if (circle.count(e)) continue;
    const bool in_west = west.count(e) > 0;
    for (int v : {c.tail(e), c.head(e)}) {
      if (!meridian_vertex_set.count(v) || v == d.north || v == d.south) continue;
      const bool toward = c.head(e) == v;
      if (in_west && !toward) {
        cond_iii = false;
        detail_iii = "W edge " + std::to_string(e) + " points away from the meridian";
      }
      if (!in_west && toward) {
        cond_iii = false;
        detail_iii = "E edge " + std::to_string(e) + " points toward the meridian";
      }
    }
  }
  r.add("Def 1.2(iii)", cond_iii, detail_iii);

  // (iv) meridian overlaps of the four polar faces
  bool cond_iv = true;
  std::string detail_iv;
  auto polar_face = [&](const std::vector<int>& meridian, bool first_edge, bool in_west,
                        int& out_face) {
    const int e = first_edge ? meridian.front() : meridian.back();
    std::vector<int> hits;
    for (int f : c.faces_with_edge(e))
      if (in_west == (west.count(f) > 0)) hits.push_back(f);
    if (hits.size() != 1) return false;
    out_face = hits.front();
    return true;
  };
  auto check_overlap = [&](const std::vector<int>& meridian, const char* name) {
    int f_north = 0, f_south = 0;
    if (!polar_face(meridian, true, true, f_north) || !polar_face(meridian, false, false, f_south)) {
      cond_iv = false;
      detail_iv = std::string("no unique polar face at meridian ") + name;
      return;
    }
    const auto e1 = c.circuit_edges(f_north);
    const auto e2 = c.circuit_edges(f_south);
    std::set<int> s1(e1.begin(), e1.end());
    bool shared = false;
    for (int e : meridian)
      if (s1.count(e) && std::find(e2.begin(), e2.end(), e) != e2.end()) shared = true;
    if (!shared) {
      cond_iv = false;
      detail_iv = std::string("polar faces of ") + name + " do not share a meridian edge";
    }
  };
  check_overlap(d.meridian_we, "WE");
  check_overlap(d.meridian_ew, "EW");
  r.add("Def 1.2(iv)", cond_iv, detail_iv);

  return r;
}

namespace {

Report directed_disk_report(const RegularCellComplex& c, int north, int south, bool western) {
  Report r;
  const Report reg = validate_regular(c);
  r.add(western ? "Western: regular" : "Eastern: regular", reg.ok());
  const Report bip = validate_bipolar(c);
  const auto poles = bipolar_poles(c);
  r.add(western ? "Western: bipolar" : "Eastern: bipolar",
        bip.ok() && poles && poles->first == north && poles->second == south);

  std::set<int> bedges;
  for (int e : c.boundary_edges()) bedges.insert(e);
  std::set<int> bverts;
  for (int e : bedges) {
    bverts.insert(c.tail(e));
    bverts.insert(c.head(e));
  }

  const int skip = western ? north : south;
  bool ok = true;
  std::string detail;
  for (int e : c.cells_of_dim(1)) {
    if (bedges.count(e)) continue;  // interior edges only
    for (int v : {c.tail(e), c.head(e)}) {
      if (!bverts.count(v) || v == skip) continue;
      const bool toward = c.head(e) == v;
      if (western && !toward) {
        ok = false;
        detail = "edge " + std::to_string(e) + " points off the boundary";
      }
      if (!western && toward) {
        ok = false;
        detail = "edge " + std::to_string(e) + " points onto the boundary";
      }
    }
  }
  r.add(western ? "Western: edges toward the boundary" : "Eastern: edges into the interior", ok,
        detail);
  return r;
}

}  // namespace

Report western_disk_report(const RegularCellComplex& c, int north, int south) {
  return directed_disk_report(c, north, south, true);
}

Report eastern_disk_report(const RegularCellComplex& c, int north, int south) {
  return directed_disk_report(c, north, south, false);
}

bool validate_western_disk(const RegularCellComplex& c, int north, int south) {
  return western_disk_report(c, north, south).ok();
}

bool validate_eastern_disk(const RegularCellComplex& c, int north, int south) {
  return eastern_disk_report(c, north, south).ok();
}

bool incidence_connects(const RegularCellComplex& c, int v, int w) {
  const auto bd = c.closure_boundary(v);
  return std::binary_search(bd.begin(), bd.end(), w);
}

}  // namespace sturmkit
