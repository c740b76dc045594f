#include "sturmkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace sturmkit {

int BarycenterGraph::node_of(int cell_id) const {
  const auto it = std::lower_bound(ids.begin(), ids.end(), cell_id);
  if (it == ids.end() || *it != cell_id)
    throw std::invalid_argument("barycenter graph: unknown cell " + std::to_string(cell_id));
  return static_cast<int>(it - ids.begin());
}

BarycenterGraph barycenter_graph(const RegularCellComplex& c) {
  BarycenterGraph g;
  g.ids = c.cells();
  g.adj.resize(g.ids.size());
  auto link = [&](int a, int b) {
    const int na = g.node_of(a), nb = g.node_of(b);
    g.adj[na].push_back(nb);
    g.adj[nb].push_back(na);
  };
  for (int e : c.cells_of_dim(1)) {
    link(e, c.tail(e));
    link(e, c.head(e));
  }
  for (int f : c.cells_of_dim(2))
    for (int e : c.circuit_edges(f)) link(f, e);
  if (c.ball())
    for (int f : c.cells_of_dim(2)) link(*c.ball(), f);
  for (auto& nbs : g.adj) std::sort(nbs.begin(), nbs.end());
  return g;
}

namespace {

int env_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STURMKIT_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) return k;
  }
  return 1;
}

// Plain exhaustive DFS. visited is a bitmask; graphs here have < 64 nodes.
std::uint64_t dfs_count(const BarycenterGraph& g, int at, int end, std::uint64_t visited,
                        int remaining) {
  if (at == end) return remaining == 1 ? 1 : 0;
  std::uint64_t total = 0;
  for (int nb : g.adj[at])
    if (!(visited & (1ull << nb)))
      total += dfs_count(g, nb, end, visited | (1ull << nb), remaining - 1);
  return total;
}

void dfs_enumerate(const BarycenterGraph& g, int end, std::uint64_t visited,
                   std::vector<int>& path, const std::function<void(const std::vector<int>&)>& sink) {
  const int at = path.back();
  if (at == end) {
    if (path.size() == g.ids.size()) {
      static thread_local std::vector<int> cells;
      cells.clear();
      for (int node : path) cells.push_back(g.ids[node]);
      sink(cells);
    }
    return;
  }
  for (int nb : g.adj[at])
    if (!(visited & (1ull << nb))) {
      path.push_back(nb);
      dfs_enumerate(g, end, visited | (1ull << nb), path, sink);
      path.pop_back();
    }
}

}  // namespace

std::uint64_t count_hamiltonian_paths(const BarycenterGraph& g, int start_cell, int end_cell,
                                      int thread_count) {
  if (g.ids.size() > 63) throw std::invalid_argument("hamiltonian count: graph too large");
  const int start = g.node_of(start_cell), end = g.node_of(end_cell);
  if (start == end) throw std::invalid_argument("hamiltonian count: start equals end");

  const int workers = std::min<int>(env_thread_count(thread_count),
                                    static_cast<int>(g.adj[start].size()));
  if (workers <= 1) {
    return dfs_count(g, start, end, 1ull << start, static_cast<int>(g.ids.size()));
  }
  std::atomic<size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= g.adj[start].size()) return;
      const int nb = g.adj[start][i];
      if (nb == end && g.ids.size() != 2) continue;
      total += dfs_count(g, nb, end, (1ull << start) | (1ull << nb),
                         static_cast<int>(g.ids.size()) - 1);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return total.load();
}

void enumerate_hamiltonian_paths(const BarycenterGraph& g, int start_cell, int end_cell,
                                 const std::function<void(const std::vector<int>&)>& sink) {
  if (g.ids.size() > 63) throw std::invalid_argument("hamiltonian enumerate: graph too large");
  const int start = g.node_of(start_cell), end = g.node_of(end_cell);
  std::vector<int> path{start};
  dfs_enumerate(g, end, 1ull << start, path, sink);
}

// ---------------------------------------------------------------------------
// octahedron decorations

namespace {

RegularCellComplex reorient(const RegularCellComplex& base, unsigned mask,
                            const std::vector<int>& edge_ids) {
  RegularCellComplex out;
  for (int v : base.cells_of_dim(0)) out.add_vertex(v);
  for (size_t i = 0; i < edge_ids.size(); ++i) {
    const int e = edge_ids[i];
    if (mask & (1u << i))
      out.add_edge(e, base.head(e), base.tail(e));
    else
      out.add_edge(e, base.tail(e), base.head(e));
  }
  for (int f : base.cells_of_dim(2)) out.add_face(f, base.circuit(f));
  if (base.ball()) out.set_ball(*base.ball());
  return out;
}

void directed_paths(const RegularCellComplex& c, int at, int target, std::vector<int>& edges,
                    std::set<int>& used_vertices, std::vector<std::vector<int>>& out) {
  if (at == target) {
    out.push_back(edges);
    return;
  }
  for (int e : c.edges_at_vertex(at)) {
    if (c.tail(e) != at) continue;
    const int h = c.head(e);
    if (used_vertices.count(h)) continue;
    used_vertices.insert(h);
    edges.push_back(e);
    directed_paths(c, h, target, edges, used_vertices, out);
    edges.pop_back();
    used_vertices.erase(h);
  }
}

bool vertex_disjoint_interiors(const RegularCellComplex& c, const std::vector<int>& p,
                               const std::vector<int>& q, int north, int south) {
  std::set<int> pv;
  for (int e : p) {
    pv.insert(c.tail(e));
    pv.insert(c.head(e));
  }
  pv.erase(north);
  pv.erase(south);
  for (int e : q) {
    if (pv.count(c.tail(e)) || pv.count(c.head(e))) return false;
    if (std::find(p.begin(), p.end(), e) != p.end()) return false;
  }
  return true;
}

bool hemisphere_components(const RegularCellComplex& c, const std::set<int>& circle,
                           std::vector<int>& side1, std::vector<int>& side2) {
  std::map<int, int> comp;
  int n_comp = 0;
  for (int id : c.cells()) {
    if (circle.count(id) || c.dim(id) > 2 || comp.count(id)) continue;
    ++n_comp;
    if (n_comp > 2) return false;
    std::vector<int> stack{id};
    while (!stack.empty()) {
      const int x = stack.back();
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

const std::vector<std::pair<int, int>>& antipodal_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{1, 6}, {2, 4}, {3, 5}};
  return pairs;
}

bool octa_adjacent(int a, int b) {
  if (a == b) return false;
  for (const auto& [p, q] : antipodal_pairs())
    if ((a == p && b == q) || (a == q && b == p)) return false;
  return true;
}

}  // namespace

std::vector<DecoratedComplex> enumerate_octahedron_templates(PoleChoice choice) {
  const RegularCellComplex base = octahedron_base();
  const std::vector<int> edge_ids = base.cells_of_dim(1);

  std::vector<std::pair<int, int>> pole_pairs;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      if (a == b) continue;
      const bool adj = octa_adjacent(a, b);
      if ((choice == PoleChoice::adjacent) == adj) pole_pairs.emplace_back(a, b);
    }

  std::vector<DecoratedComplex> out;
  for (unsigned mask = 0; mask < (1u << edge_ids.size()); ++mask) {
    const RegularCellComplex c = reorient(base, mask, edge_ids);
    const auto poles = bipolar_poles(c);
    if (!poles) continue;
    if (std::find(pole_pairs.begin(), pole_pairs.end(), *poles) == pole_pairs.end()) continue;
    if (!validate_bipolar(c).ok()) continue;

    std::vector<std::vector<int>> paths;
    {
      std::vector<int> edges;
      std::set<int> used{poles->first};
      directed_paths(c, poles->first, poles->second, edges, used, paths);
    }
    for (size_t i = 0; i < paths.size(); ++i)
      for (size_t j = 0; j < paths.size(); ++j) {
        if (i == j) continue;
        if (!vertex_disjoint_interiors(c, paths[i], paths[j], poles->first, poles->second))
          continue;

        std::set<int> circle{poles->first, poles->second};
        for (const auto* mer : {&paths[i], &paths[j]})
          for (int e : *mer) {
            circle.insert(e);
            circle.insert(c.tail(e));
            circle.insert(c.head(e));
          }
        std::vector<int> side1, side2;
        if (!hemisphere_components(c, circle, side1, side2)) continue;
        if (face_count(c, side1) < face_count(c, side2)) std::swap(side1, side2);

        TemplateDecoration d;
        d.north = poles->first;
        d.south = poles->second;
        d.meridian_we = paths[i];
        d.meridian_ew = paths[j];
        d.west = side1;
        d.east = side2;
        if (validate_three_cell_template(c, d).ok()) out.push_back({c, std::move(d)});
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// orbit bucketing

namespace {

std::vector<std::map<int, int>> octahedron_cell_automorphisms() {
  const RegularCellComplex base = octahedron_base();
  std::set<std::pair<int, int>> adjacency;
  for (int e : base.cells_of_dim(1)) {
    adjacency.emplace(base.tail(e), base.head(e));
    adjacency.emplace(base.head(e), base.tail(e));
  }
  // edge id by unordered endpoints, face id by vertex triple
  std::map<std::pair<int, int>, int> edge_by_ends;
  for (int e : base.cells_of_dim(1))
    edge_by_ends[{std::min(base.tail(e), base.head(e)), std::max(base.tail(e), base.head(e))}] = e;
  std::map<std::set<int>, int> face_by_verts;
  for (int f : base.cells_of_dim(2)) {
    const auto vs = base.circuit_vertices(f);
    face_by_verts[std::set<int>(vs.begin(), vs.end())] = f;
  }

  std::vector<std::map<int, int>> out;
  std::vector<int> perm{1, 2, 3, 4, 5, 6};
  do {
    bool ok = true;
    for (int a = 1; a <= 6 && ok; ++a)
      for (int b = a + 1; b <= 6 && ok; ++b)
        if (adjacency.count({a, b}) != adjacency.count({perm[a - 1], perm[b - 1]})) ok = false;
    if (!ok) continue;
    std::map<int, int> map;
    for (int v = 1; v <= 6; ++v) map[v] = perm[v - 1];
    for (const auto& [ends, e] : edge_by_ends) {
      const int a = map[ends.first], b = map[ends.second];
      map[e] = edge_by_ends.at({std::min(a, b), std::max(a, b)});
    }
    for (const auto& [verts, f] : face_by_verts) {
      std::set<int> image;
      for (int v : verts) image.insert(map[v]);
      map[f] = face_by_verts.at(image);
    }
    map[27] = 27;
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string decoration_signature(const RegularCellComplex& c, const TemplateDecoration& d) {
  std::string s = "N" + std::to_string(d.north) + "S" + std::to_string(d.south) + "|o:";
  for (int e : c.cells_of_dim(1))
    s += std::to_string(e) + ">" + std::to_string(c.head(e)) + ",";
  s += "|we:";
  for (int e : d.meridian_we) s += std::to_string(e) + ",";
  s += "|ew:";
  for (int e : d.meridian_ew) s += std::to_string(e) + ",";
  s += "|w:";
  std::vector<int> w = d.west;
  std::sort(w.begin(), w.end());
  for (int id : w) s += std::to_string(id) + ",";
  return s;
}

DecoratedComplex apply_cell_map(const DecoratedComplex& t, const std::map<int, int>& map) {
  DecoratedComplex out;
  out.complex = t.complex.relabeled(map);
  out.decoration.north = map.at(t.decoration.north);
  out.decoration.south = map.at(t.decoration.south);
  for (int e : t.decoration.meridian_ew) out.decoration.meridian_ew.push_back(map.at(e));
  for (int e : t.decoration.meridian_we) out.decoration.meridian_we.push_back(map.at(e));
  for (int id : t.decoration.west) out.decoration.west.push_back(map.at(id));
  for (int id : t.decoration.east) out.decoration.east.push_back(map.at(id));
  std::sort(out.decoration.west.begin(), out.decoration.west.end());
  std::sort(out.decoration.east.begin(), out.decoration.east.end());
  return out;
}

}  // namespace

std::string decoration_orbit_key(const DecoratedComplex& t) {
  static const std::vector<std::map<int, int>> autos = octahedron_cell_automorphisms();
  std::string best;
  for (const auto& map : autos) {
    const DecoratedComplex image = apply_cell_map(t, map);
    const DecoratedComplex flips[4] = {image, u_flip(image), x_flip(image), x_flip(u_flip(image))};
    for (const auto& variant : flips) {
      std::string sig = decoration_signature(variant.complex, variant.decoration);
      if (best.empty() || sig < best) best = std::move(sig);
    }
  }
  return best;
}

std::vector<std::pair<DecoratedComplex, int>> bucket_by_orbit(
    const std::vector<DecoratedComplex>& templates) {
  std::map<std::string, std::pair<const DecoratedComplex*, int>> buckets;
  for (const auto& t : templates) {
    auto [it, fresh] = buckets.emplace(decoration_orbit_key(t), std::make_pair(&t, 0));
    ++it->second.second;
    (void)fresh;
  }
  std::vector<std::pair<DecoratedComplex, int>> out;
  out.reserve(buckets.size());
  for (const auto& [key, rep] : buckets) out.emplace_back(*rep.first, rep.second);
  return out;
}

// ---------------------------------------------------------------------------
// brute-force pair scan

namespace {

// Fast Sturm test specialized for the scan: sigma arrives as the position
// table pos0 of h0 composed with the cell sequence h1. Rejects on the first
// Morse violation, then checks the final normalization and arc nesting.
bool sturm_quick(const std::vector<int8_t>& sigma, std::vector<int8_t>& scratch_q) {
  const int n = static_cast<int>(sigma.size());
  auto& q = scratch_q;
  for (int slot = 1; slot <= n; ++slot) q[sigma[slot - 1] - 1] = static_cast<int8_t>(slot);

  int morse = 0;
  for (int m = 1; m < n; ++m) {
    const int d = q[m] - q[m - 1];
    morse += (m % 2 == 1) ? (d > 0 ? 1 : -1) : (d > 0 ? -1 : 1);
    if (morse < 0) return false;
  }
  if (morse != 0) return false;

  // nesting: arcs (m, m+1), upper for odd m; pairwise nested or disjoint
  for (int m = 1; m < n; ++m) {
    const int al = std::min(q[m - 1], q[m]), ar = std::max(q[m - 1], q[m]);
    for (int k = m + 2; k < n; k += 2) {
      const int bl = std::min(q[k - 1], q[k]), br = std::max(q[k - 1], q[k]);
      const bool disjoint = ar < bl || br < al;
      const bool nested = (al < bl && br < ar) || (bl < al && ar < br);
      if (!disjoint && !nested) return false;
    }
  }
  return true;
}

}  // namespace

ScanStats scan_sturm_pairs(const BarycenterGraph& g, std::pair<int, int> poles,
                           const PathPair* reference, int thread_count) {
  std::vector<std::vector<int8_t>> paths;
  enumerate_hamiltonian_paths(g, poles.first, poles.second,
                              [&](const std::vector<int>& cells) {
                                std::vector<int8_t> p(cells.size());
                                for (size_t i = 0; i < cells.size(); ++i)
                                  p[i] = static_cast<int8_t>(cells[i]);
                                paths.push_back(std::move(p));
                              });

  ScanStats stats;
  stats.path_count = paths.size();
  stats.pairs_tested = static_cast<std::uint64_t>(paths.size()) * paths.size();

  const int n = paths.empty() ? 0 : static_cast<int>(paths.front().size());
  int ref0 = -1, ref1 = -1;
  if (reference) {
    auto find = [&](const std::vector<int>& cells) {
      std::vector<int8_t> key(cells.begin(), cells.end());
      const auto it = std::find(paths.begin(), paths.end(), key);
      return it == paths.end() ? -1 : static_cast<int>(it - paths.begin());
    };
    ref0 = find(reference->h0);
    ref1 = find(reference->h1);
  }

  const int workers = env_thread_count(thread_count);
  std::atomic<size_t> next{0};
  std::atomic<std::uint64_t> hits{0};
  std::atomic<bool> ref_hit{false};

  auto work = [&] {
    std::vector<int8_t> pos0(28), sigma(n), q(n);
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= paths.size()) return;
      for (int k = 0; k < n; ++k) pos0[paths[i][k]] = static_cast<int8_t>(k + 1);
      std::uint64_t local = 0;
      for (size_t j = 0; j < paths.size(); ++j) {
        for (int k = 0; k < n; ++k) sigma[k] = pos0[paths[j][k]];
        if (sturm_quick(sigma, q)) {
          ++local;
          if (static_cast<int>(i) == ref0 && static_cast<int>(j) == ref1) ref_hit = true;
        }
      }
      hits += local;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < std::max(1, workers); ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  stats.sturm_pairs = hits.load();
  stats.reference_hit = ref_hit.load();
  return stats;
}

}  // namespace sturmkit
