#include "sturmkit/path_pairs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sturmkit {

namespace {

// Backtracking over the local transition rules. Candidate successors:
//   vertex u -> unvisited out-edges of u;
//   edge e   -> head(e), and any face entered at its w_minus corner;
//   face f   -> the w_plus corner edge, and (szs) the unvisited ball;
//   ball     -> any unvisited face.
// A path must start at the orientation source, end at the sink, and visit
// every cell. The searcher records up to two solutions; callers treat more
// than one as a contract violation.
class PairSearch {
 public:
  PairSearch(const RegularCellComplex& c, int north, int south) : c_(c), north_(north), south_(south) {
    cells_ = c.cells();
    for (size_t i = 0; i < cells_.size(); ++i) index_[cells_[i]] = static_cast<int>(i);
  }

  // entry/exit corner per face for one path of the pair.
  void set_corners(std::map<int, int> entry, std::map<int, int> exit) {
    entry_ = std::move(entry);
    exit_ = std::move(exit);
    // invert entry: edge -> faces it opens
    opens_.clear();
    for (const auto& [f, e] : entry_) opens_[e].push_back(f);
  }

  // the one face allowed to dive into the ball, and the one it re-emerges at
  void set_tunnel(int before_o, int after_o) {
    tunnel_before_ = before_o;
    tunnel_after_ = after_o;
  }

  std::vector<std::vector<int>> run() {
    solutions_.clear();
    visited_.assign(cells_.size(), false);
    path_.clear();
    step(north_);
    return solutions_;
  }

 private:
  void step(int id) {
    visited_[index_[id]] = true;
    path_.push_back(id);
    if (id == south_) {
      if (path_.size() == cells_.size() && solutions_.size() < 2) solutions_.push_back(path_);
    } else {
      const int d = c_.dim(id);
      if (d == 0) {
        for (int e : c_.edges_at_vertex(id))
          if (c_.tail(e) == id) try_step(e);
      } else if (d == 1) {
        try_step(c_.head(id));
        auto it = opens_.find(id);
        if (it != opens_.end())
          for (int f : it->second) try_step(f);
      } else if (d == 2) {
        auto it = exit_.find(id);
        if (it != exit_.end()) try_step(it->second);
        if (c_.ball() && id == tunnel_before_) try_step(*c_.ball());
      } else {
        if (tunnel_after_) try_step(tunnel_after_);
      }
    }
    path_.pop_back();
    visited_[index_[id]] = false;
  }

  void try_step(int id) {
    if (solutions_.size() >= 2) return;
    if (!visited_[index_[id]]) step(id);
  }

  const RegularCellComplex& c_;
  int north_, south_;
  int tunnel_before_ = 0, tunnel_after_ = 0;
  std::vector<int> cells_;
  std::map<int, int> index_;
  std::map<int, int> entry_, exit_;
  std::map<int, std::vector<int>> opens_;
  std::vector<bool> visited_;
  std::vector<int> path_;
  std::vector<std::vector<int>> solutions_;
};

// role 0: the path uses (w_minus_0, w_plus_0); role 1 the other pair.
void corner_maps(const RegularCellComplex& c, const std::vector<int>& faces, int role,
                 std::map<int, int>& entry, std::map<int, int>& exit) {
  for (int f : faces) {
    const FaceCorners fc = face_corners(c, f);
    entry[f] = role == 0 ? fc.w_minus_0 : fc.w_minus_1;
    exit[f] = role == 0 ? fc.w_plus_0 : fc.w_plus_1;
  }
}

std::vector<int> unique_path(PairSearch& search, const char* what) {
  const auto sols = search.run();
  if (sols.size() != 1)
    throw std::invalid_argument(std::string(what) + ": expected a unique Hamiltonian path, found " +
                                (sols.empty() ? "none" : "several"));
  return sols.front();
}

PathPair planar_pair(const RegularCellComplex& disk, bool zs) {
  if (disk.ball()) throw std::invalid_argument("zs/sz pair: complex has a 3-cell");
  const auto poles = bipolar_poles(disk);
  if (!poles || !validate_bipolar(disk).ok())
    throw std::invalid_argument("zs/sz pair: complex is not bipolar");

  const auto faces = disk.cells_of_dim(2);
  PathPair p;
  p.style = zs ? PairStyle::zs : PairStyle::sz;
  PairSearch search(disk, poles->first, poles->second);
  for (int iota : {0, 1}) {
    const int role = (iota == 0) == zs ? 0 : 1;
    std::map<int, int> entry, exit;
    corner_maps(disk, faces, role, entry, exit);
    search.set_corners(std::move(entry), std::move(exit));
    (iota == 0 ? p.h0 : p.h1) = unique_path(search, zs ? "zs_pair" : "sz_pair");
  }
  return p;
}

std::vector<int> meridian_cells(const RegularCellComplex& c, const std::vector<int>& edges) {
  std::vector<int> out;
  for (size_t i = 0; i < edges.size(); ++i) {
    out.push_back(edges[i]);
    if (i + 1 < edges.size()) out.push_back(c.head(edges[i]));
  }
  return out;
}

std::vector<int> restrict_to(const std::vector<int>& path, const std::set<int>& keep) {
  std::vector<int> out;
  for (int id : path)
    if (keep.count(id)) out.push_back(id);
  return out;
}

bool is_prefix(const std::vector<int>& part, const std::vector<int>& whole) {
  return part.size() <= whole.size() && std::equal(part.begin(), part.end(), whole.begin());
}

bool is_suffix(const std::vector<int>& part, const std::vector<int>& whole) {
  return part.size() <= whole.size() &&
         std::equal(part.rbegin(), part.rend(), whole.rbegin());
}

}  // namespace

PathPair zs_pair(const RegularCellComplex& disk) { return planar_pair(disk, true); }
PathPair sz_pair(const RegularCellComplex& disk) { return planar_pair(disk, false); }

PathPair szs_pair(const DecoratedComplex& t) {
  const Report check = validate_three_cell_template(t.complex, t.decoration);
  if (!check.ok())
    throw std::invalid_argument("szs_pair: input is not a 3-cell template:\n" + check.to_string());

  const RegularCellComplex& c = t.complex;
  const TemplateDecoration& d = t.decoration;
  const int o = *c.ball();

  const RegularCellComplex west_disk = closed_hemisphere(t, Hemisphere::west);
  const RegularCellComplex east_disk = closed_hemisphere(t, Hemisphere::east);
  const PathPair wp = sz_pair(west_disk);
  const PathPair ep = zs_pair(east_disk);

  const auto ew = meridian_cells(c, d.meridian_ew);
  const auto we = meridian_cells(c, d.meridian_we);
  std::set<int> west_set(d.west.begin(), d.west.end());
  std::set<int> east_set(d.east.begin(), d.east.end());

  auto splice = [&](const std::vector<int>& w_path, const std::vector<int>& e_path,
                    const std::vector<int>& first_meridian, const std::vector<int>& last_meridian) {
    std::set<int> head_set = west_set;
    head_set.insert(d.north);
    for (int id : first_meridian) head_set.insert(id);
    std::set<int> tail_set = east_set;
    tail_set.insert(d.south);
    for (int id : last_meridian) tail_set.insert(id);

    const std::vector<int> head = restrict_to(w_path, head_set);
    const std::vector<int> tail = restrict_to(e_path, tail_set);
    if (!is_prefix(head, w_path))
      throw std::logic_error("szs_pair: hemisphere order fails the prefix property");
    if (!is_suffix(tail, e_path))
      throw std::logic_error("szs_pair: hemisphere order fails the suffix property");

    std::vector<int> out = head;
    out.push_back(o);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  };

  PathPair p;
  p.style = PairStyle::szs;
  p.h0 = splice(wp.h0, ep.h0, ew, we);  // N u EW u W <0 O <0 E u WE u S
  p.h1 = splice(wp.h1, ep.h1, we, ew);  // N u WE u W <1 O <1 E u EW u S

  // Cross-check: a direct constrained search over the whole template must
  // reproduce the splice, uniquely. The tunneling faces w_minus^iota and
  // w_plus^iota are the polar-meridian faces: the path h_iota dives into O
  // out of the Western face at the head of one meridian and re-emerges at the
  // Eastern face at the tail of the other.
  auto polar_face = [&](int meridian_edge, bool in_west) {
    int hit = 0;
    for (int f : c.faces_with_edge(meridian_edge))
      if (in_west == (west_set.count(f) > 0)) hit = f;
    return hit;
  };
  const auto faces = c.cells_of_dim(2);
  PairSearch search(c, d.north, d.south);
  for (int iota : {0, 1}) {
    std::map<int, int> entry, exit;
    for (int f : faces) {
      const FaceCorners fc = face_corners(c, f);
      const bool in_west = west_set.count(f) > 0;
      const int role = in_west ? 1 - iota : iota;  // SZ in W, ZS in E
      entry[f] = role == 0 ? fc.w_minus_0 : fc.w_minus_1;
      exit[f] = role == 0 ? fc.w_plus_0 : fc.w_plus_1;
    }
    search.set_corners(std::move(entry), std::move(exit));
    if (iota == 0)
      search.set_tunnel(polar_face(d.meridian_we.front(), true),
                        polar_face(d.meridian_ew.back(), false));
    else
      search.set_tunnel(polar_face(d.meridian_ew.front(), true),
                        polar_face(d.meridian_we.back(), false));
    const std::vector<int> direct = unique_path(search, "szs_pair");
    if (direct != (iota == 0 ? p.h0 : p.h1))
      throw std::logic_error("szs_pair: direct search disagrees with the hemisphere splice");
  }
  return p;
}

Permutation sigma_from_pair(const PathPair& p) {
  const int n = static_cast<int>(p.h0.size());
  if (p.h1.size() != p.h0.size() || n == 0)
    throw std::invalid_argument("sigma_from_pair: mismatched path lengths");
  std::map<int, int> pos0;
  for (int k = 1; k <= n; ++k)
    if (!pos0.emplace(p.h0[k - 1], k).second)
      throw std::invalid_argument("sigma_from_pair: h0 revisits a cell");
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) {
    auto it = pos0.find(p.h1[k - 1]);
    if (it == pos0.end())
      throw std::invalid_argument("sigma_from_pair: h1 visits a cell unknown to h0");
    img[k - 1] = it->second;
  }
  Permutation sigma{std::move(img)};

  if (p.style == PairStyle::szs) {
    const Report r = thm52_report(sigma);
    if (!r.ok())
      throw std::logic_error("sigma_from_pair: Thm 5.2 postcondition failed:\n" + r.to_string());
  } else {
    if (!Meander::build(sigma).is_sturm())
      throw std::logic_error("sigma_from_pair: pair permutation is not Sturm");
  }
  return sigma;
}

Report thm52_report(const Permutation& sigma) {
  Report r;
  const Meander m = Meander::build(sigma);
  r.add("Thm 5.2: dissipative", m.is_dissipative());
  r.add("Lemma 5.7: meander property", m.is_meander());

  int n3 = 0, maxi = 0, mini = 0;
  for (int v = 1; v <= m.n(); ++v) {
    const int i = m.morse()[v - 1];
    if (i == 3)
      ++n3;
    else
      maxi = std::max(maxi, i);
    mini = std::min(mini, i);
  }
  r.add("Lemma 5.3: Morse with a single i=3 crossing", m.morse_consistent() && mini >= 0 &&
                                                           n3 == 1 && maxi <= 2);
  if (!m.is_sturm() || n3 != 1 || maxi > 2) {
    r.add("Lemma 5.4: serpent overlaps", false, "skipped");
    r.add("Lemma 5.5: polar arcs overarch O", false, "skipped");
    r.add("Lemma 5.6: extreme sources", false, "skipped");
    return r;
  }
  const Report t = m.three_meander_template_report();
  r.add("Lemma 5.4: serpent overlaps", t.passed("Def 1.3(ii)"));
  r.add("Lemma 5.5: polar arcs overarch O", t.passed("Def 1.3(iii)"));
  r.add("Lemma 5.6: extreme sources", t.passed("Def 1.3(iv)"));
  return r;
}

Meander scoop(const Meander& m, ScoopSide side) {
  if (!m.is_three_meander_template())
    throw std::invalid_argument("scoop: input is not a 3-meander template");

  const int o = m.o_crossing();
  const auto [wm0, wp0] = m.neighbors(0);
  const auto [wm1, wp1] = m.neighbors(1);

  auto pos0 = [&](int v) { return v; };
  auto pos1 = [&](int v) { return m.axis_position(v); };

  // Hemisphere interior = the crossings inside both order intervals spanned
  // by the O-neighbor sources on the scooped side.
  int a0, b0, a1, b1;
  if (side == ScoopSide::east) {
    a0 = pos0(wp0);
    b0 = pos0(wp1);
    a1 = pos1(wp1);
    b1 = pos1(wp0);
  } else {
    a0 = pos0(wm1);
    b0 = pos0(wm0);
    a1 = pos1(wm0);
    b1 = pos1(wm1);
  }
  if (a0 > b0) std::swap(a0, b0);
  if (a1 > b1) std::swap(a1, b1);

  std::set<int> removed{o};
  for (int v = 1; v <= m.n(); ++v)
    if (a0 <= pos0(v) && pos0(v) <= b0 && a1 <= pos1(v) && pos1(v) <= b1) removed.insert(v);

  if (removed.size() % 2 != 0)
    throw std::logic_error("scoop: removal block has odd size");

  // Induced permutation on the survivors. By order restriction this is
  // exactly the Sturm permutation of the remaining closed hemisphere.
  std::vector<int> survivors;
  for (int v = 1; v <= m.n(); ++v)
    if (!removed.count(v)) survivors.push_back(v);
  std::map<int, int> new_id;
  for (size_t i = 0; i < survivors.size(); ++i) new_id[survivors[i]] = static_cast<int>(i) + 1;

  std::vector<int> img;
  for (int slot = 1; slot <= m.n(); ++slot) {
    const int v = m.crossing_at_slot(slot);
    if (!removed.count(v)) img.push_back(new_id[v]);
  }
  Meander out = Meander::build(Permutation(std::move(img)));
  if (!out.is_sturm()) throw std::logic_error("scoop: result is not Sturm");
  const Serpent s =
      out.polar_serpent(0, side == ScoopSide::east ? Pole::south : Pole::north);
  if (!out.is_full(s)) throw std::logic_error("scoop: surviving polar serpent is not full");
  return out;
}

}  // namespace sturmkit
