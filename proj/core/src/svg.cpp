#include "sturmkit/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

namespace sturmkit {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Pt {
  double x = 0, y = 0;
};

std::string svg_header(int w, int h) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
       std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
       "\">\n";
  s += "<defs><marker id=\"arrow\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\" markerWidth=\"5\" "
       "markerHeight=\"5\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 8 4 L 0 8 z\" "
       "fill=\"#444\"/></marker></defs>\n";
  return s;
}

std::string circle(const Pt& p, double r, const char* fill) {
  return "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(r) + "\" fill=\"" +
         fill + "\"/>\n";
}

std::string text(const Pt& p, const std::string& s, const char* anchor = "middle",
                 const char* fill = "#000") {
  return "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"" +
         anchor + "\" fill=\"" + fill + "\">" + s + "</text>\n";
}

std::string line(const Pt& a, const Pt& b, const char* stroke, double width, bool arrow) {
  std::string s = "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
                  "\" y2=\"" + fmt(b.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                  fmt(width) + "\"";
  if (arrow) s += " marker-end=\"url(#arrow)\"";
  s += "/>\n";
  return s;
}

}  // namespace

std::string render_meander_svg(const Meander& m, const RenderSpec& spec) {
  const int n = m.n();
  const double margin = 40;
  const double axis_y = spec.height / 2.0;
  const double step = n > 1 ? (spec.width - 2 * margin) / (n - 1) : 0;
  auto slot_x = [&](int slot) { return margin + (slot - 1) * step; };

  std::string s = svg_header(spec.width, spec.height);
  s += line({margin - 20, axis_y}, {spec.width - margin + 20, axis_y}, "#888", 1.0, false);

  auto arc = [&](const Meander::Arc& a) {
    const double x1 = slot_x(m.axis_position(a.a));
    const double x2 = slot_x(m.axis_position(a.b));
    const double r = std::fabs(x2 - x1) / 2.0;
    // upper arcs bow away from the axis on the -y side
    const int sweep = a.upper == (x2 > x1) ? 1 : 0;
    s += "<path d=\"M " + fmt(x1) + " " + fmt(axis_y) + " A " + fmt(r) + " " + fmt(r) + " 0 0 " +
         std::to_string(sweep) + " " + fmt(x2) + " " + fmt(axis_y) +
         "\" fill=\"none\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
  };
  for (const auto& a : m.upper_arcs()) arc(a);
  for (const auto& a : m.lower_arcs()) arc(a);

  // entry and exit stubs of the curve (from Southwest, to Northeast)
  s += line({slot_x(1) - 22, axis_y + 22}, {slot_x(1), axis_y}, "#c33", 1.5, false);
  s += line({slot_x(m.axis_position(n)), axis_y}, {slot_x(m.axis_position(n)) + 22, axis_y - 22},
            "#c33", 1.5, false);

  for (int slot = 1; slot <= n; ++slot) {
    const int v = m.crossing_at_slot(slot);
    const Pt p{slot_x(slot), axis_y};
    s += circle(p, 3, "#000");
    if (spec.labels) {
      s += text({p.x, axis_y + 18}, std::to_string(v));
      s += text({p.x, axis_y + 32}, std::to_string(m.morse()[v - 1]), "middle", "#777");
    }
  }
  s += "</svg>\n";
  return s;
}

namespace {

// Boundary cells of one hemisphere disk as a cyclic cell walk starting at the
// north pole: N, <side1 cells>, S, <side2 cells reversed>.
std::vector<int> disk_boundary_walk(const RegularCellComplex& c, int north, int south,
                                    const std::vector<int>& side1, const std::vector<int>& side2) {
  std::vector<int> walk{north};
  auto push_path = [&](const std::vector<int>& edges, bool reversed) {
    std::vector<int> cells;
    for (size_t i = 0; i < edges.size(); ++i) {
      cells.push_back(edges[i]);
      if (i + 1 < edges.size()) cells.push_back(c.head(edges[i]));
    }
    if (reversed) std::reverse(cells.begin(), cells.end());
    for (int id : cells) walk.push_back(id);
  };
  push_path(side1, false);
  walk.push_back(south);
  push_path(side2, true);
  return walk;
}

std::map<int, Pt> layout_disk(const RegularCellComplex& c, const std::vector<int>& boundary_walk,
                              const std::set<int>& members, Pt center, double radius) {
  std::map<int, Pt> pos;
  const size_t b = boundary_walk.size();
  for (size_t i = 0; i < b; ++i) {
    const double ang = -M_PI / 2 + 2 * M_PI * static_cast<double>(i) / static_cast<double>(b);
    pos[boundary_walk[i]] = {center.x + radius * std::cos(ang), center.y + radius * std::sin(ang)};
  }
  // interior vertices by repeated neighbor averaging
  std::vector<int> interior;
  for (int v : c.cells_of_dim(0))
    if (members.count(v) && !pos.count(v)) {
      pos[v] = center;
      interior.push_back(v);
    }
  for (int it = 0; it < 300; ++it) {
    for (int v : interior) {
      double sx = 0, sy = 0;
      int k = 0;
      for (int e : c.edges_at_vertex(v)) {
        if (!members.count(e)) continue;
        const int other = c.tail(e) == v ? c.head(e) : c.tail(e);
        if (!pos.count(other)) continue;
        sx += pos[other].x;
        sy += pos[other].y;
        ++k;
      }
      if (k) pos[v] = {sx / k, sy / k};
    }
  }
  for (int e : c.cells_of_dim(1))
    if (members.count(e) && !pos.count(e))
      pos[e] = {(pos[c.tail(e)].x + pos[c.head(e)].x) / 2,
                (pos[c.tail(e)].y + pos[c.head(e)].y) / 2};
  for (int f : c.cells_of_dim(2)) {
    if (!members.count(f)) continue;
    double sx = 0, sy = 0;
    int k = 0;
    for (int v : c.circuit_vertices(f)) {
      sx += pos[v].x;
      sy += pos[v].y;
      ++k;
    }
    pos[f] = {sx / k, sy / k};
  }
  return pos;
}

std::string draw_disk(const RegularCellComplex& c, const std::set<int>& members,
                      const std::map<int, Pt>& pos, const std::set<int>& meridian_edges,
                      bool labels) {
  std::string s;
  for (int e : c.cells_of_dim(1)) {
    if (!members.count(e)) continue;
    const bool meridian = meridian_edges.count(e) > 0;
    s += line(pos.at(c.tail(e)), pos.at(c.head(e)), meridian ? "#2a2" : "#444",
              meridian ? 2.5 : 1.2, true);
  }
  for (int v : c.cells_of_dim(0))
    if (members.count(v)) s += circle(pos.at(v), 3.5, "#000");
  for (int f : c.cells_of_dim(2))
    if (members.count(f))
      s += "<circle cx=\"" + fmt(pos.at(f).x) + "\" cy=\"" + fmt(pos.at(f).y) +
           "\" r=\"3.5\" fill=\"#fff\" stroke=\"#000\"/>\n";
  if (labels)
    for (int id : c.cells())
      if (members.count(id) && pos.count(id))
        s += text({pos.at(id).x + 6, pos.at(id).y - 5}, std::to_string(id), "start", "#00a");
  return s;
}

}  // namespace

std::string render_complex_svg(const RegularCellComplex& c,
                               const std::optional<TemplateDecoration>& d,
                               const RenderSpec& spec) {
  std::string s = svg_header(spec.width, spec.height);
  const double R = std::min(spec.width / 4.5, spec.height / 2.5);

  if (d && !d->meridian_ew.empty()) {
    std::set<int> meridian_edges(d->meridian_ew.begin(), d->meridian_ew.end());
    meridian_edges.insert(d->meridian_we.begin(), d->meridian_we.end());

    const std::vector<int> walk =
        disk_boundary_walk(c, d->north, d->south, d->meridian_ew, d->meridian_we);
    std::set<int> circle_cells(walk.begin(), walk.end());

    auto hemisphere_members = [&](const std::vector<int>& open) {
      std::set<int> members = circle_cells;
      members.insert(open.begin(), open.end());
      return members;
    };
    const std::set<int> west = hemisphere_members(d->west);
    const std::set<int> east = hemisphere_members(d->east);

    const Pt cw{spec.width * 0.28, spec.height * 0.5};
    const Pt ce{spec.width * 0.74, spec.height * 0.5};
    const auto pos_w = layout_disk(c, walk, west, cw, R);
    const auto pos_e = layout_disk(c, walk, east, ce, R);
    s += draw_disk(c, west, pos_w, meridian_edges, spec.labels);
    s += draw_disk(c, east, pos_e, meridian_edges, spec.labels);
    if (spec.labels) {
      s += text({cw.x, cw.y - R - 14}, "W");
      s += text({ce.x, ce.y - R - 14}, "E");
      if (c.ball())
        s += text({spec.width * 0.51, spec.height * 0.5}, "O=" + std::to_string(*c.ball()));
    }
  } else {
    // single planar drawing: boundary circle (if any) around averaged interior
    std::set<int> members;
    for (int id : c.cells())
      if (c.dim(id) <= 2) members.insert(id);
    std::vector<int> walk;
    const auto bedges = c.boundary_edges();
    if (!bedges.empty()) {
      std::map<int, int> next;
      for (int e : bedges) next[c.tail(e)] = e;
      std::map<int, int> prev;
      for (int e : bedges) prev[c.head(e)] = e;
      // start anywhere; walk the cycle by alternating vertex/edge
      int v0 = c.tail(bedges.front());
      int v = v0;
      std::set<int> used;
      do {
        walk.push_back(v);
        int e = 0;
        if (next.count(v) && !used.count(next[v]))
          e = next[v];
        else if (prev.count(v) && !used.count(prev[v]))
          e = prev[v];
        if (!e) break;
        used.insert(e);
        walk.push_back(e);
        v = c.tail(e) == v ? c.head(e) : c.tail(e);
      } while (v != v0);
    } else {
      walk = c.cells_of_dim(0);
    }
    const Pt center{spec.width * 0.5, spec.height * 0.5};
    const auto pos = layout_disk(c, walk, members, center, R * 1.4);
    s += draw_disk(c, members, pos, {}, spec.labels);
  }
  s += "</svg>\n";
  return s;
}

}  // namespace sturmkit
