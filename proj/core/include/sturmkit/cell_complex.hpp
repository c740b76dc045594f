#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sturmkit/report.hpp"
#include "sturmkit/zero_numbers.hpp"

namespace sturmkit {

/// Regular cell complex of dimension <= 3. Cells carry integer ids; the
/// order of an edge's endpoints IS its bipolar orientation, and a face's
/// circuit (alternating vertex, edge, vertex, edge, ... ids, cyclic) carries
/// the stored embedding orientation. At most one 3-cell.
///
/// Construction checks only referential structure; semantic regularity
/// (simple circuits, sphere conditions) is the job of validate_regular.
class RegularCellComplex {
 public:
  void add_vertex(int id);
  /// Coincident endpoints are representable (validate_regular flags them).
  void add_edge(int id, int tail, int head);
  /// circuit = [v, e, v, e, ...], even length >= 4, referencing known ids.
  void add_face(int id, std::vector<int> circuit);
  void set_ball(int id);

  bool has_cell(int id) const { return dim_.count(id) != 0; }
  int dim(int id) const;
  int cell_count() const { return static_cast<int>(dim_.size()); }
  std::vector<int> cells() const;             // ascending ids
  std::vector<int> cells_of_dim(int d) const; // ascending ids

  int tail(int edge) const;
  int head(int edge) const;
  const std::vector<int>& circuit(int face) const;
  std::optional<int> ball() const { return ball_; }

  std::vector<int> circuit_vertices(int face) const;
  std::vector<int> circuit_edges(int face) const;
  std::vector<int> faces_with_edge(int edge) const;
  std::vector<int> edges_at_vertex(int vertex) const;

  /// Cells of the topological boundary of the closure of one cell (all
  /// dimensions), ascending. The closure of the ball is everything.
  std::vector<int> closure_boundary(int id) const;

  /// Edges lying in at most one face circuit (the planar boundary).
  std::vector<int> boundary_edges() const;

  RegularCellComplex with_reversed_edges() const;
  RegularCellComplex with_flipped_circuits() const;
  RegularCellComplex relabeled(const std::map<int, int>& map) const;

  friend bool operator==(const RegularCellComplex& a, const RegularCellComplex& b);

 private:
  void require_new(int id) const;
  std::map<int, int> dim_;
  std::map<int, std::pair<int, int>> edges_;
  std::map<int, std::vector<int>> faces_;
  std::optional<int> ball_;
};

/// Poles, directed meridian edge paths, and open-hemisphere membership.
/// Membership is stored, not recomputed; validators check consistency.
struct TemplateDecoration {
  int north = 0, south = 0;
  std::vector<int> meridian_ew, meridian_we;  // edge ids, path order N -> S
  std::vector<int> west, east;                // sorted open-hemisphere cell ids

  friend bool operator==(const TemplateDecoration&, const TemplateDecoration&) = default;
};

struct DecoratedComplex {
  RegularCellComplex complex;
  TemplateDecoration decoration;
};

/// The four corner saddles of a face under the bipolar orientation. With the
/// circuit split at the extrema into the circuit-order path P_A (min to max)
/// and its complement P_B (also read min to max), the corners are
///   w_minus_0 = last edge of P_B,  w_plus_0 = first edge of P_A,
///   w_minus_1 = last edge of P_A,  w_plus_1 = first edge of P_B.
/// The minus corners sit at the maximum, the plus corners at the minimum;
/// h0 enters a face at a minus corner and leaves O-ward or at a plus corner.
/// Reversing the stored circuit swaps the 0/1 roles.
struct FaceCorners {
  int face = 0;
  int min_vertex = 0, max_vertex = 0;
  int w_minus_0 = 0, w_plus_0 = 0, w_minus_1 = 0, w_plus_1 = 0;
};

/// Throws std::invalid_argument if the circuit has more than one local
/// minimum or maximum under the edge orientations.
FaceCorners face_corners(const RegularCellComplex& c, int face);

Report validate_regular(const RegularCellComplex& c);

/// Acyclicity, unique orientation source and sink, distinct, on the boundary.
Report validate_bipolar(const RegularCellComplex& c);
/// (north, south) when validate_bipolar passes.
std::optional<std::pair<int, int>> bipolar_poles(const RegularCellComplex& c);

/// Def with four itemized conditions: single 3-cell closure; bipolarity with
/// two disjoint directed meridians; hemisphere edge orientation toward (W) /
/// away from (E) the meridians; and the meridian face overlaps.
/// Throws std::invalid_argument when the decoration references unknown ids or
/// the meridians are not edge paths.
Report validate_three_cell_template(const RegularCellComplex& c, const TemplateDecoration& d);

Report western_disk_report(const RegularCellComplex& c, int north, int south);
Report eastern_disk_report(const RegularCellComplex& c, int north, int south);
bool validate_western_disk(const RegularCellComplex& c, int north, int south);
bool validate_eastern_disk(const RegularCellComplex& c, int north, int south);

// ---- builders ----

/// Single-face planar disk: one source, m+n sinks and m+n saddles on the
/// boundary circle (the two pole-to-pole sides carry 2m-1 and 2n-1 cells).
RegularCellComplex disk(int m, int n);

/// m-dimensional ball with the minimal cell count, m <= 3: poles, one-edge
/// meridians and one-face hemispheres as far as the dimension provides them.
/// Decoration fields beyond the poles are filled for m = 3 only.
DecoratedComplex chafee_infante_ball(int m);

/// The solid octahedron on the reference labels (vertices 1..6, edges 7..18,
/// faces 19..26, ball 27) with the bipolar orientation derived from the pole
/// and meridian choice. The hemisphere with more faces becomes West. Requires
/// the data to determine the orientation uniquely.
DecoratedComplex octahedron(std::pair<int, int> poles, std::vector<int> we_edges,
                            std::vector<int> ew_edges);

/// The undecorated, unoriented reference octahedron (edges in a fixed default
/// orientation); input to the template enumeration.
RegularCellComplex octahedron_base();

/// Welds two bipolar single-boundary disks sharing their boundary circle
/// cells (identical ids, orientations and poles) into a 3-cell template with
/// ball id o_id. East circuits are flipped to keep the stored orientations
/// sphere-coherent. The West disk's circuit-order boundary side becomes EW.
DecoratedComplex weld(const RegularCellComplex& west, const RegularCellComplex& east, int o_id);

/// Closed hemisphere as a standalone complex: poles, both meridians, and the
/// chosen open hemisphere, circuits as stored.
enum class Hemisphere { west, east };
RegularCellComplex closed_hemisphere(const DecoratedComplex& t, Hemisphere h);

/// u-flip: all edges reversed, poles swapped, meridians swapped and reversed,
/// hemispheres swapped. Maps sigma to kappa sigma kappa.
DecoratedComplex u_flip(const DecoratedComplex& t);
/// x-flip: all circuits flipped and the meridian labels swapped. Maps sigma
/// to its inverse.
DecoratedComplex x_flip(const DecoratedComplex& t);

// ---- reconstruction from signed hemisphere data ----

/// Rebuilds the 3-cell template from the signed hemisphere template of a
/// Sturm permutation with a single Morse-3 crossing: vertices are the i=0
/// crossings, edges the i=1 crossings oriented from their minus to their plus
/// endpoint, faces the i=2 crossings with circuits assembled by chaining the
/// signed halves, ball the i=3 crossing, and the decoration read off the
/// hemisphere sets of O. The result is validated as a 3-cell template before
/// it is returned; chain or validation failure is a hard error.
DecoratedComplex complex_from_signed_template(const SignedHemisphereTemplate& t);

enum class PlanarStyle { zs, sz };
struct PlanarComplex {
  RegularCellComplex complex;
  int north = 0, south = 0;
};
/// Planar analogue for Morse <= 2 data. The style picks the face circuit
/// chirality: sz matches a Western hemisphere, zs an Eastern one.
PlanarComplex planar_complex_from_template(const SignedHemisphereTemplate& t, PlanarStyle style);

/// Closure-incidence heteroclinic oracle: cell w lies in the boundary of the
/// closure of cell v. Equivalent to connects(v, w) on Sturm data.
bool incidence_connects(const RegularCellComplex& c, int v, int w);

}  // namespace sturmkit
