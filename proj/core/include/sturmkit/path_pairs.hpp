#pragma once

#include <vector>

#include "sturmkit/cell_complex.hpp"
#include "sturmkit/meander.hpp"
#include "sturmkit/permutation.hpp"
#include "sturmkit/report.hpp"

namespace sturmkit {

enum class PairStyle { zs, sz, szs };

/// Two Hamiltonian pole-to-pole labelings of the cells. h0[k-1] / h1[k-1] is
/// the cell in position k.
struct PathPair {
  std::vector<int> h0, h1;
  PairStyle style = PairStyle::zs;
};

/// The ZS-pair of a bipolar planar complex: both paths follow the 1-skeleton
/// orientation and traverse each face between its corner saddles, h0 through
/// the 0-corners and h1 through the 1-corners. Found by backtracking over the
/// local transition rules; throws unless each path is unique. Face-free
/// bipolar chains (1-dimensional complexes) are accepted.
PathPair zs_pair(const RegularCellComplex& disk);
/// Corner roles of h0 and h1 reversed.
PathPair sz_pair(const RegularCellComplex& disk);

/// The SZS-pair of a 3-cell template: restrictions to the closed hemispheres
/// form an SZ-pair (West) and a ZS-pair (East), and each h_iota runs
/// w_minus^iota, O, w_plus^iota in a row. Built by splicing the hemisphere
/// pairs; an independent constrained search over the whole template must
/// reproduce the splice (and be unique), otherwise this throws.
PathPair szs_pair(const DecoratedComplex& t);

/// sigma = h0^{-1} o h1. For szs pairs the Thm 5.2 postconditions are
/// enforced: a failure of the Morse, overlap, arc, extreme-source or meander
/// sub-checks is a hard error. For zs/sz pairs sigma must come out Sturm.
Permutation sigma_from_pair(const PathPair& p);

/// The per-lemma sub-reports behind sigma_from_pair's postcondition.
Report thm52_report(const Permutation& sigma);

enum class ScoopSide { east, west };

/// Removes O together with one open hemisphere from a 3-meander template and
/// reconnects the curve with a single upper arc; the result is the Sturm
/// meander of the remaining closed hemisphere, with the S-polar (east scoop)
/// or N-polar (west scoop) h0-serpent full.
Meander scoop(const Meander& m, ScoopSide side);

}  // namespace sturmkit
