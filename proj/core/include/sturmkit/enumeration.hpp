#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sturmkit/cell_complex.hpp"
#include "sturmkit/path_pairs.hpp"

namespace sturmkit {

/// Barycenter adjacency of a cell complex: nodes are cells, undirected edges
/// join each cell to its codimension-1 boundary cells.
struct BarycenterGraph {
  std::vector<int> ids;                 // node -> cell id, ascending
  std::vector<std::vector<int>> adj;    // node -> neighbor nodes, ascending
  int node_of(int cell_id) const;
};

BarycenterGraph barycenter_graph(const RegularCellComplex& c);

/// Exhaustive backtracking count of Hamiltonian start-to-end paths.
/// Workers split the search over second-position branches; the count is
/// schedule-independent. thread_count 0 reads STURMKIT_THREADS (default 1).
std::uint64_t count_hamiltonian_paths(const BarycenterGraph& g, int start_cell, int end_cell,
                                      int thread_count = 0);

/// Streams every Hamiltonian path (as cell-id sequences) in lexicographic
/// neighbor order.
void enumerate_hamiltonian_paths(const BarycenterGraph& g, int start_cell, int end_cell,
                                 const std::function<void(const std::vector<int>&)>& sink);

enum class PoleChoice { adjacent, antipodal };

/// All decorations (poles of the chosen type, bipolar orientation, directed
/// meridian pair, hemisphere assignment) of the solid octahedron that pass
/// the 3-cell template validator. West is the hemisphere with at least as
/// many faces as East.
std::vector<DecoratedComplex> enumerate_octahedron_templates(PoleChoice choice);

/// Orbit key under the trivial equivalences combined with the octahedral
/// automorphism group; equal keys identify equivalent decorated templates.
std::string decoration_orbit_key(const DecoratedComplex& t);

/// Buckets by decoration_orbit_key; returns one representative per orbit
/// together with the orbit size, deterministically ordered by key.
std::vector<std::pair<DecoratedComplex, int>> bucket_by_orbit(
    const std::vector<DecoratedComplex>& templates);

struct ScanStats {
  std::uint64_t path_count = 0;     // Hamiltonian paths per labeling
  std::uint64_t pairs_tested = 0;   // ordered pairs (h0, h1)
  std::uint64_t sturm_pairs = 0;    // pairs whose sigma is Sturm
  bool reference_hit = false;       // the reference pair appeared among the hits
};

/// Brute-force scan over all ordered Hamiltonian path pairs between the given
/// poles on the solid octahedron barycenter graph, counting Sturm sigma =
/// h0^{-1} o h1. Long-running; meant to sit behind an explicit flag. When
/// `reference` is non-null its membership among the hits is recorded.
ScanStats scan_sturm_pairs(const BarycenterGraph& g, std::pair<int, int> poles,
                           const PathPair* reference = nullptr, int thread_count = 0);

}  // namespace sturmkit
