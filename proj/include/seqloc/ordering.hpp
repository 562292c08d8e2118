/// Sequence-producing orderings: spectral (Fiedler vector of the normalized
/// Laplacian) and reversed Cuthill-McKee.  Both are deterministic.
#pragma once

#include <cstdint>
#include <string>

#include "seqloc/graph.hpp"

namespace seqloc {

struct OrderingResult {
  VertexSequence sequence;
  std::string method;          // "spectral" | "rcm"
  double fiedler_value = 0.0;  // spectral only: second-smallest eigenvalue
                               // of the largest component's Laplacian
  std::int64_t bandwidth = 0;  // max |p_u - p_v| over edges under sequence
};

/// Orders vertices by the diffusion coordinate D^{-1/2} v, where v is the
/// eigenvector of the normalized Laplacian L = I - D^{-1/2} A D^{-1/2}
/// (multiplicity-weighted degrees) associated with the second-smallest
/// eigenvalue, computed per connected component; components are concatenated
/// by size descending, isolated vertices appended last in input order.  Ties
/// in the coordinate break by vertex id; the sign is fixed deterministically.
/// Requires at least one edge.
OrderingResult spectral_ordering(const Graph& g);

/// Reversed Cuthill-McKee: BFS from a pseudo-peripheral vertex, visiting
/// neighbors by ascending degree, order reversed; per component, larger
/// components first, isolated vertices last.
OrderingResult rcm_ordering(const Graph& g);

/// max |p_u - p_v| over edges (0 for edgeless graphs).
std::int64_t sequence_bandwidth(const Graph& g, const VertexSequence& s);

}  // namespace seqloc
