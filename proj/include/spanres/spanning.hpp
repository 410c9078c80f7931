#pragma once

#include "spanres/matrix.hpp"
#include "spanres/multigraph.hpp"

#include <vector>

namespace spanres {

// Weighted Laplacian L = D - A; parallel edges accumulate into the same
// entry, so L(G) == L(simplify_parallel(G)).
ExactMatrix laplacian(const Multigraph& g);

// Spanning-tree polynomial: sum over spanning trees of the product of edge
// weights, computed as the determinant of the Laplacian with row and column
// 0 deleted. One vertex counts as 1; a disconnected graph gives 0.
Rational tau(const Multigraph& g);

// Exhaustive oracle: enumerates all edge subsets of size n-1 (parallel edges
// are distinct), keeping the connected acyclic ones. Guarded by vertex
// count; throws SizeError beyond the cap.
inline constexpr int kTauBruteMaxVertices = 10;
Rational tau_brute(const Multigraph& g);

// Weighted count of spanning trees containing every edge of the set:
// w_F * tau(G/F), or 0 when the set contains a cycle.
Rational tau_containing(const Multigraph& g, const std::vector<int>& edge_set);

}  // namespace spanres
