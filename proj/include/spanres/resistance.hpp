#pragma once

#include "spanres/matrix.hpp"
#include "spanres/multigraph.hpp"

#include <vector>

namespace spanres {

// A multigraph read as a resistor network: edge weight = conductance, edge
// resistance = 1/weight. Connectivity is checked by the queries that need it.
class ResistorNetwork {
public:
    ResistorNetwork() = default;
    explicit ResistorNetwork(Multigraph graph) : graph_(std::move(graph)) {}

    const Multigraph& graph() const { return graph_; }
    Rational resistance(int edge_index) const { return graph_.edge(edge_index).weight.inverse(); }

    // Throws DomainError naming the caller when the graph is disconnected.
    void require_connected(const char* caller) const;

private:
    Multigraph graph_;
};

// A current pattern: `injection` amperes enter at `source` and leave at
// `sink`; edge_current[i] is the current along edge i in its stored
// orientation (u towards v), so the reverse direction is its negation.
struct FlowAssignment {
    int source = 0;
    int sink = 0;
    Rational injection = Rational(1);
    std::vector<Rational> edge_current;
};

// One traversal step of a closed walk: edge index plus direction (forward
// means stored orientation u -> v).
struct CycleStep {
    int edge = 0;
    bool forward = true;

    bool operator==(const CycleStep&) const = default;
};
using Cycle = std::vector<CycleStep>;

// Voltage-to-current ratio between u and v, from one grounded Laplacian
// solve (unit current in at u, out at v, v grounded). Zero when u == v.
Rational effective_resistance(const ResistorNetwork& n, int u, int v);

// Same quantity through the spanning-tree ratio tau(G/{u,v}) / tau(G).
Rational effective_resistance_tau(const ResistorNetwork& n, int u, int v);

// Symmetric matrix of all pairwise effective resistances, from a single
// grounded elimination (one solve per source vertex).
ExactMatrix all_pairs_resistance(const ResistorNetwork& n);

// Sum of effective resistances over unordered vertex pairs.
Rational kirchhoff_index(const ResistorNetwork& n);

// Sum over edges of R_ij / r_ij minus (n - 1); identically zero on every
// connected network.
Rational foster_residual(const ResistorNetwork& n);

// Weighted local sum rule at the ordered pair (u, v), minus 2; identically
// zero. The rule is stated for simple graphs, so parallel classes are merged
// first.
Rational local_rule_residual(const ResistorNetwork& n, int u, int v);

struct ReductionStep {
    enum class Rule { Series, Parallel };
    Rule rule = Rule::Series;
    std::vector<int> vertices;     // Parallel: {u, v}; Series: {u, mid, w}
    std::vector<Rational> before;  // resistances consumed by the step
    Rational after;                // resulting resistance
};

struct Reduction {
    Rational resistance;
    std::vector<ReductionStep> steps;
};

// Repeated parallel merges and eliminations of interior degree-2 vertices
// until a single a-b edge remains. Throws NotSeriesParallelError when a
// fixpoint is reached first.
Reduction series_parallel_reduce(const ResistorNetwork& n, int a, int b);

// One cycle per non-tree edge: the edge plus the unique tree path between
// its endpoints. Throws DomainError when tree_edges is not a spanning tree.
std::vector<Cycle> fundamental_cycle_basis(const Multigraph& g, const std::vector<int>& tree_edges);

// Edge indices of a spanning star centered at the given vertex; DomainError
// when some vertex is not adjacent to the center.
std::vector<int> star_tree_edges(const Multigraph& g, int center);

// Net current out of each vertex minus its external injection; all zeros
// exactly when the flow satisfies the current law.
std::vector<Rational> kcl_residuals(const ResistorNetwork& n, const FlowAssignment& flow);

// Directed sum of I_e * r_e around each cycle; all zeros exactly when the
// flow satisfies the voltage law on the given basis.
std::vector<Rational> kvl_residuals(const ResistorNetwork& n, const FlowAssignment& flow,
                                    const std::vector<Cycle>& basis);

// Current pattern induced by the potentials of a unit-injection solve;
// satisfies both laws by construction.
FlowAssignment induced_flow(const ResistorNetwork& n, int source, int sink);

// A contracted graph together with the closed-form current assignment that
// certifies its source-sink resistance, plus the center of the spanning star
// used for voltage-law checks.
struct ReferenceFlow {
    ResistorNetwork network;
    FlowAssignment flow;
    int basis_center = 0;
};

// K_{m,n} with a k-matching contracted, z-z parallel pairs merged to
// conductance 2; unit current from s to t. Requires 1 <= k <= min(m,n)-1.
ReferenceFlow reference_flow_matching(int m, int n, int k);

// K_{m,n} with an (s,t)-tree contracted, parallel classes merged (z-x
// conductance t, z-y conductance s); unit current from z to y_0. Requires
// 1 <= s <= m and 1 <= t <= n-1.
ReferenceFlow reference_flow_tree(int m, int n, int s, int t);

}  // namespace spanres
