#pragma once

#include "spanres/rational.hpp"

#include <string>
#include <vector>

namespace spanres {

struct Edge {
    int u = 0;
    int v = 0;
    Rational weight = Rational(1);

    bool operator==(const Edge&) const = default;
};

// Loopless weighted multigraph. Weights are positive and act as conductances
// when the graph is read as a resistor network (edge resistance = 1/weight).
// Parallel edges are allowed and keep insertion order; vertex indices are
// dense and 0-based. Vertices may carry optional display labels, which are
// ignored by structural equality.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const;

    // Throws DomainError on loops, nonpositive weights, or bad indices.
    void add_edge(int u, int v, Rational weight = Rational(1));

    const std::string& label(int v) const;
    void set_label(int v, std::string text);

    std::vector<int> degrees() const;            // endpoint counts, parallels included
    std::vector<int> sorted_degrees() const;
    std::vector<Rational> weighted_degrees() const;
    bool is_connected() const;
    int find_edge(int u, int v) const;           // first edge between u and v, -1 if none

    bool operator==(const Multigraph& o) const {
        return vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
    }

private:
    void check_vertex(int v) const;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;  // empty or one entry per vertex
};

// Contraction of one edge: endpoints merge into the smaller index, indices
// above the removed one shift down, loops created by the merge are deleted,
// all other edges (parallels included) survive.
Multigraph contract_edge(const Multigraph& g, int edge_index);

// All vertices of the set merge into one (the smallest index of the set);
// loops are deleted, the same index compaction rule applies.
Multigraph identify_vertices(const Multigraph& g, const std::vector<int>& vertex_set);

// Contracts every edge of the set at once: vertex classes are the connected
// components of (V, F).
Multigraph contract_edge_set(const Multigraph& g, const std::vector<int>& edge_set);

// Merges each parallel class into one edge whose weight is the class total;
// preserves the spanning-tree polynomial.
Multigraph simplify_parallel(const Multigraph& g);

Multigraph remove_edge(const Multigraph& g, int edge_index);

// Unit-weight constructors. Bipartite convention: the X side occupies
// indices 0..m-1, the Y side m..m+n-1.
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int m, int n);

// K_{m,n} minus the matching {x_i y_i : i = 1..p}.
Multigraph build_gmnp(int m, int n, int p);

// K_{m,n} with a k-matching contracted, built directly: vertices
// s, x_1..x_{m-k-1}, t, y_1..y_{n-k-1}, z_1..z_k in that index order; every
// X-side/Y-side pair once, each z adjacent to everything once, and two
// parallel unit edges inside each z pair. Requires 0 <= k <= min(m,n)-1.
Multigraph build_kmn_over_matching(int m, int n, int k);

// K_{m,n} with a tree on s X-vertices and t Y-vertices contracted into z:
// vertices z, x_1..x_{m-s}, y_0..y_{n-t-1}; each x-y pair once, z-x with
// multiplicity t, z-y with multiplicity s.
Multigraph build_kmn_over_tree(int m, int n, int s, int t);

}  // namespace spanres
