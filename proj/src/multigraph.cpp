#include "spanres/multigraph.hpp"

#include "spanres/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spanres {

namespace {

// Plain union-find over dense vertex indices.
struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // Returns false when both endpoints were already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep the smaller index as representative
        return true;
    }
};

}  // namespace

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : Multigraph(vertex_count) {
    for (auto& e : edges) add_edge(e.u, e.v, std::move(e.weight));
}

const Edge& Multigraph::edge(int index) const {
    if (index < 0 || index >= edge_count()) throw DomainError("invalid edge index");
    return edges_[static_cast<size_t>(index)];
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_) throw DomainError("vertex index out of range");
}

void Multigraph::add_edge(int u, int v, Rational weight) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loops are not allowed");
    if (weight.sign() <= 0) throw DomainError("edge weight must be positive");
    edges_.push_back(Edge{u, v, std::move(weight)});
}

const std::string& Multigraph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<size_t>(v)];
}

void Multigraph::set_label(int v, std::string text) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<size_t>(vertex_count_));
    labels_[static_cast<size_t>(v)] = std::move(text);
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(static_cast<size_t>(vertex_count_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<size_t>(e.u)];
        ++deg[static_cast<size_t>(e.v)];
    }
    return deg;
}

std::vector<int> Multigraph::sorted_degrees() const {
    std::vector<int> deg = degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::vector<Rational> Multigraph::weighted_degrees() const {
    std::vector<Rational> deg(static_cast<size_t>(vertex_count_));
    for (const Edge& e : edges_) {
        deg[static_cast<size_t>(e.u)] += e.weight;
        deg[static_cast<size_t>(e.v)] += e.weight;
    }
    return deg;
}

bool Multigraph::is_connected() const {
    if (vertex_count_ <= 1) return true;
    Dsu dsu(vertex_count_);
    int components = vertex_count_;
    for (const Edge& e : edges_) {
        if (dsu.unite(e.u, e.v)) --components;
    }
    return components == 1;
}

int Multigraph::find_edge(int u, int v) const {
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return static_cast<int>(i);
    }
    return -1;
}

namespace {

// Rebuilds a graph from an old-to-new vertex map (-1 entries never occur);
// edges whose endpoints collapse are dropped, everything else keeps order
// and weight. Labels follow the first old vertex mapped to each new index.
Multigraph remap(const Multigraph& g, const std::vector<int>& vertex_map, int new_count) {
    Multigraph out(new_count);
    std::vector<char> labeled(static_cast<size_t>(new_count), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int nv = vertex_map[static_cast<size_t>(v)];
        if (!labeled[static_cast<size_t>(nv)] && !g.label(v).empty()) {
            out.set_label(nv, g.label(v));
            labeled[static_cast<size_t>(nv)] = 1;
        }
    }
    for (const Edge& e : g.edges()) {
        int nu = vertex_map[static_cast<size_t>(e.u)];
        int nv = vertex_map[static_cast<size_t>(e.v)];
        if (nu == nv) continue;
        out.add_edge(nu, nv, e.weight);
    }
    return out;
}

}  // namespace

Multigraph identify_vertices(const Multigraph& g, const std::vector<int>& vertex_set) {
    if (vertex_set.empty()) throw DomainError("identify_vertices: empty vertex set");
    std::vector<char> in_set(static_cast<size_t>(g.vertex_count()), 0);
    int keep = g.vertex_count();
    for (int v : vertex_set) {
        if (v < 0 || v >= g.vertex_count()) throw DomainError("identify_vertices: bad vertex index");
        in_set[static_cast<size_t>(v)] = 1;
        keep = std::min(keep, v);
    }

    std::vector<int> map(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_set[static_cast<size_t>(v)] && v != keep) continue;
        map[static_cast<size_t>(v)] = next++;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_set[static_cast<size_t>(v)]) map[static_cast<size_t>(v)] = map[static_cast<size_t>(keep)];
    }
    return remap(g, map, next);
}

Multigraph contract_edge(const Multigraph& g, int edge_index) {
    const Edge& e = g.edge(edge_index);  // validates the index
    return identify_vertices(g, {e.u, e.v});
}

Multigraph contract_edge_set(const Multigraph& g, const std::vector<int>& edge_set) {
    Dsu dsu(g.vertex_count());
    std::set<int> seen;
    for (int idx : edge_set) {
        const Edge& e = g.edge(idx);
        if (!seen.insert(idx).second) continue;
        dsu.unite(e.u, e.v);
    }

    // Representative of each class is its smallest vertex; new indices follow
    // representative order.
    std::vector<int> rep(static_cast<size_t>(g.vertex_count()));
    std::vector<int> rep_to_new(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        rep[static_cast<size_t>(v)] = dsu.find(v);
        if (rep[static_cast<size_t>(v)] == v) rep_to_new[static_cast<size_t>(v)] = next++;
    }
    std::vector<int> map(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        map[static_cast<size_t>(v)] = rep_to_new[static_cast<size_t>(rep[static_cast<size_t>(v)])];
    return remap(g, map, next);
}

Multigraph simplify_parallel(const Multigraph& g) {
    Multigraph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.label(v).empty()) out.set_label(v, g.label(v));
    }
    std::map<std::pair<int, int>, size_t> slot;
    std::vector<Edge> merged;
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        auto it = slot.find(key);
        if (it == slot.end()) {
            slot.emplace(key, merged.size());
            merged.push_back(Edge{key.first, key.second, e.weight});
        } else {
            merged[it->second].weight += e.weight;
        }
    }
    for (Edge& e : merged) out.add_edge(e.u, e.v, std::move(e.weight));
    return out;
}

Multigraph remove_edge(const Multigraph& g, int edge_index) {
    g.edge(edge_index);  // validates
    Multigraph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.label(v).empty()) out.set_label(v, g.label(v));
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_index) continue;
        const Edge& e = g.edges()[static_cast<size_t>(i)];
        out.add_edge(e.u, e.v, e.weight);
    }
    return out;
}

Multigraph complete_graph(int n) {
    if (n < 1) throw DomainError("complete_graph: need at least one vertex");
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("complete_bipartite: sides must be nonempty");
    Multigraph g(m + n);
    for (int i = 0; i < m; ++i) g.set_label(i, "x" + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) g.set_label(m + j, "y" + std::to_string(j + 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Multigraph build_gmnp(int m, int n, int p) {
    if (m < 1 || n < 1) throw DomainError("build_gmnp: sides must be nonempty");
    if (p < 0 || p > std::min(m, n)) throw DomainError("build_gmnp: p out of range");
    Multigraph g(m + n);
    for (int i = 0; i < m; ++i) g.set_label(i, "x" + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) g.set_label(m + j, "y" + std::to_string(j + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j && i < p) continue;  // deleted matching edge x_i y_i
            g.add_edge(i, m + j);
        }
    }
    return g;
}

Multigraph build_kmn_over_matching(int m, int n, int k) {
    if (m < 1 || n < 1) throw DomainError("build_kmn_over_matching: sides must be nonempty");
    // The direct construction keeps one unmatched representative (s and t)
    // per side, so k stops one short of the smaller side.
    if (k < 0 || k > std::min(m, n) - 1) throw DomainError("build_kmn_over_matching: k out of range");

    const int x_count = m - k - 1;
    const int y_count = n - k - 1;
    const int s = 0;
    const int t = x_count + 1;
    const int y0 = t + 1;
    const int z0 = y0 + y_count;
    Multigraph g(m + n - k);

    g.set_label(s, "s");
    for (int i = 0; i < x_count; ++i) g.set_label(1 + i, "x" + std::to_string(i + 1));
    g.set_label(t, "t");
    for (int j = 0; j < y_count; ++j) g.set_label(y0 + j, "y" + std::to_string(j + 1));
    for (int i = 0; i < k; ++i) g.set_label(z0 + i, "z" + std::to_string(i + 1));

    // X side to Y side, one edge per pair.
    for (int a = s; a <= x_count; ++a)
        for (int b = t; b < z0; ++b) g.add_edge(a, b);
    // Each z joins s, t, every x and every y once.
    for (int i = 0; i < k; ++i) {
        const int z = z0 + i;
        g.add_edge(s, z);
        g.add_edge(t, z);
        for (int a = 1; a <= x_count; ++a) g.add_edge(a, z);
        for (int b = y0; b < z0; ++b) g.add_edge(b, z);
    }
    // Two parallel edges inside each z pair.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            g.add_edge(z0 + i, z0 + j);
            g.add_edge(z0 + i, z0 + j);
        }
    }
    return g;
}

Multigraph build_kmn_over_tree(int m, int n, int s, int t) {
    if (m < 1 || n < 1) throw DomainError("build_kmn_over_tree: sides must be nonempty");
    if (s < 1 || s > m || t < 1 || t > n) throw DomainError("build_kmn_over_tree: s or t out of range");

    const int x_count = m - s;
    const int y_count = n - t;
    Multigraph g(1 + x_count + y_count);
    g.set_label(0, "z");
    for (int i = 0; i < x_count; ++i) g.set_label(1 + i, "x" + std::to_string(i + 1));
    for (int j = 0; j < y_count; ++j) g.set_label(1 + x_count + j, "y" + std::to_string(j));

    for (int i = 0; i < x_count; ++i)
        for (int j = 0; j < y_count; ++j) g.add_edge(1 + i, 1 + x_count + j);
    for (int i = 0; i < x_count; ++i)
        for (int c = 0; c < t; ++c) g.add_edge(0, 1 + i);
    for (int j = 0; j < y_count; ++j)
        for (int c = 0; c < s; ++c) g.add_edge(0, 1 + x_count + j);
    return g;
}

}  // namespace spanres
