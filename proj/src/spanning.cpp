#include "spanres/spanning.hpp"

#include "spanres/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace spanres {

ExactMatrix laplacian(const Multigraph& g) {
    const auto n = static_cast<size_t>(g.vertex_count());
    ExactMatrix l(n, n);
    for (const Edge& e : g.edges()) {
        const auto u = static_cast<size_t>(e.u);
        const auto v = static_cast<size_t>(e.v);
        l.at(u, u) += e.weight;
        l.at(v, v) += e.weight;
        l.at(u, v) -= e.weight;
        l.at(v, u) -= e.weight;
    }
    return l;
}

Rational tau(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw DomainError("tau: graph has no vertices");
    if (n == 1) return Rational(1);

    ExactMatrix l = laplacian(g);
    ExactMatrix reduced(static_cast<size_t>(n - 1), static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            reduced.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) =
                l.at(static_cast<size_t>(i), static_cast<size_t>(j));
    return det_exact(reduced);
}

namespace {

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

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Rational tau_brute(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw DomainError("tau_brute: graph has no vertices");
    if (n > kTauBruteMaxVertices) throw SizeError("tau_brute: vertex count exceeds the guard");
    if (n == 1) return Rational(1);

    const int need = n - 1;
    const int m = g.edge_count();
    if (m < need) return Rational(0);

    Rational total(0);
    std::vector<int> pick(static_cast<size_t>(need));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Dsu dsu(n);
        bool acyclic = true;
        for (int idx : pick) {
            const Edge& e = g.edges()[static_cast<size_t>(idx)];
            if (!dsu.unite(e.u, e.v)) {
                acyclic = false;
                break;
            }
        }
        if (acyclic) {
            // n-1 acyclic edges on n vertices always span.
            Rational w(1);
            for (int idx : pick) w *= g.edges()[static_cast<size_t>(idx)].weight;
            total += w;
        }
        // Advance to the next combination in lexicographic order.
        int i = need - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == m - need + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return total;
}

Rational tau_containing(const Multigraph& g, const std::vector<int>& edge_set) {
    Dsu dsu(g.vertex_count());
    std::set<int> seen;
    Rational w_f(1);
    for (int idx : edge_set) {
        const Edge& e = g.edge(idx);
        if (!seen.insert(idx).second) continue;
        if (!dsu.unite(e.u, e.v)) return Rational(0);  // the set contains a cycle
        w_f *= e.weight;
    }
    std::vector<int> chosen(seen.begin(), seen.end());
    return w_f * tau(contract_edge_set(g, chosen));
}

}  // namespace spanres
