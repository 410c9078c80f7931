#include "spanres/resistance.hpp"

#include "spanres/errors.hpp"
#include "spanres/spanning.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace spanres {

void ResistorNetwork::require_connected(const char* caller) const {
    if (!graph_.is_connected())
        throw DomainError(std::string(caller) + ": network is not connected");
}

namespace {

void check_vertex(const Multigraph& g, int v, const char* caller) {
    if (v < 0 || v >= g.vertex_count())
        throw DomainError(std::string(caller) + ": vertex index out of range");
}

// Laplacian with the ground row/column deleted. Reduced index of v is v,
// shifted down by one past the ground.
ExactMatrix grounded_laplacian(const Multigraph& g, int ground) {
    const int n = g.vertex_count();
    ExactMatrix l = laplacian(g);
    ExactMatrix reduced(static_cast<size_t>(n - 1), static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i == ground) continue;
        const int ri = i < ground ? i : i - 1;
        for (int j = 0; j < n; ++j) {
            if (j == ground) continue;
            const int rj = j < ground ? j : j - 1;
            reduced.at(static_cast<size_t>(ri), static_cast<size_t>(rj)) =
                l.at(static_cast<size_t>(i), static_cast<size_t>(j));
        }
    }
    return reduced;
}

// Potential of every vertex when a unit current enters at source and leaves
// at the grounded vertex (potential zero there).
std::vector<Rational> grounded_potentials(const Multigraph& g, int source, int ground) {
    const int n = g.vertex_count();
    ExactMatrix reduced = grounded_laplacian(g, ground);
    std::vector<Rational> rhs(static_cast<size_t>(n - 1));
    rhs[static_cast<size_t>(source < ground ? source : source - 1)] = Rational(1);
    std::vector<Rational> x = solve_exact(reduced, rhs);
    std::vector<Rational> potentials(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (v == ground) continue;
        potentials[static_cast<size_t>(v)] = x[static_cast<size_t>(v < ground ? v : v - 1)];
    }
    return potentials;
}

}  // namespace

Rational effective_resistance(const ResistorNetwork& n, int u, int v) {
    const Multigraph& g = n.graph();
    check_vertex(g, u, "effective_resistance");
    check_vertex(g, v, "effective_resistance");
    if (u == v) return Rational(0);
    n.require_connected("effective_resistance");
    std::vector<Rational> potentials = grounded_potentials(g, u, v);
    return potentials[static_cast<size_t>(u)];
}

Rational effective_resistance_tau(const ResistorNetwork& n, int u, int v) {
    const Multigraph& g = n.graph();
    check_vertex(g, u, "effective_resistance_tau");
    check_vertex(g, v, "effective_resistance_tau");
    if (u == v) return Rational(0);
    n.require_connected("effective_resistance_tau");
    return tau(identify_vertices(g, {u, v})) / tau(g);
}

ExactMatrix all_pairs_resistance(const ResistorNetwork& n) {
    n.require_connected("all_pairs_resistance");
    const int count = n.graph().vertex_count();
    ExactMatrix r(static_cast<size_t>(count), static_cast<size_t>(count));
    if (count <= 1) return r;

    // One elimination, one back substitution per source vertex: the columns
    // of the grounded inverse give every pairwise resistance through
    // R_uv = M_uu + M_vv - 2 M_uv (ground terms are zero).
    ExactMatrix reduced = grounded_laplacian(n.graph(), 0);
    ExactMatrix inv = solve_exact(reduced, ExactMatrix::identity(static_cast<size_t>(count - 1)));
    for (int u = 1; u < count; ++u) {
        const auto mu = static_cast<size_t>(u - 1);
        r.at(0, static_cast<size_t>(u)) = inv.at(mu, mu);
        r.at(static_cast<size_t>(u), 0) = inv.at(mu, mu);
        for (int v = u + 1; v < count; ++v) {
            const auto mv = static_cast<size_t>(v - 1);
            Rational val = inv.at(mu, mu) + inv.at(mv, mv) - inv.at(mu, mv) - inv.at(mv, mu);
            r.at(static_cast<size_t>(u), static_cast<size_t>(v)) = val;
            r.at(static_cast<size_t>(v), static_cast<size_t>(u)) = val;
        }
    }
    return r;
}

Rational kirchhoff_index(const ResistorNetwork& n) {
    n.require_connected("kirchhoff_index");
    ExactMatrix r = all_pairs_resistance(n);
    Rational sum(0);
    for (size_t u = 0; u < r.rows(); ++u)
        for (size_t v = u + 1; v < r.cols(); ++v) sum += r.at(u, v);
    return sum;
}

Rational foster_residual(const ResistorNetwork& n) {
    n.require_connected("foster_residual");
    ExactMatrix r = all_pairs_resistance(n);
    Rational sum(0);
    for (const Edge& e : n.graph().edges())
        sum += r.at(static_cast<size_t>(e.u), static_cast<size_t>(e.v)) * e.weight;
    return sum - Rational(n.graph().vertex_count() - 1);
}

Rational local_rule_residual(const ResistorNetwork& n, int u, int v) {
    const Multigraph& g0 = n.graph();
    check_vertex(g0, u, "local_rule_residual");
    check_vertex(g0, v, "local_rule_residual");
    if (u == v) throw DomainError("local_rule_residual: vertices must be distinct");
    n.require_connected("local_rule_residual");

    // The rule is stated for simple graphs; merge parallel classes first.
    ResistorNetwork simple(simplify_parallel(g0));
    const Multigraph& g = simple.graph();
    ExactMatrix r = all_pairs_resistance(simple);

    Rational lhs(0);
    for (const Edge& e : g.edges()) {
        int x;
        if (e.u == u) {
            x = e.v;
        } else if (e.v == u) {
            x = e.u;
        } else {
            continue;
        }
        const auto xu = static_cast<size_t>(x);
        lhs += e.weight * r.at(static_cast<size_t>(u), static_cast<size_t>(v));
        lhs += e.weight * (r.at(static_cast<size_t>(u), xu) - r.at(static_cast<size_t>(v), xu));
    }
    return lhs - Rational(2);
}

Reduction series_parallel_reduce(const ResistorNetwork& n, int a, int b) {
    const Multigraph& g = n.graph();
    check_vertex(g, a, "series_parallel_reduce");
    check_vertex(g, b, "series_parallel_reduce");
    if (a == b) throw DomainError("series_parallel_reduce: terminals must be distinct");

    struct Item {
        int u, v;
        Rational conductance;
    };
    std::vector<Item> active;
    active.reserve(g.edges().size());
    for (const Edge& e : g.edges()) active.push_back({e.u, e.v, e.weight});

    std::vector<ReductionStep> steps;
    bool changed = true;
    while (changed) {
        changed = false;

        // Parallel law: conductances of a parallel class add.
        std::map<std::pair<int, int>, size_t> group_of;
        std::vector<std::vector<size_t>> groups;
        for (size_t i = 0; i < active.size(); ++i) {
            auto key = std::minmax(active[i].u, active[i].v);
            auto it = group_of.find(key);
            if (it == group_of.end()) {
                group_of.emplace(key, groups.size());
                groups.push_back({i});
            } else {
                groups[it->second].push_back(i);
            }
        }
        if (groups.size() != active.size()) {
            std::vector<Item> merged;
            merged.reserve(groups.size());
            for (const auto& members : groups) {
                if (members.size() == 1) {
                    merged.push_back(active[members[0]]);
                    continue;
                }
                ReductionStep step;
                step.rule = ReductionStep::Rule::Parallel;
                step.vertices = {std::min(active[members[0]].u, active[members[0]].v),
                                 std::max(active[members[0]].u, active[members[0]].v)};
                Rational total(0);
                for (size_t idx : members) {
                    step.before.push_back(active[idx].conductance.inverse());
                    total += active[idx].conductance;
                }
                step.after = total.inverse();
                steps.push_back(std::move(step));
                merged.push_back({active[members[0]].u, active[members[0]].v, total});
            }
            active = std::move(merged);
            changed = true;
        }

        // Series law: resistance through an interior degree-2 vertex adds.
        std::vector<int> degree(static_cast<size_t>(g.vertex_count()), 0);
        for (const Item& it : active) {
            ++degree[static_cast<size_t>(it.u)];
            ++degree[static_cast<size_t>(it.v)];
        }
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (x == a || x == b || degree[static_cast<size_t>(x)] != 2) continue;
            size_t first = active.size(), second = active.size();
            for (size_t i = 0; i < active.size(); ++i) {
                if (active[i].u != x && active[i].v != x) continue;
                if (first == active.size()) {
                    first = i;
                } else {
                    second = i;
                    break;
                }
            }
            const int u = active[first].u == x ? active[first].v : active[first].u;
            const int w = active[second].u == x ? active[second].v : active[second].u;
            // u != w here: two edges on the same pair would have merged above.
            Rational r1 = active[first].conductance.inverse();
            Rational r2 = active[second].conductance.inverse();
            ReductionStep step;
            step.rule = ReductionStep::Rule::Series;
            step.vertices = {u, x, w};
            step.before = {r1, r2};
            step.after = r1 + r2;
            steps.push_back(std::move(step));

            Item joined{u, w, (r1 + r2).inverse()};
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(second));
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(first));
            active.push_back(joined);
            changed = true;
            break;  // merge fresh parallels before the next elision
        }
    }

    if (active.size() == 1 && std::minmax(active[0].u, active[0].v) == std::minmax(a, b))
        return Reduction{active[0].conductance.inverse(), std::move(steps)};
    throw NotSeriesParallelError("series_parallel_reduce: graph does not reduce to a single edge");
}

std::vector<Cycle> fundamental_cycle_basis(const Multigraph& g, const std::vector<int>& tree_edges) {
    const int n = g.vertex_count();
    if (n == 0) throw DomainError("fundamental_cycle_basis: graph has no vertices");

    std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
    {
        std::vector<int> parent_probe(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) parent_probe[static_cast<size_t>(i)] = i;
        auto find = [&](int v) {
            while (parent_probe[static_cast<size_t>(v)] != v) v = parent_probe[static_cast<size_t>(v)];
            return v;
        };
        int merges = 0;
        for (int idx : tree_edges) {
            const Edge& e = g.edge(idx);
            if (in_tree[static_cast<size_t>(idx)])
                throw DomainError("fundamental_cycle_basis: repeated tree edge");
            in_tree[static_cast<size_t>(idx)] = 1;
            int ru = find(e.u), rv = find(e.v);
            if (ru == rv) throw DomainError("fundamental_cycle_basis: tree edges contain a cycle");
            parent_probe[static_cast<size_t>(ru)] = rv;
            ++merges;
        }
        if (merges != n - 1) throw DomainError("fundamental_cycle_basis: not a spanning tree");
    }

    // Root the tree at 0 and record parent vertex/edge plus depth.
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (neighbor, edge)
    for (int idx : tree_edges) {
        const Edge& e = g.edge(idx);
        adj[static_cast<size_t>(e.u)].push_back({e.v, idx});
        adj[static_cast<size_t>(e.v)].push_back({e.u, idx});
    }
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> parent_edge(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), -1);
    std::queue<int> bfs;
    bfs.push(0);
    depth[0] = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (auto [w, idx] : adj[static_cast<size_t>(v)]) {
            if (depth[static_cast<size_t>(w)] != -1) continue;
            depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
            parent[static_cast<size_t>(w)] = v;
            parent_edge[static_cast<size_t>(w)] = idx;
            bfs.push(w);
        }
    }

    auto step_towards_parent = [&](int child) -> CycleStep {
        const int idx = parent_edge[static_cast<size_t>(child)];
        return CycleStep{idx, g.edge(idx).u == child};
    };

    std::vector<Cycle> basis;
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        if (in_tree[static_cast<size_t>(idx)]) continue;
        const Edge& e = g.edges()[static_cast<size_t>(idx)];
        Cycle cycle;
        cycle.push_back(CycleStep{idx, true});  // u -> v over the non-tree edge

        // Tree path v -> ... -> lca -> ... -> u closes the walk.
        std::vector<CycleStep> from_v, from_u;
        int pv = e.v, pu = e.u;
        while (depth[static_cast<size_t>(pv)] > depth[static_cast<size_t>(pu)]) {
            from_v.push_back(step_towards_parent(pv));
            pv = parent[static_cast<size_t>(pv)];
        }
        while (depth[static_cast<size_t>(pu)] > depth[static_cast<size_t>(pv)]) {
            from_u.push_back(step_towards_parent(pu));
            pu = parent[static_cast<size_t>(pu)];
        }
        while (pv != pu) {
            from_v.push_back(step_towards_parent(pv));
            pv = parent[static_cast<size_t>(pv)];
            from_u.push_back(step_towards_parent(pu));
            pu = parent[static_cast<size_t>(pu)];
        }
        cycle.insert(cycle.end(), from_v.begin(), from_v.end());
        for (size_t i = from_u.size(); i-- > 0;)
            cycle.push_back(CycleStep{from_u[i].edge, !from_u[i].forward});
        basis.push_back(std::move(cycle));
    }
    return basis;
}

std::vector<int> star_tree_edges(const Multigraph& g, int center) {
    check_vertex(g, center, "star_tree_edges");
    std::vector<int> tree;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == center) continue;
        int idx = g.find_edge(center, v);
        if (idx < 0) throw DomainError("star_tree_edges: vertex not adjacent to the center");
        tree.push_back(idx);
    }
    return tree;
}

std::vector<Rational> kcl_residuals(const ResistorNetwork& n, const FlowAssignment& flow) {
    const Multigraph& g = n.graph();
    check_vertex(g, flow.source, "kcl_residuals");
    check_vertex(g, flow.sink, "kcl_residuals");
    if (flow.edge_current.size() != static_cast<size_t>(g.edge_count()))
        throw DimensionError("kcl_residuals: flow does not assign a current to every edge");

    std::vector<Rational> residual(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < flow.edge_current.size(); ++i) {
        const Edge& e = g.edges()[i];
        residual[static_cast<size_t>(e.u)] += flow.edge_current[i];
        residual[static_cast<size_t>(e.v)] -= flow.edge_current[i];
    }
    residual[static_cast<size_t>(flow.source)] -= flow.injection;
    residual[static_cast<size_t>(flow.sink)] += flow.injection;
    return residual;
}

std::vector<Rational> kvl_residuals(const ResistorNetwork& n, const FlowAssignment& flow,
                                    const std::vector<Cycle>& basis) {
    const Multigraph& g = n.graph();
    if (flow.edge_current.size() != static_cast<size_t>(g.edge_count()))
        throw DimensionError("kvl_residuals: flow does not assign a current to every edge");

    std::vector<Rational> residuals;
    residuals.reserve(basis.size());
    for (const Cycle& cycle : basis) {
        if (cycle.empty()) throw DomainError("kvl_residuals: empty cycle");
        Rational sum(0);
        int at = -1;
        int start = -1;
        for (const CycleStep& step : cycle) {
            const Edge& e = g.edge(step.edge);
            const int from = step.forward ? e.u : e.v;
            const int to = step.forward ? e.v : e.u;
            if (start == -1) {
                start = from;
            } else if (from != at) {
                throw DomainError("kvl_residuals: cycle steps do not chain");
            }
            at = to;
            const Rational drop = flow.edge_current[static_cast<size_t>(step.edge)] * n.resistance(step.edge);
            sum += step.forward ? drop : -drop;
        }
        if (at != start) throw DomainError("kvl_residuals: cycle does not close");
        residuals.push_back(std::move(sum));
    }
    return residuals;
}

FlowAssignment induced_flow(const ResistorNetwork& n, int source, int sink) {
    const Multigraph& g = n.graph();
    check_vertex(g, source, "induced_flow");
    check_vertex(g, sink, "induced_flow");
    if (source == sink) throw DomainError("induced_flow: source and sink must differ");
    n.require_connected("induced_flow");

    std::vector<Rational> potentials = grounded_potentials(g, source, sink);
    FlowAssignment flow;
    flow.source = source;
    flow.sink = sink;
    flow.injection = Rational(1);
    flow.edge_current.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        flow.edge_current.push_back(
            (potentials[static_cast<size_t>(e.u)] - potentials[static_cast<size_t>(e.v)]) * e.weight);
    return flow;
}

namespace {

enum class MatchRole { S, X, T, Y, Z };
enum class TreeRole { Z, X, Y0, Y };

}  // namespace

ReferenceFlow reference_flow_matching(int m, int n, int k) {
    if (m < 2 || n < 2) throw DomainError("reference_flow_matching: need m, n >= 2");
    if (k < 1 || k > std::min(m, n) - 1)
        throw DomainError("reference_flow_matching: k out of range");

    Multigraph merged = simplify_parallel(build_kmn_over_matching(m, n, k));
    const int x_count = m - k - 1;
    const int y_count = n - k - 1;
    const int s = 0;
    const int t = x_count + 1;
    const int z0 = t + 1 + y_count;
    auto role = [&](int v) {
        if (v == s) return MatchRole::S;
        if (v < t) return MatchRole::X;
        if (v == t) return MatchRole::T;
        if (v < z0) return MatchRole::Y;
        return MatchRole::Z;
    };

    const Rational im = Rational(1, m);
    const Rational in = Rational(1, n);
    const Rational imn = Rational(1, static_cast<long long>(m) * (m + n - k));
    const Rational inn = Rational(1, static_cast<long long>(n) * (m + n - k));
    const Rational w0 = im + in - imn - inn;
    const Rational w1 = in - imn - inn;
    const Rational w2 = in - inn;
    const Rational w3 = imn + inn - im;
    const Rational w4 = imn - im;
    const Rational w5 = -imn - inn;
    const Rational w6 = inn;
    const Rational w7 = -imn;

    auto directed = [&](MatchRole a, MatchRole b) -> std::optional<Rational> {
        using R = MatchRole;
        if (a == R::S && b == R::T) return w0;
        if (a == R::S && b == R::Y) return w1;
        if (a == R::S && b == R::Z) return w2;
        if (a == R::T && b == R::X) return w3;
        if (a == R::T && b == R::Z) return w4;
        if (a == R::X && b == R::Y) return w5;
        if (a == R::Z && b == R::X) return w6;
        if (a == R::Z && b == R::Y) return w7;
        if (a == R::Z && b == R::Z) return Rational(0);
        return std::nullopt;
    };

    FlowAssignment flow;
    flow.source = s;
    flow.sink = t;
    flow.injection = Rational(1);
    flow.edge_current.reserve(merged.edges().size());
    for (const Edge& e : merged.edges()) {
        if (auto fwd = directed(role(e.u), role(e.v))) {
            flow.edge_current.push_back(*fwd);
        } else {
            flow.edge_current.push_back(-*directed(role(e.v), role(e.u)));
        }
    }
    return ReferenceFlow{ResistorNetwork(std::move(merged)), std::move(flow), z0};
}

ReferenceFlow reference_flow_tree(int m, int n, int s, int t) {
    if (m < 1 || n < 2) throw DomainError("reference_flow_tree: need m >= 1, n >= 2");
    if (s < 1 || s > m || t < 1 || t > n - 1)
        throw DomainError("reference_flow_tree: s or t out of range");

    Multigraph merged = simplify_parallel(build_kmn_over_tree(m, n, s, t));
    const int x_count = m - s;
    const int y0 = x_count + 1;
    auto role = [&](int v) {
        if (v == 0) return TreeRole::Z;
        if (v < y0) return TreeRole::X;
        if (v == y0) return TreeRole::Y0;
        return TreeRole::Y;
    };

    const Rational big_n(static_cast<long long>(s) * n + static_cast<long long>(t) * m -
                         static_cast<long long>(s) * t);
    const Rational rs(s), rm(m);
    const Rational w0 = rs / rm + rs * Rational(m - s) / (rm * big_n);
    const Rational w1 = rs * Rational(m - s) / (rm * big_n);
    const Rational w2 = Rational(t) / big_n;
    const Rational w3 = Rational(1) / rm - rs / (rm * big_n);
    const Rational w4 = -rs / (rm * big_n);

    auto directed = [&](TreeRole a, TreeRole b) -> std::optional<Rational> {
        using R = TreeRole;
        if (a == R::Z && b == R::Y0) return w0;
        if (a == R::Z && b == R::Y) return w1;
        if (a == R::Z && b == R::X) return w2;
        if (a == R::X && b == R::Y0) return w3;
        if (a == R::X && b == R::Y) return w4;
        return std::nullopt;
    };

    FlowAssignment flow;
    flow.source = 0;
    flow.sink = y0;
    flow.injection = Rational(1);
    flow.edge_current.reserve(merged.edges().size());
    for (const Edge& e : merged.edges()) {
        if (auto fwd = directed(role(e.u), role(e.v))) {
            flow.edge_current.push_back(*fwd);
        } else {
            flow.edge_current.push_back(-*directed(role(e.v), role(e.u)));
        }
    }
    return ReferenceFlow{ResistorNetwork(std::move(merged)), std::move(flow), 0};
}

}  // namespace spanres
