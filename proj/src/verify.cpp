#include "spanres/verify.hpp"

#include "spanres/errors.hpp"
#include "spanres/formulas.hpp"
#include "spanres/resistance.hpp"
#include "spanres/spanning.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

namespace spanres {

size_t VerifyReport::passed() const {
    size_t count = 0;
    for (const CheckRecord& r : records) count += r.pass ? 1 : 0;
    return count;
}

size_t VerifyReport::failed() const {
    return records.size() - passed();
}

void VerifyReport::append(VerifyReport&& other) {
    records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                   std::make_move_iterator(other.records.end()));
}

namespace {

using Task = std::function<std::vector<CheckRecord>()>;

// Runs tasks across jobs workers; record order stays the task order, so the
// report is identical for any job count.
VerifyReport run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<std::vector<CheckRecord>> results(tasks.size());
    auto run_one = [&](size_t i) {
        try {
            results[i] = tasks[i]();
        } catch (const std::exception& e) {
            results[i] = {CheckRecord{"task", "#" + std::to_string(i), "no exception", e.what(), false}};
        }
    };

    if (jobs <= 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                run_one(i);
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerifyReport report;
    for (auto& part : results)
        report.records.insert(report.records.end(), std::make_move_iterator(part.begin()),
                              std::make_move_iterator(part.end()));
    return report;
}

CheckRecord eq_record(std::string check, std::string params, const Rational& expected,
                      const Rational& actual) {
    bool pass = expected == actual;
    return CheckRecord{std::move(check), std::move(params), expected.to_string(), actual.to_string(),
                       pass};
}

CheckRecord ok_record(std::string check, std::string params, bool pass, std::string detail) {
    return CheckRecord{std::move(check), std::move(params), "ok", pass ? "ok" : std::move(detail),
                       pass};
}

std::string mn_params(int m, int n) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

// ----- matching suite -------------------------------------------------------

// Edge indices of the matching {x_i y_i : i < k} inside complete_bipartite.
std::vector<int> kmn_matching_edges(int n, int k) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx.push_back(i * n + i);
    return idx;
}

std::vector<CheckRecord> matching_counts_task(int m, int n, bool with_brute) {
    std::vector<CheckRecord> out;
    const Multigraph base = complete_bipartite(m, n);
    const int kmax = std::min(m, n);
    for (int k = 0; k <= kmax; ++k) {
        const std::string params = mn_params(m, n) + " k=" + std::to_string(k);
        const Rational formula = formulas::tau_matching(m, n, k);
        const Multigraph contracted = contract_edge_set(base, kmn_matching_edges(n, k));
        out.push_back(eq_record("tau_matching vs contraction", params, tau(contracted), formula));
        if (with_brute && m + n <= 8)
            out.push_back(eq_record("tau_matching vs brute force", params, tau_brute(contracted), formula));
        if (k >= 1) {
            Rational telescoped = formulas::tau_matching(m, n, 1);
            for (int i = 1; i < k; ++i) telescoped *= formulas::ratio_matching(m, n, i);
            out.push_back(eq_record("tau_matching telescoping", params, formula, telescoped));
        }
        if (k >= 1 && k <= kmax - 1) {
            out.push_back(eq_record("ratio_matching consistency", params,
                                    formulas::tau_matching(m, n, k + 1) / formula,
                                    formulas::ratio_matching(m, n, k)));
        }
    }
    return out;
}

std::vector<CheckRecord> matching_spots_task() {
    std::vector<CheckRecord> out;
    out.push_back(eq_record("spot tau(K_{3,3})", "m=3 n=3", Rational(81), tau(complete_bipartite(3, 3))));
    out.push_back(eq_record("spot tau_1(K_{2,2})", "m=2 n=2 k=1", Rational(3),
                            tau_containing(complete_bipartite(2, 2), {0})));
    out.push_back(eq_record("spot tau_2(K_{4,5})", "m=4 n=5 k=2", Rational(5040),
                            formulas::tau_matching(4, 5, 2)));
    out.push_back(eq_record("spot tau_2(K_{4,5}) vs contraction", "m=4 n=5 k=2", Rational(5040),
                            tau_containing(complete_bipartite(4, 5), kmn_matching_edges(5, 2))));
    return out;
}

CheckRecord flow_kcl_record(const char* check, const std::string& params, const ReferenceFlow& rf) {
    const std::vector<Rational> residuals = kcl_residuals(rf.network, rf.flow);
    for (size_t v = 0; v < residuals.size(); ++v) {
        if (!residuals[v].is_zero())
            return ok_record(check, params, false,
                             "residual " + residuals[v].to_string() + " at vertex " + std::to_string(v));
    }
    return ok_record(check, params, true, "");
}

CheckRecord flow_kvl_record(const char* check, const std::string& params, const ReferenceFlow& rf) {
    const Multigraph& g = rf.network.graph();
    const auto basis = fundamental_cycle_basis(g, star_tree_edges(g, rf.basis_center));
    const std::vector<Rational> residuals = kvl_residuals(rf.network, rf.flow, basis);
    for (size_t c = 0; c < residuals.size(); ++c) {
        if (!residuals[c].is_zero())
            return ok_record(check, params, false,
                             "residual " + residuals[c].to_string() + " on cycle " + std::to_string(c));
    }
    return ok_record(check, params, true, "");
}

Rational flow_source_sink_voltage(const ReferenceFlow& rf) {
    const Multigraph& g = rf.network.graph();
    const int idx = g.find_edge(rf.flow.source, rf.flow.sink);
    Rational u = rf.flow.edge_current[static_cast<size_t>(idx)] * rf.network.resistance(idx);
    return g.edge(idx).u == rf.flow.source ? u : -u;
}

std::vector<CheckRecord> matching_flows_task(int m, int n) {
    std::vector<CheckRecord> out;
    for (int k = 1; k <= std::min(m, n) - 1; ++k) {
        const std::string params = mn_params(m, n) + " k=" + std::to_string(k);
        const ReferenceFlow rf = reference_flow_matching(m, n, k);
        out.push_back(flow_kcl_record("matching flow current law", params, rf));
        out.push_back(flow_kvl_record("matching flow voltage law", params, rf));
        const Rational ratio = formulas::ratio_matching(m, n, k);
        out.push_back(eq_record("matching flow voltage vs ratio", params, ratio,
                                flow_source_sink_voltage(rf) / rf.flow.injection));
        out.push_back(eq_record("matching flow resistance vs ratio", params, ratio,
                                effective_resistance(rf.network, rf.flow.source, rf.flow.sink)));
    }
    return out;
}

// ----- tree suite -----------------------------------------------------------

std::vector<CheckRecord> tree_counts_task(int m, int n) {
    std::vector<CheckRecord> out;
    const Rational tau_full = formulas::tau_kmn(m, n);
    for (int s = 1; s <= m; ++s) {
        for (int t = 1; t <= n; ++t) {
            const std::string params = mn_params(m, n) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
            const Rational formula = formulas::tau_tree(m, n, s, t);
            out.push_back(
                eq_record("tau_tree vs contraction", params, tau(build_kmn_over_tree(m, n, s, t)), formula));

            // Telescoped from tau_{1,1}/tau with the two ratio ladders.
            Rational scaled(m + n - 1, static_cast<long long>(m) * n);
            for (int i = 1; i < s; ++i) scaled *= formulas::ratio_tree_s(m, n, i, 1);
            for (int i = 1; i < t; ++i) scaled *= formulas::ratio_tree_t(m, n, s, i);
            out.push_back(eq_record("tau_tree telescoping", params, formula, scaled * tau_full));

            if (t <= n - 1)
                out.push_back(eq_record("ratio_tree_t consistency", params,
                                        formulas::tau_tree(m, n, s, t + 1) / formula,
                                        formulas::ratio_tree_t(m, n, s, t)));
            if (s <= m - 1)
                out.push_back(eq_record("ratio_tree_s consistency", params,
                                        formulas::tau_tree(m, n, s + 1, t) / formula,
                                        formulas::ratio_tree_s(m, n, s, t)));
            if (t <= n - 1)
                out.push_back(eq_record("ratio_tree swap symmetry", params,
                                        formulas::ratio_tree_t(m, n, s, t),
                                        formulas::ratio_tree_s(n, m, t, s)));
        }
    }
    out.push_back(eq_record("tau_tree boundary", mn_params(m, n) + " s=m t=n", Rational(1),
                            formulas::tau_tree(m, n, m, n)));

    // The ladder determines tau(K_{m,n}) itself: the product at (m, n) must
    // invert to the closed form.
    Rational full_scale(m + n - 1, static_cast<long long>(m) * n);
    for (int i = 1; i < m; ++i) full_scale *= formulas::ratio_tree_s(m, n, i, 1);
    for (int i = 1; i < n; ++i) full_scale *= formulas::ratio_tree_t(m, n, m, i);
    out.push_back(eq_record("tau_kmn from ratio ladder", mn_params(m, n), tau_full, full_scale.inverse()));

    for (auto [s0, t0] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}})
        out.push_back(eq_record("tau_tree trivial case",
                                mn_params(m, n) + " s=" + std::to_string(s0) + " t=" + std::to_string(t0),
                                tau_full, formulas::tau_tree(m, n, s0, t0)));
    return out;
}

std::vector<CheckRecord> tree_flows_task(int m, int n) {
    std::vector<CheckRecord> out;
    for (int s = 1; s <= m; ++s) {
        for (int t = 1; t <= n - 1; ++t) {
            const std::string params = mn_params(m, n) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
            const ReferenceFlow rf = reference_flow_tree(m, n, s, t);
            out.push_back(flow_kcl_record("tree flow current law", params, rf));
            out.push_back(flow_kvl_record("tree flow voltage law", params, rf));
            const Rational ratio = formulas::ratio_tree_t(m, n, s, t);
            out.push_back(eq_record("tree flow voltage vs ratio", params, ratio,
                                    flow_source_sink_voltage(rf) / rf.flow.injection));
            out.push_back(eq_record("tree flow resistance vs ratio", params, ratio,
                                    effective_resistance(rf.network, rf.flow.source, rf.flow.sink)));
        }
    }
    return out;
}

// ----- G(m,n,p) suite -------------------------------------------------------

struct ClassPair {
    std::string name;
    int u, v;
    Rational expected;
};

// One representative vertex pair per defined resistance class. X vertices
// are 0..m-1, Y vertices m..m+n-1, matched indices come first on each side.
std::vector<ClassPair> gmnp_class_pairs(int m, int p,
                                        const formulas::GmnpResistanceTable& table) {
    std::vector<ClassPair> out;
    auto push = [&](const char* name, const std::optional<Rational>& r, int u, int v) {
        if (r) out.push_back({name, u, v, *r});
    };
    push("r1", table.r1, 0, 1);
    push("r2", table.r2, m, m + 1);
    push("r3", table.r3, p, p + 1);
    push("r4", table.r4, m + p, m + p + 1);
    push("r5", table.r5, 0, m);
    push("r6", table.r6, 0, m + 1);
    push("r7", table.r7, 0, p);
    push("r8", table.r8, 0, m + p);
    push("r9", table.r9, p, m);
    push("r10", table.r10, m, m + p);
    push("r11", table.r11, p, m + p);
    return out;
}

Rational binom2(long long x) {
    return Rational(x * (x - 1), 2);
}

std::vector<CheckRecord> gmnp_task(int m, int n) {
    std::vector<CheckRecord> out;
    for (int p = 1; p <= std::min(m, n); ++p) {
        const std::string params = mn_params(m, n) + " p=" + std::to_string(p);
        const Multigraph g = build_gmnp(m, n, p);
        const ResistorNetwork net(g);
        out.push_back(eq_record("tau_gmnp vs matrix-tree", params, tau(g), formulas::tau_gmnp(m, n, p)));

        const auto table = formulas::gmnp_resistances(m, n, p);
        for (const ClassPair& c : gmnp_class_pairs(m, p, table)) {
            const std::string cp = params + " " + c.name + "=(" + std::to_string(c.u) + "," +
                                   std::to_string(c.v) + ")";
            out.push_back(eq_record("resistance table vs solve", cp, c.expected,
                                    effective_resistance(net, c.u, c.v)));
            out.push_back(eq_record("resistance table vs tau ratio", cp, c.expected,
                                    effective_resistance_tau(net, c.u, c.v)));
        }

        out.push_back(eq_record("kf_gmnp vs direct sum", params, kirchhoff_index(net),
                                formulas::kf_gmnp(m, n, p)));
        if (m == n)
            out.push_back(eq_record("kf_shi_chen vs kf_gmnp", params, formulas::kf_gmnp(m, n, p),
                                    formulas::kf_shi_chen(n, p)));

        // Pair-class expansion: edges contribute m+n-1 in total, non-edge
        // classes by size.
        Rational expansion(m + n - 1);
        auto add_term = [&](const Rational& coeff, const std::optional<Rational>& r) {
            if (!coeff.is_zero()) expansion += coeff * *r;
        };
        add_term(binom2(p), table.r1);
        add_term(binom2(p), table.r2);
        add_term(binom2(m - p), table.r3);
        add_term(binom2(n - p), table.r4);
        add_term(Rational(p), table.r5);
        add_term(Rational(static_cast<long long>(p) * (m - p)), table.r7);
        add_term(Rational(static_cast<long long>(p) * (n - p)), table.r10);
        out.push_back(eq_record("kf_gmnp vs class expansion", params, expansion,
                                formulas::kf_gmnp(m, n, p)));

        if (p < std::min(m, n)) {
            // tau(G(m,n,p+1))/tau(G(m,n,p)) == 1 - r11(m,n,p), with tau from
            // the matrix-tree engine on the built graphs.
            const Rational lhs = tau(build_gmnp(m, n, p + 1)) / tau(g);
            out.push_back(eq_record("tau ratio vs 1 - r11", params, Rational(1) - *table.r11, lhs));
        }
    }
    return out;
}

std::vector<CheckRecord> gmnp_spots_task() {
    std::vector<CheckRecord> out;
    out.push_back(eq_record("spot tau(G(3,3,1))", "m=3 n=3 p=1", Rational(36), formulas::tau_gmnp(3, 3, 1)));
    out.push_back(eq_record("spot tau(G(3,3,2))", "m=3 n=3 p=2", Rational(15), formulas::tau_gmnp(3, 3, 2)));
    out.push_back(eq_record("spot tau(G(3,3,3))", "m=3 n=3 p=3", Rational(6), formulas::tau_gmnp(3, 3, 3)));
    out.push_back(eq_record("spot Kf(G(3,3,3))", "m=3 n=3 p=3", Rational(35, 2), formulas::kf_gmnp(3, 3, 3)));
    out.push_back(eq_record("spot r11(3,3,1)", "m=3 n=3 p=1", Rational(7, 12),
                            *formulas::gmnp_resistances(3, 3, 1).r11));
    return out;
}

// ----- law suite ------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Multigraph random_connected_graph(std::mt19937_64& rng) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Multigraph g(n);
    std::set<std::pair<int, int>> present;
    auto random_weight = [&] {
        return Rational(1 + static_cast<long long>(rng() % 9), 1 + static_cast<long long>(rng() % 9));
    };
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        g.add_edge(u, v, random_weight());
        present.insert(std::minmax(u, v));
    }
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
    for (int i = 0; i < extra; ++i) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v || present.count(std::minmax(u, v))) continue;
        g.add_edge(std::min(u, v), std::max(u, v), random_weight());
        present.insert(std::minmax(u, v));
    }
    return g;
}

std::vector<CheckRecord> laws_task(int index, const Multigraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed ^ (0xABCDull + static_cast<std::uint64_t>(index))));
    std::vector<CheckRecord> out;
    const int n = g.vertex_count();
    const std::string params =
        "graph #" + std::to_string(index) + " (n=" + std::to_string(n) + " e=" + std::to_string(g.edge_count()) + ")";
    const ResistorNetwork net(g);
    const ExactMatrix r = all_pairs_resistance(net);

    out.push_back(eq_record("foster residual", params, Rational(0), foster_residual(net)));

    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < 10 && pass; ++i) {
            const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            if (v >= u) ++v;
            const Rational res = local_rule_residual(net, u, v);
            if (!res.is_zero()) {
                pass = false;
                detail = "residual " + res.to_string() + " at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")";
            }
        }
        out.push_back(ok_record("local rule residual", params, pass, detail));
    }

    {
        bool pass = true;
        std::string detail;
        for (size_t u = 0; u < r.rows() && pass; ++u) {
            for (size_t v = 0; v < r.cols() && pass; ++v) {
                const Rational& val = r.at(u, v);
                if (u == v ? !val.is_zero() : val.sign() <= 0) {
                    pass = false;
                    detail = "R(" + std::to_string(u) + "," + std::to_string(v) + ")=" + val.to_string();
                }
            }
        }
        if (pass) {
            const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            if (v >= u) ++v;
            if (effective_resistance(net, u, v) != effective_resistance(net, v, u)) {
                pass = false;
                detail = "asymmetric at (" + std::to_string(u) + "," + std::to_string(v) + ")";
            }
            if (!effective_resistance(net, u, u).is_zero()) {
                pass = false;
                detail = "nonzero self-resistance";
            }
        }
        out.push_back(ok_record("metric axioms", params, pass, detail));
    }

    if (n >= 3) {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < 2 && pass; ++i) {
            const auto x = static_cast<size_t>(rng() % static_cast<std::uint64_t>(n));
            const auto y = static_cast<size_t>(rng() % static_cast<std::uint64_t>(n));
            const auto z = static_cast<size_t>(rng() % static_cast<std::uint64_t>(n));
            if (r.at(x, y) > r.at(x, z) + r.at(z, y)) {
                pass = false;
                detail = "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                         std::to_string(z) + ")";
            }
        }
        out.push_back(ok_record("triangle inequality", params, pass, detail));
    }

    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < 5 && pass; ++i) {
            const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(g.edge_count()));
            const Rational lhs = tau(g);
            const Rational rhs =
                tau(remove_edge(g, e)) + g.edge(e).weight * tau(contract_edge(g, e));
            if (lhs != rhs) {
                pass = false;
                detail = "edge " + std::to_string(e) + ": " + lhs.to_string() + " vs " + rhs.to_string();
            }
        }
        out.push_back(ok_record("deletion-contraction", params, pass, detail));
    }

    {
        // Twin shortcuts are unit-resistance statements; check them on the
        // unit-weight copy of the same adjacency.
        Multigraph unit(g.vertex_count());
        for (const Edge& e : g.edges()) unit.add_edge(e.u, e.v);
        const ResistorNetwork unit_net(unit);
        const ExactMatrix ru = all_pairs_resistance(unit_net);
        std::vector<std::set<int>> nbr(static_cast<size_t>(n));
        for (const Edge& e : unit.edges()) {
            nbr[static_cast<size_t>(e.u)].insert(e.v);
            nbr[static_cast<size_t>(e.v)].insert(e.u);
        }
        bool pass = true;
        std::string detail;
        int twins = 0;
        for (int u = 0; u < n && pass; ++u) {
            for (int v = u + 1; v < n && pass; ++v) {
                const bool adjacent = nbr[static_cast<size_t>(u)].count(v) != 0;
                Rational want;
                if (!adjacent && nbr[static_cast<size_t>(u)] == nbr[static_cast<size_t>(v)]) {
                    want = Rational(2, static_cast<long long>(nbr[static_cast<size_t>(u)].size()));
                } else if (adjacent) {
                    auto nu = nbr[static_cast<size_t>(u)];
                    auto nv = nbr[static_cast<size_t>(v)];
                    nu.erase(v);
                    nv.erase(u);
                    if (nu != nv) continue;
                    want = Rational(2, static_cast<long long>(nbr[static_cast<size_t>(u)].size()) + 1);
                } else {
                    continue;
                }
                ++twins;
                if (ru.at(static_cast<size_t>(u), static_cast<size_t>(v)) != want) {
                    pass = false;
                    detail = "pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
                }
            }
        }
        out.push_back(ok_record("twin shortcuts", params + " twins=" + std::to_string(twins), pass, detail));
    }

    return out;
}

std::vector<CheckRecord> oracle_graph_task(int index, const Multigraph& g) {
    std::vector<CheckRecord> out;
    const int n = g.vertex_count();
    const std::string params = "graph #" + std::to_string(index) + " (n=" + std::to_string(n) + ")";
    const ResistorNetwork net(g);

    bool pass = true;
    std::string detail;
    int reduced = 0;
    for (int u = 0; u < n && pass; ++u) {
        for (int v = u + 1; v < n && pass; ++v) {
            const Rational by_solve = effective_resistance(net, u, v);
            if (by_solve != effective_resistance_tau(net, u, v)) {
                pass = false;
                detail = "methods differ at (" + std::to_string(u) + "," + std::to_string(v) + ")";
                break;
            }
            try {
                const Reduction red = series_parallel_reduce(net, u, v);
                ++reduced;
                if (red.resistance != by_solve) {
                    pass = false;
                    detail = "series-parallel differs at (" + std::to_string(u) + "," +
                             std::to_string(v) + ")";
                }
            } catch (const NotSeriesParallelError&) {
            }
        }
    }
    out.push_back(ok_record("oracle consistency", params + " reduced=" + std::to_string(reduced), pass,
                            detail));
    return out;
}

std::vector<CheckRecord> oracle_gmnp_task(int m, int n) {
    std::vector<CheckRecord> out;
    for (int p = 1; p <= std::min(m, n); ++p) {
        const std::string params = mn_params(m, n) + " p=" + std::to_string(p);
        const ResistorNetwork net(build_gmnp(m, n, p));
        const auto table = formulas::gmnp_resistances(m, n, p);
        bool pass = true;
        std::string detail;
        for (const ClassPair& c : gmnp_class_pairs(m, p, table)) {
            if (effective_resistance(net, c.u, c.v) != effective_resistance_tau(net, c.u, c.v)) {
                pass = false;
                detail = c.name;
                break;
            }
        }
        out.push_back(ok_record("oracle consistency", params, pass, detail));
    }
    return out;
}

std::vector<Task> matching_counts_tasks(const VerifyOptions& opts) {
    std::vector<Task> tasks;
    tasks.emplace_back([] { return matching_spots_task(); });
    for (int m = 2; m <= opts.max_m; ++m)
        for (int n = 2; n <= opts.max_n; ++n)
            tasks.emplace_back([m, n, with_brute = opts.with_brute] {
                return matching_counts_task(m, n, with_brute);
            });
    return tasks;
}

std::vector<Task> matching_flows_tasks(const VerifyOptions& opts) {
    std::vector<Task> tasks;
    if (opts.max_m >= 6 && opts.max_n >= 7) {
        tasks.emplace_back([] {
            std::vector<CheckRecord> out;
            const ReferenceFlow rf = reference_flow_matching(6, 7, 3);
            out.push_back(eq_record("spot I_st(6,7,3)", "m=6 n=7 k=3", Rational(39, 140),
                                    flow_source_sink_voltage(rf)));
            return out;
        });
    }
    for (int m = 2; m <= opts.max_m; ++m)
        for (int n = 2; n <= opts.max_n; ++n)
            tasks.emplace_back([m, n] { return matching_flows_task(m, n); });
    return tasks;
}

std::vector<Task> tree_counts_tasks(const VerifyOptions& opts) {
    std::vector<Task> tasks;
    for (int m = 1; m <= opts.max_m; ++m)
        for (int n = 1; n <= opts.max_n; ++n)
            tasks.emplace_back([m, n] { return tree_counts_task(m, n); });
    return tasks;
}

std::vector<Task> tree_flows_tasks(const VerifyOptions& opts) {
    std::vector<Task> tasks;
    if (opts.max_m >= 3 && opts.max_n >= 3) {
        tasks.emplace_back([] {
            std::vector<CheckRecord> out;
            const ReferenceFlow rf = reference_flow_tree(3, 3, 1, 1);
            out.push_back(eq_record("spot R_{z y0}(3,3,1,1)", "m=3 n=3 s=1 t=1", Rational(7, 15),
                                    flow_source_sink_voltage(rf)));
            return out;
        });
    }
    for (int m = 2; m <= opts.max_m; ++m)
        for (int n = 2; n <= opts.max_n; ++n)
            tasks.emplace_back([m, n] { return tree_flows_task(m, n); });
    return tasks;
}

std::vector<Task> gmnp_tasks(const VerifyOptions& opts) {
    std::vector<Task> tasks;
    tasks.emplace_back([] { return gmnp_spots_task(); });
    for (int m = 2; m <= opts.max_m; ++m)
        for (int n = 2; n <= opts.max_n; ++n) {
            if (m * n <= m + n) continue;
            tasks.emplace_back([m, n] { return gmnp_task(m, n); });
        }
    return tasks;
}

}  // namespace

std::vector<Multigraph> law_corpus(std::uint64_t seed, int count) {
    std::vector<Multigraph> graphs;
    graphs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(splitmix64(seed ^ static_cast<std::uint64_t>(i)));
        graphs.push_back(random_connected_graph(rng));
    }
    return graphs;
}

VerifyReport verify_matching_counts(const VerifyOptions& opts) {
    return run_tasks(matching_counts_tasks(opts), opts.jobs);
}

VerifyReport verify_matching_flows(const VerifyOptions& opts) {
    return run_tasks(matching_flows_tasks(opts), opts.jobs);
}

VerifyReport verify_tree_counts(const VerifyOptions& opts) {
    return run_tasks(tree_counts_tasks(opts), opts.jobs);
}

VerifyReport verify_tree_flows(const VerifyOptions& opts) {
    return run_tasks(tree_flows_tasks(opts), opts.jobs);
}

VerifyReport verify_gmnp(const VerifyOptions& opts) {
    return run_tasks(gmnp_tasks(opts), opts.jobs);
}

VerifyReport verify_laws(const VerifyOptions& opts) {
    const auto corpus = law_corpus(opts.seed, opts.law_graph_count);
    std::vector<Task> tasks;
    tasks.reserve(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i)
        tasks.emplace_back(
            [i, g = corpus[i], seed = opts.seed] { return laws_task(static_cast<int>(i), g, seed); });
    return run_tasks(tasks, opts.jobs);
}

VerifyReport verify_oracle_consistency(const VerifyOptions& opts) {
    std::vector<Task> tasks;
    for (int m = 2; m <= opts.max_m; ++m)
        for (int n = 2; n <= opts.max_n; ++n) {
            if (m * n <= m + n) continue;
            tasks.emplace_back([m, n] { return oracle_gmnp_task(m, n); });
        }
    const auto corpus = law_corpus(opts.seed, opts.law_graph_count);
    for (size_t i = 0; i < corpus.size(); ++i)
        tasks.emplace_back([i, g = corpus[i]] { return oracle_graph_task(static_cast<int>(i), g); });
    return run_tasks(tasks, opts.jobs);
}

VerifyReport verify_matching(const VerifyOptions& opts) {
    VerifyReport report = verify_matching_counts(opts);
    report.append(verify_matching_flows(opts));
    return report;
}

VerifyReport verify_tree(const VerifyOptions& opts) {
    VerifyReport report = verify_tree_counts(opts);
    report.append(verify_tree_flows(opts));
    return report;
}

VerifyReport verify_all(const VerifyOptions& opts) {
    VerifyReport report = verify_matching(opts);
    report.append(verify_tree(opts));
    report.append(verify_gmnp(opts));
    report.append(verify_laws(opts));
    report.append(verify_oracle_consistency(opts));
    return report;
}

void print_report(std::ostream& out, const VerifyReport& report, bool verbose) {
    std::map<std::string, std::pair<size_t, size_t>> by_check;  // name -> (pass, fail)
    for (const CheckRecord& r : report.records) {
        auto& counts = by_check[r.check];
        (r.pass ? counts.first : counts.second) += 1;
        if (verbose || !r.pass) {
            out << (r.pass ? "ok   " : "FAIL ") << r.check << " [" << r.params << "]";
            if (!r.pass) out << ": expected " << r.expected << ", got " << r.actual;
            out << "\n";
        }
    }
    for (const auto& [name, counts] : by_check) {
        out << (counts.second == 0 ? "pass " : "FAIL ") << name << ": " << counts.first << " passed";
        if (counts.second != 0) out << ", " << counts.second << " failed";
        out << "\n";
    }
    out << (report.all_passed() ? "PASS" : "FAIL") << " " << report.passed() << "/"
        << report.records.size() << " checks\n";
}

}  // namespace spanres
