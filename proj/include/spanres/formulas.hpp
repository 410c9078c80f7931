#pragma once

#include "spanres/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spanres::formulas {

// Spanning trees of K_n: n^(n-2).
Rational cayley(long long n);

// Spanning trees of K_n containing a given forest with the listed component
// orders; vertices outside the forest pad the list as singletons.
Rational moon_forest(long long n, const std::vector<long long>& component_orders);

// Spanning trees of K_{m,n}: m^(n-1) n^(m-1).
Rational tau_kmn(long long m, long long n);

// Spanning trees of K_{m,n} containing a fixed k-matching:
// (m+n)^(k-1) (m+n-k) m^(n-k-1) n^(m-k-1). Exponents are evaluated as exact
// rational powers (0^0 == 1), so the boundary k == min(m,n) works whenever
// no zero base meets a negative exponent.
Rational tau_matching(long long m, long long n, long long k);

// tau_{k+1} / tau_k for 1 <= k <= min(m,n)-1.
Rational ratio_matching(long long m, long long n, long long k);

// Spanning trees of K_{m,n} containing a fixed tree spanning s X-vertices
// and t Y-vertices: (sn+tm-st) m^(n-t-1) n^(m-s-1). (0,0), (1,0) and (0,1)
// reduce to tau_kmn.
Rational tau_tree(long long m, long long n, long long s, long long t);

// tau_{s,t+1} / tau_{s,t} for 1 <= s <= m, 1 <= t <= n-1.
Rational ratio_tree_t(long long m, long long n, long long s, long long t);

// tau_{s+1,t} / tau_{s,t} for 1 <= s <= m-1, 1 <= t <= n.
Rational ratio_tree_s(long long m, long long n, long long s, long long t);

// Spanning trees of G(m,n,p) = K_{m,n} minus a p-matching:
// (mn-m-n+p) (mn-m-n)^(p-1) m^(n-p-1) n^(m-p-1), with 0^0 == 1.
Rational tau_gmnp(long long m, long long n, long long p);

// The eleven pairwise resistance classes of G(m,n,p). Entries whose vertex
// class is empty for the given parameters are absent.
struct GmnpResistanceTable {
    std::optional<Rational> r1;   // x_i x_j, both matched
    std::optional<Rational> r2;   // y_i y_j, both matched
    std::optional<Rational> r3;   // x_i x_j, both unmatched
    std::optional<Rational> r4;   // y_i y_j, both unmatched
    std::optional<Rational> r5;   // x_i y_i, deleted matching pair
    std::optional<Rational> r6;   // x_i y_j, i != j, both matched
    std::optional<Rational> r7;   // x_i x_j, matched with unmatched
    std::optional<Rational> r8;   // x_i y_j, matched x, unmatched y
    std::optional<Rational> r9;   // x_i y_j, unmatched x, matched y
    std::optional<Rational> r10;  // y_i y_j, matched with unmatched
    std::optional<Rational> r11;  // x_i y_j, both unmatched

    // Defined entries in order, as ("r5", value) pairs.
    std::vector<std::pair<std::string, Rational>> entries() const;
};

// Requires m, n >= 2, 1 <= p <= min(m,n) and mn - m - n > 0.
GmnpResistanceTable gmnp_resistances(long long m, long long n, long long p);

// Kirchhoff index of G(m,n,p); same domain as gmnp_resistances.
Rational kf_gmnp(long long m, long long n, long long p);

// Kirchhoff index of G(n,n,p) in its published square form; n >= 3,
// 1 <= p <= n.
Rational kf_shi_chen(long long n, long long p);

}  // namespace spanres::formulas
