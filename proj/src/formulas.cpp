#include "spanres/formulas.hpp"

#include "spanres/errors.hpp"

#include <algorithm>
#include <numeric>

namespace spanres::formulas {

namespace {

// Keeps every internal long long product well inside the representable
// range; evaluation itself is exact at any size.
constexpr long long kParamCap = 1000000;

Rational rpow(long long base, long long exponent) {
    return Rational(base).pow(exponent);
}

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

void cap(std::initializer_list<long long> params, const char* who) {
    for (long long p : params)
        if (p > kParamCap) throw DomainError(std::string(who) + ": parameter exceeds 10^6");
}

}  // namespace

Rational cayley(long long n) {
    cap({n}, "cayley");
    require(n >= 1, "cayley: need n >= 1");
    return rpow(n, n - 2);
}

Rational moon_forest(long long n, const std::vector<long long>& component_orders) {
    cap({n}, "moon_forest");
    require(n >= 1, "moon_forest: need n >= 1");
    long long used = 0;
    for (long long order : component_orders) {
        require(order >= 1, "moon_forest: component orders must be positive");
        used += order;
    }
    require(used <= n, "moon_forest: component orders exceed n");

    // Vertices outside the forest are singleton components.
    long long c = static_cast<long long>(component_orders.size()) + (n - used);
    Rational product(1);
    for (long long order : component_orders) product *= Rational(order);
    return rpow(n, c - 2) * product;
}

Rational tau_kmn(long long m, long long n) {
    cap({m, n}, "tau_kmn");
    require(m >= 1 && n >= 1, "tau_kmn: need m, n >= 1");
    return rpow(m, n - 1) * rpow(n, m - 1);
}

Rational tau_matching(long long m, long long n, long long k) {
    cap({m, n}, "tau_matching");
    require(m >= 1 && n >= 1, "tau_matching: need m, n >= 1");
    require(k >= 0 && k <= std::min(m, n), "tau_matching: k out of range");
    if (k == 0) return tau_kmn(m, n);
    return rpow(m + n, k - 1) * Rational(m + n - k) * rpow(m, n - k - 1) * rpow(n, m - k - 1);
}

Rational ratio_matching(long long m, long long n, long long k) {
    cap({m, n}, "ratio_matching");
    require(m >= 1 && n >= 1, "ratio_matching: need m, n >= 1");
    require(k >= 1 && k <= std::min(m, n) - 1, "ratio_matching: k out of range");
    return Rational((m + n) * (m + n - k - 1), m * n * (m + n - k));
}

Rational tau_tree(long long m, long long n, long long s, long long t) {
    cap({m, n}, "tau_tree");
    require(m >= 1 && n >= 1, "tau_tree: need m, n >= 1");
    const bool trivial = (s == 0 && t == 0) || (s == 1 && t == 0) || (s == 0 && t == 1);
    if (trivial) return tau_kmn(m, n);
    require(s >= 1 && t >= 1, "tau_tree: a tree cannot span two vertices of one side only");
    require(s <= m && t <= n, "tau_tree: s or t out of range");
    return Rational(s * n + t * m - s * t) * rpow(m, n - t - 1) * rpow(n, m - s - 1);
}

Rational ratio_tree_t(long long m, long long n, long long s, long long t) {
    cap({m, n}, "ratio_tree_t");
    require(s >= 1 && s <= m, "ratio_tree_t: s out of range");
    require(t >= 1 && t <= n - 1, "ratio_tree_t: t out of range");
    return Rational(s * n + (m - s) * (t + 1), m * (s * n + (m - s) * t));
}

Rational ratio_tree_s(long long m, long long n, long long s, long long t) {
    cap({m, n}, "ratio_tree_s");
    require(s >= 1 && s <= m - 1, "ratio_tree_s: s out of range");
    require(t >= 1 && t <= n, "ratio_tree_s: t out of range");
    return Rational(t * m + (n - t) * (s + 1), n * (t * m + (n - t) * s));
}

Rational tau_gmnp(long long m, long long n, long long p) {
    cap({m, n}, "tau_gmnp");
    require(m >= 1 && n >= 1, "tau_gmnp: need m, n >= 1");
    require(p >= 0 && p <= std::min(m, n), "tau_gmnp: p out of range");
    if (p == 0) return tau_kmn(m, n);
    const long long a = m * n - m - n;
    return Rational(a + p) * rpow(a, p - 1) * rpow(m, n - p - 1) * rpow(n, m - p - 1);
}

std::vector<std::pair<std::string, Rational>> GmnpResistanceTable::entries() const {
    std::vector<std::pair<std::string, Rational>> out;
    auto push = [&out](const char* name, const std::optional<Rational>& value) {
        if (value) out.emplace_back(name, *value);
    };
    push("r1", r1);
    push("r2", r2);
    push("r3", r3);
    push("r4", r4);
    push("r5", r5);
    push("r6", r6);
    push("r7", r7);
    push("r8", r8);
    push("r9", r9);
    push("r10", r10);
    push("r11", r11);
    return out;
}

namespace {

void check_gmnp_domain(long long m, long long n, long long p, const char* who) {
    cap({m, n}, who);
    if (m < 2 || n < 2) throw DomainError(std::string(who) + ": need m, n >= 2");
    if (p < 1 || p > std::min(m, n)) throw DomainError(std::string(who) + ": need 1 <= p <= min(m,n)");
    if (m * n - m - n <= 0) throw DomainError(std::string(who) + ": need mn - m - n > 0");
}

}  // namespace

GmnpResistanceTable gmnp_resistances(long long m, long long n, long long p) {
    check_gmnp_domain(m, n, p, "gmnp_resistances");
    const Rational a(m * n - m - n);
    const Rational b(m * n - m - n + p);
    const Rational rm(m), rn(n), rp(p);

    GmnpResistanceTable t;
    if (p >= 2) {
        t.r1 = Rational(2 * (m - 1)) / a;
        t.r2 = Rational(2 * (n - 1)) / a;
        t.r6 = Rational(m + n - 2) / a - rm * rn / (a * b);
    }
    if (m - p >= 2) t.r3 = Rational(2, n);
    if (n - p >= 2) t.r4 = Rational(2, m);
    t.r5 = Rational(m + n) / a - rm * rn / (a * b);
    if (m > p) {
        t.r7 = Rational(2 * n - 1, n * (n - 1)) + Rational(p - 1) / (rp * Rational(n - 1) * a) +
               Rational(n - p) / (rp * rn * Rational(n - 1) * b);
        t.r9 = Rational(1, n) + Rational((p - 1) * (n - 1)) / (rp * a) +
               Rational((n - p) * (n - 1)) / (rp * rn * b);
    }
    if (n > p) {
        t.r8 = Rational(1, m) + Rational((p - 1) * (m - 1)) / (rp * a) +
               Rational((m - p) * (m - 1)) / (rp * rm * b);
        t.r10 = Rational(2 * m - 1, m * (m - 1)) + Rational(p - 1) / (rp * Rational(m - 1) * a) +
                Rational(m - p) / (rp * rm * Rational(m - 1) * b);
    }
    if (m > p && n > p) t.r11 = Rational(1, m) + Rational(1, n) - a / (rm * rn * b);
    return t;
}

Rational kf_gmnp(long long m, long long n, long long p) {
    check_gmnp_domain(m, n, p, "kf_gmnp");
    const Rational a(m * n - m - n);
    const Rational b(m * n - m - n + p);
    Rational kf(m + n - 1);
    kf += Rational(p * p * (m + n - 2) + 2 * p) / a;
    kf += Rational((m - p) * (m - 1), n);
    kf += Rational((n - p) * (n - 1), m);
    kf -= Rational(p * m * n) / (a * b);
    kf += Rational(p * (m - p), n - 1);
    kf += Rational((m - p) * (p - 1)) / (Rational(n - 1) * a);
    kf += Rational((m - p) * (n - p)) / (Rational(n * (n - 1)) * b);
    kf += Rational(p * (n - p), m - 1);
    kf += Rational((n - p) * (p - 1)) / (Rational(m - 1) * a);
    kf += Rational((m - p) * (n - p)) / (Rational(m * (m - 1)) * b);
    return kf;
}

Rational kf_shi_chen(long long n, long long p) {
    cap({n}, "kf_shi_chen");
    require(n >= 3, "kf_shi_chen: need n >= 3");
    require(p >= 1 && p <= n, "kf_shi_chen: p out of range");
    if (p == n)
        return Rational(5 * n - 6, (n - 1) * (n - 2)) + Rational(4 * n + 1);
    return Rational(n * p * (2 * n * n - 5 * n + 2 * p), (n - 2) * (n * n - 2 * n + p)) +
           Rational((n - p) * (2 * n * n - 5 * n + 2 * p + 2), n * n - 2 * n + p) +
           Rational(2 * (n - 1));
}

}  // namespace spanres::formulas
