#pragma once

#include "spanres/multigraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spanres {

struct CheckRecord {
    std::string check;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckRecord> records;

    size_t passed() const;
    size_t failed() const;
    bool all_passed() const { return failed() == 0; }
    void append(VerifyReport&& other);
};

struct VerifyOptions {
    int max_m = 5;
    int max_n = 5;
    int jobs = 1;
    std::uint64_t seed = 20210831;
    int law_graph_count = 100;
    bool with_brute = true;  // exhaustive-enumeration tier on small instances
};

// Matching-count grid: closed form vs contraction (and brute force on small
// instances), ratio and telescoping identities, pinned spot values.
VerifyReport verify_matching_counts(const VerifyOptions& opts);

// Current/voltage law checks of the closed-form flow on contracted-matching
// graphs, plus the source-sink voltage against the ratio formula.
VerifyReport verify_matching_flows(const VerifyOptions& opts);

// Tree-count grid: closed form vs built contraction, boundary value 1,
// telescoping products, ratio consistency.
VerifyReport verify_tree_counts(const VerifyOptions& opts);

// Law checks of the closed-form flow on contracted-tree graphs.
VerifyReport verify_tree_flows(const VerifyOptions& opts);

// Nearly complete bipartite suite: counts, the eleven-entry resistance
// table against both engines, Kirchhoff index forms, the tau ratio identity.
VerifyReport verify_gmnp(const VerifyOptions& opts);

// Seeded random corpus: Foster and local sum rules, metric axioms,
// deletion-contraction, twin-vertex shortcuts.
VerifyReport verify_laws(const VerifyOptions& opts);

// Method cross-checks: solve-based vs tau-based resistance everywhere, and
// series/parallel reduction wherever it succeeds.
VerifyReport verify_oracle_consistency(const VerifyOptions& opts);

VerifyReport verify_matching(const VerifyOptions& opts);  // counts + flows
VerifyReport verify_tree(const VerifyOptions& opts);      // counts + flows
VerifyReport verify_all(const VerifyOptions& opts);

// The deterministic random-graph corpus used by the law suite: connected,
// simple, 2..9 vertices, rational weights.
std::vector<Multigraph> law_corpus(std::uint64_t seed, int count);

// Summary plus every failing record; verbose additionally lists each check.
void print_report(std::ostream& out, const VerifyReport& report, bool verbose);

}  // namespace spanres
