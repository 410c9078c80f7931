#include "spanres/errors.hpp"
#include "spanres/formulas.hpp"
#include "spanres/graph_io.hpp"
#include "spanres/multigraph.hpp"
#include "spanres/resistance.hpp"
#include "spanres/spanning.hpp"
#include "spanres/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace spanres;

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(static_cast<int>(BigInt::from_string(item).to_long_long()));
        } catch (const Error&) {
            throw ParseError("invalid edge index list: '" + text + "'");
        }
    }
    if (out.empty()) throw ParseError("empty edge index list");
    return out;
}

void require_params(const std::vector<long long>& params, size_t count, const std::string& usage) {
    if (params.size() != count) throw ParseError("expected " + usage);
}

int checked_int(long long value) {
    if (value < -1000000 || value > 1000000) throw DomainError("parameter out of range");
    return static_cast<int>(value);
}

void run_gen(const std::string& kind, const std::vector<long long>& params) {
    Multigraph g;
    if (kind == "kn") {
        require_params(params, 1, "gen kn <n>");
        g = complete_graph(checked_int(params[0]));
    } else if (kind == "kmn") {
        require_params(params, 2, "gen kmn <m> <n>");
        g = complete_bipartite(checked_int(params[0]), checked_int(params[1]));
    } else if (kind == "gmnp") {
        require_params(params, 3, "gen gmnp <m> <n> <p>");
        g = build_gmnp(checked_int(params[0]), checked_int(params[1]),
                       checked_int(params[2]));
    } else if (kind == "kmn-over-matching") {
        require_params(params, 3, "gen kmn-over-matching <m> <n> <k>");
        g = build_kmn_over_matching(checked_int(params[0]), checked_int(params[1]),
                                    checked_int(params[2]));
    } else if (kind == "kmn-over-tree") {
        require_params(params, 4, "gen kmn-over-tree <m> <n> <s> <t>");
        g = build_kmn_over_tree(checked_int(params[0]), checked_int(params[1]),
                                checked_int(params[2]), checked_int(params[3]));
    } else {
        throw ParseError("unknown graph kind '" + kind + "'");
    }
    write_graph(std::cout, g);
}

void run_formula(const std::string& name, const std::vector<long long>& p) {
    using namespace spanres::formulas;
    if (name == "cayley") {
        require_params(p, 1, "formula cayley <n>");
        std::cout << cayley(p[0]).to_string() << "\n";
    } else if (name == "moon") {
        if (p.empty()) throw ParseError("expected formula moon <n> [orders...]");
        std::cout << moon_forest(p[0], {p.begin() + 1, p.end()}).to_string() << "\n";
    } else if (name == "kmn") {
        require_params(p, 2, "formula kmn <m> <n>");
        std::cout << tau_kmn(p[0], p[1]).to_string() << "\n";
    } else if (name == "matching") {
        require_params(p, 3, "formula matching <m> <n> <k>");
        std::cout << tau_matching(p[0], p[1], p[2]).to_string() << "\n";
    } else if (name == "ratio-matching") {
        require_params(p, 3, "formula ratio-matching <m> <n> <k>");
        std::cout << ratio_matching(p[0], p[1], p[2]).to_string() << "\n";
    } else if (name == "tree") {
        require_params(p, 4, "formula tree <m> <n> <s> <t>");
        std::cout << tau_tree(p[0], p[1], p[2], p[3]).to_string() << "\n";
    } else if (name == "ratio-tree") {
        require_params(p, 4, "formula ratio-tree <m> <n> <s> <t>");
        bool any = false;
        try {
            std::cout << "ratio_t = " << ratio_tree_t(p[0], p[1], p[2], p[3]).to_string() << "\n";
            any = true;
        } catch (const DomainError&) {
        }
        try {
            std::cout << "ratio_s = " << ratio_tree_s(p[0], p[1], p[2], p[3]).to_string() << "\n";
            any = true;
        } catch (const DomainError&) {
        }
        if (!any) throw DomainError("ratio-tree: both directions out of domain");
    } else if (name == "gmnp") {
        require_params(p, 3, "formula gmnp <m> <n> <p>");
        std::cout << tau_gmnp(p[0], p[1], p[2]).to_string() << "\n";
    } else if (name == "r-table") {
        require_params(p, 3, "formula r-table <m> <n> <p>");
        for (const auto& [label, value] : gmnp_resistances(p[0], p[1], p[2]).entries())
            std::cout << label << " = " << value.to_string() << "\n";
    } else if (name == "kf-gmnp") {
        require_params(p, 3, "formula kf-gmnp <m> <n> <p>");
        std::cout << kf_gmnp(p[0], p[1], p[2]).to_string() << "\n";
    } else if (name == "kf-shi-chen") {
        require_params(p, 2, "formula kf-shi-chen <n> <p>");
        std::cout << kf_shi_chen(p[0], p[1]).to_string() << "\n";
    } else {
        throw ParseError("unknown formula '" + name + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spanning-tree counts, effective resistances and cross-verification"};
    app.require_subcommand(1);
    app.footer("exit codes: 0 ok, 1 verification failure, 2 usage or parse error,\n"
               "            3 domain error, 4 not series-parallel reducible");

    int exit_code = 0;

    // gen
    std::string gen_kind;
    std::vector<long long> gen_params;
    auto* gen = app.add_subcommand("gen", "write a generated graph file to standard output");
    gen->add_option("kind", gen_kind, "kn | kmn | gmnp | kmn-over-matching | kmn-over-tree")
        ->required();
    gen->add_option("params", gen_params, "integer parameters for the chosen kind");
    gen->callback([&] { run_gen(gen_kind, gen_params); });

    // tau
    std::string tau_file = "-";
    std::string containing;
    auto* tau_cmd = app.add_subcommand("tau", "spanning-tree count/polynomial of a graph file");
    tau_cmd->add_option("file", tau_file, "graph file, or - for standard input");
    tau_cmd->add_option("--containing", containing, "comma-separated edge indices the trees must contain");
    tau_cmd->callback([&] {
        Multigraph g = read_graph_file(tau_file);
        Rational value = containing.empty() ? tau(g) : tau_containing(g, parse_index_list(containing));
        std::cout << value.to_string() << "\n";
    });

    // resist
    std::string resist_file = "-";
    int resist_u = 0, resist_v = 0;
    std::string method = "solve";
    bool trace = false;
    auto* resist = app.add_subcommand("resist", "effective resistance between two vertices");
    resist->add_option("file", resist_file, "graph file, or - for standard input")->required();
    resist->add_option("u", resist_u, "first vertex")->required();
    resist->add_option("v", resist_v, "second vertex")->required();
    resist->add_option("--method", method, "solve | tau | reduce")
        ->check(CLI::IsMember({"solve", "tau", "reduce"}));
    resist->add_flag("--trace", trace, "with --method reduce, list the reduction steps");
    resist->callback([&] {
        ResistorNetwork net(read_graph_file(resist_file));
        if (method == "solve") {
            std::cout << effective_resistance(net, resist_u, resist_v).to_string() << "\n";
        } else if (method == "tau") {
            std::cout << effective_resistance_tau(net, resist_u, resist_v).to_string() << "\n";
        } else {
            Reduction red = series_parallel_reduce(net, resist_u, resist_v);
            std::cout << red.resistance.to_string() << "\n";
            if (trace) {
                for (const ReductionStep& step : red.steps) {
                    std::cout << "# ";
                    if (step.rule == ReductionStep::Rule::Series) {
                        std::cout << "series " << step.vertices[0] << "-" << step.vertices[1] << "-"
                                  << step.vertices[2] << ":";
                    } else {
                        std::cout << "parallel (" << step.vertices[0] << "," << step.vertices[1] << "):";
                    }
                    for (size_t i = 0; i < step.before.size(); ++i)
                        std::cout << (i == 0 ? " " : (step.rule == ReductionStep::Rule::Series ? " + " : " || "))
                                  << step.before[i].to_string();
                    std::cout << " -> " << step.after.to_string() << "\n";
                }
            }
        }
    });

    // kf
    std::string kf_file = "-";
    auto* kf = app.add_subcommand("kf", "Kirchhoff index of a graph file");
    kf->add_option("file", kf_file, "graph file, or - for standard input");
    kf->callback([&] {
        std::cout << kirchhoff_index(ResistorNetwork(read_graph_file(kf_file))).to_string() << "\n";
    });

    // formula
    std::string formula_name;
    std::vector<long long> formula_params;
    auto* formula = app.add_subcommand("formula", "evaluate a closed-form expression");
    formula->add_option("name", formula_name,
                        "cayley | moon | kmn | matching | ratio-matching | tree | ratio-tree | "
                        "gmnp | r-table | kf-gmnp | kf-shi-chen")
        ->required();
    formula->add_option("params", formula_params, "integer parameters");
    formula->callback([&] { run_formula(formula_name, formula_params); });

    // verify
    std::string suite = "all";
    VerifyOptions opts;
    bool verbose = false;
    auto* verify = app.add_subcommand("verify", "run formula-vs-oracle verification suites");
    verify->add_option("--suite", suite, "matching | tree | gmnp | laws | all")
        ->check(CLI::IsMember({"matching", "tree", "gmnp", "laws", "all"}));
    verify->add_option("--max-m", opts.max_m, "grid bound for m")->check(CLI::Range(2, 64));
    verify->add_option("--max-n", opts.max_n, "grid bound for n")->check(CLI::Range(2, 64));
    verify->add_option("--jobs", opts.jobs, "worker threads for the parameter grids")
        ->check(CLI::Range(1, 256));
    verify->add_option("--seed", opts.seed, "seed for the random-corpus checks");
    verify->add_flag("--verbose", verbose, "list every check, not only failures");
    verify->callback([&] {
        VerifyReport report;
        if (suite == "matching") {
            report = verify_matching(opts);
        } else if (suite == "tree") {
            report = verify_tree(opts);
        } else if (suite == "gmnp") {
            report = verify_gmnp(opts);
        } else if (suite == "laws") {
            report = verify_laws(opts);
        } else {
            report = verify_all(opts);
        }
        print_report(std::cout, report, verbose);
        if (!report.all_passed()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotSeriesParallelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
