#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spanres/graph_io.hpp"
#include "spanres/multigraph.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace spanres;

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    const std::string cmd = std::string(SPANRES_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("gen emits parseable graphs") {
    CmdResult r = run("gen kmn 2 2");
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    Multigraph g = read_graph(in);
    CHECK(g == complete_bipartite(2, 2));

    CmdResult cyc = run("gen gmnp 3 3 3");
    std::istringstream cin_(cyc.out);
    Multigraph c6 = read_graph(cin_);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);

    CmdResult fig = run("gen kmn-over-matching 6 7 3");
    std::istringstream fin(fig.out);
    CHECK(read_graph(fin).vertex_count() == 10);
}

TEST_CASE("gen round trip is byte stable") {
    CmdResult first = run("gen kmn-over-tree 4 5 2 2");
    CmdResult second = run("gen kmn-over-tree 4 5 2 2");
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("tau command") {
    auto path = write_temp("spanres_k33.graph", graph_to_string(complete_bipartite(3, 3)));
    CmdResult r = run("tau " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out == "81\n");

    CmdResult contained = run("tau " + path.string() + " --containing 0");
    CHECK(contained.out == "45\n");

    // A cycle in the constraint: count is 0, not an error.
    Multigraph k33 = complete_bipartite(3, 3);
    std::ostringstream cyc;
    cyc << k33.find_edge(0, 3) << "," << k33.find_edge(1, 3) << "," << k33.find_edge(1, 4) << ","
        << k33.find_edge(0, 4);
    CmdResult zero = run("tau " + path.string() + " --containing " + cyc.str());
    CHECK(zero.status == 0);
    CHECK(zero.out == "0\n");

    // Disconnected graphs print 0.
    auto disc = write_temp("spanres_disc.graph", "graph 2\n");
    CmdResult d = run("tau " + disc.string());
    CHECK(d.status == 0);
    CHECK(d.out == "0\n");
}

TEST_CASE("resist command and methods") {
    auto k3 = write_temp("spanres_k3.graph", graph_to_string(complete_graph(3)));
    CHECK(run("resist " + k3.string() + " 0 1").out == "2/3\n");
    CHECK(run("resist " + k3.string() + " 0 1 --method tau").out == "2/3\n");

    auto path = write_temp("spanres_path.graph", "graph 3\nedge 0 1 1\nedge 1 2 1\n");
    CmdResult reduced = run("resist " + path.string() + " 0 2 --method reduce --trace");
    CHECK(reduced.status == 0);
    CHECK(reduced.out.substr(0, 2) == "2\n");
    CHECK(reduced.out.find("series") != std::string::npos);

    auto g331 = write_temp("spanres_g331.graph", graph_to_string(build_gmnp(3, 3, 1)));
    CHECK(run("resist " + g331.string() + " 0 3").out == "5/4\n");
}

TEST_CASE("kf command") {
    auto k3 = write_temp("spanres_k3b.graph", graph_to_string(complete_graph(3)));
    CHECK(run("kf " + k3.string()).out == "2\n");
    auto c6 = write_temp("spanres_c6.graph", graph_to_string(build_gmnp(3, 3, 3)));
    CHECK(run("kf " + c6.string()).out == "35/2\n");
    auto single = write_temp("spanres_single.graph", "graph 2\nedge 0 1 1\n");
    CHECK(run("kf " + single.string()).out == "1\n");
}

TEST_CASE("formula command") {
    CHECK(run("formula matching 4 5 2").out == "5040\n");
    CHECK(run("formula gmnp 3 3 1").out == "36\n");
    CHECK(run("formula kf-shi-chen 3 3").out == "35/2\n");
    CHECK(run("formula moon 4 2 2").out == "4\n");
    CmdResult table = run("formula r-table 3 3 1");
    CHECK(table.status == 0);
    CHECK(table.out.find("r11 = 7/12") != std::string::npos);
    CHECK(table.out.find("r5 = 5/4") != std::string::npos);
    CmdResult ratio = run("formula ratio-tree 3 3 1 1");
    CHECK(ratio.out.find("ratio_t = 7/15") != std::string::npos);
}

TEST_CASE("exit codes are stable") {
    // usage / parse problems -> 2
    CHECK(run("nonsense").status == 2);
    CHECK(run("gen kmn 2").status == 2);
    CHECK(run("formula unknown 1").status == 2);
    auto bad = write_temp("spanres_bad.graph", "graph 2\nedge 0 0 1\n");
    CHECK(run("tau " + bad.string()).status == 2);

    // domain errors -> 3
    CHECK(run("gen gmnp 3 3 9").status == 3);
    CHECK(run("formula kf-shi-chen 2 1").status == 3);
    auto disc = write_temp("spanres_disc2.graph", "graph 3\nedge 0 1 1\n");
    CHECK(run("resist " + disc.string() + " 0 2").status == 3);
    CHECK(run("kf " + disc.string()).status == 3);

    // non-series-parallel -> 4
    auto k4 = write_temp("spanres_k4.graph", graph_to_string(complete_graph(4)));
    CHECK(run("resist " + k4.string() + " 0 1 --method reduce").status == 4);

    // success -> 0, verify failure path exercised in the verify suite
    CHECK(run("formula cayley 4").status == 0);
    CHECK(run("--help").status == 0);
}

TEST_CASE("verify command smoke") {
    CmdResult r = run("verify --suite gmnp --max-m 3 --max-n 3 --jobs 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}
