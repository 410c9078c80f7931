#include "spanres/graph_io.hpp"

#include "spanres/errors.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace spanres {

namespace {

long long parse_count(const std::string& token, const char* what) {
    try {
        return BigInt::from_string(token).to_long_long();
    } catch (const Error&) {
        throw ParseError(std::string("invalid ") + what + ": '" + token + "'");
    }
}

}  // namespace

Multigraph read_graph(std::istream& in) {
    std::optional<Multigraph> graph;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;  // blank line
        if (keyword[0] == '#') continue;

        const std::string where = " (line " + std::to_string(line_no) + ")";
        if (keyword == "graph") {
            if (graph) throw ParseError("duplicate graph header" + where);
            std::string count;
            if (!(ls >> count)) throw ParseError("graph header without vertex count" + where);
            long long n = parse_count(count, "vertex count");
            if (n < 0) throw ParseError("negative vertex count" + where);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after graph header" + where);
            graph.emplace(static_cast<int>(n));
        } else if (keyword == "edge") {
            if (!graph) throw ParseError("edge before graph header" + where);
            std::string us, vs, ws;
            if (!(ls >> us >> vs >> ws)) throw ParseError("edge line needs 'edge u v weight'" + where);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after edge" + where);
            long long u = parse_count(us, "vertex index");
            long long v = parse_count(vs, "vertex index");
            Rational weight;
            try {
                weight = Rational::from_string(ws);
            } catch (const Error&) {
                throw ParseError("invalid edge weight: '" + ws + "'" + where);
            }
            try {
                graph->add_edge(static_cast<int>(u), static_cast<int>(v), std::move(weight));
            } catch (const DomainError& e) {
                throw ParseError(std::string(e.what()) + where);
            }
        } else {
            throw ParseError("unknown directive '" + keyword + "'" + where);
        }
    }
    if (!graph) throw ParseError("missing graph header");
    return *graph;
}

Multigraph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << "graph " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges())
        out << "edge " << e.u << " " << e.v << " " << e.weight.to_string() << "\n";
}

std::string graph_to_string(const Multigraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace spanres
