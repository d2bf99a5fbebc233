// Shared fixtures and scaffolding for the test binaries. The three named
// graphs are built inline, independent of the file parser; the cli_io tests
// separately assert that the shipped fixture files parse to these exact
// graphs.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cmapf/topo_graph.hpp"

namespace fixtures {

using Edge = std::pair<cmapf::NodeId, cmapf::NodeId>;

// Expands undirected pairs into both directions and tacks on a self-loop for
// every node, matching the "moveu ... plus loops" shape of the data files.
inline cmapf::TopoGraph undirected_reflexive(std::size_t nodes,
                                             const std::vector<Edge>& moveu,
                                             const std::vector<Edge>& comm) {
    std::vector<Edge> move;
    for (auto [u, v] : moveu) {
        move.emplace_back(u, v);
        move.emplace_back(v, u);
    }
    for (cmapf::NodeId v = 0; v < nodes; ++v)
        move.emplace_back(v, v);
    return cmapf::TopoGraph::build(nodes, 0, move, comm);
}

// Path 0-1-2 with communication along the path. Sight-moveable, not
// complete-communication.
inline cmapf::TopoGraph p3() {
    return undirected_reflexive(3, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}});
}

// Movement triangle with all-pairs communication. Complete-communication.
inline cmapf::TopoGraph k3() {
    return undirected_reflexive(3, {{0, 1}, {0, 2}, {1, 2}},
                                {{0, 1}, {0, 2}, {1, 2}});
}

// Eleven-node mission graph: two clusters bridged by the corridor 4-5-6.
// Neighbor-communicable but not sight-moveable; the offending communication
// edges are (2,8) and (3,7).
inline cmapf::TopoGraph fig1() {
    return undirected_reflexive(
        11,
        {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}, {4, 5},
         {5, 6}, {6, 7}, {6, 8}, {6, 9}, {6, 10}, {7, 10}, {8, 9}, {9, 10}},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4},
         {2, 8}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8},
         {6, 9}, {6, 10}, {7, 9}, {7, 10}, {8, 9}, {8, 10}, {9, 10}});
}

// Directory holding the shipped .cmapf files, exported by the test driver.
inline std::string data_path(const std::string& name) {
    const char* dir = std::getenv("CMAPF_DATA");
    return std::string(dir ? dir : "data/fixtures") + "/" + name;
}

}  // namespace fixtures

namespace cliproc {

struct Result {
    int exit_code = -1;
    std::string output;  // stdout only; stderr goes to the terminal
};

// Runs the installed cmapf binary with the given arguments. Arguments are
// wrapped in single quotes; none of the tests need quoting beyond that.
inline Result run(const std::string& args) {
    const char* bin = std::getenv("CMAPF_BIN");
    std::string cmd = std::string(bin ? bin : "./cmapf") + " " + args;
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace cliproc
