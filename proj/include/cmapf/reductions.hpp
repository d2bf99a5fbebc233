#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmapf/plan_semantics.hpp"
#include "cmapf/topo_graph.hpp"

namespace cmapf {

// A CNF formula with at most three literals per clause. Literals use the
// DIMACS convention: +v is variable v, -v its negation, variables 1-based.
struct Formula3Sat {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;

    // Validates and canonicalizes: variables in range, no zero literals, no
    // empty clauses, at most three literals each after deduplication. Throws
    // InvalidFormula otherwise.
    static Formula3Sat make(int variable_count, std::vector<std::vector<int>> clauses);
};

// A rectangular cell map: the input of the Hamiltonian-cycle reduction and of
// the grid instance generator. Cells are addressed (x, y) with x the column
// and y the row; `blocked` is row-major.
struct GridGraph {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> blocked;
    int base_x = 0;
    int base_y = 0;

    bool in_range(int x, int y) const {
        return 0 <= x && x < width && 0 <= y && y < height;
    }
    bool is_blocked(int x, int y) const {
        return blocked[static_cast<std::size_t>(y) * width + x] != 0;
    }
};

// The problem a reduction emits alongside its graph.
struct CoverTask {
    std::size_t agents;
};
struct BReachTask {
    Configuration target;
    std::size_t max_moves;
};
struct BCoverTask {
    std::size_t agents;
    std::size_t max_moves;
};
using ReducedTask = std::variant<CoverTask, BReachTask, BCoverTask>;

struct ReducedInstance {
    TopoGraph graph;
    ReducedTask task;
    // One human-readable role name per node ("B", "s1", "g_x2", ...), for
    // export and debugging; node ids are what the task refers to.
    std::vector<std::string> labels;
};

// Turns a reachability question on an arbitrary directed graph into a
// coverage question on an extended graph with the same agent count. The k
// target nodes c_1..c_k each grow a private two-node ladder c_i -> s_i -> v_i;
// v_1 connects back to every copy node in both directions, v_k keeps a
// self-loop, and every v_i has an exit edge to the base. Communication added:
// s_1 to the base, chains along the s-row and the v-row, and v_k to every
// node. Covering the extension forces the agents through the configuration
// (s_1..s_k), which is reachable exactly when the original targets are.
// Requires a base self-loop (throws BaseSelfLoopMissing).
ReducedInstance reduce_reach_to_cover_dir(const TopoGraph& g, const Configuration& target);

// Same idea for neighbor-communicable inputs, where every added movement edge
// must be mirrored as a communication edge. The mirrors would let agents idle
// near the base of a short ladder, so each target column instead climbs
// through 2k+2 loop-free fresh nodes (two stacked blocks of k+1 rows, the top
// row being v_1..v_k). Rows are comm-chained left to right; in the lower
// block the column-1 node of each row reaches the base, in the upper block
// the column-k node does. With no self-loops on the columns, k agents can
// only reach the v-row by climbing one full row per step in lockstep.
// v_1 exchanges with the copy through two one-way wires of k+1 fresh nodes
// each (one from every copy node up to v_1, one from v_1 down to every copy
// node); their length makes them dead ends for fewer than k+1 agents, so the
// wires are unusable before the v-row has been won. v_k keeps a self-loop,
// communicates with every node, and exits to the base.
// Throws NotNeighborCommunicable or BaseSelfLoopMissing.
ReducedInstance reduce_reach_to_cover_nc(const TopoGraph& g, const Configuration& target);

// 3-SAT to bounded reachability with n+m agents and three transitions. Each
// variable gets a fork B - n_x - x - g_x / B - n_nx - nx - g_x whose middle
// nodes communicate with the base; each clause gets a spur B - n_c - c - g_c
// where c communicates exactly with its literal nodes. Reaching all goal
// nodes in three steps forces one agent through either x or nx per variable
// (a truth assignment) and one through each c, which is connected at the
// middle step iff some chosen literal satisfies the clause. The goal nodes
// are movement-chained and tied back to the base through a three-node path
// whose nodes form a communication clique with g_x1 and B, which keeps the
// final configuration connected.
ReducedInstance reduce_3sat_to_breach_sm(const Formula3Sat& phi);

// Grid Hamiltonian cycle to bounded coverage with a single agent: free cells
// become nodes, movement is 4-neighbor adjacency plus self-loops (class
// conformance; idling cannot help because the budget is exact), and
// communication is all-pairs. A covering execution of |V| transitions exists
// iff the grid has a Hamiltonian cycle. Throws DisconnectedGrid.
ReducedInstance reduce_ghc_to_bcover_cc(const GridGraph& grid);

// Largest sight-moveable subrelation: repeatedly removes communication edges
// that fail the per-edge sight condition in either direction until a fixpoint
// is reached. Movement-mirrored edges always satisfy the condition via the
// one-step path and are never touched, so on an undirected, reflexive,
// neighbor-communicable input the result classifies as sight-moveable.
// Throws PreconditionViolated if the input is not such a graph.
TopoGraph sm_closure(const TopoGraph& g);

// Which class a generated graph is coerced into. Raw leaves the rolled edges
// untouched; Nc mirrors movement into communication; Sm additionally makes
// movement undirected and reflexive and applies sm_closure; Cc replaces
// communication with all-pairs.
enum class TargetClass { Raw, Nc, Sm, Cc };

// Occupancy-grid instance: nodes are the free cells of a width x height grid
// with the given obstacles, base at cell (0,0). Movement is 4-neighbor
// adjacency plus self-loops. Two cells communicate when their centers are
// within comm_radius (Euclidean) and the Bresenham segment between them
// crosses no obstacle cell. The result is then coerced to target_class.
// Throws BaseBlocked, DisconnectedGrid, RangeError.
TopoGraph gen_grid_instance(int width, int height,
                            const std::vector<std::pair<int, int>>& obstacles,
                            double comm_radius, TargetClass target_class);

// Seeded random graph: every ordered node pair rolls a movement edge with
// move_prob, every node a self-loop (the base always gets one), and every
// unordered pair a communication edge with comm_prob; the graph is then
// coerced to target_class, and only the base's movement-connected component
// is kept (ids compacted, base stays 0). Identical inputs give identical
// graphs on every platform: randomness is drawn from mt19937 in a fixed
// order and thresholded directly, with no distribution adapters.
TopoGraph gen_random(std::size_t node_count, double move_prob, double comm_prob,
                     TargetClass target_class, std::uint64_t seed);

}  // namespace cmapf
