#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "cmapf/errors.hpp"

namespace cmapf {

using NodeId = std::uint32_t;

// Distance value for nodes the communication BFS cannot reach.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// A graph with two edge relations over one node set: a directed movement
// relation (which node an agent may step to) and an undirected communication
// relation (which node pairs can exchange data), plus a distinguished base
// node representing the supervision station.
//
// Node ids are dense 0..node_count()-1. Communication edges are stored
// canonically as (min,max) pairs. Self-communication v~v is implicitly true
// and never stored; movement self-loops, by contrast, are real edges and
// required for an agent to stay put.
//
// Immutable after build(); all member queries are const and thread-safe.
class TopoGraph {
public:
    static TopoGraph build(std::size_t node_count, NodeId base,
                           std::vector<std::pair<NodeId, NodeId>> move,
                           std::vector<std::pair<NodeId, NodeId>> comm);

    std::size_t node_count() const { return move_out_.size(); }
    NodeId base() const { return base_; }

    bool has_move(NodeId u, NodeId v) const;
    // True for u == v (implicit self-communication).
    bool has_comm(NodeId u, NodeId v) const;

    // Movement successors of u, ascending. Includes u itself only if the
    // self-loop edge is present.
    std::span<const NodeId> move_out(NodeId u) const { return move_out_[u]; }
    // Communication neighbors of v, ascending, excluding v itself.
    std::span<const NodeId> comm_neighbors(NodeId v) const { return comm_adj_[v]; }

    // Sorted, deduplicated edge lists as stored.
    const std::vector<std::pair<NodeId, NodeId>>& move_edges() const { return move_edges_; }
    const std::vector<std::pair<NodeId, NodeId>>& comm_edges() const { return comm_edges_; }

    bool operator==(const TopoGraph&) const = default;

private:
    NodeId base_ = 0;
    std::vector<std::vector<NodeId>> move_out_;
    std::vector<std::vector<NodeId>> comm_adj_;
    std::vector<std::pair<NodeId, NodeId>> move_edges_;
    std::vector<std::pair<NodeId, NodeId>> comm_edges_;
};

// Which graph classes the input falls into, with witnesses for every failed
// property. The flags form a chain: complete_communication implies
// sight_moveable implies (neighbor_communicable and undirected and reflexive).
struct GraphClassReport {
    bool undirected = false;
    bool reflexive = false;
    bool neighbor_communicable = false;
    bool sight_moveable = false;
    bool complete_communication = false;

    // Witnesses for each class's own condition. A list being empty means
    // that condition holds; the flag above it may still be false because a
    // weaker class already failed (the flags are conjunctions down the
    // chain).
    std::vector<std::pair<NodeId, NodeId>> missing_reverse_moves;   // undirected
    std::vector<NodeId> missing_self_loops;                         // reflexive
    std::vector<std::pair<NodeId, NodeId>> uncommunicable_moves;    // neighbor_communicable
    std::vector<std::pair<NodeId, NodeId>> blind_comm_edges;        // sight_moveable
    std::vector<std::pair<NodeId, NodeId>> missing_comm_pairs;      // complete_communication
};

GraphClassReport classify(const TopoGraph& g);

// True iff a movement path v = p1 -> ... -> pn = w exists whose every node
// lies in v's communication neighborhood (v itself included). This is the
// per-edge condition of the sight-moveable class; (v,w) must be a stored
// communication edge.
bool sight_moveable_pair(const TopoGraph& g, NodeId v, NodeId w);

// True iff the communication graph induced on s is connected. Empty and
// singleton sets count as connected. Base membership is not assumed; callers
// that want the agents-plus-base condition add the base themselves.
bool comm_connected_subset(const TopoGraph& g, std::span<const NodeId> s);

// BFS hop distance from the base in the communication graph, kUnreachable
// where no path exists.
std::vector<std::uint32_t> comm_hop_distances(const TopoGraph& g);

// True iff t is within n communication hops of s. Layered BFS that stops at
// depth n; kept independent of comm_hop_distances on purpose so the two can
// cross-check each other.
bool bounded_comm_reach(const TopoGraph& g, NodeId s, NodeId t, std::size_t n);

}  // namespace cmapf
