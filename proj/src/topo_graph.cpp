#include "cmapf/topo_graph.hpp"

#include <algorithm>
#include <queue>

namespace cmapf {

TopoGraph TopoGraph::build(std::size_t node_count, NodeId base,
                           std::vector<std::pair<NodeId, NodeId>> move,
                           std::vector<std::pair<NodeId, NodeId>> comm) {
    if (node_count == 0)
        throw RangeError("graph needs at least one node");
    if (base >= node_count)
        throw RangeError("base " + std::to_string(base) + " out of range (node count " +
                         std::to_string(node_count) + ")");
    auto check = [node_count](NodeId v) {
        if (v >= node_count)
            throw RangeError("node id " + std::to_string(v) + " out of range (node count " +
                             std::to_string(node_count) + ")");
    };

    TopoGraph g;
    g.base_ = base;
    g.move_out_.resize(node_count);
    g.comm_adj_.resize(node_count);

    for (auto& [u, v] : move) {
        check(u);
        check(v);
    }
    std::sort(move.begin(), move.end());
    move.erase(std::unique(move.begin(), move.end()), move.end());
    g.move_edges_ = std::move(move);
    for (auto [u, v] : g.move_edges_)
        g.move_out_[u].push_back(v);

    for (auto& [u, v] : comm) {
        check(u);
        check(v);
        if (u > v) std::swap(u, v);  // canonical (min,max)
    }
    std::sort(comm.begin(), comm.end());
    comm.erase(std::unique(comm.begin(), comm.end()), comm.end());
    // Self pairs are implicit; drop them rather than store redundant loops.
    std::erase_if(comm, [](const auto& e) { return e.first == e.second; });
    g.comm_edges_ = std::move(comm);
    for (auto [u, v] : g.comm_edges_) {
        g.comm_adj_[u].push_back(v);
        g.comm_adj_[v].push_back(u);
    }
    for (auto& adj : g.comm_adj_)
        std::sort(adj.begin(), adj.end());
    return g;
}

bool TopoGraph::has_move(NodeId u, NodeId v) const {
    const auto& out = move_out_[u];
    return std::binary_search(out.begin(), out.end(), v);
}

bool TopoGraph::has_comm(NodeId u, NodeId v) const {
    if (u == v) return true;
    const auto& adj = comm_adj_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool sight_moveable_pair(const TopoGraph& g, NodeId v, NodeId w) {
    if (v == w || !g.has_comm(v, w))
        throw NotACommEdge("(" + std::to_string(v) + "," + std::to_string(w) +
                           ") is not a communication edge");
    // BFS over movement edges restricted to {v} + comm neighborhood of v.
    std::vector<char> allowed(g.node_count(), 0);
    allowed[v] = 1;
    for (NodeId u : g.comm_neighbors(v))
        allowed[u] = 1;
    std::vector<char> seen(g.node_count(), 0);
    std::queue<NodeId> q;
    seen[v] = 1;
    q.push(v);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        if (u == w) return true;
        for (NodeId x : g.move_out(u)) {
            if (allowed[x] && !seen[x]) {
                seen[x] = 1;
                q.push(x);
            }
        }
    }
    return false;
}

GraphClassReport classify(const TopoGraph& g) {
    GraphClassReport r;

    for (auto [u, v] : g.move_edges()) {
        if (!g.has_move(v, u))
            r.missing_reverse_moves.emplace_back(u, v);
        if (!g.has_comm(u, v))
            r.uncommunicable_moves.emplace_back(u, v);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.has_move(v, v))
            r.missing_self_loops.push_back(v);
    }
    r.undirected = r.missing_reverse_moves.empty();
    r.reflexive = r.missing_self_loops.empty();
    r.neighbor_communicable = r.uncommunicable_moves.empty();

    // The per-edge path condition is directional, so check both orientations
    // of every stored communication edge.
    for (auto [u, v] : g.comm_edges()) {
        if (!sight_moveable_pair(g, u, v) || !sight_moveable_pair(g, v, u))
            r.blind_comm_edges.emplace_back(u, v);
    }
    r.sight_moveable = r.undirected && r.reflexive && r.neighbor_communicable &&
                       r.blind_comm_edges.empty();

    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
            if (!g.has_comm(u, v))
                r.missing_comm_pairs.emplace_back(u, v);
    r.complete_communication = r.sight_moveable && r.missing_comm_pairs.empty();
    return r;
}

bool comm_connected_subset(const TopoGraph& g, std::span<const NodeId> s) {
    if (s.size() <= 1) return true;
    std::vector<char> in_set(g.node_count(), 0);
    for (NodeId v : s)
        in_set[v] = 1;
    std::vector<char> seen(g.node_count(), 0);
    std::queue<NodeId> q;
    seen[s[0]] = 1;
    q.push(s[0]);
    std::size_t reached = 1;
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId x : g.comm_neighbors(u)) {
            if (in_set[x] && !seen[x]) {
                seen[x] = 1;
                ++reached;
                q.push(x);
            }
        }
    }
    // s may contain duplicates; count distinct members instead of s.size().
    std::size_t distinct = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        distinct += in_set[v];
    return reached == distinct;
}

std::vector<std::uint32_t> comm_hop_distances(const TopoGraph& g) {
    std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
    std::queue<NodeId> q;
    dist[g.base()] = 0;
    q.push(g.base());
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId x : g.comm_neighbors(u)) {
            if (dist[x] == kUnreachable) {
                dist[x] = dist[u] + 1;
                q.push(x);
            }
        }
    }
    return dist;
}

bool bounded_comm_reach(const TopoGraph& g, NodeId s, NodeId t, std::size_t n) {
    if (s >= g.node_count() || t >= g.node_count())
        throw RangeError("bounded_comm_reach: node id out of range");
    if (s == t) return true;
    std::vector<char> seen(g.node_count(), 0);
    seen[s] = 1;
    std::vector<NodeId> frontier{s};
    for (std::size_t depth = 0; depth < n && !frontier.empty(); ++depth) {
        std::vector<NodeId> next;
        for (NodeId u : frontier) {
            for (NodeId x : g.comm_neighbors(u)) {
                if (!seen[x]) {
                    if (x == t) return true;
                    seen[x] = 1;
                    next.push_back(x);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace cmapf
