#include "cmapf/poly_planners.hpp"

#include <algorithm>
#include <queue>

namespace cmapf {
namespace {

void check_nodes(const TopoGraph& g, const Configuration& c) {
    for (NodeId v : c.positions())
        if (v >= g.node_count())
            throw RangeError("target node " + std::to_string(v) + " out of range");
}

// Shortest movement path from `from` to `to` through nodes communicating
// with `from` (the sight-moveable pair condition, but returning the path).
// Empty result means unreachable. Deterministic: BFS visits neighbors in
// ascending order.
std::vector<NodeId> sight_path(const TopoGraph& g, NodeId from, NodeId to) {
    std::vector<char> allowed(g.node_count(), 0);
    allowed[from] = 1;
    for (NodeId u : g.comm_neighbors(from))
        allowed[u] = 1;
    std::vector<NodeId> parent(g.node_count(), kUnreachable);
    std::queue<NodeId> q;
    parent[from] = from;
    q.push(from);
    while (!q.empty() && parent[to] == kUnreachable) {
        NodeId u = q.front();
        q.pop();
        for (NodeId x : g.move_out(u)) {
            if (allowed[x] && parent[x] == kUnreachable) {
                parent[x] = u;
                q.push(x);
            }
        }
    }
    if (parent[to] == kUnreachable) return {};
    std::vector<NodeId> path;
    for (NodeId v = to; v != from; v = parent[v])
        path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

// Appends the current ordered agent positions as one configuration.
void emit(Execution& e, const std::vector<NodeId>& agents) {
    e.emplace_back(std::vector<NodeId>(agents));
}

// Walks one agent along `path` (starting at its current node, path.front()),
// emitting a configuration per hop; everyone else stands still on their
// self-loops.
void walk(Execution& e, std::vector<NodeId>& agents, std::size_t agent,
          const std::vector<NodeId>& path, std::vector<char>* visited = nullptr) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        agents[agent] = path[i];
        if (visited) (*visited)[path[i]] = 1;
        emit(e, agents);
    }
}

}  // namespace

PlanOutcome plan_reach_sm(const TopoGraph& g, const Configuration& target) {
    if (!classify(g).sight_moveable)
        throw NotSightMoveable("plan_reach_sm requires a sight-moveable graph");
    check_nodes(g, target);

    // Spanning tree of the comm graph induced on {base} + target set, BFS
    // from the base with ascending neighbor order.
    std::vector<char> member(g.node_count(), 0);
    member[g.base()] = 1;
    for (NodeId v : target.positions())
        member[v] = 1;
    std::vector<NodeId> tree_parent(g.node_count(), kUnreachable);
    std::vector<std::uint32_t> tree_depth(g.node_count(), 0);
    std::queue<NodeId> q;
    tree_parent[g.base()] = g.base();
    q.push(g.base());
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId x : g.comm_neighbors(u)) {
            if (member[x] && tree_parent[x] == kUnreachable) {
                tree_parent[x] = u;
                tree_depth[x] = tree_depth[u] + 1;
                q.push(x);
            }
        }
    }
    for (NodeId v : target.positions())
        if (tree_parent[v] == kUnreachable)
            return PlanOutcome::no_plan_at(v);  // not comm-connected to base

    // Deploy in nondecreasing tree depth so every ancestor of the agent in
    // motion is already occupied (or is the base). Stable sort keeps the
    // canonical node order among equal depths.
    std::vector<NodeId> order(target.positions().begin(), target.positions().end());
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return tree_depth[a] < tree_depth[b]; });

    std::vector<NodeId> agents(target.width(), g.base());
    Execution e;
    emit(e, agents);
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<NodeId> chain;  // base .. target, along tree parents
        for (NodeId v = order[k]; v != g.base(); v = tree_parent[v])
            chain.push_back(v);
        chain.push_back(g.base());
        std::reverse(chain.begin(), chain.end());
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            walk(e, agents, k, sight_path(g, chain[i], chain[i + 1]));
    }
    return PlanOutcome::found(std::move(e));
}

PlanOutcome plan_cover_sm(const TopoGraph& g, std::size_t agents_n) {
    if (!classify(g).sight_moveable)
        throw NotSightMoveable("plan_cover_sm requires a sight-moveable graph");
    if (agents_n == 0)
        throw ZeroAgents("coverage needs at least one agent");

    const auto dist = comm_hop_distances(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (dist[v] == kUnreachable || dist[v] > agents_n)
            return PlanOutcome::no_plan_at(v);

    // Comm-hop BFS predecessors from the base, ascending tie-break; shortest
    // relay chains to any node are read off this tree.
    std::vector<NodeId> pred(g.node_count(), kUnreachable);
    {
        std::queue<NodeId> q;
        pred[g.base()] = g.base();
        q.push(g.base());
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            for (NodeId x : g.comm_neighbors(u)) {
                if (pred[x] == kUnreachable) {
                    pred[x] = u;
                    q.push(x);
                }
            }
        }
    }

    std::vector<NodeId> agents(agents_n, g.base());
    std::vector<char> visited(g.node_count(), 0);
    visited[g.base()] = 1;
    Execution e;
    emit(e, agents);

    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (visited[v]) continue;
        std::vector<NodeId> relay;  // p_0 = base .. p_k = v, comm hops
        for (NodeId u = v; u != g.base(); u = pred[u])
            relay.push_back(u);
        relay.push_back(g.base());
        std::reverse(relay.begin(), relay.end());
        const std::size_t k = relay.size() - 1;  // k <= agents_n, checked above

        // Agent j walks out to relay[j+1], passing the already-seated relays.
        std::vector<std::vector<NodeId>> routes(k);
        for (std::size_t j = 0; j < k; ++j) {
            routes[j].push_back(g.base());
            for (std::size_t i = 0; i < j + 1; ++i) {
                auto seg = sight_path(g, relay[i], relay[i + 1]);
                routes[j].insert(routes[j].end(), seg.begin() + 1, seg.end());
            }
            walk(e, agents, j, routes[j], &visited);
        }
        // Deepest agent first, everyone retraces their own route home.
        for (std::size_t j = k; j-- > 0;) {
            std::vector<NodeId> back(routes[j].rbegin(), routes[j].rend());
            walk(e, agents, j, back, &visited);
        }
    }
    return PlanOutcome::found(std::move(e));
}

PlanOutcome plan_breach_cc(const TopoGraph& g, const Configuration& target,
                           std::size_t max_moves) {
    if (!classify(g).complete_communication)
        throw NotCompleteCommunication("plan_breach_cc requires complete communication");
    check_nodes(g, target);

    // Movement BFS from the base with predecessors.
    std::vector<NodeId> pred(g.node_count(), kUnreachable);
    std::vector<std::size_t> dist(g.node_count(), 0);
    std::queue<NodeId> q;
    pred[g.base()] = g.base();
    q.push(g.base());
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId x : g.move_out(u)) {
            if (pred[x] == kUnreachable) {
                pred[x] = u;
                dist[x] = dist[u] + 1;
                q.push(x);
            }
        }
    }
    for (NodeId v : target.positions())
        if (pred[v] == kUnreachable || dist[v] > max_moves)
            return PlanOutcome::no_plan_at(v);

    std::vector<std::vector<NodeId>> paths;
    std::size_t longest = 0;
    for (NodeId v : target.positions()) {
        std::vector<NodeId> p;
        for (NodeId u = v; u != g.base(); u = pred[u])
            p.push_back(u);
        p.push_back(g.base());
        std::reverse(p.begin(), p.end());
        longest = std::max(longest, p.size() - 1);
        paths.push_back(std::move(p));
    }

    // Everyone steps at once; agents already at their goal sit on the
    // self-loop (present: complete communication implies reflexive).
    Execution e;
    for (std::size_t t = 0; t <= longest; ++t) {
        std::vector<NodeId> cfg;
        for (const auto& p : paths)
            cfg.push_back(p[std::min(t, p.size() - 1)]);
        e.emplace_back(std::move(cfg));
    }
    return PlanOutcome::found(std::move(e));
}

}  // namespace cmapf
