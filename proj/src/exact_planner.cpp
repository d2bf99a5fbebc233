#include "cmapf/exact_planner.hpp"

#include <algorithm>
#include <unordered_map>

namespace cmapf {
namespace {

struct StateKey {
    std::vector<NodeId> pos;  // canonical (sorted)
    std::uint64_t visited;    // 0 when the search does not track coverage

    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::size_t h = std::hash<std::uint64_t>{}(k.visited);
        for (NodeId v : k.pos)
            h = h * 1099511628211ULL + v;  // FNV-style fold
        return h;
    }
};

std::uint64_t position_bits(const std::vector<NodeId>& pos) {
    std::uint64_t bits = 0;
    for (NodeId v : pos)
        bits |= std::uint64_t{1} << v;
    return bits;
}

// All canonical successor position vectors of a canonical position vector:
// every agent takes some movement edge. Agents sharing a node are
// interchangeable, so choices for a run of j agents on one node are
// enumerated as sorted j-multisets over that node's successors rather than
// as j independent picks.
class SuccessorGen {
public:
    SuccessorGen(const TopoGraph& g, const std::vector<NodeId>& pos) : g_(g) {
        for (std::size_t i = 0; i < pos.size();) {
            std::size_t j = i;
            while (j < pos.size() && pos[j] == pos[i])
                ++j;
            groups_.emplace_back(pos[i], j - i);
            i = j;
        }
    }

    // Sorted lexicographically, no duplicates. Empty when some agent is
    // stuck on a node without outgoing movement edges.
    std::vector<std::vector<NodeId>> all() {
        out_.clear();
        scratch_.clear();
        emit_group(0);
        for (auto& s : out_)
            std::sort(s.begin(), s.end());
        std::sort(out_.begin(), out_.end());
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        return std::move(out_);
    }

private:
    void emit_group(std::size_t gi) {
        if (gi == groups_.size()) {
            out_.push_back(scratch_);
            return;
        }
        auto [node, count] = groups_[gi];
        auto succ = g_.move_out(node);
        if (succ.empty()) return;
        pick(gi, succ, count, 0);
    }

    // Nondecreasing choice of `left` successors starting at index `from`.
    void pick(std::size_t gi, std::span<const NodeId> succ, std::size_t left,
              std::size_t from) {
        if (left == 0) {
            emit_group(gi + 1);
            return;
        }
        for (std::size_t i = from; i < succ.size(); ++i) {
            scratch_.push_back(succ[i]);
            pick(gi, succ, left - 1, i);
            scratch_.pop_back();
        }
    }

    const TopoGraph& g_;
    std::vector<std::pair<NodeId, std::size_t>> groups_;
    std::vector<NodeId> scratch_;
    std::vector<std::vector<NodeId>> out_;
};

struct SearchSpace {
    std::vector<StateKey> states;                                   // id -> key
    std::vector<std::uint32_t> parent;                              // id -> id
    std::vector<std::uint32_t> depth;                               // id -> transitions
    std::unordered_map<StateKey, std::uint32_t, StateKeyHash> ids;  // key -> id

    // Returns the id if the key is new, nullopt if seen before.
    std::optional<std::uint32_t> add(StateKey key, std::uint32_t from_depth,
                                     std::uint32_t parent_id) {
        auto [it, inserted] = ids.try_emplace(std::move(key),
                                              static_cast<std::uint32_t>(states.size()));
        if (!inserted) return std::nullopt;
        states.push_back(it->first);
        parent.push_back(parent_id);
        depth.push_back(from_depth);
        return it->second;
    }

    Execution reconstruct(std::uint32_t id) const {
        std::vector<Configuration> plan;
        for (std::uint32_t cur = id;; cur = parent[cur]) {
            plan.emplace_back(std::vector<NodeId>(states[cur].pos));
            if (parent[cur] == cur) break;
        }
        std::reverse(plan.begin(), plan.end());
        return plan;
    }
};

// Movement BFS distance from every node to `to`, following edges backwards.
std::vector<std::uint32_t> dist_to(const TopoGraph& g, NodeId to) {
    std::vector<std::vector<NodeId>> rev(g.node_count());
    for (auto [u, v] : g.move_edges())
        rev[v].push_back(u);
    std::vector<std::uint32_t> d(g.node_count(), kUnreachable);
    std::vector<NodeId> queue{to};
    d[to] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId cur = queue[head];
        for (NodeId prev : rev[cur])
            if (d[prev] == kUnreachable) {
                d[prev] = d[cur] + 1;
                queue.push_back(prev);
            }
    }
    return d;
}

// Perfect matching between agents and target slots where agent i may take
// slot j only if allowed(i, j). Kuhn's augmenting paths; sizes are tiny.
template <typename Allowed>
bool has_perfect_matching(std::size_t k, Allowed allowed) {
    std::vector<int> slot_of(k, -1);
    std::vector<char> seen(k);
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (std::size_t j = 0; j < k; ++j) {
            if (seen[j] || !allowed(i, j)) continue;
            seen[j] = 1;
            if (slot_of[j] < 0 || self(self, static_cast<std::size_t>(slot_of[j]))) {
                slot_of[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(augment, i)) return false;
    }
    return true;
}

// Core BFS shared by all four searches. `track_visited` enables the coverage
// bitmask; `goal` is tested on every newly created state including the root.
// `prune` may drop states that provably cannot lead to the goal within the
// remaining transitions; it sees the candidate state and its depth.
template <typename Goal, typename Prune>
PlanOutcome bfs(const TopoGraph& g, std::size_t agents, bool track_visited,
                std::optional<std::size_t> depth_limit, const SearchBudget& budget,
                Goal goal, Prune prune) {
    if (agents == 0)
        throw ZeroAgents("search needs at least one agent");
    if (track_visited && g.node_count() > 64)
        throw Error("coverage search supports at most 64 nodes");
    if (budget.max_depth) {
        std::size_t cap = *budget.max_depth;
        depth_limit = depth_limit ? std::min(*depth_limit, cap) : cap;
    }

    SearchSpace space;
    StateKey root{std::vector<NodeId>(agents, g.base()), 0};
    if (track_visited)
        root.visited = position_bits(root.pos);
    space.add(root, 0, 0);
    if (goal(space.states[0])) {
        PlanOutcome out = PlanOutcome::found(space.reconstruct(0));
        out.states_explored = 1;
        return out;
    }

    for (std::uint32_t head = 0; head < space.states.size(); ++head) {
        const std::uint32_t cur_depth = space.depth[head];
        if (depth_limit && cur_depth >= *depth_limit)
            continue;  // would exceed the transition bound
        // Copy: space.states may reallocate while we expand.
        const StateKey cur = space.states[head];
        for (auto& next_pos : SuccessorGen(g, cur.pos).all()) {
            if (space.states.size() >= budget.max_states) {
                PlanOutcome out = PlanOutcome::out_of_budget(space.states.size());
                return out;
            }
            StateKey next{std::move(next_pos), 0};
            if (track_visited)
                next.visited = cur.visited | position_bits(next.pos);
            // Validity filter: agents plus base must stay comm-connected.
            std::vector<NodeId> with_base = next.pos;
            with_base.push_back(g.base());
            if (!comm_connected_subset(g, with_base))
                continue;
            if (prune(next, cur_depth + 1))
                continue;
            auto id = space.add(std::move(next), cur_depth + 1, head);
            if (id && goal(space.states[*id])) {
                PlanOutcome out = PlanOutcome::found(space.reconstruct(*id));
                out.states_explored = space.states.size();
                return out;
            }
        }
    }

    PlanOutcome out = PlanOutcome::no_plan();
    out.states_explored = space.states.size();
    return out;
}

void check_target(const TopoGraph& g, const Configuration& target) {
    for (NodeId v : target.positions())
        if (v >= g.node_count())
            throw RangeError("target node " + std::to_string(v) + " out of range");
}

}  // namespace

PlanOutcome search_reach(const TopoGraph& g, const Configuration& target,
                         const SearchBudget& budget) {
    check_target(g, target);
    // An invalid target can never be reached; every enqueued state is valid.
    if (!is_valid_configuration(g, target))
        return PlanOutcome::no_plan();
    const std::vector<NodeId> want(target.positions().begin(), target.positions().end());
    return bfs(
        g, target.width(), false, std::nullopt, budget,
        [&](const StateKey& s) { return s.pos == want; },
        [](const StateKey&, std::uint32_t) { return false; });
}

PlanOutcome search_breach(const TopoGraph& g, const Configuration& target,
                          std::size_t max_moves, const SearchBudget& budget) {
    check_target(g, target);
    if (!is_valid_configuration(g, target))
        return PlanOutcome::no_plan();
    const std::vector<NodeId> want(target.positions().begin(), target.positions().end());
    // A state is worth keeping only if the agents can still be matched onto
    // the target slots within the remaining transitions. Necessary but not
    // sufficient, so pruning on it never flips a feasible answer.
    std::vector<std::vector<std::uint32_t>> slot_dist;
    for (NodeId t : want)
        slot_dist.push_back(dist_to(g, t));
    auto prune = [&](const StateKey& s, std::uint32_t depth) {
        const std::uint32_t remaining =
            static_cast<std::uint32_t>(max_moves) - depth;
        return !has_perfect_matching(want.size(), [&](std::size_t i, std::size_t j) {
            return slot_dist[j][s.pos[i]] <= remaining;
        });
    };
    return bfs(
        g, target.width(), false, max_moves, budget,
        [&](const StateKey& s) { return s.pos == want; }, prune);
}

namespace {

PlanOutcome cover_search(const TopoGraph& g, std::size_t agents,
                         std::optional<std::size_t> depth_limit,
                         const SearchBudget& budget) {
    const std::uint64_t all =
        g.node_count() == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << g.node_count()) - 1;
    const std::vector<NodeId> home(agents, g.base());
    auto goal = [&](const StateKey& s) {
        return s.visited == all && s.pos == home;
    };
    if (!depth_limit)
        return bfs(g, agents, true, depth_limit, budget, goal,
                   [](const StateKey&, std::uint32_t) { return false; });

    // Depth-limited coverage: within the remaining transitions every agent
    // must make it home, and for every unvisited node some agent must be
    // able to pass through it on a way home. Both are necessary conditions.
    std::vector<std::vector<std::uint32_t>> from(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        from[v] = dist_to(g, v);  // from[v][u] = movement dist u -> v
    const std::vector<std::uint32_t>& home_dist = from[g.base()];
    auto prune = [&](const StateKey& s, std::uint32_t depth) {
        const std::uint32_t remaining =
            static_cast<std::uint32_t>(*depth_limit) - depth;
        for (NodeId p : s.pos)
            if (home_dist[p] > remaining) return true;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (s.visited >> v & 1) continue;
            if (home_dist[v] == kUnreachable) return true;
            std::uint32_t best = kUnreachable;
            for (NodeId p : s.pos)
                best = std::min(best, from[v][p]);
            if (best == kUnreachable || best + home_dist[v] > remaining)
                return true;
        }
        return false;
    };
    return bfs(g, agents, true, depth_limit, budget, goal, prune);
}

}  // namespace

PlanOutcome search_cover(const TopoGraph& g, std::size_t agents,
                         const SearchBudget& budget) {
    return cover_search(g, agents, std::nullopt, budget);
}

PlanOutcome search_bcover(const TopoGraph& g, std::size_t agents,
                          std::size_t max_moves, const SearchBudget& budget) {
    return cover_search(g, agents, max_moves, budget);
}

}  // namespace cmapf
