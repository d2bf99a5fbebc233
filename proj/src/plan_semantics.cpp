#include "cmapf/plan_semantics.hpp"

#include <algorithm>

namespace cmapf {

Configuration::Configuration(std::vector<NodeId> positions)
    : positions_(std::move(positions)) {
    if (positions_.empty())
        throw ZeroAgents("a configuration needs at least one agent");
    std::sort(positions_.begin(), positions_.end());
}

Configuration Configuration::all_at(NodeId v, std::size_t n) {
    return Configuration(std::vector<NodeId>(n, v));
}

bool ValidationReport::has(FailureKind kind, std::size_t step) const {
    return std::any_of(failures.begin(), failures.end(), [&](const ValidationFailure& f) {
        return f.kind == kind && f.step == step;
    });
}

bool is_valid_configuration(const TopoGraph& g, const Configuration& c) {
    std::vector<NodeId> with_base(c.positions().begin(), c.positions().end());
    with_base.push_back(g.base());
    return comm_connected_subset(g, with_base);
}

bool is_legal_step_ordered(const TopoGraph& g, std::span<const NodeId> from,
                           std::span<const NodeId> to) {
    if (from.size() != to.size()) return false;
    for (std::size_t i = 0; i < from.size(); ++i)
        if (!g.has_move(from[i], to[i]))
            return false;
    return true;
}

namespace {

// Kuhn's augmenting-path matching on the bipartite graph whose left side is
// the occurrences of `from`, right side the occurrences of `to`, with an edge
// where a movement edge connects the underlying nodes.
bool perfect_move_matching(const TopoGraph& g, std::span<const NodeId> from,
                           std::span<const NodeId> to) {
    const std::size_t n = from.size();
    std::vector<int> match_right(n, -1);
    std::vector<char> used(n, 0);

    auto try_augment = [&](auto&& self, std::size_t left) -> bool {
        for (std::size_t right = 0; right < n; ++right) {
            if (used[right] || !g.has_move(from[left], to[right])) continue;
            used[right] = 1;
            if (match_right[right] < 0 ||
                self(self, static_cast<std::size_t>(match_right[right]))) {
                match_right[right] = static_cast<int>(left);
                return true;
            }
        }
        return false;
    };

    for (std::size_t left = 0; left < n; ++left) {
        std::fill(used.begin(), used.end(), 0);
        if (!try_augment(try_augment, left))
            return false;
    }
    return true;
}

}  // namespace

bool is_legal_step_multiset(const TopoGraph& g, const Configuration& from,
                            const Configuration& to) {
    if (from.width() != to.width()) return false;
    return perfect_move_matching(g, from.positions(), to.positions());
}

ValidationReport validate_execution(const TopoGraph& g, const Execution& e,
                                    bool require_covering, std::size_t agent_count) {
    if (e.empty())
        throw Error("validate_execution: empty execution");
    for (const Configuration& c : e)
        if (c.width() != agent_count)
            throw AgentCountMismatch("execution width " + std::to_string(c.width()) +
                                     " does not match agent count " +
                                     std::to_string(agent_count));

    ValidationReport report;
    auto fail = [&report](FailureKind kind, std::size_t step,
                          std::optional<NodeId> node = std::nullopt) {
        report.failures.push_back({kind, step, node});
    };

    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!is_valid_configuration(g, e[i]))
            fail(FailureKind::Disconnected, i);
        if (i > 0 && !is_legal_step_multiset(g, e[i - 1], e[i]))
            fail(FailureKind::IllegalMove, i);
    }

    if (require_covering) {
        const Configuration at_base = Configuration::all_at(g.base(), agent_count);
        if (e.front() != at_base)
            fail(FailureKind::BadStart, 0);
        if (e.back() != at_base)
            fail(FailureKind::BadEnd, e.size() - 1);
        std::vector<char> visited(g.node_count(), 0);
        for (const Configuration& c : e)
            for (NodeId v : c.positions())
                visited[v] = 1;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (!visited[v])
                fail(FailureKind::UncoveredNode, e.size(), v);
    }

    report.ok = report.failures.empty();
    return report;
}

PlanOutcome PlanOutcome::found(Execution e) {
    PlanOutcome out;
    out.status = PlanStatus::Feasible;
    out.execution = std::move(e);
    return out;
}

PlanOutcome PlanOutcome::no_plan() {
    return PlanOutcome{};
}

PlanOutcome PlanOutcome::no_plan_at(NodeId witness) {
    PlanOutcome out;
    out.witness_node = witness;
    return out;
}

PlanOutcome PlanOutcome::out_of_budget(std::size_t states) {
    PlanOutcome out;
    out.status = PlanStatus::BudgetExhausted;
    out.states_explored = states;
    return out;
}

}  // namespace cmapf
