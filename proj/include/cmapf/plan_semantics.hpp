#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cmapf/topo_graph.hpp"

namespace cmapf {

// A multiset of agent positions. Agents are anonymous, so the canonical
// representation is the sorted sequence; two configurations compare equal
// iff they are reorderings of each other. At least one agent always.
class Configuration {
public:
    // Canonicalizes (sorts) the given positions. Throws ZeroAgents on empty
    // input: the semantics presume n >= 1.
    explicit Configuration(std::vector<NodeId> positions);

    static Configuration all_at(NodeId v, std::size_t n);

    std::size_t width() const { return positions_.size(); }
    std::span<const NodeId> positions() const { return positions_; }
    NodeId operator[](std::size_t i) const { return positions_[i]; }

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<NodeId> positions_;  // sorted
};

// A plan: nonempty sequence of configurations, all of one width. Plan length
// is counted in TRANSITIONS, i.e. steps.size() - 1; a single-configuration
// execution has length 0.
using Execution = std::vector<Configuration>;

enum class FailureKind {
    Disconnected,   // configuration's positions + base not comm-connected
    IllegalMove,    // no per-agent matching of movement edges into this step
    BadStart,       // covering plan does not start all-at-base
    BadEnd,         // covering plan does not end all-at-base
    UncoveredNode,  // covering plan never visits this node
};

struct ValidationFailure {
    FailureKind kind;
    // Index of the offending configuration. IllegalMove at step i means the
    // transition from step i-1 into step i. For UncoveredNode the index is
    // steps.size() (no single step is at fault).
    std::size_t step;
    std::optional<NodeId> node;  // set for UncoveredNode

    bool operator==(const ValidationFailure&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationFailure> failures;

    bool has(FailureKind kind, std::size_t step) const;
};

// True iff positions plus the base form a connected communication subgraph.
// The base participates whether or not an agent stands on it.
bool is_valid_configuration(const TopoGraph& g, const Configuration& c);

// Per-index movement legality for one fixed agent ordering.
bool is_legal_step_ordered(const TopoGraph& g, std::span<const NodeId> from,
                           std::span<const NodeId> to);

// Anonymity-respecting legality: true iff the occurrences of `from` can be
// matched one-to-one onto the occurrences of `to` with every matched pair a
// movement edge. Decided by bipartite maximum matching (augmenting paths).
bool is_legal_step_multiset(const TopoGraph& g, const Configuration& from,
                            const Configuration& to);

// Checks every configuration for connectivity and every transition for
// multiset legality; with require_covering additionally demands all-base
// first and last configurations and that every node is visited at some step.
// Reports every failure, not just the first. Throws AgentCountMismatch when
// the execution's width differs from agent_count.
ValidationReport validate_execution(const TopoGraph& g, const Execution& e,
                                    bool require_covering, std::size_t agent_count);

// Planner result. Exactly one of the three states:
//   Feasible        -- execution present and validates
//   Infeasible      -- no plan exists; polynomial planners attach a witness
//   BudgetExhausted -- search gave up before deciding; NOT infeasible
enum class PlanStatus { Feasible, Infeasible, BudgetExhausted };

struct PlanOutcome {
    PlanStatus status = PlanStatus::Infeasible;
    std::optional<Execution> execution;  // present iff Feasible

    // Infeasibility witness where the deciding procedure has one: a node (or
    // node pair) whose connectivity/distance requirement fails. Exhaustive
    // searches that simply run out of space leave both empty.
    std::optional<NodeId> witness_node;
    std::optional<std::pair<NodeId, NodeId>> witness_pair;

    // Search diagnostics (exact planner only).
    std::size_t states_explored = 0;

    bool feasible() const { return status == PlanStatus::Feasible; }

    static PlanOutcome found(Execution e);
    static PlanOutcome no_plan();
    static PlanOutcome no_plan_at(NodeId witness);
    static PlanOutcome out_of_budget(std::size_t states);
};

}  // namespace cmapf
