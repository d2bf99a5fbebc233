#pragma once

#include <cstdint>
#include <optional>

#include "cmapf/plan_semantics.hpp"

namespace cmapf {

// Cap on the exhaustive search. max_states bounds how many distinct states
// may be created before the search gives up with BudgetExhausted; max_depth
// optionally caps plan length (in transitions) on top of what the individual
// operation imposes.
struct SearchBudget {
    std::size_t max_states = 10'000'000;
    std::optional<std::size_t> max_depth;
};

// Breadth-first search over canonical configurations, starting from all
// agents at the base. Complete: Infeasible is only reported once the whole
// reachable space has been enumerated; running out of budget yields the
// distinct BudgetExhausted status instead. Deterministic: successors are
// expanded in lexicographic order, so identical inputs yield identical
// executions.
PlanOutcome search_reach(const TopoGraph& g, const Configuration& target,
                         const SearchBudget& budget = {});

// Depth-limited variant; feasible iff the target is reachable within
// max_moves transitions.
PlanOutcome search_breach(const TopoGraph& g, const Configuration& target,
                          std::size_t max_moves, const SearchBudget& budget = {});

// BFS over (configuration, visited set) pairs; feasible iff some state with
// every node visited and all agents back at the base is reached. The visited
// set is a 64-bit mask, so coverage searches support at most 64 nodes (the
// state space is hopeless far earlier anyway).
PlanOutcome search_cover(const TopoGraph& g, std::size_t agents,
                         const SearchBudget& budget = {});

// Depth-limited variant of search_cover.
PlanOutcome search_bcover(const TopoGraph& g, std::size_t agents,
                          std::size_t max_moves, const SearchBudget& budget = {});

}  // namespace cmapf
