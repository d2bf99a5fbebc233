#pragma once

#include "cmapf/plan_semantics.hpp"

namespace cmapf {

// Polynomial-time deciders with constructive plan synthesis for the graph
// classes where connectivity checks suffice. All three are deterministic
// (lowest-node-id tie-breaking throughout) and every feasible outcome's
// execution passes validate_execution. They make no attempt at short plans;
// bounded-length planning is the SAT planner's job.

// Reachability on a sight-moveable graph. Feasible iff the communication
// graph induced on {base} + target nodes is connected. Synthesis deploys
// agents one at a time in nondecreasing depth of a comm spanning tree rooted
// at the base, expanding each tree edge into a movement path that stays
// inside the communication neighborhood of its (already occupied) lower
// endpoint. Throws NotSightMoveable when the class check fails.
PlanOutcome plan_reach_sm(const TopoGraph& g, const Configuration& target);

// Coverage with n agents on a sight-moveable graph. Feasible iff every node
// is within n communication hops of the base. Synthesis repeatedly picks the
// lowest unvisited node, walks a relay chain of agents out along a shortest
// comm-hop path, then retracts them, until all nodes are seen. Throws
// NotSightMoveable or ZeroAgents.
PlanOutcome plan_cover_sm(const TopoGraph& g, std::size_t agents);

// Bounded reachability on a complete-communication graph. Feasible iff every
// target is within max_moves movement steps of the base; agents move along
// shortest movement paths simultaneously, finished agents idle on their
// self-loops. Throws NotCompleteCommunication.
PlanOutcome plan_breach_cc(const TopoGraph& g, const Configuration& target,
                           std::size_t max_moves);

}  // namespace cmapf
