#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmapf/plan_semantics.hpp"

namespace cmapf {

// Positive literal = variable id, negative = its negation. Ids are 1-based.
using Lit = std::int32_t;

// Plain clause database. Adding an empty clause flips a short-circuit flag
// instead of storing it, so the invariant "no stored clause is empty" holds.
class CnfFormula {
public:
    explicit CnfFormula(std::size_t var_count = 0) : var_count_(var_count) {}

    Lit new_var() { return static_cast<Lit>(++var_count_); }
    void add_clause(std::vector<Lit> lits);

    std::size_t var_count() const { return var_count_; }
    const std::vector<std::vector<Lit>>& clauses() const { return clauses_; }
    bool trivially_unsat() const { return has_empty_clause_; }

private:
    std::size_t var_count_ = 0;
    std::vector<std::vector<Lit>> clauses_;
    bool has_empty_clause_ = false;
};

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> model;  // model[v-1] for variable v; meaningful iff satisfiable
};

// DPLL with unit propagation and conflict-directed backjumping. Deliberately
// modest: no restarts, no activity heuristics; static variable order with
// optional phase hints (phase[v-1] is the polarity tried first). Sound and
// complete; the model is total over var_count.
SatResult sat_solve(const CnfFormula& f, const std::vector<bool>* phase = nullptr);

// "p cnf <vars> <clauses>" followed by zero-terminated clause lines.
std::string to_dimacs(const CnfFormula& f);

// Parses an external solver's output: an "s SATISFIABLE"/"s UNSATISFIABLE"
// status line plus "v" value lines. Throws ParseError.
SatResult from_dimacs_result(const std::string& text);

// Variable layout for the bounded-plan encodings. Time points t = 0..horizon
// (horizon = allowed transitions); levels k = 0..agents, one more than the
// agent count because a connectivity chain over occupied nodes never needs
// more hops than there are agents.
struct VarMap {
    std::size_t agents = 0;
    std::size_t steps = 0;   // horizon + 1 time points
    std::size_t nodes = 0;
    std::size_t levels = 0;  // agents + 1
    bool coverage = false;

    // pos: agent a stands on node v at time t. Time-major so the solver's
    // static branching order fills the plan front to back.
    Lit pos(std::size_t a, std::size_t t, NodeId v) const {
        return static_cast<Lit>(1 + (t * agents + a) * nodes + v);
    }
    // occ: some agent stands on v at time t.
    Lit occ(std::size_t t, NodeId v) const {
        return static_cast<Lit>(1 + pos_count() + t * nodes + v);
    }
    // lvl: v is the base (k=0) or an occupied node whose connection to the
    // base uses at most k occupied communication hops.
    Lit lvl(std::size_t t, NodeId v, std::size_t k) const {
        return static_cast<Lit>(1 + pos_count() + occ_count() + (t * nodes + v) * levels + k);
    }
    // vis: v was occupied at some time <= t (coverage encodings only).
    Lit vis(std::size_t t, NodeId v) const {
        return static_cast<Lit>(1 + pos_count() + occ_count() + lvl_count() + t * nodes + v);
    }

    std::size_t pos_count() const { return agents * steps * nodes; }
    std::size_t occ_count() const { return steps * nodes; }
    std::size_t lvl_count() const { return steps * nodes * levels; }
    std::size_t vis_count() const { return coverage ? steps * nodes : 0; }
    // Fixed-layout variables; counter and symmetry-breaking variables are
    // appended after these.
    std::size_t core_count() const {
        return pos_count() + occ_count() + lvl_count() + vis_count();
    }
};

struct EncodeOptions {
    // Orders agent trajectories lexicographically. Cuts the permutation
    // symmetry of anonymous agents; never changes satisfiability.
    bool symmetry_break = true;
};

struct Encoding {
    CnfFormula cnf;
    VarMap vars;
};

// Bounded reachability: all agents start at the base, every step takes a
// movement edge, every intermediate configuration is comm-connected to the
// base (layered unary level encoding), and the final multiset of positions
// equals target (per-node sequential counters).
Encoding encode_breach(const TopoGraph& g, const Configuration& target,
                       std::size_t max_moves, const EncodeOptions& opts = {});

// Bounded coverage: same core plus visited-chain variables, "every node
// visited by the horizon", and all agents back at the base at the end.
Encoding encode_bcover(const TopoGraph& g, std::size_t agents,
                       std::size_t max_moves, const EncodeOptions& opts = {});

// Reads the pos variables of a satisfying assignment back into an execution.
// Throws MalformedModel if some (agent, time) has no or several positions.
Execution decode_plan(const std::vector<bool>& model, const VarMap& vm,
                      const TopoGraph& g);

// Encode + solve + decode in one call.
PlanOutcome sat_breach(const TopoGraph& g, const Configuration& target,
                       std::size_t max_moves, const EncodeOptions& opts = {});
PlanOutcome sat_bcover(const TopoGraph& g, std::size_t agents,
                       std::size_t max_moves, const EncodeOptions& opts = {});

}  // namespace cmapf
