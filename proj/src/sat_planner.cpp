#include "cmapf/sat_planner.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cmapf {

void CnfFormula::add_clause(std::vector<Lit> lits) {
    if (lits.empty()) {
        has_empty_clause_ = true;
        return;
    }
    for (Lit l : lits)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > var_count_)
            throw Error("literal " + std::to_string(l) + " outside variable range");
    clauses_.push_back(std::move(lits));
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.var_count() << ' ' << f.clauses().size() << '\n';
    for (const auto& c : f.clauses()) {
        for (Lit l : c)
            out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

SatResult from_dimacs_result(const std::string& text) {
    SatResult res;
    bool have_status = false;
    std::vector<Lit> values;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == 's') {
            std::istringstream ls(line.substr(1));
            std::string word;
            ls >> word;
            if (word == "SATISFIABLE")
                res.satisfiable = true;
            else if (word == "UNSATISFIABLE")
                res.satisfiable = false;
            else
                throw ParseError(line_no, "unknown status '" + word + "'");
            have_status = true;
        } else if (line[0] == 'v') {
            std::istringstream ls(line.substr(1));
            long long l;
            while (ls >> l) {
                if (l == 0) continue;  // terminator
                values.push_back(static_cast<Lit>(l));
            }
            if (!ls.eof())
                throw ParseError(line_no, "bad literal on value line");
        }
        // comment and timing lines ignored
    }
    if (!have_status)
        throw ParseError(line_no, "no 's' status line found");
    if (res.satisfiable) {
        std::size_t max_var = 0;
        for (Lit l : values)
            max_var = std::max(max_var, static_cast<std::size_t>(std::abs(l)));
        res.model.assign(max_var, false);
        for (Lit l : values)
            res.model[std::abs(l) - 1] = l > 0;
    }
    return res;
}

namespace {

// Sequential-counter at-most-k over xs (Sinz encoding). Auxiliary register
// variables are appended to f.
void at_most_k(CnfFormula& f, const std::vector<Lit>& xs, std::size_t k) {
    const std::size_t n = xs.size();
    if (k >= n) return;
    if (k == 0) {
        for (Lit x : xs)
            f.add_clause({-x});
        return;
    }
    // s[i][j]: among xs[0..i], at least j+1 are true.
    std::vector<std::vector<Lit>> s(n - 1, std::vector<Lit>(k));
    for (auto& row : s)
        for (auto& v : row)
            v = f.new_var();
    f.add_clause({-xs[0], s[0][0]});
    for (std::size_t j = 1; j < k; ++j)
        f.add_clause({-s[0][j]});
    for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
        f.add_clause({-xs[i], s[i][0]});
        f.add_clause({-s[i - 1][0], s[i][0]});
        for (std::size_t j = 1; j < k; ++j) {
            f.add_clause({-xs[i], -s[i - 1][j - 1], s[i][j]});
            f.add_clause({-s[i - 1][j], s[i][j]});
        }
        f.add_clause({-xs[i], -s[i - 1][k - 1]});
    }
    f.add_clause({-xs[n - 1], -s[n - 2][k - 1]});
}

// Exactly k of xs true: at-most-k plus at-most-(n-k) of the negations.
void exactly_k(CnfFormula& f, const std::vector<Lit>& xs, std::size_t k) {
    at_most_k(f, xs, k);
    std::vector<Lit> negs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        negs[i] = -xs[i];
    at_most_k(f, negs, xs.size() - k);
}

// Clauses (a)-(e): agent placement, start, movement, occupancy, and the
// layered connectivity-to-base requirement shared by both encodings.
Encoding encode_core(const TopoGraph& g, std::size_t agents, std::size_t horizon,
                     bool coverage) {
    Encoding enc;
    VarMap& vm = enc.vars;
    vm.agents = agents;
    vm.steps = horizon + 1;
    vm.nodes = g.node_count();
    vm.levels = agents + 1;
    vm.coverage = coverage;
    CnfFormula& f = enc.cnf;
    while (f.var_count() < vm.core_count())
        f.new_var();

    const NodeId B = g.base();
    const std::size_t V = g.node_count();

    for (std::size_t t = 0; t <= horizon; ++t) {
        for (std::size_t a = 0; a < agents; ++a) {
            // (a) exactly one node per agent per time, pairwise.
            std::vector<Lit> somewhere;
            for (NodeId v = 0; v < V; ++v)
                somewhere.push_back(vm.pos(a, t, v));
            f.add_clause(somewhere);
            for (NodeId v = 0; v < V; ++v)
                for (NodeId w = v + 1; w < V; ++w)
                    f.add_clause({-vm.pos(a, t, v), -vm.pos(a, t, w)});
            // (c) movement: the next position is a movement successor;
            // staying put needs the explicit self-loop edge.
            if (t < horizon) {
                for (NodeId v = 0; v < V; ++v) {
                    std::vector<Lit> step{-vm.pos(a, t, v)};
                    for (NodeId w : g.move_out(v))
                        step.push_back(vm.pos(a, t + 1, w));
                    f.add_clause(step);
                }
            }
        }
        // (d) occupancy is the union of agent positions.
        for (NodeId v = 0; v < V; ++v) {
            std::vector<Lit> any{-vm.occ(t, v)};
            for (std::size_t a = 0; a < agents; ++a) {
                f.add_clause({-vm.pos(a, t, v), vm.occ(t, v)});
                any.push_back(vm.pos(a, t, v));
            }
            f.add_clause(any);
        }
        // (e) connectivity levels: the base sits at level 0; any other node
        // needs to be occupied and adjacent to a node one level lower; every
        // occupied node must make it into the top level. `agents` hops
        // always suffice since a shortest chain visits distinct occupied
        // nodes.
        f.add_clause({vm.lvl(t, B, 0)});
        for (NodeId v = 0; v < V; ++v) {
            if (v != B) {
                f.add_clause({-vm.lvl(t, v, 0)});
                for (std::size_t k = 1; k <= agents; ++k) {
                    f.add_clause({-vm.lvl(t, v, k), vm.occ(t, v)});
                    std::vector<Lit> support{-vm.lvl(t, v, k)};
                    for (NodeId u : g.comm_neighbors(v))
                        support.push_back(vm.lvl(t, u, k - 1));
                    f.add_clause(support);
                }
                f.add_clause({-vm.occ(t, v), vm.lvl(t, v, agents)});
            }
            for (std::size_t k = 0; k < agents; ++k)
                f.add_clause({-vm.lvl(t, v, k), vm.lvl(t, v, k + 1)});
        }
    }
    // (b) start all at the base.
    for (std::size_t a = 0; a < agents; ++a)
        f.add_clause({vm.pos(a, 0, B)});
    return enc;
}

// (g) order adjacent agents' trajectories lexicographically. E-vars chain
// prefix equality; whenever the prefix is equal, agent a may not sit on a
// higher node than agent a+1.
void add_symmetry_break(Encoding& enc) {
    CnfFormula& f = enc.cnf;
    const VarMap& vm = enc.vars;
    const std::size_t V = vm.nodes;
    for (std::size_t a = 0; a + 1 < vm.agents; ++a) {
        Lit prefix_eq = 0;  // none for t = 0
        for (std::size_t t = 0; t < vm.steps; ++t) {
            for (NodeId v = 0; v < V; ++v)
                for (NodeId w = 0; w < v; ++w) {
                    std::vector<Lit> c{-vm.pos(a, t, v), -vm.pos(a + 1, t, w)};
                    if (prefix_eq != 0) c.insert(c.begin(), -prefix_eq);
                    f.add_clause(c);
                }
            if (t + 1 == vm.steps) break;  // no successor step to guard
            Lit eq = f.new_var();
            for (NodeId v = 0; v < V; ++v) {
                // eq -> (pos(a,t,v) -> pos(a+1,t,v))
                f.add_clause({-eq, -vm.pos(a, t, v), vm.pos(a + 1, t, v)});
                // prefix_eq & both at v -> eq
                std::vector<Lit> c{eq, -vm.pos(a, t, v), -vm.pos(a + 1, t, v)};
                if (prefix_eq != 0) c.insert(c.begin(), -prefix_eq);
                f.add_clause(c);
            }
            if (prefix_eq != 0)
                f.add_clause({-eq, prefix_eq});
            prefix_eq = eq;
        }
    }
}

void check_nodes(const TopoGraph& g, const Configuration& c) {
    for (NodeId v : c.positions())
        if (v >= g.node_count())
            throw RangeError("target node " + std::to_string(v) + " out of range");
}

}  // namespace

Encoding encode_breach(const TopoGraph& g, const Configuration& target,
                       std::size_t max_moves, const EncodeOptions& opts) {
    check_nodes(g, target);
    Encoding enc = encode_core(g, target.width(), max_moves, false);
    CnfFormula& f = enc.cnf;
    const VarMap& vm = enc.vars;

    // (f) final multiset equals the target: per-node occupancy counts.
    auto tp = target.positions();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::size_t want =
            std::upper_bound(tp.begin(), tp.end(), v) - std::lower_bound(tp.begin(), tp.end(), v);
        std::vector<Lit> here;
        for (std::size_t a = 0; a < vm.agents; ++a)
            here.push_back(vm.pos(a, max_moves, v));
        exactly_k(f, here, want);
    }
    if (opts.symmetry_break)
        add_symmetry_break(enc);
    return enc;
}

Encoding encode_bcover(const TopoGraph& g, std::size_t agents,
                       std::size_t max_moves, const EncodeOptions& opts) {
    if (agents == 0)
        throw ZeroAgents("coverage encoding needs at least one agent");
    Encoding enc = encode_core(g, agents, max_moves, true);
    CnfFormula& f = enc.cnf;
    const VarMap& vm = enc.vars;
    const NodeId B = g.base();

    for (NodeId v = 0; v < g.node_count(); ++v) {
        // vis(0,v) <-> occ(0,v)
        f.add_clause({-vm.vis(0, v), vm.occ(0, v)});
        f.add_clause({-vm.occ(0, v), vm.vis(0, v)});
        for (std::size_t t = 1; t <= max_moves; ++t) {
            // vis(t,v) <-> vis(t-1,v) | occ(t,v)
            f.add_clause({-vm.vis(t - 1, v), vm.vis(t, v)});
            f.add_clause({-vm.occ(t, v), vm.vis(t, v)});
            f.add_clause({-vm.vis(t, v), vm.vis(t - 1, v), vm.occ(t, v)});
        }
        f.add_clause({vm.vis(max_moves, v)});  // everything seen by the end
    }
    for (std::size_t a = 0; a < agents; ++a)
        f.add_clause({vm.pos(a, max_moves, B)});  // and everyone home
    if (opts.symmetry_break)
        add_symmetry_break(enc);
    return enc;
}

Execution decode_plan(const std::vector<bool>& model, const VarMap& vm,
                      const TopoGraph& g) {
    Execution e;
    for (std::size_t t = 0; t < vm.steps; ++t) {
        std::vector<NodeId> cfg;
        for (std::size_t a = 0; a < vm.agents; ++a) {
            NodeId where = kUnreachable;
            for (NodeId v = 0; v < vm.nodes; ++v) {
                Lit p = vm.pos(a, t, v);
                if (static_cast<std::size_t>(p) <= model.size() && model[p - 1]) {
                    if (where != kUnreachable)
                        throw MalformedModel("agent " + std::to_string(a) + " at time " +
                                             std::to_string(t) + " on two nodes");
                    where = v;
                }
            }
            if (where == kUnreachable)
                throw MalformedModel("agent " + std::to_string(a) + " at time " +
                                     std::to_string(t) + " is nowhere");
            cfg.push_back(where);
        }
        e.emplace_back(std::move(cfg));
    }
    (void)g;
    return e;
}

namespace {

PlanOutcome run(const TopoGraph& g, const Encoding& enc) {
    // Branch with "true" preferred on the position variables: deciding where
    // an agent stands is productive, everything else mostly propagates.
    std::vector<bool> phase(enc.cnf.var_count(), false);
    for (std::size_t i = 0; i < enc.vars.pos_count(); ++i)
        phase[i] = true;
    SatResult r = sat_solve(enc.cnf, &phase);
    if (!r.satisfiable)
        return PlanOutcome::no_plan();
    return PlanOutcome::found(decode_plan(r.model, enc.vars, g));
}

}  // namespace

// Both bounded tasks ask for a plan of length at most max_moves, while a
// single encoding pins the horizon exactly. Graphs without self-loops cannot
// pad a short plan with stays, so probe every horizon from 0 upward and stop
// at the first satisfiable one. The returned plan is horizon-minimal.

PlanOutcome sat_breach(const TopoGraph& g, const Configuration& target,
                       std::size_t max_moves, const EncodeOptions& opts) {
    PlanOutcome last = PlanOutcome::no_plan();
    for (std::size_t len = 0; len <= max_moves; ++len) {
        last = run(g, encode_breach(g, target, len, opts));
        if (last.feasible()) break;
    }
    return last;
}

PlanOutcome sat_bcover(const TopoGraph& g, std::size_t agents,
                       std::size_t max_moves, const EncodeOptions& opts) {
    PlanOutcome last = PlanOutcome::no_plan();
    for (std::size_t len = 0; len <= max_moves; ++len) {
        last = run(g, encode_bcover(g, agents, len, opts));
        if (last.feasible()) break;
    }
    return last;
}

}  // namespace cmapf
