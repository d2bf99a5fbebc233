#include "cmapf/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmapf/cli_io.hpp"
#include "cmapf/errors.hpp"
#include "cmapf/exact_planner.hpp"
#include "cmapf/plan_semantics.hpp"
#include "cmapf/poly_planners.hpp"
#include "cmapf/reductions.hpp"
#include "cmapf/sat_planner.hpp"
#include "cmapf/topo_graph.hpp"

namespace cmapf {

namespace {

using nlohmann::json;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::vector<NodeId> parse_id_list(const std::string& csv, std::uint64_t node_count) {
    std::vector<NodeId> ids;
    std::string_view rest = csv;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view field = rest.substr(0, comma);
        std::uint64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw Error("bad node id '" + std::string(field) + "' in list");
        if (value >= node_count)
            throw RangeError("node id " + std::to_string(value) +
                             " out of range, graph has " + std::to_string(node_count) +
                             " nodes");
        ids.push_back(static_cast<NodeId>(value));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (ids.empty()) throw Error("empty node id list");
    return ids;
}

// DIMACS CNF input for `reduce sat3`. 'c' lines are comments; '%' ends the
// file (a convention of old benchmark sets).
Formula3Sat parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long declared_vars = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    bool done = false;
    while (!done && std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            if (tok == "c") {
                break;  // comment: skip the rest of the line
            }
            if (tok == "%") {
                done = true;
                break;
            }
            if (tok == "p") {
                std::string kind;
                long nclauses = 0;
                if (!(tokens >> kind >> declared_vars >> nclauses) || kind != "cnf" ||
                    declared_vars < 1)
                    throw ParseError(line_no, "malformed problem line");
                continue;
            }
            if (declared_vars < 0)
                throw ParseError(line_no, "clause data before the 'p cnf' line");
            int lit = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "bad literal '" + tok + "'");
            if (lit == 0) {
                clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw ParseError(line_no, "last clause not terminated by 0");
    if (declared_vars < 0) throw ParseError(line_no + 1, "missing 'p cnf' line");
    return Formula3Sat::make(static_cast<int>(declared_vars), std::move(clauses));
}

// ASCII grid for `reduce ghc`: '.' free, '#' obstacle, 'B' the base cell.
GridGraph parse_grid(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw ParseError(line_no + 1, "grid file has no rows");

    GridGraph grid;
    grid.height = static_cast<int>(rows.size());
    grid.width = static_cast<int>(rows.front().size());
    grid.blocked.assign(static_cast<std::size_t>(grid.width) * grid.height, 0);
    int bases = 0;
    for (int y = 0; y < grid.height; ++y) {
        if (static_cast<int>(rows[y].size()) != grid.width)
            throw ParseError(y + 1, "grid rows differ in width");
        for (int x = 0; x < grid.width; ++x) {
            switch (rows[y][x]) {
                case '.':
                    break;
                case '#':
                    grid.blocked[static_cast<std::size_t>(y) * grid.width + x] = 1;
                    break;
                case 'B':
                    grid.base_x = x;
                    grid.base_y = y;
                    ++bases;
                    break;
                default:
                    throw ParseError(y + 1, std::string("unexpected cell '") + rows[y][x] +
                                                "' (want '.', '#' or 'B')");
            }
        }
    }
    if (bases != 1)
        throw ParseError(1, "grid needs exactly one 'B' cell, found " +
                                std::to_string(bases));
    return grid;
}

TargetClass class_from_name(const std::string& name) {
    if (name == "raw") return TargetClass::Raw;
    if (name == "nc") return TargetClass::Nc;
    if (name == "sm") return TargetClass::Sm;
    return TargetClass::Cc;
}

json pair_list_json(const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

int run_classify(const std::string& file, bool as_json) {
    const TopoGraph g = parse_graph(read_file(file));
    const GraphClassReport r = classify(g);
    if (as_json) {
        json out{{"undirected", r.undirected},
                 {"reflexive", r.reflexive},
                 {"nc", r.neighbor_communicable},
                 {"sm", r.sight_moveable},
                 {"cc", r.complete_communication},
                 {"witnesses",
                  {{"missing_reverse_moves", pair_list_json(r.missing_reverse_moves)},
                   {"missing_self_loops", r.missing_self_loops},
                   {"uncommunicable_moves", pair_list_json(r.uncommunicable_moves)},
                   {"blind_comm_edges", pair_list_json(r.blind_comm_edges)},
                   {"missing_comm_pairs", pair_list_json(r.missing_comm_pairs)}}}};
        std::cout << out.dump() << "\n";
        return kExitFeasible;
    }
    const auto show = [](const char* name, bool value) {
        std::cout << name << ": " << (value ? "yes" : "no") << "\n";
    };
    show("undirected", r.undirected);
    show("reflexive", r.reflexive);
    show("neighbor-communicable", r.neighbor_communicable);
    show("sight-moveable", r.sight_moveable);
    show("complete-communication", r.complete_communication);
    for (const auto& [u, v] : r.missing_reverse_moves)
        std::cout << "  missing reverse move " << v << " -> " << u << "\n";
    for (const NodeId v : r.missing_self_loops)
        std::cout << "  missing self-loop on " << v << "\n";
    for (const auto& [u, v] : r.uncommunicable_moves)
        std::cout << "  movement " << u << " -> " << v << " without communication\n";
    for (const auto& [u, v] : r.blind_comm_edges)
        std::cout << "  communication " << u << " ~ " << v
                  << " without an in-sight movement path\n";
    for (const auto& [u, v] : r.missing_comm_pairs)
        std::cout << "  no communication between " << u << " and " << v << "\n";
    return kExitFeasible;
}

enum class PlanMode { Reach, Cover, Breach, BCover };

struct PlanArgs {
    std::string file;
    std::string target_csv;
    std::size_t agents = 0;
    std::size_t max_moves = 0;
    std::string engine = "auto";
    std::size_t budget = SearchBudget{}.max_states;
    bool no_symmetry = false;
    std::string out;
    bool as_json = false;
};

const char* status_name(PlanStatus s) {
    switch (s) {
        case PlanStatus::Feasible: return "feasible";
        case PlanStatus::Infeasible: return "infeasible";
        case PlanStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

int finish_plan(const PlanOutcome& outcome, const std::string& engine,
                const PlanArgs& args) {
    if (args.as_json) {
        json out{{"status", status_name(outcome.status)},
                 {"engine", engine},
                 {"states_explored", outcome.states_explored},
                 {"plan", nullptr},
                 {"witness_node", nullptr},
                 {"witness_pair", nullptr}};
        if (outcome.execution) {
            json plan = json::array();
            for (const Configuration& c : *outcome.execution)
                plan.push_back(std::vector<NodeId>(c.positions().begin(),
                                                   c.positions().end()));
            out["plan"] = std::move(plan);
        }
        if (outcome.witness_node) out["witness_node"] = *outcome.witness_node;
        if (outcome.witness_pair)
            out["witness_pair"] =
                json::array({outcome.witness_pair->first, outcome.witness_pair->second});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "# engine: " << engine << "\n";
        std::cout << "# status: " << status_name(outcome.status) << "\n";
        if (outcome.states_explored)
            std::cout << "# states-explored: " << outcome.states_explored << "\n";
        if (outcome.witness_node)
            std::cout << "# witness-node: " << *outcome.witness_node << "\n";
        if (outcome.witness_pair)
            std::cout << "# witness-pair: " << outcome.witness_pair->first << " "
                      << outcome.witness_pair->second << "\n";
        if (outcome.execution) std::cout << serialize_plan(*outcome.execution);
    }
    if (!args.out.empty() && outcome.execution)
        write_file(args.out, serialize_plan(*outcome.execution));
    switch (outcome.status) {
        case PlanStatus::Feasible: return kExitFeasible;
        case PlanStatus::Infeasible: return kExitInfeasible;
        case PlanStatus::BudgetExhausted: return kExitBudget;
    }
    return kExitUsage;
}

int run_plan(PlanMode mode, const PlanArgs& args) {
    const TopoGraph g = parse_graph(read_file(args.file));

    std::optional<Configuration> target;
    if (!args.target_csv.empty())
        target.emplace(parse_id_list(args.target_csv, g.node_count()));
    const bool needs_target = mode == PlanMode::Reach || mode == PlanMode::Breach;
    if (needs_target && !target) throw Error("this mode needs --target");
    if (target && args.agents && args.agents != target->width())
        throw Error("--agents disagrees with the width of --target");
    const std::size_t agents = target ? target->width() : args.agents;
    if (!needs_target && agents == 0) throw Error("this mode needs --agents");

    std::string engine = args.engine;
    if (engine == "auto") {
        const GraphClassReport r = classify(g);
        switch (mode) {
            case PlanMode::Reach:
            case PlanMode::Cover:
                engine = r.sight_moveable ? "poly" : "exact";
                break;
            case PlanMode::Breach:
                engine = r.complete_communication ? "poly" : "sat";
                break;
            case PlanMode::BCover:
                engine = "sat";
                break;
        }
    }

    const SearchBudget budget{args.budget, std::nullopt};
    const EncodeOptions encode_opts{!args.no_symmetry};
    PlanOutcome outcome;
    if (engine == "poly") {
        switch (mode) {
            case PlanMode::Reach: outcome = plan_reach_sm(g, *target); break;
            case PlanMode::Cover: outcome = plan_cover_sm(g, agents); break;
            case PlanMode::Breach: outcome = plan_breach_cc(g, *target, args.max_moves); break;
            case PlanMode::BCover: throw Error("no polynomial engine for bcover");
        }
    } else if (engine == "exact") {
        switch (mode) {
            case PlanMode::Reach: outcome = search_reach(g, *target, budget); break;
            case PlanMode::Cover: outcome = search_cover(g, agents, budget); break;
            case PlanMode::Breach:
                outcome = search_breach(g, *target, args.max_moves, budget);
                break;
            case PlanMode::BCover:
                outcome = search_bcover(g, agents, args.max_moves, budget);
                break;
        }
    } else {
        switch (mode) {
            case PlanMode::Breach:
                outcome = sat_breach(g, *target, args.max_moves, encode_opts);
                break;
            case PlanMode::BCover:
                outcome = sat_bcover(g, agents, args.max_moves, encode_opts);
                break;
            default: throw Error("the sat engine handles only bounded problems");
        }
    }
    return finish_plan(outcome, engine, args);
}

const char* failure_name(FailureKind kind) {
    switch (kind) {
        case FailureKind::Disconnected: return "disconnected";
        case FailureKind::IllegalMove: return "illegal-move";
        case FailureKind::BadStart: return "bad-start";
        case FailureKind::BadEnd: return "bad-end";
        case FailureKind::UncoveredNode: return "uncovered-node";
    }
    return "?";
}

int run_validate(const std::string& graph_file, const std::string& plan_file, bool covering,
                 std::size_t agents, bool as_json) {
    const TopoGraph g = parse_graph(read_file(graph_file));
    const Execution plan = parse_plan(read_file(plan_file));
    if (agents == 0) agents = plan.front().width();
    const ValidationReport report = validate_execution(g, plan, covering, agents);
    if (as_json) {
        json failures = json::array();
        for (const ValidationFailure& f : report.failures) {
            json entry{{"kind", failure_name(f.kind)}, {"step", f.step}, {"node", nullptr}};
            if (f.node) entry["node"] = *f.node;
            failures.push_back(std::move(entry));
        }
        std::cout << json{{"ok", report.ok}, {"failures", std::move(failures)}}.dump()
                  << "\n";
    } else if (report.ok) {
        std::cout << "valid\n";
    } else {
        for (const ValidationFailure& f : report.failures) {
            std::cout << "step " << f.step << ": " << failure_name(f.kind);
            if (f.node) std::cout << " (node " << *f.node << ")";
            std::cout << "\n";
        }
    }
    return report.ok ? kExitFeasible : kExitInfeasible;
}

std::string task_comment(const ReducedTask& task) {
    std::ostringstream out;
    out << "# task: ";
    if (const auto* cover = std::get_if<CoverTask>(&task)) {
        out << "cover agents=" << cover->agents;
    } else if (const auto* breach = std::get_if<BReachTask>(&task)) {
        out << "breach max-moves=" << breach->max_moves << " target=";
        for (std::size_t i = 0; i < breach->target.width(); ++i) {
            if (i) out << ",";
            out << breach->target[i];
        }
    } else {
        const auto& bcover = std::get<BCoverTask>(task);
        out << "bcover agents=" << bcover.agents << " max-moves=" << bcover.max_moves;
    }
    out << "\n";
    return out.str();
}

int emit_reduced(const ReducedInstance& inst, bool as_json, const std::string& out_path) {
    const std::string text = task_comment(inst.task) +
                             serialize_graph(inst.graph, inst.labels);
    if (as_json) {
        json task;
        if (const auto* cover = std::get_if<CoverTask>(&inst.task)) {
            task = {{"kind", "cover"}, {"agents", cover->agents}};
        } else if (const auto* breach = std::get_if<BReachTask>(&inst.task)) {
            task = {{"kind", "breach"},
                    {"max_moves", breach->max_moves},
                    {"target", std::vector<NodeId>(breach->target.positions().begin(),
                                                   breach->target.positions().end())}};
        } else {
            const auto& bcover = std::get<BCoverTask>(inst.task);
            task = {{"kind", "bcover"},
                    {"agents", bcover.agents},
                    {"max_moves", bcover.max_moves}};
        }
        std::cout << json{{"task", std::move(task)},
                          {"nodes", inst.graph.node_count()},
                          {"graph", text},
                          {"labels", inst.labels}}
                         .dump()
                  << "\n";
    } else {
        std::cout << text;
    }
    if (!out_path.empty()) write_file(out_path, text);
    return kExitFeasible;
}

int emit_graph(const TopoGraph& g, bool as_json, const std::string& out_path) {
    const std::string text = serialize_graph(g);
    if (as_json) {
        std::cout << json{{"nodes", g.node_count()}, {"graph", text}}.dump() << "\n";
    } else {
        std::cout << text;
    }
    if (!out_path.empty()) write_file(out_path, text);
    return kExitFeasible;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"Connected multi-agent path planning on topological graphs"};
    app.require_subcommand(1);
    int rc = kExitFeasible;

    // classify
    std::string cls_file;
    bool cls_json = false;
    auto* cls = app.add_subcommand("classify", "Report graph classes and witnesses");
    cls->add_option("file", cls_file, "graph file")->required();
    cls->add_flag("--json", cls_json, "machine-readable output");
    cls->callback([&] { rc = run_classify(cls_file, cls_json); });

    // plan
    auto* plan = app.add_subcommand("plan", "Synthesize a plan");
    plan->require_subcommand(1);
    PlanArgs plan_args;
    const auto add_plan_sub = [&](const char* name, const char* help, PlanMode mode,
                                  bool bounded) {
        auto* sub = plan->add_subcommand(name, help);
        sub->add_option("file", plan_args.file, "graph file")->required();
        sub->add_option("--target", plan_args.target_csv, "target nodes, comma-separated");
        sub->add_option("--agents", plan_args.agents, "agent count");
        if (bounded)
            sub->add_option("--max-moves", plan_args.max_moves, "transition budget")
                ->required();
        sub->add_option("--engine", plan_args.engine, "auto|poly|exact|sat")
            ->check(CLI::IsMember({"auto", "poly", "exact", "sat"}));
        sub->add_option("--budget", plan_args.budget, "exact-search state budget");
        sub->add_flag("--no-symmetry", plan_args.no_symmetry,
                      "disable the sat symmetry breaking");
        sub->add_option("--out", plan_args.out, "also write the plan to this file");
        sub->add_flag("--json", plan_args.as_json, "machine-readable output");
        sub->callback([&, mode] { rc = run_plan(mode, plan_args); });
    };
    add_plan_sub("reach", "Reach a target configuration", PlanMode::Reach, false);
    add_plan_sub("cover", "Visit every node and return", PlanMode::Cover, false);
    add_plan_sub("breach", "Reach a target within a move bound", PlanMode::Breach, true);
    add_plan_sub("bcover", "Cover within a move bound", PlanMode::BCover, true);

    // validate
    std::string val_graph, val_plan;
    bool val_covering = false, val_json = false;
    std::size_t val_agents = 0;
    auto* val = app.add_subcommand("validate", "Check a plan file against a graph");
    val->add_option("graph", val_graph, "graph file")->required();
    val->add_option("plan", val_plan, "plan file")->required();
    val->add_flag("--covering", val_covering, "demand a covering execution");
    val->add_option("--agents", val_agents, "expected agent count");
    val->add_flag("--json", val_json, "machine-readable output");
    val->callback(
        [&] { rc = run_validate(val_graph, val_plan, val_covering, val_agents, val_json); });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Build hardness-reduction instances");
    reduce->require_subcommand(1);
    std::string red_file, red_target_csv, red_out;
    bool red_json = false;
    const auto add_reduce_common = [&](CLI::App* sub) {
        sub->add_option("--out", red_out, "also write the instance to this file");
        sub->add_flag("--json", red_json, "machine-readable output");
    };
    auto* red_sat = reduce->add_subcommand("sat3", "3-SAT to bounded reachability");
    red_sat->add_option("file", red_file, "DIMACS CNF file")->required();
    add_reduce_common(red_sat);
    red_sat->callback([&] {
        rc = emit_reduced(reduce_3sat_to_breach_sm(parse_dimacs_cnf(read_file(red_file))),
                          red_json, red_out);
    });
    auto* red_ghc = reduce->add_subcommand("ghc", "grid Hamiltonian cycle to bounded coverage");
    red_ghc->add_option("file", red_file, "ASCII grid file ('.', '#', 'B')")->required();
    add_reduce_common(red_ghc);
    red_ghc->callback([&] {
        rc = emit_reduced(reduce_ghc_to_bcover_cc(parse_grid(read_file(red_file))), red_json,
                          red_out);
    });
    const auto add_r2c = [&](const char* name, const char* help, bool nc) {
        auto* sub = reduce->add_subcommand(name, help);
        sub->add_option("file", red_file, "graph file")->required();
        sub->add_option("--target", red_target_csv, "target nodes, comma-separated")
            ->required();
        add_reduce_common(sub);
        sub->callback([&, nc] {
            const TopoGraph g = parse_graph(read_file(red_file));
            const Configuration target(parse_id_list(red_target_csv, g.node_count()));
            rc = emit_reduced(nc ? reduce_reach_to_cover_nc(g, target)
                                 : reduce_reach_to_cover_dir(g, target),
                              red_json, red_out);
        });
    };
    add_r2c("r2c-dir", "reachability to coverage, directed graphs", false);
    add_r2c("r2c-nc", "reachability to coverage, neighbor-communicable graphs", true);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    std::string gen_class = "raw", gen_out;
    bool gen_json = false;
    int grid_w = 3, grid_h = 3;
    double grid_radius = 2.0;
    std::vector<std::string> grid_obstacles;
    auto* gen_grid = gen->add_subcommand("grid", "occupancy grid instance");
    gen_grid->add_option("--width", grid_w, "columns")->required();
    gen_grid->add_option("--height", grid_h, "rows")->required();
    gen_grid->add_option("--radius", grid_radius, "communication radius")->required();
    gen_grid->add_option("--obstacle", grid_obstacles, "blocked cell as x,y (repeatable)");
    gen_grid->add_option("--class", gen_class, "raw|nc|sm|cc")
        ->check(CLI::IsMember({"raw", "nc", "sm", "cc"}));
    gen_grid->add_option("--out", gen_out, "also write the graph to this file");
    gen_grid->add_flag("--json", gen_json, "machine-readable output");
    gen_grid->callback([&] {
        std::vector<std::pair<int, int>> cells;
        for (const std::string& spec : grid_obstacles) {
            int x = 0, y = 0;
            char comma = 0;
            std::istringstream in(spec);
            if (!(in >> x >> comma >> y) || comma != ',' || !in.eof())
                throw Error("bad obstacle '" + spec + "', want x,y");
            cells.emplace_back(x, y);
        }
        rc = emit_graph(
            gen_grid_instance(grid_w, grid_h, cells, grid_radius, class_from_name(gen_class)),
            gen_json, gen_out);
    });
    std::size_t rnd_nodes = 6;
    double rnd_move = 0.4, rnd_comm = 0.3;
    std::uint64_t rnd_seed = 0;
    auto* gen_rnd = gen->add_subcommand("random", "seeded random instance");
    gen_rnd->add_option("--nodes", rnd_nodes, "node count")->required();
    gen_rnd->add_option("--move-prob", rnd_move, "movement edge probability")->required();
    gen_rnd->add_option("--comm-prob", rnd_comm, "communication edge probability")
        ->required();
    gen_rnd->add_option("--seed", rnd_seed, "random seed")->required();
    gen_rnd->add_option("--class", gen_class, "raw|nc|sm|cc")
        ->check(CLI::IsMember({"raw", "nc", "sm", "cc"}));
    gen_rnd->add_option("--out", gen_out, "also write the graph to this file");
    gen_rnd->add_flag("--json", gen_json, "machine-readable output");
    gen_rnd->callback([&] {
        rc = emit_graph(
            gen_random(rnd_nodes, rnd_move, rnd_comm, class_from_name(gen_class), rnd_seed),
            gen_json, gen_out);
    });

    // export
    auto* exp = app.add_subcommand("export", "Render to external formats");
    exp->require_subcommand(1);
    std::string exp_file, exp_plan, exp_out, exp_target_csv;
    std::size_t exp_agents = 0, exp_moves = 0;
    bool exp_nosym = false;
    auto* exp_dot = exp->add_subcommand("dot", "Graphviz rendering");
    exp_dot->add_option("file", exp_file, "graph file")->required();
    exp_dot->add_option("--plan", exp_plan, "plan file to draw step by step");
    exp_dot->add_option("--out", exp_out, "write instead of printing");
    exp_dot->callback([&] {
        const GraphDocument doc = parse_graph_document(read_file(exp_file));
        std::optional<Execution> plan_steps;
        if (!exp_plan.empty()) plan_steps = parse_plan(read_file(exp_plan));
        const std::string text =
            export_dot(doc.graph, doc.labels, plan_steps ? &*plan_steps : nullptr);
        if (exp_out.empty())
            std::cout << text;
        else
            write_file(exp_out, text);
        rc = kExitFeasible;
    });
    auto* exp_cnf = exp->add_subcommand("dimacs", "CNF of a bounded problem");
    exp_cnf->add_option("file", exp_file, "graph file")->required();
    exp_cnf->add_option("--target", exp_target_csv,
                        "breach target nodes, comma-separated");
    exp_cnf->add_option("--agents", exp_agents, "bcover agent count");
    exp_cnf->add_option("--max-moves", exp_moves, "transition budget")->required();
    exp_cnf->add_flag("--no-symmetry", exp_nosym, "disable the symmetry breaking");
    exp_cnf->add_option("--out", exp_out, "write instead of printing");
    exp_cnf->callback([&] {
        const TopoGraph g = parse_graph(read_file(exp_file));
        const EncodeOptions opts{!exp_nosym};
        Encoding enc;
        if (!exp_target_csv.empty()) {
            if (exp_agents) throw Error("--target and --agents are mutually exclusive");
            enc = encode_breach(g, Configuration(parse_id_list(exp_target_csv, g.node_count())),
                                exp_moves, opts);
        } else if (exp_agents) {
            enc = encode_bcover(g, exp_agents, exp_moves, opts);
        } else {
            throw Error("need --target (breach) or --agents (bcover)");
        }
        const std::string text = to_dimacs(enc.cnf);
        if (exp_out.empty())
            std::cout << text;
        else
            write_file(exp_out, text);
        rc = kExitFeasible;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}

}  // namespace cmapf
