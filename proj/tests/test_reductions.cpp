#include <doctest.h>

#include <algorithm>
#include <random>
#include <variant>
#include <vector>

#include "cmapf/exact_planner.hpp"
#include "cmapf/reductions.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cmapf;

namespace {

Configuration cfg(std::vector<NodeId> v) { return Configuration(std::move(v)); }

// Path 0->1->2 with one-way movement, self-loops kept, comm along the path.
TopoGraph p3_directed() {
    return TopoGraph::build(3, 0,
                            {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}},
                            {{0, 1}, {1, 2}});
}

GridGraph make_grid(int w, int h, std::vector<std::pair<int, int>> obstacles,
                    int bx = 0, int by = 0) {
    GridGraph grid;
    grid.width = w;
    grid.height = h;
    grid.blocked.assign(static_cast<std::size_t>(w) * h, 0);
    for (auto [x, y] : obstacles)
        grid.blocked[static_cast<std::size_t>(y) * w + x] = 1;
    grid.base_x = bx;
    grid.base_y = by;
    return grid;
}

}  // namespace

TEST_CASE("Formula3Sat::make validates and canonicalizes") {
    Formula3Sat ok = Formula3Sat::make(2, {{1, -2}, {2}});
    CHECK(ok.variable_count == 2);
    CHECK(ok.clauses.size() == 2);
    // Duplicate literals inside a clause collapse.
    Formula3Sat dup = Formula3Sat::make(1, {{1, 1, 1}});
    CHECK(dup.clauses[0] == std::vector<int>{1});
    CHECK_THROWS_AS(Formula3Sat::make(0, {{1}}), InvalidFormula);
    CHECK_THROWS_AS(Formula3Sat::make(1, {}), InvalidFormula);
    CHECK_THROWS_AS(Formula3Sat::make(1, {{}}), InvalidFormula);
    CHECK_THROWS_AS(Formula3Sat::make(1, {{0}}), InvalidFormula);
    CHECK_THROWS_AS(Formula3Sat::make(1, {{2}}), InvalidFormula);
    CHECK_THROWS_AS(Formula3Sat::make(4, {{1, 2, 3, 4}}), InvalidFormula);
}

TEST_CASE("directed reach-to-cover construction shape") {
    TopoGraph g = p3_directed();
    ReducedInstance inst = reduce_reach_to_cover_dir(g, cfg({1}));
    const TopoGraph& gp = inst.graph;
    // 3 copy nodes + s1 + v1.
    REQUIRE(gp.node_count() == 5);
    CHECK(std::get<CoverTask>(inst.task).agents == 1);
    const NodeId s1 = 3, v1 = 4;
    CHECK(inst.labels[s1] == "s1");
    CHECK(inst.labels[v1] == "v1");
    CHECK(inst.labels[0] == "B");
    // Ladder: target -> s1 -> v1; v1 is both v_1 (shuttle) and v_k (anchor).
    CHECK(gp.has_move(1, s1));
    CHECK(gp.has_move(s1, v1));
    CHECK(gp.has_move(v1, v1));
    CHECK(gp.has_move(v1, 0));
    for (NodeId u = 0; u < 3; ++u) {
        CHECK(gp.has_move(v1, u));
        CHECK(gp.has_move(u, v1));
    }
    // Communication: s1 to base, v1 to everything; copy comm retained.
    CHECK(gp.has_comm(s1, 0));
    for (NodeId u = 0; u < 4; ++u)
        CHECK(gp.has_comm(v1, u));
    CHECK(gp.has_comm(0, 1));
    CHECK(gp.has_comm(1, 2));
    // The base self-loop is demanded up front.
    TopoGraph no_loop = TopoGraph::build(2, 0, {{0, 1}, {1, 1}}, {{0, 1}});
    CHECK_THROWS_AS(reduce_reach_to_cover_dir(no_loop, cfg({1})), BaseSelfLoopMissing);
}

TEST_CASE("directed reach-to-cover at k=1 splits the two sides") {
    // With a single agent the anchor-plus-walker choreography behind the
    // construction is unavailable: once the agent leaves v1 into the copy,
    // nothing keeps it connected to the base. Reachability of (1) holds in
    // the input while coverage of the output fails, so the two sides of the
    // reduction genuinely differ at k=1. The equivalence suite therefore
    // runs at k=2, where the construction is sound.
    TopoGraph g = p3_directed();
    CHECK(search_reach(g, cfg({1})).feasible());
    ReducedInstance inst = reduce_reach_to_cover_dir(g, cfg({1}));
    CHECK_FALSE(search_cover(inst.graph, 1).feasible());

    // Where the input side is already infeasible the two sides agree even
    // at k=1.
    TopoGraph stub = TopoGraph::build(
        3, 0, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}, {{0, 1}, {1, 2}});
    CHECK_FALSE(search_reach(stub, cfg({2})).feasible());
    ReducedInstance stub_inst = reduce_reach_to_cover_dir(stub, cfg({2}));
    CHECK_FALSE(search_cover(stub_inst.graph, 1).feasible());
}

TEST_CASE("directed reach-to-cover equivalence on 50 random instances at k=2") {
    int feasible_seen = 0;
    for (std::uint32_t i = 0; i < 50; ++i) {
        const std::size_t nodes = 2 + i % 4;  // up to 5
        TopoGraph g = gen_random(nodes, 0.35 + 0.05 * (i % 4), 0.45,
                                 TargetClass::Raw, 40'000 + i);
        std::mt19937 rng(i);
        std::vector<NodeId> target{NodeId(rng() % g.node_count()),
                                   NodeId(rng() % g.node_count())};
        CAPTURE(i);
        PlanOutcome reach = search_reach(g, cfg(target));
        REQUIRE(reach.status != PlanStatus::BudgetExhausted);
        // Triangulate the left side against the ordered-tuple oracle.
        CHECK(reach.feasible() == oracles::reach_by_enumeration(g, target));

        ReducedInstance inst = reduce_reach_to_cover_dir(g, cfg(target));
        PlanOutcome cover = search_cover(inst.graph,
                                         std::get<CoverTask>(inst.task).agents);
        REQUIRE(cover.status != PlanStatus::BudgetExhausted);
        CHECK(reach.feasible() == cover.feasible());
        if (cover.feasible()) {
            ++feasible_seen;
            CHECK(validate_execution(inst.graph, *cover.execution, true, 2).ok);
        }
    }
    CHECK(feasible_seen > 5);
    CHECK(feasible_seen < 50);
}

TEST_CASE("neighbor-communicable reach-to-cover construction shape") {
    SUBCASE("k=1 columns have four fresh nodes in two blocks") {
        TopoGraph g = fixtures::p3();  // sight-moveable is also nc
        ReducedInstance inst = reduce_reach_to_cover_nc(g, cfg({2}));
        // 3 copy + 1 column of 2k+2 = 4 + two wires of k+1 = 2 each.
        CHECK(inst.graph.node_count() == 3 + 4 + 4);
        CHECK(std::get<CoverTask>(inst.task).agents == 1);
        // Column rungs: target 2 -> f(1,1) -> f(1,2) -> s1 -> v1.
        const NodeId f11 = 3, f12 = 4, s1 = 5, v1 = 6;
        CHECK(inst.labels[f11] == "f1_1");
        CHECK(inst.labels[f12] == "f1_2");
        CHECK(inst.labels[s1] == "s1");
        CHECK(inst.labels[v1] == "v1");
        CHECK(inst.graph.has_move(2, f11));
        CHECK(inst.graph.has_move(f11, f12));
        CHECK(inst.graph.has_move(f12, s1));
        CHECK(inst.graph.has_move(s1, v1));
        CHECK(inst.graph.has_move(v1, v1));
        // Lower block rows communicate with the base from column 0; with a
        // single column the first and last columns coincide.
        CHECK(inst.graph.has_comm(f11, 0));
        CHECK(inst.graph.has_comm(f12, 0));
        CHECK(inst.graph.has_comm(s1, 0));
        CHECK(inst.graph.has_comm(v1, 0));
    }
    SUBCASE("output stays neighbor-communicable and k=2 wires exist") {
        TopoGraph g = gen_random(4, 0.4, 0.5, TargetClass::Nc, 77);
        ReducedInstance inst = reduce_reach_to_cover_nc(g, cfg({1, 2}));
        CHECK(classify(inst.graph).neighbor_communicable);
        const std::size_t n = g.node_count();
        // Two columns of six plus two wires of three.
        CHECK(inst.graph.node_count() == n + 2 * 6 + 2 * 3);
        // v1 tops the first column; the up-wire feeds it and the down-wire
        // drains it, each touching every copy node on its far end.
        const NodeId v1 = static_cast<NodeId>(n + 5);
        const NodeId u1 = static_cast<NodeId>(n + 12);
        const NodeId d3 = static_cast<NodeId>(n + 17);
        CHECK(inst.labels[v1] == "v1");
        CHECK(inst.labels[u1] == "u1");
        CHECK(inst.labels[d3] == "d3");
        for (NodeId copy = 0; copy < n; ++copy) {
            CHECK(inst.graph.has_move(copy, u1));
            CHECK(inst.graph.has_move(d3, copy));
        }
        CHECK_FALSE(inst.graph.has_move(u1, v1));  // wire is three nodes long
    }
    SUBCASE("precondition") {
        TopoGraph bad = TopoGraph::build(2, 0, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {});
        CHECK_THROWS_AS(reduce_reach_to_cover_nc(bad, cfg({1})),
                        NotNeighborCommunicable);
    }
}

TEST_CASE("neighbor-communicable reach-to-cover equivalence at k=2") {
    int feasible_seen = 0;
    for (std::uint32_t i = 0; i < 50; ++i) {
        const std::size_t nodes = 2 + i % 3;  // up to 4
        TopoGraph g = gen_random(nodes, 0.4 + 0.05 * (i % 4), 0.45,
                                 TargetClass::Nc, 50'000 + i);
        std::mt19937 rng(i);
        std::vector<NodeId> target{NodeId(rng() % g.node_count()),
                                   NodeId(rng() % g.node_count())};
        CAPTURE(i);
        PlanOutcome reach = search_reach(g, cfg(target));
        REQUIRE(reach.status != PlanStatus::BudgetExhausted);
        CHECK(reach.feasible() == oracles::reach_by_enumeration(g, target));

        ReducedInstance inst = reduce_reach_to_cover_nc(g, cfg(target));
        PlanOutcome cover = search_cover(inst.graph, 2);
        REQUIRE(cover.status != PlanStatus::BudgetExhausted);
        CHECK(reach.feasible() == cover.feasible());
        if (cover.feasible()) {
            ++feasible_seen;
            CHECK(validate_execution(inst.graph, *cover.execution, true, 2).ok);
        }
    }
    CHECK(feasible_seen > 5);
    CHECK(feasible_seen < 50);
}

TEST_CASE("3-SAT reduction shape on the two-clause example") {
    Formula3Sat phi = Formula3Sat::make(3, {{1, -2, 3}, {2, 3}});
    ReducedInstance inst = reduce_3sat_to_breach_sm(phi);
    CHECK(inst.graph.node_count() == 25);
    const auto& task = std::get<BReachTask>(inst.task);
    CHECK(task.max_moves == 3);
    CHECK(task.target.width() == 5);
    // Goals are the five g-nodes.
    CHECK(task.target == cfg({5, 10, 15, 18, 21}));
    CHECK(inst.labels[0] == "B");
    CHECK(inst.labels[5] == "g_x1");
    CHECK(inst.labels[16] == "n_c1");
    CHECK(inst.labels[22] == "p3");
    CHECK(inst.labels[24] == "p1");
    // Clause 1 = (x1 v -x2 v x3) communicates with its literal nodes.
    const NodeId c1 = 17;
    CHECK(inst.graph.has_comm(c1, 2));   // x1
    CHECK(inst.graph.has_comm(c1, 9));   // nx2, the negative branch literal
    CHECK(inst.graph.has_comm(c1, 12));  // x3

    // The construction is neighbor-communicable; the clause-to-literal
    // communication edges have no in-sight movement path, so the strict
    // sight-moveable check reports exactly those pairs.
    GraphClassReport r = classify(inst.graph);
    CHECK(r.undirected);
    CHECK(r.reflexive);
    CHECK(r.neighbor_communicable);
    CHECK_FALSE(r.sight_moveable);
    // Pairs come out (min, max), so the literal end is first and the clause
    // end second: three edges for clause 1 and two for clause 2.
    CHECK(r.blind_comm_edges ==
          std::vector<std::pair<NodeId, NodeId>>{
              {2, 17}, {7, 20}, {9, 17}, {12, 17}, {12, 20}});
}

TEST_CASE("3-SAT reduction feasibility matches satisfiability on named formulas") {
    SUBCASE("satisfiable two-clause formula") {
        Formula3Sat phi = Formula3Sat::make(3, {{1, -2, 3}, {2, 3}});
        ReducedInstance inst = reduce_3sat_to_breach_sm(phi);
        const auto& task = std::get<BReachTask>(inst.task);
        PlanOutcome out = search_breach(inst.graph, task.target, task.max_moves);
        REQUIRE(out.feasible());
        CHECK(validate_execution(inst.graph, *out.execution, false, 5).ok);
    }
    SUBCASE("contradiction") {
        Formula3Sat phi = Formula3Sat::make(1, {{1}, {-1}});
        ReducedInstance inst = reduce_3sat_to_breach_sm(phi);
        CHECK(inst.graph.node_count() == 15);
        const auto& task = std::get<BReachTask>(inst.task);
        CHECK_FALSE(search_breach(inst.graph, task.target, task.max_moves).feasible());
    }
    SUBCASE("single positive clause") {
        Formula3Sat phi = Formula3Sat::make(1, {{1}});
        ReducedInstance inst = reduce_3sat_to_breach_sm(phi);
        const auto& task = std::get<BReachTask>(inst.task);
        PlanOutcome out = search_breach(inst.graph, task.target, task.max_moves);
        REQUIRE(out.feasible());
        // The variable agent walks the positive branch: B, n_x1, x1, g_x1.
        const Execution& e = *out.execution;
        REQUIRE(e.size() == 4);
        CHECK(e[1] == cfg({1, 6}));
    }
}

TEST_CASE("3-SAT reduction equivalence, exhaustive up to n+m = 5") {
    // Every formula with n variables and m clauses, n + m <= 5: clauses are
    // all 1..3-element subsets of the 2n literals, formulas all m-multisets
    // of clauses. The truth table is the oracle.
    std::size_t formulas = 0, satisfiable = 0;
    for (int n = 1; n <= 4; ++n) {
        // Clause universe for n variables.
        std::vector<std::vector<int>> universe;
        std::vector<int> literals;
        for (int v = 1; v <= n; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        const std::size_t L = literals.size();
        for (std::size_t a = 0; a < L; ++a) {
            universe.push_back({literals[a]});
            for (std::size_t b = a + 1; b < L; ++b) {
                universe.push_back({literals[a], literals[b]});
                for (std::size_t c = b + 1; c < L; ++c)
                    universe.push_back({literals[a], literals[b], literals[c]});
            }
        }
        for (int m = 1; n + m <= 5; ++m) {
            // m-multisets of the universe via nondecreasing index picks.
            std::vector<std::size_t> pick(m, 0);
            while (true) {
                std::vector<std::vector<int>> clauses;
                for (std::size_t idx : pick) clauses.push_back(universe[idx]);
                Formula3Sat phi = Formula3Sat::make(n, clauses);
                ReducedInstance inst = reduce_3sat_to_breach_sm(phi);
                const auto& task = std::get<BReachTask>(inst.task);
                PlanOutcome out =
                    search_breach(inst.graph, task.target, task.max_moves);
                REQUIRE(out.status != PlanStatus::BudgetExhausted);
                const bool expected = oracles::sat_by_truth_table(phi);
                if (out.feasible() != expected) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(pick);
                    REQUIRE(out.feasible() == expected);
                }
                ++formulas;
                satisfiable += expected;

                // Next multiset.
                int i = m - 1;
                while (i >= 0 && pick[i] == universe.size() - 1) --i;
                if (i < 0) break;
                ++pick[i];
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    pick[j] = pick[i];
            }
        }
    }
    CHECK(formulas == 1707);
    CHECK(satisfiable > 0);
    CHECK(satisfiable < formulas);
}

TEST_CASE("grid reduction shape and named examples") {
    SUBCASE("square has a tour") {
        ReducedInstance inst = reduce_ghc_to_bcover_cc(make_grid(2, 2, {}));
        CHECK(inst.graph.node_count() == 4);
        const auto& task = std::get<BCoverTask>(inst.task);
        CHECK(task.agents == 1);
        CHECK(task.max_moves == 4);
        CHECK(classify(inst.graph).complete_communication);
        PlanOutcome out = search_bcover(inst.graph, task.agents, task.max_moves);
        REQUIRE(out.feasible());
        CHECK(validate_execution(inst.graph, *out.execution, true, 1).ok);
    }
    SUBCASE("path of three cells has none") {
        ReducedInstance inst = reduce_ghc_to_bcover_cc(make_grid(3, 1, {}));
        const auto& task = std::get<BCoverTask>(inst.task);
        CHECK_FALSE(search_bcover(inst.graph, task.agents, task.max_moves).feasible());
    }
    SUBCASE("full 3x3 has none either") {
        ReducedInstance inst = reduce_ghc_to_bcover_cc(make_grid(3, 3, {}));
        CHECK(inst.graph.node_count() == 9);
        const auto& task = std::get<BCoverTask>(inst.task);
        CHECK_FALSE(search_bcover(inst.graph, task.agents, task.max_moves).feasible());
    }
    SUBCASE("labels name the cells") {
        ReducedInstance inst = reduce_ghc_to_bcover_cc(make_grid(2, 1, {}));
        CHECK(inst.labels[0] == "r0c0");
        CHECK(inst.labels[1] == "r0c1");
    }
    SUBCASE("disconnected free space is rejected") {
        CHECK_THROWS_AS(reduce_ghc_to_bcover_cc(make_grid(3, 1, {{1, 0}})),
                        DisconnectedGrid);
    }
}

TEST_CASE("grid reduction equivalence, exhaustive over boards up to 3x3") {
    std::size_t boards = 0, tours = 0;
    for (int w = 1; w <= 3; ++w)
        for (int h = 1; h <= 3; ++h) {
            const int cells = w * h;
            for (int mask = 0; mask < (1 << cells); ++mask) {
                std::vector<std::pair<int, int>> obstacles;
                int first_free = -1;
                for (int c = 0; c < cells; ++c) {
                    if (mask >> c & 1)
                        obstacles.emplace_back(c % w, c / w);
                    else if (first_free < 0)
                        first_free = c;
                }
                if (first_free < 0) continue;  // fully blocked
                GridGraph grid = make_grid(w, h, obstacles, first_free % w,
                                           first_free / w);
                ReducedInstance inst;
                try {
                    inst = reduce_ghc_to_bcover_cc(grid);
                } catch (const DisconnectedGrid&) {
                    continue;
                }
                const auto& task = std::get<BCoverTask>(inst.task);
                PlanOutcome got =
                    search_bcover(inst.graph, task.agents, task.max_moves);
                REQUIRE(got.status != PlanStatus::BudgetExhausted);
                const bool expect = oracles::grid_tour_exists(grid);
                CAPTURE(w);
                CAPTURE(h);
                CAPTURE(mask);
                CHECK(got.feasible() == expect);
                ++boards;
                tours += expect;
            }
        }
    // Plenty of connected boards, tours existing and missing both.
    CHECK(boards > 300);
    CHECK(tours > 10);
    CHECK(tours < boards);
}

TEST_CASE("sm_closure prunes blind communication edges") {
    SUBCASE("the mission graph loses exactly its two blind edges") {
        TopoGraph closed = sm_closure(fixtures::fig1());
        CHECK(classify(closed).sight_moveable);
        CHECK(closed.node_count() == 11);
        // Original had 23 comm edges; (2,8) and (3,7) go.
        CHECK(closed.comm_edges().size() == 21);
        CHECK_FALSE(closed.has_comm(2, 8));
        CHECK_FALSE(closed.has_comm(3, 7));
        // Idempotent.
        CHECK(sm_closure(closed) == closed);
    }
    SUBCASE("already sight-moveable graphs pass through unchanged") {
        CHECK(sm_closure(fixtures::p3()) == fixtures::p3());
        CHECK(sm_closure(fixtures::k3()) == fixtures::k3());
    }
    SUBCASE("long-spoke star loses the leaf-to-leaf shortcut") {
        // Movement: two spokes 0-1-2 and 0-3-4. Communication mirrors the
        // movement plus one long-range edge (2,4) whose only movement path
        // runs through the hub, far outside the sight of either leaf.
        TopoGraph star = fixtures::undirected_reflexive(
            5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}},
            {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}});
        TopoGraph closed = sm_closure(star);
        CHECK(classify(closed).sight_moveable);
        CHECK_FALSE(closed.has_comm(2, 4));
        CHECK(closed.comm_edges().size() == 4);
    }
    SUBCASE("precondition") {
        CHECK_THROWS_AS(sm_closure(p3_directed()), PreconditionViolated);
    }
}

TEST_CASE("grid instance generator") {
    SUBCASE("radius 1.5 open 3x3 comes out neighbor-communicable") {
        TopoGraph g = gen_grid_instance(3, 3, {}, 1.5, TargetClass::Nc);
        CHECK(g.node_count() == 9);
        CHECK(classify(g).neighbor_communicable);
        // Diagonal neighbors are within 1.5 but straight two-aparts are not.
        CHECK(g.has_comm(0, 4));
        CHECK_FALSE(g.has_comm(0, 2));
    }
    SUBCASE("huge radius and cc coercion give complete communication") {
        TopoGraph g = gen_grid_instance(2, 2, {}, 100.0, TargetClass::Cc);
        CHECK(classify(g).complete_communication);
    }
    SUBCASE("center obstacle with sm coercion is sight-moveable") {
        TopoGraph g = gen_grid_instance(3, 3, {{1, 1}}, 2.9, TargetClass::Sm);
        CHECK(g.node_count() == 8);
        CHECK(classify(g).sight_moveable);
    }
    SUBCASE("line of sight stops at obstacles") {
        // Center blocked; free cells renumber row-major as 0..7.
        TopoGraph g = gen_grid_instance(3, 3, {{1, 1}}, 2.0, TargetClass::Raw);
        // Top corners see each other through the free top-middle cell.
        CHECK(g.has_comm(0, 2));
        // The middle-row sides would have to look straight through the
        // obstacle.
        CHECK_FALSE(g.has_comm(3, 4));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(gen_grid_instance(0, 3, {}, 1.0, TargetClass::Raw), RangeError);
        CHECK_THROWS_AS(gen_grid_instance(3, 3, {{3, 0}}, 1.0, TargetClass::Raw),
                        RangeError);
        CHECK_THROWS_AS(gen_grid_instance(3, 3, {{0, 0}}, 1.0, TargetClass::Raw),
                        BaseBlocked);
        CHECK_THROWS_AS(gen_grid_instance(3, 1, {{1, 0}}, 1.0, TargetClass::Raw),
                        DisconnectedGrid);
    }
}

TEST_CASE("random generator determinism and class conformance") {
    SUBCASE("same seed, same graph") {
        TopoGraph a = gen_random(6, 0.4, 0.3, TargetClass::Nc, 7);
        TopoGraph b = gen_random(6, 0.4, 0.3, TargetClass::Nc, 7);
        CHECK(a == b);
    }
    SUBCASE("single node collapses to the base") {
        TopoGraph g = gen_random(1, 0.5, 0.5, TargetClass::Cc, 3);
        CHECK(g.node_count() == 1);
        CHECK(classify(g).complete_communication);
    }
    SUBCASE("coercion targets are hit across seeds") {
        for (std::uint32_t seed = 0; seed < 40; ++seed) {
            TopoGraph sm = gen_random(2 + seed % 6, 0.4, 0.3, TargetClass::Sm, seed);
            CHECK(classify(sm).sight_moveable);
            TopoGraph cc = gen_random(2 + seed % 6, 0.4, 0.3, TargetClass::Cc, seed);
            CHECK(classify(cc).complete_communication);
            TopoGraph nc = gen_random(2 + seed % 6, 0.4, 0.3, TargetClass::Nc, seed);
            CHECK(classify(nc).neighbor_communicable);
            // The kept component always contains the base as node 0 with its
            // self-loop.
            CHECK(nc.has_move(0, 0));
            CHECK(nc.node_count() <= 2 + seed % 6);
        }
    }
}
