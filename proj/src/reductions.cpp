#include "cmapf/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <random>
#include <string>

#include "cmapf/errors.hpp"

namespace cmapf {

namespace {

using Edge = std::pair<NodeId, NodeId>;

void require_base_self_loop(const TopoGraph& g, const char* who) {
    if (!g.has_move(g.base(), g.base()))
        throw BaseSelfLoopMissing(std::string(who) + ": base node needs a movement self-loop");
}

// Applies the TargetClass contract to rolled/derived edge sets and builds the
// final graph. Sm and Cc first force movement undirected and reflexive, since
// those classes require it.
TopoGraph coerce_to_class(std::size_t node_count, NodeId base, std::vector<Edge> move,
                          std::vector<Edge> comm, TargetClass target_class) {
    const NodeId n = static_cast<NodeId>(node_count);
    if (target_class == TargetClass::Sm || target_class == TargetClass::Cc) {
        const std::size_t rolled = move.size();
        for (std::size_t i = 0; i < rolled; ++i) move.emplace_back(move[i].second, move[i].first);
        for (NodeId v = 0; v < n; ++v) move.emplace_back(v, v);
    }
    switch (target_class) {
        case TargetClass::Raw:
            break;
        case TargetClass::Nc:
        case TargetClass::Sm:
            for (const auto& [a, b] : move)
                if (a != b) comm.emplace_back(a, b);
            break;
        case TargetClass::Cc:
            comm.clear();
            for (NodeId a = 0; a < n; ++a)
                for (NodeId b = a + 1; b < n; ++b) comm.emplace_back(a, b);
            break;
    }
    TopoGraph g = TopoGraph::build(node_count, base, std::move(move), std::move(comm));
    if (target_class == TargetClass::Sm) g = sm_closure(g);
    return g;
}

}  // namespace

Formula3Sat Formula3Sat::make(int variable_count, std::vector<std::vector<int>> clauses) {
    if (variable_count < 1) throw InvalidFormula("formula needs at least one variable");
    if (clauses.empty()) throw InvalidFormula("formula needs at least one clause");
    for (auto& clause : clauses) {
        if (clause.empty()) throw InvalidFormula("empty clause");
        for (int lit : clause) {
            if (lit == 0) throw InvalidFormula("literal 0 is reserved for clause ends");
            if (std::abs(lit) > variable_count)
                throw InvalidFormula("literal " + std::to_string(lit) + " names no variable");
        }
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        if (clause.size() > 3)
            throw InvalidFormula("clause with more than three distinct literals");
    }
    return Formula3Sat{variable_count, std::move(clauses)};
}

ReducedInstance reduce_reach_to_cover_dir(const TopoGraph& g, const Configuration& target) {
    require_base_self_loop(g, "reduce_reach_to_cover_dir");
    const NodeId n = static_cast<NodeId>(g.node_count());
    const NodeId k = static_cast<NodeId>(target.width());
    const NodeId total = n + 2 * k;
    const auto s = [n](NodeId i) { return n + i; };
    const auto v = [n, k](NodeId i) { return n + k + i; };

    std::vector<Edge> move = g.move_edges();
    std::vector<Edge> comm = g.comm_edges();
    for (NodeId i = 0; i < k; ++i) {
        move.emplace_back(target[i], s(i));
        move.emplace_back(s(i), v(i));
        move.emplace_back(v(i), g.base());
    }
    for (NodeId x = 0; x < n; ++x) {
        move.emplace_back(v(0), x);
        move.emplace_back(x, v(0));
    }
    move.emplace_back(v(k - 1), v(k - 1));

    comm.emplace_back(s(0), g.base());
    for (NodeId i = 0; i + 1 < k; ++i) {
        comm.emplace_back(s(i), s(i + 1));
        comm.emplace_back(v(i), v(i + 1));
    }
    for (NodeId x = 0; x < total; ++x) comm.emplace_back(v(k - 1), x);

    std::vector<std::string> labels(total);
    for (NodeId x = 0; x < n; ++x)
        labels[x] = x == g.base() ? std::string("B") : "g" + std::to_string(x);
    for (NodeId i = 0; i < k; ++i) {
        labels[s(i)] = "s" + std::to_string(i + 1);
        labels[v(i)] = "v" + std::to_string(i + 1);
    }
    return ReducedInstance{
        TopoGraph::build(total, g.base(), std::move(move), std::move(comm)),
        CoverTask{k}, std::move(labels)};
}

ReducedInstance reduce_reach_to_cover_nc(const TopoGraph& g, const Configuration& target) {
    if (!classify(g).neighbor_communicable)
        throw NotNeighborCommunicable(
            "reduce_reach_to_cover_nc requires a neighbor-communicable input");
    require_base_self_loop(g, "reduce_reach_to_cover_nc");
    const NodeId n = static_cast<NodeId>(g.node_count());
    const NodeId k = static_cast<NodeId>(target.width());
    const NodeId col_len = 2 * k + 2;
    // Column node i at height r, 1-based up to col_len; the top row is v_i.
    const auto f = [n, col_len](NodeId i, NodeId r) { return n + i * col_len + (r - 1); };
    const NodeId wire = n + k * col_len;
    const auto up = [wire](NodeId j) { return wire + (j - 1); };
    const auto down = [wire, k](NodeId j) { return wire + (k + 1) + (j - 1); };
    const NodeId total = wire + 2 * (k + 1);
    const NodeId v1 = f(0, col_len);
    const NodeId vk = f(k - 1, col_len);

    std::vector<Edge> move = g.move_edges();
    std::vector<Edge> fresh;
    for (NodeId i = 0; i < k; ++i) {
        fresh.emplace_back(target[i], f(i, 1));
        for (NodeId r = 1; r < col_len; ++r) fresh.emplace_back(f(i, r), f(i, r + 1));
    }
    for (NodeId x = 0; x < n; ++x) {
        fresh.emplace_back(x, up(1));
        fresh.emplace_back(down(k + 1), x);
    }
    for (NodeId j = 1; j <= k; ++j) {
        fresh.emplace_back(up(j), up(j + 1));
        fresh.emplace_back(down(j), down(j + 1));
    }
    fresh.emplace_back(up(k + 1), v1);
    fresh.emplace_back(v1, down(1));
    fresh.emplace_back(vk, vk);
    fresh.emplace_back(vk, g.base());

    std::vector<Edge> comm = g.comm_edges();
    for (const auto& [a, b] : fresh)
        if (a != b) comm.emplace_back(a, b);
    move.insert(move.end(), fresh.begin(), fresh.end());

    for (NodeId r = 1; r <= col_len; ++r)
        for (NodeId i = 0; i + 1 < k; ++i) comm.emplace_back(f(i, r), f(i + 1, r));
    for (NodeId r = 1; r <= k + 1; ++r) comm.emplace_back(f(0, r), g.base());
    for (NodeId r = k + 2; r <= col_len; ++r) comm.emplace_back(f(k - 1, r), g.base());
    for (NodeId x = 0; x < total; ++x) comm.emplace_back(vk, x);

    std::vector<std::string> labels(total);
    for (NodeId x = 0; x < n; ++x)
        labels[x] = x == g.base() ? std::string("B") : "g" + std::to_string(x);
    for (NodeId i = 0; i < k; ++i)
        for (NodeId r = 1; r <= col_len; ++r) {
            std::string& slot = labels[f(i, r)];
            if (r == col_len)
                slot = "v" + std::to_string(i + 1);
            else if (r == col_len - 1)
                slot = "s" + std::to_string(i + 1);
            else
                slot = "f" + std::to_string(i + 1) + "_" + std::to_string(r);
        }
    for (NodeId j = 1; j <= k + 1; ++j) {
        labels[up(j)] = "u" + std::to_string(j);
        labels[down(j)] = "d" + std::to_string(j);
    }
    return ReducedInstance{
        TopoGraph::build(total, g.base(), std::move(move), std::move(comm)),
        CoverTask{k}, std::move(labels)};
}

ReducedInstance reduce_3sat_to_breach_sm(const Formula3Sat& phi) {
    const NodeId n = static_cast<NodeId>(phi.variable_count);
    const NodeId m = static_cast<NodeId>(phi.clauses.size());
    const auto n_x = [](NodeId j) { return 1 + 5 * j; };
    const auto x = [](NodeId j) { return 2 + 5 * j; };
    const auto n_nx = [](NodeId j) { return 3 + 5 * j; };
    const auto nx = [](NodeId j) { return 4 + 5 * j; };
    const auto g_x = [](NodeId j) { return 5 + 5 * j; };
    const NodeId cfirst = 1 + 5 * n;
    const auto n_c = [cfirst](NodeId i) { return cfirst + 3 * i; };
    const auto c = [cfirst](NodeId i) { return cfirst + 3 * i + 1; };
    const auto g_c = [cfirst](NodeId i) { return cfirst + 3 * i + 2; };
    const NodeId p3 = cfirst + 3 * m;
    const NodeId p2 = p3 + 1;
    const NodeId p1 = p3 + 2;
    const NodeId total = p1 + 1;
    const NodeId base = 0;

    std::vector<Edge> skeleton;
    for (NodeId j = 0; j < n; ++j) {
        skeleton.emplace_back(base, n_x(j));
        skeleton.emplace_back(n_x(j), x(j));
        skeleton.emplace_back(x(j), g_x(j));
        skeleton.emplace_back(base, n_nx(j));
        skeleton.emplace_back(n_nx(j), nx(j));
        skeleton.emplace_back(nx(j), g_x(j));
        if (j + 1 < n) skeleton.emplace_back(g_x(j), g_x(j + 1));
    }
    for (NodeId i = 0; i < m; ++i) {
        skeleton.emplace_back(base, n_c(i));
        skeleton.emplace_back(n_c(i), c(i));
        skeleton.emplace_back(c(i), g_c(i));
        if (i + 1 < m) skeleton.emplace_back(g_c(i), g_c(i + 1));
    }
    skeleton.emplace_back(g_x(n - 1), g_c(0));
    skeleton.emplace_back(g_x(0), p3);
    skeleton.emplace_back(p3, p2);
    skeleton.emplace_back(p2, p1);
    skeleton.emplace_back(p1, base);

    std::vector<Edge> move;
    std::vector<Edge> comm;
    for (const auto& [a, b] : skeleton) {
        move.emplace_back(a, b);
        move.emplace_back(b, a);
        comm.emplace_back(a, b);
    }
    for (NodeId v = 0; v < total; ++v) move.emplace_back(v, v);
    for (NodeId j = 0; j < n; ++j) {
        comm.emplace_back(x(j), base);
        comm.emplace_back(nx(j), base);
    }
    for (NodeId i = 0; i < m; ++i)
        for (int lit : phi.clauses[i]) {
            const NodeId var = static_cast<NodeId>(std::abs(lit)) - 1;
            comm.emplace_back(c(i), lit > 0 ? x(var) : nx(var));
        }
    const NodeId clique[] = {g_x(0), p3, p2, p1, base};
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) comm.emplace_back(clique[a], clique[b]);

    std::vector<NodeId> goals;
    for (NodeId j = 0; j < n; ++j) goals.push_back(g_x(j));
    for (NodeId i = 0; i < m; ++i) goals.push_back(g_c(i));

    std::vector<std::string> labels(total);
    labels[base] = "B";
    for (NodeId j = 0; j < n; ++j) {
        const std::string id = std::to_string(j + 1);
        labels[n_x(j)] = "n_x" + id;
        labels[x(j)] = "x" + id;
        labels[n_nx(j)] = "n_nx" + id;
        labels[nx(j)] = "nx" + id;
        labels[g_x(j)] = "g_x" + id;
    }
    for (NodeId i = 0; i < m; ++i) {
        const std::string id = std::to_string(i + 1);
        labels[n_c(i)] = "n_c" + id;
        labels[c(i)] = "c" + id;
        labels[g_c(i)] = "g_c" + id;
    }
    labels[p3] = "p3";
    labels[p2] = "p2";
    labels[p1] = "p1";
    return ReducedInstance{
        TopoGraph::build(total, base, std::move(move), std::move(comm)),
        BReachTask{Configuration(std::move(goals)), 3}, std::move(labels)};
}

ReducedInstance reduce_ghc_to_bcover_cc(const GridGraph& grid) {
    if (grid.width < 1 || grid.height < 1) throw DisconnectedGrid("grid has no cells");
    if (!grid.in_range(grid.base_x, grid.base_y) || grid.is_blocked(grid.base_x, grid.base_y))
        throw DisconnectedGrid("base cell is blocked or out of range");

    std::vector<NodeId> cell_node(static_cast<std::size_t>(grid.width) * grid.height,
                                  kUnreachable);
    std::vector<std::pair<int, int>> cells;
    for (int y = 0; y < grid.height; ++y)
        for (int x = 0; x < grid.width; ++x)
            if (!grid.is_blocked(x, y)) {
                cell_node[static_cast<std::size_t>(y) * grid.width + x] =
                    static_cast<NodeId>(cells.size());
                cells.emplace_back(x, y);
            }

    const NodeId total = static_cast<NodeId>(cells.size());
    const NodeId base = cell_node[static_cast<std::size_t>(grid.base_y) * grid.width +
                                  grid.base_x];
    std::vector<Edge> move;
    for (NodeId v = 0; v < total; ++v) {
        const auto [x, y] = cells[v];
        move.emplace_back(v, v);
        for (const auto& [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}})
            if (grid.in_range(x + dx, y + dy) && !grid.is_blocked(x + dx, y + dy)) {
                const NodeId w =
                    cell_node[static_cast<std::size_t>(y + dy) * grid.width + (x + dx)];
                move.emplace_back(v, w);
                move.emplace_back(w, v);
            }
    }

    std::vector<std::uint8_t> seen(total, 0);
    std::queue<NodeId> frontier;
    seen[base] = 1;
    frontier.push(base);
    std::size_t reached = 1;
    std::vector<std::vector<NodeId>> adj(total);
    for (const auto& [a, b] : move)
        if (a != b) adj[a].push_back(b);
    while (!frontier.empty()) {
        const NodeId at = frontier.front();
        frontier.pop();
        for (NodeId next : adj[at])
            if (!seen[next]) {
                seen[next] = 1;
                ++reached;
                frontier.push(next);
            }
    }
    if (reached != total) throw DisconnectedGrid("free cells are not connected");

    std::vector<Edge> comm;
    for (NodeId a = 0; a < total; ++a)
        for (NodeId b = a + 1; b < total; ++b) comm.emplace_back(a, b);

    std::vector<std::string> labels(total);
    for (NodeId v = 0; v < total; ++v)
        labels[v] = "r" + std::to_string(cells[v].second) + "c" +
                    std::to_string(cells[v].first);
    return ReducedInstance{
        TopoGraph::build(total, base, std::move(move), std::move(comm)),
        BCoverTask{1, total}, std::move(labels)};
}

TopoGraph sm_closure(const TopoGraph& g) {
    const auto report = classify(g);
    if (!report.undirected || !report.reflexive || !report.neighbor_communicable)
        throw PreconditionViolated(
            "sm_closure needs an undirected, reflexive, neighbor-communicable graph");

    TopoGraph current = g;
    std::vector<Edge> comm = g.comm_edges();
    for (;;) {
        std::vector<Edge> kept;
        kept.reserve(comm.size());
        for (const auto& [a, b] : comm)
            if (current.has_move(a, b) ||
                (sight_moveable_pair(current, a, b) && sight_moveable_pair(current, b, a)))
                kept.emplace_back(a, b);
        if (kept.size() == comm.size()) return current;
        comm = std::move(kept);
        current = TopoGraph::build(g.node_count(), g.base(), g.move_edges(), comm);
    }
}

namespace {

// Cells the integer Bresenham segment between two cell centers passes through,
// endpoints included.
std::vector<std::pair<int, int>> bresenham_cells(int x0, int y0, int x1, int y1) {
    std::vector<std::pair<int, int>> out;
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    int x = x0, y = y0;
    for (;;) {
        out.emplace_back(x, y);
        if (x == x1 && y == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
    }
    return out;
}

}  // namespace

TopoGraph gen_grid_instance(int width, int height,
                            const std::vector<std::pair<int, int>>& obstacles,
                            double comm_radius, TargetClass target_class) {
    if (width < 1 || height < 1) throw RangeError("grid dimensions must be positive");
    GridGraph grid{width, height,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 0),
                   0, 0};
    for (const auto& [x, y] : obstacles) {
        if (!grid.in_range(x, y))
            throw RangeError("obstacle (" + std::to_string(x) + "," + std::to_string(y) +
                             ") outside the grid");
        grid.blocked[static_cast<std::size_t>(y) * width + x] = 1;
    }
    if (grid.is_blocked(0, 0)) throw BaseBlocked("base cell (0,0) is an obstacle");

    // Free-cell ids, movement, and the connectivity precondition come from the
    // Hamiltonian-cycle skeleton builder; only communication differs here.
    ReducedInstance skeleton = reduce_ghc_to_bcover_cc(grid);
    const TopoGraph& adjacency = skeleton.graph;
    const NodeId total = static_cast<NodeId>(adjacency.node_count());

    std::vector<std::pair<int, int>> cells;
    cells.reserve(total);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (!grid.is_blocked(x, y)) cells.emplace_back(x, y);

    std::vector<Edge> comm;
    for (NodeId a = 0; a < total; ++a)
        for (NodeId b = a + 1; b < total; ++b) {
            const auto [ax, ay] = cells[a];
            const auto [bx, by] = cells[b];
            const double dx = ax - bx, dy = ay - by;
            if (std::sqrt(dx * dx + dy * dy) > comm_radius) continue;
            bool clear = true;
            for (const auto& [cx, cy] : bresenham_cells(ax, ay, bx, by))
                if (grid.is_blocked(cx, cy)) {
                    clear = false;
                    break;
                }
            if (clear) comm.emplace_back(a, b);
        }
    return coerce_to_class(total, adjacency.base(), adjacency.move_edges(), std::move(comm),
                           target_class);
}

TopoGraph gen_random(std::size_t node_count, double move_prob, double comm_prob,
                     TargetClass target_class, std::uint64_t seed) {
    if (node_count < 1) throw RangeError("need at least one node");
    if (!(move_prob >= 0.0 && move_prob <= 1.0) || !(comm_prob >= 0.0 && comm_prob <= 1.0))
        throw RangeError("probabilities must lie in [0, 1]");

    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    const auto coin = [&rng](double p) { return static_cast<double>(rng()) < p * 4294967296.0; };

    const NodeId n = static_cast<NodeId>(node_count);
    std::vector<Edge> move;
    std::vector<Edge> comm;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = 0; b < n; ++b)
            if (a != b && coin(move_prob)) move.emplace_back(a, b);
    for (NodeId a = 0; a < n; ++a)
        if (a == 0 || coin(move_prob)) move.emplace_back(a, a);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (coin(comm_prob)) comm.emplace_back(a, b);

    // Restrict to the base's weakly connected movement component.
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto& [a, b] : move)
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<NodeId> remap(n, kUnreachable);
    std::queue<NodeId> frontier;
    remap[0] = 0;
    frontier.push(0);
    std::vector<NodeId> kept{0};
    while (!frontier.empty()) {
        const NodeId at = frontier.front();
        frontier.pop();
        for (NodeId next : adj[at])
            if (remap[next] == kUnreachable) {
                remap[next] = 0;
                kept.push_back(next);
                frontier.push(next);
            }
    }
    std::sort(kept.begin(), kept.end());
    for (NodeId i = 0; i < static_cast<NodeId>(kept.size()); ++i) remap[kept[i]] = i;

    std::vector<Edge> kept_move;
    for (const auto& [a, b] : move)
        if (remap[a] != kUnreachable && remap[b] != kUnreachable)
            kept_move.emplace_back(remap[a], remap[b]);
    std::vector<Edge> kept_comm;
    for (const auto& [a, b] : comm)
        if (remap[a] != kUnreachable && remap[b] != kUnreachable)
            kept_comm.emplace_back(remap[a], remap[b]);

    return coerce_to_class(kept.size(), 0, std::move(kept_move), std::move(kept_comm),
                           target_class);
}

}  // namespace cmapf
