#include "cmapf/cli_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>
#include <utility>

#include "cmapf/errors.hpp"

namespace cmapf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Next whitespace-separated token, or empty when the line is exhausted.
std::string_view next_token(std::string_view& rest) {
    rest = trim(rest);
    std::size_t end = 0;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
    const std::string_view token = rest.substr(0, end);
    rest.remove_prefix(end);
    return token;
}

std::uint64_t parse_number(std::string_view token, int line_no, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, std::string("expected a number for ") + what + ", got '" +
                                      std::string(token) + "'");
    return value;
}

NodeId parse_node(std::string_view token, int line_no, std::uint64_t node_count) {
    const std::uint64_t id = parse_number(token, line_no, "a node id");
    if (id >= node_count)
        throw RangeError("line " + std::to_string(line_no) + ": node id " +
                         std::to_string(id) + " out of range, graph has " +
                         std::to_string(node_count) + " nodes");
    return static_cast<NodeId>(id);
}

}  // namespace

GraphDocument parse_graph_document(const std::string& text) {
    std::vector<std::pair<NodeId, NodeId>> move;
    std::vector<std::pair<NodeId, NodeId>> comm;
    std::vector<std::string> warnings;
    std::vector<std::pair<NodeId, std::string>> labels;
    std::uint64_t node_count = 0;
    bool saw_nodes = false;
    bool saw_base = false;
    bool saw_any_directive = false;
    NodeId base = 0;

    // Duplicate detection is on exact lines (direction included for move).
    std::vector<std::pair<NodeId, NodeId>> seen_move;
    std::vector<std::pair<NodeId, NodeId>> seen_comm;
    const auto note_duplicate = [&warnings](const char* kind, NodeId u, NodeId v,
                                            int line_no) {
        warnings.push_back("line " + std::to_string(line_no) + ": duplicate " + kind +
                           " edge " + std::to_string(u) + " " + std::to_string(v));
    };

    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string_view line = raw_line;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::string_view rest = line;
        const std::string_view directive = next_token(rest);

        if (directive == "cmapf") {
            if (saw_any_directive)
                throw ParseError(line_no, "header must be the first directive");
            const std::string_view version = next_token(rest);
            if (version != "1")
                throw ParseError(line_no, "unsupported format version '" +
                                              std::string(version) + "'");
            saw_any_directive = true;
            continue;
        }
        saw_any_directive = true;

        if (directive == "nodes") {
            if (saw_nodes) throw ParseError(line_no, "repeated nodes directive");
            node_count = parse_number(next_token(rest), line_no, "the node count");
            if (node_count == 0)
                throw RangeError("line " + std::to_string(line_no) +
                                 ": node count must be positive");
            saw_nodes = true;
        } else if (directive == "base" || directive == "move" || directive == "moveu" ||
                   directive == "comm" || directive == "label") {
            if (!saw_nodes)
                throw ParseError(line_no, "'" + std::string(directive) +
                                              "' before the nodes directive");
            if (directive == "base") {
                if (saw_base) throw ParseError(line_no, "repeated base directive");
                base = parse_node(next_token(rest), line_no, node_count);
                saw_base = true;
            } else if (directive == "label") {
                const NodeId id = parse_node(next_token(rest), line_no, node_count);
                const std::string_view name = trim(rest);
                if (name.empty()) throw ParseError(line_no, "label without text");
                labels.emplace_back(id, std::string(name));
                rest = {};
            } else {
                const NodeId u = parse_node(next_token(rest), line_no, node_count);
                const NodeId v = parse_node(next_token(rest), line_no, node_count);
                if (directive == "comm") {
                    const auto edge = std::minmax(u, v);
                    if (std::find(seen_comm.begin(), seen_comm.end(),
                                  std::pair{edge.first, edge.second}) != seen_comm.end())
                        note_duplicate("comm", u, v, line_no);
                    seen_comm.emplace_back(edge.first, edge.second);
                    comm.emplace_back(u, v);
                } else {
                    const bool both = directive == "moveu";
                    for (const auto& [a, b] :
                         both ? std::vector{std::pair{u, v}, std::pair{v, u}}
                              : std::vector{std::pair{u, v}}) {
                        if (std::find(seen_move.begin(), seen_move.end(),
                                      std::pair{a, b}) != seen_move.end()) {
                            note_duplicate("move", a, b, line_no);
                        } else {
                            seen_move.emplace_back(a, b);
                        }
                        move.emplace_back(a, b);
                        if (both && u == v) break;
                    }
                }
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
        }
        if (!trim(rest).empty())
            throw ParseError(line_no, "trailing text '" + std::string(trim(rest)) + "'");
    }
    if (!saw_nodes) throw ParseError(line_no + 1, "missing nodes directive");

    GraphDocument doc{TopoGraph::build(node_count, base, std::move(move), std::move(comm)),
                      std::vector<std::string>(node_count), std::move(warnings)};
    for (auto& [id, name] : labels) doc.labels[id] = std::move(name);
    return doc;
}

TopoGraph parse_graph(const std::string& text) {
    return std::move(parse_graph_document(text).graph);
}

std::string serialize_graph(const TopoGraph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "cmapf 1\n";
    out << "nodes " << g.node_count() << "\n";
    out << "base " << g.base() << "\n";
    for (const auto& [u, v] : g.move_edges()) out << "move " << u << " " << v << "\n";
    for (const auto& [u, v] : g.comm_edges()) out << "comm " << u << " " << v << "\n";
    for (std::size_t id = 0; id < labels.size() && id < g.node_count(); ++id)
        if (!labels[id].empty()) out << "label " << id << " " << labels[id] << "\n";
    return out.str();
}

namespace {

std::string dot_name(NodeId v, const std::vector<std::string>& labels) {
    if (v < labels.size() && !labels[v].empty())
        return std::to_string(v) + ":" + labels[v];
    return std::to_string(v);
}

}  // namespace

std::string export_dot(const TopoGraph& g, const std::vector<std::string>& labels,
                       const Execution* plan) {
    std::ostringstream out;
    out << "digraph cmapf {\n";
    out << "  node [shape=circle];\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  n" << v << " [label=\"" << dot_name(v, labels) << "\"";
        if (v == g.base()) out << ", style=filled, fillcolor=lightgrey";
        out << "];\n";
    }
    for (const auto& [u, v] : g.move_edges()) {
        if (u == v) {
            out << "  n" << u << " -> n" << u << ";\n";
        } else if (g.has_move(v, u)) {
            if (u < v) out << "  n" << u << " -> n" << v << " [dir=none];\n";
        } else {
            out << "  n" << u << " -> n" << v << ";\n";
        }
    }
    for (const auto& [u, v] : g.comm_edges())
        out << "  n" << u << " -> n" << v << " [dir=none, style=dashed, color=gray40];\n";

    if (plan) {
        for (std::size_t step = 0; step < plan->size(); ++step) {
            const Configuration& c = (*plan)[step];
            out << "  subgraph cluster_step" << step << " {\n";
            out << "    label=\"step " << step << "\";\n";
            for (NodeId v = 0; v < g.node_count(); ++v) {
                const auto occupancy =
                    std::count(c.positions().begin(), c.positions().end(), v);
                out << "    s" << step << "_" << v << " [label=\"" << dot_name(v, labels)
                    << "\"";
                if (occupancy > 0)
                    out << ", shape=doublecircle, xlabel=\"x" << occupancy << "\"";
                out << "];\n";
            }
            out << "  }\n";
        }
    }
    out << "}\n";
    return out.str();
}

Execution parse_plan(const std::string& text) {
    Execution plan;
    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string_view line = raw_line;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<NodeId> positions;
        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            const std::string_view field = trim(rest.substr(0, comma));
            if (field.empty()) throw ParseError(line_no, "empty position field");
            positions.push_back(static_cast<NodeId>(
                parse_number(field, line_no, "an agent position")));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (!plan.empty() && positions.size() != plan.front().width())
            throw ParseError(line_no, "configuration width changed from " +
                                          std::to_string(plan.front().width()) + " to " +
                                          std::to_string(positions.size()));
        plan.emplace_back(std::move(positions));
    }
    if (plan.empty()) throw ParseError(line_no + 1, "plan file has no configurations");
    return plan;
}

std::string serialize_plan(const Execution& e) {
    std::ostringstream out;
    for (const Configuration& c : e) {
        for (std::size_t i = 0; i < c.width(); ++i) {
            if (i) out << ",";
            out << c[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cmapf
