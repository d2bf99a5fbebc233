#pragma once

#include <string>
#include <vector>

#include "cmapf/plan_semantics.hpp"
#include "cmapf/topo_graph.hpp"

namespace cmapf {

// A parsed graph file: the structure plus everything the file said beyond it.
struct GraphDocument {
    TopoGraph graph;
    // One entry per node; empty string where the file gave no label.
    std::vector<std::string> labels;
    // Non-fatal notes, e.g. duplicate edge lines (which are idempotent).
    std::vector<std::string> warnings;
};

// Parses the line-oriented cmapf graph format:
//
//   cmapf 1            optional header; when present it must come first
//   nodes <N>          required, before any line that references ids
//   base <id>          optional, defaults to 0
//   move <u> <v>       directed movement edge; u == v is a self-loop
//   moveu <u> <v>      sugar for both directions
//   comm <u> <v>       communication edge (undirected)
//   label <id> <text>  display name; rest of the line, spaces allowed
//
// '#' starts a comment; blank lines are ignored. Malformed lines raise
// ParseError carrying the 1-based line number; ids outside 0..N-1 raise
// RangeError. Duplicate edges are recorded as warnings, not errors.
GraphDocument parse_graph_document(const std::string& text);

// parse_graph_document with the document dropped.
TopoGraph parse_graph(const std::string& text);

// Canonical text form: header, nodes, base, every stored movement edge as a
// sorted `move` line, sorted `comm` lines, then `label` lines for non-empty
// labels. parse(serialize(g)) reconstructs an equal graph.
std::string serialize_graph(const TopoGraph& g, const std::vector<std::string>& labels = {});

// Graphviz rendering: movement edges solid (one line with dir=none when the
// reverse edge exists too), communication edges dashed, base filled. With a
// plan, appends one cluster per configuration whose occupied nodes are
// doubly circled and annotated with agent counts.
std::string export_dot(const TopoGraph& g, const std::vector<std::string>& labels = {},
                       const Execution* plan = nullptr);

// Plan files: one configuration per line as comma-separated node ids.
// All lines must have the same width; errors raise ParseError.
Execution parse_plan(const std::string& text);
std::string serialize_plan(const Execution& e);

}  // namespace cmapf
