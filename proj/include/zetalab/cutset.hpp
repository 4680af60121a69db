#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

// Finite graph with a distinguished root.  Adjacency lists keep their
// declaration order; for undirected graphs each edge appears in the lists of
// both endpoints.
struct RootedGraph {
    std::vector<std::string> nodes; // declaration order
    std::map<std::string, std::vector<std::string>> adjacency;
    std::string root;
    bool directed = false;
};

// Text format, in order:
//   root <id>
//   directed true|false
//   <id>: <neighbor> <neighbor> ...     (one line per node)
// Every neighbor must itself be declared on some node line.
RootedGraph parse_graph(std::istream& in);
RootedGraph parse_graph_text(const std::string& text);

struct CutsetResult {
    // Cut nodes in their output order (first components of the inverse
    // edges, deduplicated from the most recently found backwards).
    std::vector<std::string> cutset;
    // Inverse edges (sv, v) in discovery order: the search sitting at v saw
    // the already-numbered sv.
    std::vector<std::pair<std::string, std::string>> inverse_edges;
    // Depth-first numbers of the visited nodes (root gets 1, a child one
    // more than its parent).  Unreachable nodes are absent.
    std::map<std::string, long> df;
};

// Depth-first search from the root that records every edge closing against
// an already-numbered node and cuts at that node.  Removing the cutset from
// the subgraph reachable from the root leaves it acyclic.
CutsetResult cutset_undirected(const RootedGraph& g);

// Directed variant: only arcs out of the current node are consumed, and an
// arc from v to an already-numbered sv counts as inverse only when sv sits
// at strictly smaller depth (df(v) > df(sv)) and differs from v.  With
// strict = true every visited node carrying a self-loop is added to the
// cutset as well.
CutsetResult cutset_directed(const RootedGraph& g, bool strict = false);

} // namespace zetalab
