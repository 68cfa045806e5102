#pragma once

#include <set>
#include <string>
#include <vector>

#include "cm/maps.hpp"
#include "cm/metric_space.hpp"

namespace cm {

/// Nonoriented graph: unordered edges, no self-loops.
struct Graph {
    std::size_t vertex_count = 0;
    std::set<std::pair<PointId, PointId>> edges; // stored with first < second

    void add_edge(PointId u, PointId v);
    bool has_edge(PointId u, PointId v) const;
};

/// All-pairs shortest-path lengths by breadth-first search from every
/// vertex; unreachable pairs get infinity.
MetricSpace natural_distance(const Graph& g);

/// Standard components via union-find over the edge set.  Each component
/// sorted; components ordered by least vertex.
std::vector<std::vector<PointId>> connected_components(const Graph& g);

struct Subspace {
    MetricSpace space;           // restricted table, indices 0..|A|-1
    std::vector<PointId> labels; // subspace index -> original vertex
    ExtDistance d0;              // minimal positive restricted distance
};

/// Restriction of a natural-distance space to a vertex subset A, with its
/// own minimal distance d0_A.  Throws NoFiniteDistance when no finite
/// positive restricted distance exists.
Subspace induced_subspace(const MetricSpace& space, const std::vector<PointId>& subset);

/// Specialization of the main theorem: a nonconstant contractive map exists
/// iff the graph is disconnected.  Throws on edgeless graphs (d0 undefined).
Decision decide_graph(const Graph& g);

/// Parses the edge-list text format: one "u v" pair per line, '#' comments
/// and blank lines ignored.
Graph parse_edge_list(const std::string& text);

} // namespace cm
