#include "cm/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "cm/errors.hpp"

namespace cm {

void Graph::add_edge(PointId u, PointId v) {
    if (u == v) throw ParseError("self-loops are not allowed");
    if (u < 0 || v < 0) throw ParseError("negative vertex id");
    const auto m = static_cast<std::size_t>(std::max(u, v)) + 1;
    vertex_count = std::max(vertex_count, m);
    edges.insert({std::min(u, v), std::max(u, v)});
}

bool Graph::has_edge(PointId u, PointId v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

MetricSpace natural_distance(const Graph& g) {
    const std::size_t n = g.vertex_count;
    if (n == 0) throw ParseError("graph has no vertices");

    std::vector<std::vector<PointId>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    std::vector<std::vector<ExtDistance>> table(n,
                                                std::vector<ExtDistance>(n, ExtDistance::infinity()));
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<long> hops(n, -1);
        std::queue<std::size_t> bfs;
        hops[src] = 0;
        bfs.push(src);
        while (!bfs.empty()) {
            const std::size_t u = bfs.front();
            bfs.pop();
            for (PointId v : adj[u]) {
                auto w = static_cast<std::size_t>(v);
                if (hops[w] < 0) {
                    hops[w] = hops[u] + 1;
                    bfs.push(w);
                }
            }
        }
        for (std::size_t dst = 0; dst < n; ++dst)
            if (hops[dst] >= 0) table[src][dst] = ExtDistance(hops[dst]);
    }
    return MetricSpace::from_table(std::move(table));
}

std::vector<std::vector<PointId>> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : g.edges) {
        std::size_t a = find(static_cast<std::size_t>(u)), b = find(static_cast<std::size_t>(v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<PointId>> by_root;
    for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(static_cast<PointId>(i));
    std::vector<std::vector<PointId>> comps;
    for (auto& [root, members] : by_root) comps.push_back(std::move(members));
    return comps;
}

Subspace induced_subspace(const MetricSpace& space, const std::vector<PointId>& subset) {
    if (subset.empty()) throw Error("subset must be nonempty");
    std::vector<PointId> labels = subset;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    const std::size_t m = labels.size();
    std::vector<std::vector<ExtDistance>> table(m, std::vector<ExtDistance>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table[i][j] = space.distance(labels[i], labels[j]);

    Subspace sub{MetricSpace::from_table(std::move(table)), std::move(labels), ExtDistance::zero()};
    sub.d0 = min_positive_distance(sub.space).d0; // throws NoFiniteDistance on all-inf
    return sub;
}

Decision decide_graph(const Graph& g) {
    if (g.edges.empty()) throw Error("graph has no edges; minimal distance is undefined");
    const MetricSpace space = natural_distance(g);
    const MinDistance m = min_positive_distance(space);
    return decide_nonconstant_exists(space, build_quotient(space, m.d0));
}

Graph parse_edge_list(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        PointId u, v;
        if (!(ls >> u)) continue; // blank or comment-only line
        if (!(ls >> v)) throw ParseError("edge list line " + std::to_string(lineno) + ": expected two vertex ids");
        g.add_edge(u, v);
    }
    return g;
}

} // namespace cm
