#include "cm/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "cm/errors.hpp"

namespace cm {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

QuotientStructure build_quotient(const MetricSpace& space, const ExtDistance& d0) {
    if (d0.is_infinite() || d0.is_zero()) throw Error("d0 must be finite and positive");
    const std::size_t n = space.window_size();

    QuotientStructure q;
    q.d0 = d0;

    UnionFind uf(n);
    for (PointId x = 0; x < static_cast<PointId>(n); ++x)
        for (PointId y = x + 1; y < static_cast<PointId>(n); ++y)
            if (space.distance(x, y) == d0) {
                q.minimal_pairs.emplace_back(x, y);
                uf.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
            }
    if (q.minimal_pairs.empty()) throw Error("d0 is not attained in the window");

    // classes keyed by least element, hence already in the required order
    std::map<std::size_t, std::vector<PointId>> by_root;
    for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(static_cast<PointId>(i));

    q.class_of.resize(n);
    for (auto& [root, members] : by_root) {
        for (PointId p : members) q.class_of[static_cast<std::size_t>(p)] = q.classes.size();
        q.classes.push_back(std::move(members));
    }

    const std::size_t k = q.classes.size();
    q.quotient_d.assign(k, std::vector<ExtDistance>(k, ExtDistance::infinity()));
    for (std::size_t c = 0; c < k; ++c) q.quotient_d[c][c] = ExtDistance::zero();
    for (PointId x = 0; x < static_cast<PointId>(n); ++x)
        for (PointId y = x + 1; y < static_cast<PointId>(n); ++y) {
            std::size_t cx = q.class_of[static_cast<std::size_t>(x)];
            std::size_t cy = q.class_of[static_cast<std::size_t>(y)];
            if (cx == cy) continue;
            ExtDistance d = space.distance(x, y);
            if (d < q.quotient_d[cx][cy]) q.quotient_d[cx][cy] = q.quotient_d[cy][cx] = d;
        }
    return q;
}

ExtDistance quotient_distance(const QuotientStructure& q, std::size_t c1, std::size_t c2) {
    if (c1 >= q.classes.size() || c2 >= q.classes.size()) throw Error("bad class index");
    return q.quotient_d[c1][c2];
}

std::optional<std::vector<PointId>> chain_between(const QuotientStructure& q, PointId x, PointId y) {
    const std::size_t n = q.class_of.size();
    if (x < 0 || y < 0 || x >= static_cast<PointId>(n) || y >= static_cast<PointId>(n))
        throw OutOfWindow("chain endpoints must lie in the window");
    if (q.class_of[static_cast<std::size_t>(x)] != q.class_of[static_cast<std::size_t>(y)])
        return std::nullopt;
    if (x == y) return std::vector<PointId>{x};

    std::vector<std::vector<PointId>> adj(n);
    for (auto [a, b] : q.minimal_pairs) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());

    std::vector<PointId> pred(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<PointId> bfs;
    bfs.push(x);
    seen[static_cast<std::size_t>(x)] = true;
    while (!bfs.empty()) {
        PointId u = bfs.front();
        bfs.pop();
        if (u == y) break;
        for (PointId v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                pred[static_cast<std::size_t>(v)] = u;
                bfs.push(v);
            }
    }

    std::vector<PointId> chain;
    for (PointId p = y; p != -1; p = pred[static_cast<std::size_t>(p)]) chain.push_back(p);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::optional<std::vector<std::size_t>> quotient_triangle_violation(const QuotientStructure& q) {
    const std::size_t k = q.classes.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                if (q.quotient_d[a][b] > q.quotient_d[a][c] + q.quotient_d[b][c])
                    return std::vector<std::size_t>{a, b, c};
    return std::nullopt;
}

} // namespace cm
