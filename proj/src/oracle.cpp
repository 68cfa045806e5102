#include "cm/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cm/errors.hpp"

namespace cm {

EnumerationSummary enumerate_all_maps(
    const MetricSpace& space, std::size_t cap,
    const std::function<void(const std::vector<PointId>&, const ClassificationReport&)>& on_map) {
    if (space.kind() != MetricSpace::Kind::FiniteTable)
        throw Error("map enumeration needs a finite table space");
    const std::size_t n = space.window_size();
    if (n == 0 || n > cap)
        throw Error("enumeration cap exceeded: n=" + std::to_string(n) + " cap=" + std::to_string(cap));

    EnumerationSummary sum;
    std::vector<PointId> images(n, 0);
    while (true) {
        const SelfMap f = SelfMap::from_table(images);
        const ClassificationReport r = classify_map(space, f);
        ++sum.total_maps;
        if (r.is_constant) ++sum.count_constant;
        if (r.is_contraction) ++sum.count_contraction;
        if (r.is_contractive) ++sum.count_contractive;
        if (r.is_contractive && !r.is_constant) sum.nonconstant_contractive_exists = true;
        if (on_map) on_map(images, r);

        // mixed-radix increment, least significant digit first
        std::size_t i = 0;
        while (i < n && ++images[i] == static_cast<PointId>(n)) images[i++] = 0;
        if (i == n) break;
    }
    return sum;
}

bool verify_theorem_equivalence(const MetricSpace& space, std::size_t cap) {
    const bool by_enumeration = enumerate_all_maps(space, cap).nonconstant_contractive_exists;

    const QuotientStructure q = build_quotient(space, min_positive_distance(space).d0);
    const std::size_t n = space.window_size();
    const bool by_class_count = class_count(q) > 1;
    const bool some_class_proper =
        std::any_of(q.classes.begin(), q.classes.end(),
                    [n](const auto& c) { return c.size() < n; });
    const bool every_class_proper =
        std::all_of(q.classes.begin(), q.classes.end(),
                    [n](const auto& c) { return c.size() < n; });

    return by_enumeration == by_class_count && by_class_count == some_class_proper &&
           some_class_proper == every_class_proper;
}

bool verify_finite_range_remark(const MetricSpace& space, std::size_t cap) {
    const long n = static_cast<long>(space.window_size());
    bool ok = true;
    enumerate_all_maps(space, cap,
                       [&](const std::vector<PointId>& images, const ClassificationReport& r) {
                           if (!r.is_contractive || !ok) return;
                           if (!r.is_contraction) {
                               ok = false;
                               return;
                           }
                           const SelfMap f = SelfMap::from_table(images);
                           std::optional<PointId> sink;
                           for (PointId start = 0; start < n; ++start) {
                               const IterationReport it =
                                   iterate_to_fixed_point(space, f, start, n + 2);
                               if (it.status != IterationReport::Status::FixedPoint ||
                                   !it.n0_bound || !it.stabilizes_to) {
                                   ok = false;
                                   return;
                               }
                               if (!sink) sink = *it.fixed_point;
                               if (*it.fixed_point != *sink || *it.stabilizes_to != *sink) {
                                   ok = false;
                                   return;
                               }
                           }
                           if (f.apply(*sink) != *sink) ok = false;
                       });
    return ok;
}

MetricSpace random_metric_space(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> den_pick(1, 4);
    std::uniform_int_distribution<int> infinity_roll(0, 7);

    std::vector<std::vector<ExtDistance>> d(n, std::vector<ExtDistance>(n, ExtDistance::zero()));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (infinity_roll(rng) == 0) {
                d[x][y] = d[y][x] = ExtDistance::infinity();
            } else {
                const int den = den_pick(rng);
                std::uniform_int_distribution<int> num_pick(den, 3 * den);
                d[x][y] = d[y][x] = ExtDistance(BigRational(num_pick(rng), den));
            }
        }

    // min-plus closure repairs the triangle inequality exactly
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                const ExtDistance via = d[x][k] + d[k][y];
                if (via < d[x][y]) d[x][y] = via;
            }

    MetricSpace space = MetricSpace::from_table(std::move(d));
    if (!verify_metric_axioms(space).pass) throw Error("metric repair failed"); // cannot happen
    return space;
}

MetricSpace random_distinct_distance_space(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> den_pick(64, 512);

    // values in [1,2) satisfy the triangle inequality outright
    std::set<BigRational> used;
    auto draw = [&] {
        while (true) {
            const int den = den_pick(rng);
            std::uniform_int_distribution<int> num_pick(den, 2 * den - 1);
            BigRational v(num_pick(rng), den);
            if (used.insert(v).second) return v;
        }
    };

    std::vector<std::vector<ExtDistance>> d(n, std::vector<ExtDistance>(n, ExtDistance::zero()));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) d[x][y] = d[y][x] = ExtDistance(draw());
    return MetricSpace::from_table(std::move(d));
}

Graph random_graph(std::uint64_t seed, std::size_t max_vertices) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> n_pick(2, max_vertices);
    const std::size_t n = n_pick(rng);
    std::uniform_int_distribution<int> edge_roll(0, 3);

    Graph g;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (edge_roll(rng) == 0) g.add_edge(static_cast<PointId>(x), static_cast<PointId>(y));
    if (g.edges.empty()) g.add_edge(0, 1);
    g.vertex_count = std::max(g.vertex_count, n);
    return g;
}

} // namespace cm
