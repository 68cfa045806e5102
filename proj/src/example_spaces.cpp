#include "cm/example_spaces.hpp"

#include <algorithm>
#include <memory>

#include "cm/errors.hpp"

namespace cm {

namespace {

ExtDistance table_entry(std::int64_t num, std::int64_t den = 1) { return ExtDistance(num, den); }

void require_window(PointId window) {
    if (window < 3) throw Error("example windows must cover at least points 0..3");
}

} // namespace

MetricSpace ex1_finite_space() {
    const ExtDistance z = ExtDistance::zero();
    std::vector<std::vector<ExtDistance>> d = {
        {z, table_entry(1), table_entry(3)},
        {table_entry(1), z, table_entry(2)},
        {table_entry(3), table_entry(2), z},
    };
    return MetricSpace::from_table(std::move(d));
}

MetricSpace ex1_infinite_space(PointId window_max) {
    auto rule = [](PointId x, PointId y) {
        if (x == y) return ExtDistance::zero();
        if ((x == 0 && y == 1) || (x == 1 && y == 0)) return ExtDistance(1);
        return ExtDistance(2);
    };
    return MetricSpace::from_rule("ex1_infinite", rule, window_max);
}

MetricSpace ex2_space(PointId window_max) {
    auto rule = [](PointId x, PointId y) {
        if (x == y) return ExtDistance::zero();
        const PointId hi = std::max(x, y);
        if (hi == 1) return ExtDistance(1); // the pair (0,1)
        return ExtDistance(BigRational(hi + 1, hi));
    };
    return MetricSpace::from_rule("ex2", rule, window_max);
}

MetricSpace ex3_space(PointId window_max) {
    auto rule = [](PointId x, PointId y) {
        if (x == y) return ExtDistance::zero();
        const PointId lo = std::min(x, y), hi = std::max(x, y);
        if (lo == 0) {
            if (hi == 1) return ExtDistance(1);
            return ExtDistance(BigRational(hi + 1, hi)); // 1 + 1/y
        }
        const PointId q = lo * (hi - lo);
        return ExtDistance(BigRational(q + 1, q)); // 1 + 1/(min * (max-min))
    };
    return MetricSpace::from_rule("ex3", rule, window_max);
}

MetricSpace empty_fixed_point_space(PointId window_max) {
    // Line metric: edge lengths 1 between 0 and 1, 2 between {0,1} and 2,
    // and 1 + 1/t between t and t+1 for t >= 2.  Distances between
    // non-adjacent points are the sums of consecutive edge lengths;
    // points 0 and 1 are both two away from point 2.
    // prefix[j] = sum of edge lengths from 2 up to j, so that
    // d(i,j) = prefix[j] - prefix[i] for 2 <= i < j.
    auto prefix = std::make_shared<std::vector<BigRational>>();
    prefix->push_back(0); // index 0 unused
    prefix->push_back(0); // index 1 unused
    prefix->push_back(0); // prefix[2]
    for (PointId t = 2; t <= window_max + 2; ++t)
        prefix->push_back(prefix->back() + BigRational(t + 1, t));

    auto sum_to = [prefix](PointId j) -> BigRational {
        if (j < static_cast<PointId>(prefix->size())) return (*prefix)[static_cast<std::size_t>(j)];
        BigRational s = prefix->back();
        for (PointId t = static_cast<PointId>(prefix->size()) - 1; t < j; ++t)
            s += BigRational(t + 1, t);
        return s;
    };

    auto rule = [sum_to](PointId x, PointId y) {
        if (x == y) return ExtDistance::zero();
        const PointId lo = std::min(x, y), hi = std::max(x, y);
        if (hi == 1) return ExtDistance(1);                               // d(0,1)
        if (lo <= 1) return ExtDistance(BigRational(2) + sum_to(hi));     // d(0,j) = d(1,j)
        return ExtDistance(sum_to(hi) - sum_to(lo));
    };
    return MetricSpace::from_rule("empty_fixed_point", rule, window_max);
}

Graph figure1_graph(PointId chain_length, bool bridge) {
    if (chain_length < 2) throw Error("each chain needs at least 2 vertices");
    Graph g;
    for (PointId i = 0; i + 1 < chain_length; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(chain_length + i, chain_length + i + 1);
    }
    if (bridge) g.add_edge(0, chain_length);
    return g;
}

SelfMap shift_above_1() {
    return SelfMap::from_rule("shift-above-1", [](PointId x) { return x <= 1 ? 0 : x + 1; });
}

SelfMap succ_from_2() {
    return SelfMap::from_rule("succ-from-2", [](PointId x) { return x <= 1 ? 2 : x + 1; });
}

SelfMap named_map(const std::string& name) {
    if (name == "identity") return SelfMap::from_rule("identity", [](PointId x) { return x; });
    if (name == "const-0") return SelfMap::from_rule("const-0", [](PointId) -> PointId { return 0; });
    if (name == "shift-above-1") return shift_above_1();
    if (name == "succ-from-2") return succ_from_2();
    if (name == "two-valued")
        return SelfMap::from_rule("two-valued", [](PointId x) -> PointId { return x == 2 ? 1 : 0; });
    if (name == "indicator-not01")
        return SelfMap::from_rule("indicator-not01", [](PointId x) -> PointId { return x <= 1 ? 0 : 1; });
    throw UnknownExample(name);
}

std::vector<std::string> example_names() {
    return {"ex1_finite", "ex1_infinite", "ex2", "ex3", "empty_fixed_point", "figure1_graph"};
}

ExampleSpace build_example(const std::string& name, PointId window, bool bridge) {
    if (name == "ex1_finite") {
        ExampleSpace ex{ex1_finite_space(), {}, {}, std::nullopt};
        ex.maps.emplace("indicator-2", SelfMap::from_table({0, 0, 1}));
        return ex;
    }
    require_window(window);
    if (name == "ex1_infinite") {
        ExampleSpace ex{ex1_infinite_space(window), {}, {}, std::nullopt};
        ex.maps.emplace("indicator-not01",
                        SelfMap::from_rule("indicator-not01",
                                           [](PointId x) -> PointId { return x <= 1 ? 0 : 1; }));
        return ex;
    }
    if (name == "ex2") {
        ExampleSpace ex{ex2_space(window), {}, {}, std::nullopt};
        ex.notes.emplace("two-valued",
                         "window-stamped modulus: pairs (2,y) give ratios y/(y+1), so k_min on "
                         "0..N is N/(N+1) and no fixed modulus such as 2/3 bounds all windows");
        ex.maps.emplace("shift", shift_above_1());
        ex.maps.emplace("two-valued",
                        SelfMap::from_rule("two-valued",
                                           [](PointId x) -> PointId { return x == 2 ? 1 : 0; }));
        return ex;
    }
    if (name == "ex3") {
        ExampleSpace ex{ex3_space(window), {}, {}, std::nullopt};
        ex.maps.emplace("shift", shift_above_1());
        return ex;
    }
    if (name == "empty_fixed_point") {
        ExampleSpace ex{empty_fixed_point_space(window), {}, {}, std::nullopt};
        ex.maps.emplace("shift", succ_from_2());
        return ex;
    }
    if (name == "figure1_graph") {
        Graph g = figure1_graph(window, bridge);
        ExampleSpace ex{natural_distance(g), {}, {}, std::move(g)};
        return ex;
    }
    throw UnknownExample(name);
}

} // namespace cm
