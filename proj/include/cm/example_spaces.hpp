#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cm/graph.hpp"
#include "cm/maps.hpp"
#include "cm/metric_space.hpp"

namespace cm {

/// Registered example spaces, each with its named maps.
/// For rule-based spaces the window covers points 0..window inclusive.
struct ExampleSpace {
    MetricSpace space;
    std::map<std::string, SelfMap> maps;
    std::map<std::string, std::string> notes; // per-map caveats surfaced in reports
    std::optional<Graph> graph;               // present for graph-backed examples
};

/// Registered names: ex1_finite, ex1_infinite, ex2, ex3, empty_fixed_point,
/// figure1_graph.  For figure1_graph `window` is the number of vertices per
/// chain and `bridge` toggles the edge joining the two chains.
ExampleSpace build_example(const std::string& name, PointId window, bool bridge = true);

std::vector<std::string> example_names();

/// Lone-map registry usable on any space: identity, const-0.
SelfMap named_map(const std::string& name);

// Individual builders.
MetricSpace ex1_finite_space();
MetricSpace ex1_infinite_space(PointId window_max);
MetricSpace ex2_space(PointId window_max);
MetricSpace ex3_space(PointId window_max);
MetricSpace empty_fixed_point_space(PointId window_max);
Graph figure1_graph(PointId chain_length, bool bridge);

/// The shift map used by ex2 and ex3: 0,1 -> 0 and x -> x+1 above 1.
SelfMap shift_above_1();

/// The fixed-point-free map: 0,1 -> 2 and i -> i+1 for i >= 2.
SelfMap succ_from_2();

} // namespace cm
