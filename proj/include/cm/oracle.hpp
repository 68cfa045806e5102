#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cm/graph.hpp"
#include "cm/maps.hpp"
#include "cm/metric_space.hpp"

namespace cm {

struct EnumerationSummary {
    std::uint64_t total_maps = 0; // n^n
    std::uint64_t count_constant = 0;
    std::uint64_t count_contraction = 0;
    std::uint64_t count_contractive = 0;
    bool nonconstant_contractive_exists = false;
};

inline constexpr std::size_t kDefaultEnumerationCap = 6;

/// Classifies every self-map of a finite-table space, walking the image
/// tuples as a mixed-radix counter.  The per-map callback (when given) sees
/// maps in that order.
EnumerationSummary enumerate_all_maps(
    const MetricSpace& space, std::size_t cap = kDefaultEnumerationCap,
    const std::function<void(const std::vector<PointId>&, const ClassificationReport&)>& on_map =
        nullptr);

/// Checks the four equivalent statements of the characterization theorem
/// independently: enumeration-found existence, class_count > 1, some class
/// proper, every class proper.
bool verify_theorem_equivalence(const MetricSpace& space, std::size_t cap = kDefaultEnumerationCap);

/// On a finite-range space every contractive map must be a contraction,
/// stabilize to a constant by its n0 bound, and fix exactly the point it
/// stabilizes to.
bool verify_finite_range_remark(const MetricSpace& space, std::size_t cap = kDefaultEnumerationCap);

/// Random symmetric rational table repaired to a metric by min-plus
/// shortest-path closure, then axiom-verified.  Deterministic in the seed.
MetricSpace random_metric_space(std::uint64_t seed, std::size_t n);

/// Random space whose off-diagonal distances are pairwise distinct rationals
/// drawn from [1,2), so the triangle inequality holds outright and the
/// minimal pair is unique.
MetricSpace random_distinct_distance_space(std::uint64_t seed, std::size_t n);

/// Random graph on up to max_vertices vertices with at least one edge.
Graph random_graph(std::uint64_t seed, std::size_t max_vertices);

} // namespace cm
