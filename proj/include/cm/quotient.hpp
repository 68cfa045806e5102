#pragma once

#include <optional>
#include <vector>

#include "cm/metric_space.hpp"

namespace cm {

/// The partition of the window into classes reachable by chains of jumps of
/// length exactly d0, plus the quotient distance table.
struct QuotientStructure {
    ExtDistance d0;
    std::vector<std::pair<PointId, PointId>> minimal_pairs; // the d0-edges
    std::vector<std::vector<PointId>> classes;              // each sorted; ordered by least element
    std::vector<std::size_t> class_of;                      // point -> class index
    std::vector<std::vector<ExtDistance>> quotient_d;       // min over representatives
};

/// Classes are the connected components of the graph whose edges are the
/// pairs at distance exactly d0.  Requires d0 = min_positive_distance(space).d0.
QuotientStructure build_quotient(const MetricSpace& space, const ExtDistance& d0);

inline std::size_t class_count(const QuotientStructure& q) { return q.classes.size(); }

ExtDistance quotient_distance(const QuotientStructure& q, std::size_t c1, std::size_t c2);

/// Witness chain x = x_0, ..., x_n = y with every step of length exactly d0,
/// or nullopt when x and y sit in different classes.
std::optional<std::vector<PointId>> chain_between(const QuotientStructure& q, PointId x, PointId y);

/// The quotient distance is called a metric but its triangle inequality is
/// checked per instance, never assumed.  Returns a violating class triple
/// (c1,c2,c3) with q_d(c1,c2) > q_d(c1,c3)+q_d(c2,c3), if any.
std::optional<std::vector<std::size_t>> quotient_triangle_violation(const QuotientStructure& q);

} // namespace cm
