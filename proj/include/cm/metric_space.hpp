#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cm/ext_distance.hpp"

namespace cm {

/// Index of a point of X.  For rule-based spaces ids beyond the analysis
/// window are still meaningful (map images may exceed the window).
using PointId = std::int64_t;

/// A discrete metric space: either an explicit n-by-n table or a distance
/// rule over pairs of nonnegative integers with a finite analysis window.
/// Window points are always 0..window_size()-1.  Immutable after
/// construction; every operation on it is a pure function.
class MetricSpace {
public:
    enum class Kind { FiniteTable, RuleBased };

    using Rule = std::function<ExtDistance(PointId, PointId)>;

    /// Rejects nonsquare tables at construction; metric axiom violations are
    /// reported by verify_metric_axioms, not here.
    static MetricSpace from_table(std::vector<std::vector<ExtDistance>> table);

    /// Window covers points 0..window_max inclusive.
    static MetricSpace from_rule(std::string rule_name, Rule rule, PointId window_max);

    Kind kind() const { return kind_; }
    std::size_t window_size() const { return window_count_; }
    PointId window_max() const { return static_cast<PointId>(window_count_) - 1; }
    bool in_window(PointId x) const { return x >= 0 && x < static_cast<PointId>(window_count_); }

    /// Exact distance.  FiniteTable throws OutOfWindow beyond the table;
    /// RuleBased answers for any nonnegative pair.
    ExtDistance distance(PointId x, PointId y) const;

    /// Largest distance over window pairs.
    ExtDistance diameter() const;

    const std::string& rule_name() const { return rule_name_; }

    /// Human-readable window stamp embedded in reports, e.g. "0..50".
    std::string window_stamp() const;

private:
    MetricSpace() = default;

    Kind kind_ = Kind::FiniteTable;
    std::size_t window_count_ = 0;
    std::vector<std::vector<ExtDistance>> table_;
    Rule rule_;
    std::string rule_name_;
};

struct AxiomReport {
    enum class Violation { None, Identity, Symmetry, Triangle };

    bool pass = true;
    Violation violation = Violation::None;
    std::vector<PointId> points; // violating pair or triple

    std::string describe() const;
};

/// Checks d(x,x)=0, d(x,y)>0 for x!=y, symmetry, and the triangle
/// inequality d(x,y) <= d(x,z)+d(y,z) over all window triples.  On failure
/// reports the lexicographically smallest violating tuple.
AxiomReport verify_metric_axioms(const MetricSpace& space);

struct MinDistance {
    ExtDistance d0;                                 // finite, positive
    std::vector<std::pair<PointId, PointId>> pairs; // unordered pairs attaining d0, lexicographic
};

/// Minimal positive distance over distinct window pairs together with every
/// pair attaining it.  Throws NoFiniteDistance when all off-diagonal
/// distances are infinite.
MinDistance min_positive_distance(const MetricSpace& space);

} // namespace cm
