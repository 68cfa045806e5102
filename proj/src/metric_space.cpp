#include "cm/metric_space.hpp"

#include <sstream>

#include "cm/errors.hpp"

namespace cm {

MetricSpace MetricSpace::from_table(std::vector<std::vector<ExtDistance>> table) {
    const std::size_t n = table.size();
    for (const auto& row : table)
        if (row.size() != n) throw ParseError("distance table is not square");
    MetricSpace s;
    s.kind_ = Kind::FiniteTable;
    s.window_count_ = n;
    s.table_ = std::move(table);
    return s;
}

MetricSpace MetricSpace::from_rule(std::string rule_name, Rule rule, PointId window_max) {
    if (window_max < 0) throw ParseError("window must be nonnegative");
    MetricSpace s;
    s.kind_ = Kind::RuleBased;
    s.window_count_ = static_cast<std::size_t>(window_max) + 1;
    s.rule_ = std::move(rule);
    s.rule_name_ = std::move(rule_name);
    return s;
}

ExtDistance MetricSpace::distance(PointId x, PointId y) const {
    if (x < 0 || y < 0) throw OutOfWindow("negative point id");
    if (kind_ == Kind::FiniteTable) {
        if (!in_window(x) || !in_window(y))
            throw OutOfWindow("point beyond finite table of size " + std::to_string(window_count_));
        return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    return rule_(x, y);
}

ExtDistance MetricSpace::diameter() const {
    ExtDistance diam = ExtDistance::zero();
    const PointId n = static_cast<PointId>(window_count_);
    for (PointId x = 0; x < n; ++x)
        for (PointId y = x + 1; y < n; ++y) {
            ExtDistance d = distance(x, y);
            if (d > diam) diam = d;
        }
    return diam;
}

std::string MetricSpace::window_stamp() const {
    std::ostringstream os;
    os << "0.." << window_max();
    return os.str();
}

std::string AxiomReport::describe() const {
    if (pass) return "pass";
    std::ostringstream os;
    switch (violation) {
    case Violation::Identity: os << "identity axiom fails at ("; break;
    case Violation::Symmetry: os << "symmetry fails at ("; break;
    case Violation::Triangle: os << "triangle inequality fails at ("; break;
    case Violation::None: break;
    }
    for (std::size_t i = 0; i < points.size(); ++i) os << (i ? "," : "") << points[i];
    os << ")";
    return os.str();
}

AxiomReport verify_metric_axioms(const MetricSpace& space) {
    const PointId n = static_cast<PointId>(space.window_size());
    AxiomReport r;

    // axiom (1): d(x,y)=0 iff x=y, and symmetry, over lex-ordered pairs
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            ExtDistance d = space.distance(x, y);
            if (x == y && !d.is_zero()) {
                r.pass = false;
                r.violation = AxiomReport::Violation::Identity;
                r.points = {x, y};
                return r;
            }
            if (x != y && d.is_zero()) {
                r.pass = false;
                r.violation = AxiomReport::Violation::Identity;
                r.points = {x, y};
                return r;
            }
            if (x < y && d != space.distance(y, x)) {
                r.pass = false;
                r.violation = AxiomReport::Violation::Symmetry;
                r.points = {x, y};
                return r;
            }
        }
    }

    // axiom (2): d(x,y) <= d(x,z) + d(y,z) over all ordered triples
    for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y)
            for (PointId z = 0; z < n; ++z)
                if (space.distance(x, y) > space.distance(x, z) + space.distance(y, z)) {
                    r.pass = false;
                    r.violation = AxiomReport::Violation::Triangle;
                    r.points = {x, y, z};
                    return r;
                }
    return r;
}

MinDistance min_positive_distance(const MetricSpace& space) {
    const PointId n = static_cast<PointId>(space.window_size());
    if (n < 2) throw Error("window needs at least 2 points");

    std::optional<ExtDistance> best;
    for (PointId x = 0; x < n; ++x)
        for (PointId y = x + 1; y < n; ++y) {
            ExtDistance d = space.distance(x, y);
            if (d.is_infinite() || d.is_zero()) continue;
            if (!best || d < *best) best = d;
        }
    if (!best) throw NoFiniteDistance();

    MinDistance m;
    m.d0 = *best;
    for (PointId x = 0; x < n; ++x)
        for (PointId y = x + 1; y < n; ++y)
            if (space.distance(x, y) == m.d0) m.pairs.emplace_back(x, y);
    return m;
}

} // namespace cm
