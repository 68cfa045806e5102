#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cm/metric_space.hpp"
#include "cm/quotient.hpp"

namespace cm {

/// Total self-map of a space, given as an explicit image table over the
/// window or a rule over nonnegative integers.  Rule images may exceed the
/// window when the underlying space can evaluate distances there.
class SelfMap {
public:
    enum class Kind { Table, Rule };

    using Rule = std::function<PointId(PointId)>;

    static SelfMap from_table(std::vector<PointId> images);
    static SelfMap from_rule(std::string rule_name, Rule rule);

    Kind kind() const { return kind_; }
    PointId apply(PointId x) const;
    const std::string& rule_name() const { return rule_name_; }
    const std::vector<PointId>& images() const { return images_; }

    /// Image table restricted to the window (evaluates the rule if needed).
    std::vector<PointId> window_images(std::size_t window_size) const;

private:
    SelfMap() = default;

    Kind kind_ = Kind::Table;
    std::vector<PointId> images_;
    Rule rule_;
    std::string rule_name_;
};

struct ClassificationReport {
    bool is_constant = false;
    bool is_contractive = false;
    bool is_contraction = false;
    std::optional<std::pair<PointId, PointId>> violating_pair; // lex smallest with d(f(x),f(y)) >= d(x,y)
    ExtDistance k_min;                                         // max ratio d(f(x),f(y))/d(x,y) over distinct pairs
    std::string window;
};

/// Exact classification over all distinct window pairs.  A pair at infinite
/// distance with images at finite distance contributes ratio 0; infinite
/// image distance over infinite domain distance contributes ratio 1 (and is
/// a violation, since inf < inf fails).
ClassificationReport classify_map(const MetricSpace& space, const SelfMap& f);

struct Decision {
    bool applicable = true; // corollary only; theorem decisions are always applicable
    bool exists = false;
    std::size_t class_count = 0;
    std::optional<SelfMap> witness;
};

/// Main characterization: a nonconstant contractive map exists iff the
/// quotient has more than one class.  Attaches the witness when it exists.
Decision decide_nonconstant_exists(const MetricSpace& space, const QuotientStructure& q);

/// The canonical witness: x0 on [x0] and y0 elsewhere, where (x0,y0) is the
/// lexicographically smallest minimal pair.  Throws SingleClass when the
/// quotient is trivial.
SelfMap construct_witness(const MetricSpace& space, const QuotientStructure& q);

/// Lifts a contractive map to the quotient: class index -> image point.
/// Verifies by scan that f is constant on every class; throws NotContractive
/// otherwise.
std::vector<PointId> quotient_lift(const SelfMap& f, const MetricSpace& space,
                                   const QuotientStructure& q);

struct IterationReport {
    enum class Status { FixedPoint, BudgetExhausted, CycleDetected };

    Status status = Status::BudgetExhausted;
    std::vector<PointId> orbit; // start, f(start), ...; ends with the repeated fixed point if found
    std::optional<PointId> fixed_point;
    long steps_taken = 0;

    // Present when the map is a contraction and the window diameter is
    // finite: smallest n with k_min^n * diam < d0, found by exact rational
    // power search.  stabilizes_to is the common value of f^(n0) over the
    // window when that iterate is constant.
    std::optional<long> n0_bound;
    std::optional<PointId> stabilizes_to;
};

IterationReport iterate_to_fixed_point(const MetricSpace& space, const SelfMap& f, PointId start,
                                       long max_steps);

/// All fixed points in the window.  A contractive map can have at most one;
/// that invariant is enforced here.
std::vector<PointId> check_fixed_point_uniqueness(const MetricSpace& space, const SelfMap& f);

/// Chain x = x_0, ..., x_n = y inside the window with every step at most
/// eps*d0, found by breadth-first search, or nullopt when none exists.
std::optional<std::vector<PointId>> epsilon_chain(const MetricSpace& space, PointId x, PointId y,
                                                  const BigRational& eps);

/// Same, with d0 supplied by the caller to avoid recomputing it per probe.
std::optional<std::vector<PointId>> epsilon_chain(const MetricSpace& space, PointId x, PointId y,
                                                  const BigRational& eps, const ExtDistance& d0);

struct ProbeResult {
    BigRational eps;
    PointId x = 0;
    PointId y = 0;
    bool chained = false;
};

struct CertificateReport {
    bool hypothesis_satisfied = false; // every probe pair chains at every eps
    std::vector<ProbeResult> probes;
    std::string window;
};

/// Probes the chain hypothesis under which every contraction is constant.
/// For a claimed contraction modulus k the eps that must be witnessed is
/// eps_for_modulus(k) = 2/(k+1).
CertificateReport contractions_constant_certificate(const MetricSpace& space,
                                                    const std::vector<PointId>& probe_points,
                                                    const std::vector<BigRational>& eps_schedule);

inline BigRational eps_for_modulus(const BigRational& k) { return BigRational(2) / (k + 1); }

/// When exactly one unordered pair attains d0 and the window has more than
/// two points, a nonconstant contractive map exists and exactly one point
/// stays fixed; otherwise the decision is marked not applicable.
Decision corollary_unique_minimal_pair(const MetricSpace& space);

} // namespace cm
