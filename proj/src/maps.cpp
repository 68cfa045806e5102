#include "cm/maps.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "cm/errors.hpp"

namespace cm {

SelfMap SelfMap::from_table(std::vector<PointId> images) {
    for (PointId p : images)
        if (p < 0) throw ParseError("map image must be a nonnegative point id");
    SelfMap f;
    f.kind_ = Kind::Table;
    f.images_ = std::move(images);
    return f;
}

SelfMap SelfMap::from_rule(std::string rule_name, Rule rule) {
    SelfMap f;
    f.kind_ = Kind::Rule;
    f.rule_ = std::move(rule);
    f.rule_name_ = std::move(rule_name);
    return f;
}

PointId SelfMap::apply(PointId x) const {
    if (kind_ == Kind::Rule) return rule_(x);
    if (x < 0 || x >= static_cast<PointId>(images_.size()))
        throw ImageUnresolvable("table map has no image for point " + std::to_string(x));
    return images_[static_cast<std::size_t>(x)];
}

std::vector<PointId> SelfMap::window_images(std::size_t window_size) const {
    std::vector<PointId> img(window_size);
    for (std::size_t i = 0; i < window_size; ++i) img[i] = apply(static_cast<PointId>(i));
    return img;
}

namespace {

ExtDistance image_distance(const MetricSpace& space, PointId fx, PointId fy) {
    try {
        return space.distance(fx, fy);
    } catch (const OutOfWindow&) {
        throw ImageUnresolvable("image distance d(" + std::to_string(fx) + "," +
                                std::to_string(fy) + ") is not computable");
    }
}

} // namespace

ClassificationReport classify_map(const MetricSpace& space, const SelfMap& f) {
    const PointId n = static_cast<PointId>(space.window_size());
    if (n == 0) throw Error("empty window");

    ClassificationReport r;
    r.window = space.window_stamp();
    r.k_min = ExtDistance::zero();

    std::vector<PointId> img = f.window_images(space.window_size());
    r.is_constant = std::all_of(img.begin(), img.end(), [&](PointId p) { return p == img[0]; });

    for (PointId x = 0; x < n; ++x) {
        for (PointId y = x + 1; y < n; ++y) {
            const PointId fx = img[static_cast<std::size_t>(x)];
            const PointId fy = img[static_cast<std::size_t>(y)];
            const ExtDistance d = space.distance(x, y);

            ExtDistance rat;
            bool violated = false;
            if (fx == fy) {
                rat = ExtDistance::zero();
            } else {
                const ExtDistance di = image_distance(space, fx, fy);
                if (d.is_infinite()) {
                    // di < inf holds for finite di; inf < inf fails
                    violated = di.is_infinite();
                    rat = di.is_infinite() ? ExtDistance(1) : ExtDistance::zero();
                } else {
                    violated = di >= d;
                    rat = ratio(di, d);
                }
            }
            if (rat > r.k_min) r.k_min = rat;
            if (violated && !r.violating_pair) r.violating_pair = {x, y};
        }
    }
    r.is_contractive = !r.violating_pair.has_value();
    r.is_contraction = r.k_min < ExtDistance(1);
    return r;
}

Decision decide_nonconstant_exists(const MetricSpace& space, const QuotientStructure& q) {
    Decision dec;
    dec.class_count = class_count(q);
    dec.exists = dec.class_count > 1;
    if (dec.exists) dec.witness = construct_witness(space, q);
    return dec;
}

SelfMap construct_witness(const MetricSpace& space, const QuotientStructure& q) {
    if (class_count(q) <= 1) throw SingleClass();
    const auto [x0, y0] = q.minimal_pairs.front();
    const std::size_t home = q.class_of[static_cast<std::size_t>(x0)];

    std::vector<PointId> img(space.window_size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = q.class_of[i] == home ? x0 : y0;
    return SelfMap::from_table(std::move(img));
}

std::vector<PointId> quotient_lift(const SelfMap& f, const MetricSpace& space,
                                   const QuotientStructure& q) {
    if (!classify_map(space, f).is_contractive) throw NotContractive();

    std::vector<PointId> img = f.window_images(space.window_size());
    std::vector<PointId> lifted(q.classes.size());
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
        const PointId rep = img[static_cast<std::size_t>(q.classes[c].front())];
        for (PointId p : q.classes[c])
            if (img[static_cast<std::size_t>(p)] != rep)
                throw Error("contractive map is not constant on a class"); // cannot happen
        lifted[c] = rep;
    }
    return lifted;
}

IterationReport iterate_to_fixed_point(const MetricSpace& space, const SelfMap& f, PointId start,
                                       long max_steps) {
    IterationReport rep;
    rep.orbit.push_back(start);

    std::map<PointId, long> first_seen{{start, 0}};
    PointId cur = start;
    for (long step = 1; step <= max_steps; ++step) {
        const PointId next = f.apply(cur);
        rep.orbit.push_back(next);
        rep.steps_taken = step;
        if (next == cur) {
            rep.status = IterationReport::Status::FixedPoint;
            rep.fixed_point = cur;
            break;
        }
        if (first_seen.count(next)) {
            rep.status = IterationReport::Status::CycleDetected;
            break;
        }
        first_seen[next] = step;
        cur = next;
    }

    // exact power search for the stabilization bound
    const ClassificationReport cls = classify_map(space, f);
    const ExtDistance diam = space.diameter();
    if (cls.is_contraction && !diam.is_infinite() && !diam.is_zero()) {
        const ExtDistance d0 = min_positive_distance(space).d0;
        const BigRational k = cls.k_min.value();
        // k^n * diam < d0, compared as integers via exponentiation by squaring
        auto small_enough = [&](long n) {
            using boost::multiprecision::pow;
            const auto e = static_cast<unsigned>(n);
            const BigInt lhs = pow(numerator(k), e) * numerator(diam.value()) * denominator(d0.value());
            const BigInt rhs = pow(denominator(k), e) * denominator(diam.value()) * numerator(d0.value());
            return lhs < rhs;
        };
        long hi = 1;
        while (!small_enough(hi)) {
            hi *= 2;
            if (hi > (1L << 20)) throw Error("stabilization bound search did not converge");
        }
        long lo = hi / 2; // smallest bound lies in (lo, hi]
        while (lo + 1 < hi) {
            const long mid = lo + (hi - lo) / 2;
            (small_enough(mid) ? hi : lo) = mid;
        }
        rep.n0_bound = hi;

        // verify f^(n0) is constant over the window
        bool constant = true;
        std::optional<PointId> common;
        for (PointId p = 0; p < static_cast<PointId>(space.window_size()); ++p) {
            PointId v = p;
            for (long i = 0; i < *rep.n0_bound; ++i) v = f.apply(v);
            if (!common)
                common = v;
            else if (*common != v)
                constant = false;
        }
        if (constant) rep.stabilizes_to = common;
    }
    return rep;
}

std::vector<PointId> check_fixed_point_uniqueness(const MetricSpace& space, const SelfMap& f) {
    std::vector<PointId> fixed;
    const std::vector<PointId> img = f.window_images(space.window_size());
    for (PointId p = 0; p < static_cast<PointId>(space.window_size()); ++p)
        if (img[static_cast<std::size_t>(p)] == p) fixed.push_back(p);
    if (fixed.size() > 1 && classify_map(space, f).is_contractive)
        throw Error("contractive map with two fixed points"); // cannot happen
    return fixed;
}

std::optional<std::vector<PointId>> epsilon_chain(const MetricSpace& space, PointId x, PointId y,
                                                  const BigRational& eps) {
    return epsilon_chain(space, x, y, eps, min_positive_distance(space).d0);
}

std::optional<std::vector<PointId>> epsilon_chain(const MetricSpace& space, PointId x, PointId y,
                                                  const BigRational& eps, const ExtDistance& d0) {
    if (eps <= 1) throw Error("eps must exceed 1");
    if (!space.in_window(x) || !space.in_window(y))
        throw OutOfWindow("chain endpoints must lie in the window");
    if (x == y) return std::vector<PointId>{x};

    const ExtDistance step_cap = ExtDistance(eps) * d0;
    const PointId n = static_cast<PointId>(space.window_size());

    std::vector<PointId> pred(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<PointId> bfs;
    bfs.push(x);
    seen[static_cast<std::size_t>(x)] = true;
    while (!bfs.empty() && !seen[static_cast<std::size_t>(y)]) {
        const PointId u = bfs.front();
        bfs.pop();
        for (PointId v = 0; v < n; ++v) {
            if (seen[static_cast<std::size_t>(v)] || v == u) continue;
            if (space.distance(u, v) <= step_cap) {
                seen[static_cast<std::size_t>(v)] = true;
                pred[static_cast<std::size_t>(v)] = u;
                bfs.push(v);
            }
        }
    }
    if (!seen[static_cast<std::size_t>(y)]) return std::nullopt;

    std::vector<PointId> chain;
    for (PointId p = y; p != -1; p = pred[static_cast<std::size_t>(p)]) chain.push_back(p);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

CertificateReport contractions_constant_certificate(const MetricSpace& space,
                                                    const std::vector<PointId>& probe_points,
                                                    const std::vector<BigRational>& eps_schedule) {
    CertificateReport rep;
    rep.window = space.window_stamp();
    rep.hypothesis_satisfied = true;
    const ExtDistance d0 = min_positive_distance(space).d0;
    for (const BigRational& eps : eps_schedule) {
        for (std::size_t i = 0; i < probe_points.size(); ++i) {
            for (std::size_t j = i + 1; j < probe_points.size(); ++j) {
                ProbeResult pr;
                pr.eps = eps;
                pr.x = probe_points[i];
                pr.y = probe_points[j];
                pr.chained = epsilon_chain(space, pr.x, pr.y, eps, d0).has_value();
                if (!pr.chained) rep.hypothesis_satisfied = false;
                rep.probes.push_back(std::move(pr));
            }
        }
    }
    return rep;
}

Decision corollary_unique_minimal_pair(const MetricSpace& space) {
    Decision dec;
    const MinDistance m = min_positive_distance(space);
    if (m.pairs.size() != 1 || space.window_size() <= 2) {
        dec.applicable = false;
        return dec;
    }
    const QuotientStructure q = build_quotient(space, m.d0);
    dec.class_count = class_count(q);
    dec.exists = true;
    dec.witness = construct_witness(space, q);
    return dec;
}

} // namespace cm
