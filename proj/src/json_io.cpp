#include "cm/json_io.hpp"

#include <cstdint>
#include <sstream>

#include "cm/errors.hpp"
#include "cm/example_spaces.hpp"

namespace cm {

namespace {

ExtDistance rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rationals must be strings like \"7/2\" or \"inf\"");
    return ExtDistance::parse(j.get<std::string>());
}

MetricSpace rule_space_by_name(const std::string& rule, PointId window) {
    if (rule == "ex1_infinite") return ex1_infinite_space(window);
    if (rule == "ex2") return ex2_space(window);
    if (rule == "ex3") return ex3_space(window);
    if (rule == "empty_fixed_point") return empty_fixed_point_space(window);
    throw UnknownExample(rule);
}

} // namespace

MetricSpace space_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "table") {
        const std::size_t n = j.at("points").get<std::size_t>();
        const Json& rows = j.at("d");
        if (!rows.is_array() || rows.size() != n) throw ParseError("'d' must hold 'points' rows");
        std::vector<std::vector<ExtDistance>> d;
        for (const Json& row : rows) {
            if (!row.is_array() || row.size() != n) throw ParseError("'d' rows must hold 'points' entries");
            std::vector<ExtDistance> r;
            for (const Json& e : row) r.push_back(rational_from_json(e));
            d.push_back(std::move(r));
        }
        return MetricSpace::from_table(std::move(d));
    }
    if (kind == "rule")
        return rule_space_by_name(j.at("rule").get<std::string>(), j.at("window").get<PointId>());
    throw ParseError("space kind must be 'table' or 'rule'");
}

Json space_to_json(const MetricSpace& space) {
    Json j;
    if (space.kind() == MetricSpace::Kind::FiniteTable) {
        j["kind"] = "table";
        j["points"] = space.window_size();
        Json rows = Json::array();
        for (PointId x = 0; x < static_cast<PointId>(space.window_size()); ++x) {
            Json row = Json::array();
            for (PointId y = 0; y < static_cast<PointId>(space.window_size()); ++y)
                row.push_back(space.distance(x, y).str());
            rows.push_back(std::move(row));
        }
        j["d"] = std::move(rows);
    } else {
        j["kind"] = "rule";
        j["rule"] = space.rule_name();
        j["window"] = space.window_max();
    }
    return j;
}

MetricSpace space_from_tsv(const std::string& text) {
    std::vector<std::vector<ExtDistance>> d;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<ExtDistance> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, '\t')) row.push_back(ExtDistance::parse(cell));
        d.push_back(std::move(row));
    }
    if (d.empty()) throw ParseError("empty TSV matrix");
    return MetricSpace::from_table(std::move(d));
}

SelfMap map_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "table") return SelfMap::from_table(j.at("images").get<std::vector<PointId>>());
    if (kind == "rule") return named_map(j.at("rule").get<std::string>());
    throw ParseError("map kind must be 'table' or 'rule'");
}

Json map_to_json(const SelfMap& f, std::size_t window_size) {
    Json j;
    if (f.kind() == SelfMap::Kind::Table) {
        j["kind"] = "table";
        j["images"] = f.images();
    } else {
        j["kind"] = "rule";
        j["rule"] = f.rule_name();
        j["window_images"] = f.window_images(window_size);
    }
    return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
    Json j;
    j["pass"] = r.pass;
    if (!r.pass) {
        switch (r.violation) {
        case AxiomReport::Violation::Identity: j["violation"] = "identity"; break;
        case AxiomReport::Violation::Symmetry: j["violation"] = "symmetry"; break;
        case AxiomReport::Violation::Triangle: j["violation"] = "triangle"; break;
        case AxiomReport::Violation::None: break;
        }
        j["points"] = r.points;
    }
    return j;
}

Json min_distance_to_json(const MinDistance& m) {
    Json j;
    j["d0"] = m.d0.str();
    Json pairs = Json::array();
    for (auto [x, y] : m.pairs) pairs.push_back(Json::array({x, y}));
    j["minimal_pairs"] = std::move(pairs);
    return j;
}

Json quotient_to_json(const QuotientStructure& q) {
    Json j;
    j["d0"] = q.d0.str();
    j["classes"] = q.classes;
    Json rows = Json::array();
    for (const auto& row : q.quotient_d) {
        Json r = Json::array();
        for (const ExtDistance& d : row) r.push_back(d.str());
        rows.push_back(std::move(r));
    }
    j["quotient_d"] = std::move(rows);
    return j;
}

Json classification_to_json(const ClassificationReport& r) {
    Json j;
    j["is_constant"] = r.is_constant;
    j["is_contractive"] = r.is_contractive;
    j["is_contraction"] = r.is_contraction;
    j["k_min"] = r.k_min.str();
    if (r.violating_pair) j["violating_pair"] = Json::array({r.violating_pair->first, r.violating_pair->second});
    j["window"] = r.window;
    return j;
}

Json decision_to_json(const Decision& d, std::size_t window_size) {
    Json j;
    if (!d.applicable) {
        j["applicable"] = false;
        return j;
    }
    j["exists"] = d.exists;
    j["classes"] = d.class_count;
    if (d.witness) j["witness"] = map_to_json(*d.witness, window_size);
    return j;
}

Json iteration_to_json(const IterationReport& r) {
    Json j;
    switch (r.status) {
    case IterationReport::Status::FixedPoint: j["status"] = "fixed-point"; break;
    case IterationReport::Status::BudgetExhausted: j["status"] = "budget-exhausted"; break;
    case IterationReport::Status::CycleDetected: j["status"] = "cycle-detected"; break;
    }
    j["orbit"] = r.orbit;
    j["steps_taken"] = r.steps_taken;
    if (r.fixed_point) j["fixed_point"] = *r.fixed_point;
    if (r.n0_bound) j["n0_bound"] = *r.n0_bound;
    if (r.stabilizes_to) j["stabilizes_to"] = *r.stabilizes_to;
    return j;
}

Json certificate_to_json(const CertificateReport& r) {
    Json j;
    j["hypothesis_satisfied"] = r.hypothesis_satisfied;
    j["window"] = r.window;
    j["probe_count"] = r.probes.size();
    Json failures = Json::array();
    for (const ProbeResult& p : r.probes)
        if (!p.chained)
            failures.push_back(Json{{"eps", ExtDistance(p.eps).str()}, {"pair", Json::array({p.x, p.y})}});
    j["failures"] = std::move(failures);
    return j;
}

Json enumeration_to_json(const EnumerationSummary& s) {
    Json j;
    j["total_maps"] = s.total_maps;
    j["count_constant"] = s.count_constant;
    j["count_contraction"] = s.count_contraction;
    j["count_contractive"] = s.count_contractive;
    j["nonconstant_contractive_exists"] = s.nonconstant_contractive_exists;
    return j;
}

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace cm
