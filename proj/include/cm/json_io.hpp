#pragma once

#include <string>

#include <json.hpp>

#include "cm/maps.hpp"
#include "cm/metric_space.hpp"
#include "cm/oracle.hpp"
#include "cm/quotient.hpp"

namespace cm {

using Json = nlohmann::ordered_json;

/// Space descriptor:
///   {"kind":"table","points":3,"d":[["0","1","3"],["1","0","2"],["3","2","0"]]}
///   {"kind":"rule","rule":"ex2","window":100}
/// Rationals are strings "p", "p/q" or "inf"; floats are rejected.
MetricSpace space_from_json(const Json& j);
Json space_to_json(const MetricSpace& space);

/// TSV import: n lines of n tab-separated rational strings.
MetricSpace space_from_tsv(const std::string& text);

/// Map descriptor: {"kind":"table","images":[0,0,1]} or
/// {"kind":"rule","rule":"shift-above-1"}.
SelfMap map_from_json(const Json& j);
Json map_to_json(const SelfMap& f, std::size_t window_size);

Json axiom_report_to_json(const AxiomReport& r);
Json min_distance_to_json(const MinDistance& m);
Json quotient_to_json(const QuotientStructure& q);
Json classification_to_json(const ClassificationReport& r);
Json decision_to_json(const Decision& d, std::size_t window_size);
Json iteration_to_json(const IterationReport& r);
Json certificate_to_json(const CertificateReport& r);
Json enumeration_to_json(const EnumerationSummary& s);

/// 64-bit FNV-1a over the raw input bytes, hex-encoded; the digest stamped
/// into every CLI report.
std::string input_digest(const std::string& bytes);

} // namespace cm
