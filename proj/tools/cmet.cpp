// cmet: analyze discrete metric spaces and graphs for contractive self-maps.
//
// Exit codes: 0 = positive answer / pass, 1 = valid analysis with a negative
// answer (not a metric, no map exists, no fixed point, ...), 2 = usage or
// input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cm/errors.hpp"
#include "cm/json_io.hpp"
#include "cm/example_spaces.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct Options {
    std::string space_file;
    std::string edges_file;
    std::string example_name;
    std::string map_arg;
    std::string op; // for the `example` command
    std::string eps = "3/2";
    std::string eps_schedule;
    std::string subset;
    long window = 100;
    long start = 0;
    long max_steps = 1000;
    long x = 0, y = 0;
    std::size_t cap = cm::kDefaultEnumerationCap;
    std::uint64_t seed = 1;
    long probe_max = 20;
    bool no_bridge = false;
    bool pretty = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cm::ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Loaded {
    cm::MetricSpace space;
    std::optional<cm::ExampleSpace> example;
    std::string digest;
    std::string source;
};

Loaded load_space(const Options& opt) {
    if (!opt.space_file.empty()) {
        const std::string text = slurp(opt.space_file);
        cm::MetricSpace s = opt.space_file.ends_with(".tsv")
                                ? cm::space_from_tsv(text)
                                : cm::space_from_json(cm::Json::parse(text));
        return {std::move(s), std::nullopt, cm::input_digest(text), opt.space_file};
    }
    if (!opt.edges_file.empty()) {
        const std::string text = slurp(opt.edges_file);
        cm::Graph g = cm::parse_edge_list(text);
        return {cm::natural_distance(g), std::nullopt, cm::input_digest(text), opt.edges_file};
    }
    if (!opt.example_name.empty()) {
        cm::ExampleSpace ex = cm::build_example(opt.example_name, opt.window, !opt.no_bridge);
        const std::string key = opt.example_name + ":" + std::to_string(opt.window) +
                                (opt.no_bridge ? ":no-bridge" : "");
        cm::MetricSpace s = ex.space;
        return {std::move(s), std::move(ex), cm::input_digest(key), key};
    }
    throw cm::ParseError("one of --space, --edges or --name is required");
}

cm::SelfMap load_map(const Options& opt, const Loaded& loaded) {
    if (opt.map_arg.empty()) throw cm::ParseError("--map is required for this command");
    if (loaded.example) {
        auto it = loaded.example->maps.find(opt.map_arg);
        if (it != loaded.example->maps.end()) return it->second;
    }
    if (std::filesystem::exists(opt.map_arg))
        return cm::map_from_json(cm::Json::parse(slurp(opt.map_arg)));
    return cm::named_map(opt.map_arg);
}

cm::BigRational parse_positive_rational(const std::string& s) {
    const cm::ExtDistance d = cm::ExtDistance::parse(s);
    return d.value();
}

int emit(const cm::Json& report, const Loaded& loaded, bool pretty, int exit_code) {
    cm::Json envelope;
    envelope["tool"] = "cmet";
    envelope["version"] = kToolVersion;
    envelope["input"] = loaded.source;
    envelope["input_digest"] = loaded.digest;
    envelope["window"] = loaded.space.window_stamp();
    envelope["report"] = report;
    std::cout << (pretty ? envelope.dump(2) : envelope.dump()) << "\n";
    return exit_code;
}

cm::QuotientStructure quotient_of(const cm::MetricSpace& space) {
    return cm::build_quotient(space, cm::min_positive_distance(space).d0);
}

int run_op(const std::string& op, const Options& opt) {
    Loaded loaded = load_space(opt);
    const cm::MetricSpace& space = loaded.space;

    if (op == "verify") {
        const cm::AxiomReport r = cm::verify_metric_axioms(space);
        return emit(cm::axiom_report_to_json(r), loaded, opt.pretty, r.pass ? 0 : 1);
    }
    if (op == "d0") {
        try {
            return emit(cm::min_distance_to_json(cm::min_positive_distance(space)), loaded,
                        opt.pretty, 0);
        } catch (const cm::NoFiniteDistance&) {
            return emit(cm::Json{{"error", "no-finite-distance"}}, loaded, opt.pretty, 1);
        }
    }
    if (op == "classes") return emit(cm::quotient_to_json(quotient_of(space)), loaded, opt.pretty, 0);
    if (op == "decide") {
        const cm::Decision d = cm::decide_nonconstant_exists(space, quotient_of(space));
        return emit(cm::decision_to_json(d, space.window_size()), loaded, opt.pretty,
                    d.exists ? 0 : 1);
    }
    if (op == "witness") {
        try {
            const cm::SelfMap w = cm::construct_witness(space, quotient_of(space));
            return emit(cm::map_to_json(w, space.window_size()), loaded, opt.pretty, 0);
        } catch (const cm::SingleClass&) {
            return emit(cm::Json{{"error", "single-class"}}, loaded, opt.pretty, 1);
        }
    }
    if (op == "classify" || op == "classify-map") {
        const cm::ClassificationReport r = cm::classify_map(space, load_map(opt, loaded));
        cm::Json j = cm::classification_to_json(r);
        if (loaded.example) {
            auto note = loaded.example->notes.find(opt.map_arg);
            if (note != loaded.example->notes.end()) j["note"] = note->second;
        }
        return emit(j, loaded, opt.pretty, r.is_contractive ? 0 : 1);
    }
    if (op == "iterate") {
        const cm::IterationReport r =
            cm::iterate_to_fixed_point(space, load_map(opt, loaded), opt.start, opt.max_steps);
        return emit(cm::iteration_to_json(r), loaded, opt.pretty,
                    r.status == cm::IterationReport::Status::FixedPoint ? 0 : 1);
    }
    if (op == "fixed-points") {
        const auto fixed = cm::check_fixed_point_uniqueness(space, load_map(opt, loaded));
        return emit(cm::Json{{"fixed_points", fixed}}, loaded, opt.pretty, fixed.empty() ? 1 : 0);
    }
    if (op == "epsilon-chain") {
        const auto chain = cm::epsilon_chain(space, opt.x, opt.y, parse_positive_rational(opt.eps));
        cm::Json j;
        j["found"] = chain.has_value();
        if (chain) j["chain"] = *chain;
        return emit(j, loaded, opt.pretty, chain ? 0 : 1);
    }
    if (op == "certificate") {
        std::vector<cm::PointId> probes;
        for (long p = 0; p <= std::min<long>(opt.probe_max, space.window_max()); ++p)
            probes.push_back(p);
        std::vector<cm::BigRational> schedule;
        std::istringstream ss(opt.eps_schedule.empty() ? opt.eps : opt.eps_schedule);
        std::string tok;
        while (std::getline(ss, tok, ',')) schedule.push_back(parse_positive_rational(tok));
        const cm::CertificateReport r = cm::contractions_constant_certificate(space, probes, schedule);
        return emit(cm::certificate_to_json(r), loaded, opt.pretty, r.hypothesis_satisfied ? 0 : 1);
    }
    if (op == "corollary") {
        const cm::Decision d = cm::corollary_unique_minimal_pair(space);
        return emit(cm::decision_to_json(d, space.window_size()), loaded, opt.pretty,
                    d.applicable && d.exists ? 0 : 1);
    }
    if (op == "enumerate") {
        const cm::EnumerationSummary s = cm::enumerate_all_maps(space, opt.cap);
        return emit(cm::enumeration_to_json(s), loaded, opt.pretty,
                    s.nonconstant_contractive_exists ? 0 : 1);
    }
    throw cm::ParseError("unknown op: " + op);
}

int run_graph_op(const std::string& op, const Options& opt) {
    const std::string text = slurp(opt.edges_file);
    cm::Graph g = cm::parse_edge_list(text);
    Loaded loaded{cm::natural_distance(g), std::nullopt, cm::input_digest(text), opt.edges_file};

    if (op == "graph-components") {
        const auto comps = cm::connected_components(g);
        return emit(cm::Json{{"components", comps}}, loaded, opt.pretty, 0);
    }
    if (op == "graph-decide") {
        const cm::Decision d = cm::decide_graph(g);
        cm::Json j = cm::decision_to_json(d, loaded.space.window_size());
        j["components"] = d.class_count;
        return emit(j, loaded, opt.pretty, d.exists ? 0 : 1);
    }
    if (op == "subgraph") {
        std::vector<cm::PointId> subset;
        std::istringstream ss(opt.subset);
        std::string tok;
        while (std::getline(ss, tok, ',')) subset.push_back(std::stol(tok));
        const cm::Subspace sub = cm::induced_subspace(loaded.space, subset);
        const cm::Decision d = cm::decide_nonconstant_exists(sub.space, quotient_of(sub.space));
        cm::Json j = cm::decision_to_json(d, sub.space.window_size());
        j["d0_A"] = sub.d0.str();
        j["labels"] = sub.labels;
        return emit(j, loaded, opt.pretty, d.exists ? 0 : 1);
    }
    throw cm::ParseError("unknown graph op: " + op);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"contractive-map analysis of discrete metric spaces and graphs"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;

    auto add_space_flags = [&](CLI::App* c) {
        c->add_option("--space", opt.space_file, "space descriptor (.json or .tsv)");
        c->add_option("--edges", opt.edges_file, "edge-list file; analyzed under natural distance");
        c->add_option("--name", opt.example_name, "registered example space");
        c->add_option("--window", opt.window, "window: points 0..N for rule-based spaces");
        c->add_flag("--no-bridge", opt.no_bridge, "omit the bridge edge of figure1_graph");
        c->add_flag("--pretty", opt.pretty, "indent the JSON report");
    };

    std::vector<std::pair<CLI::App*, std::string>> dispatch;
    for (const char* name : {"verify", "d0", "classes", "decide", "witness", "classify-map",
                             "iterate", "fixed-points", "epsilon-chain", "certificate",
                             "corollary", "enumerate"}) {
        CLI::App* c = app.add_subcommand(name);
        add_space_flags(c);
        dispatch.emplace_back(c, name);
    }
    CLI::App* example = app.add_subcommand("example", "run an op on a registered example");
    add_space_flags(example);
    example->add_option("--op", opt.op, "verify|d0|classes|decide|witness|classify|iterate|fixed-points|epsilon-chain|certificate|corollary|enumerate")
        ->required();
    dispatch.emplace_back(example, "example");

    for (auto& [c, name] : dispatch) {
        c->add_option("--map", opt.map_arg, "map: example/registered name or descriptor file");
        c->add_option("--eps", opt.eps, "chain step bound as a multiple of d0, e.g. 11/10");
        c->add_option("--eps-schedule", opt.eps_schedule, "comma-separated eps list");
        c->add_option("--start", opt.start, "iteration start point");
        c->add_option("--max-steps", opt.max_steps, "iteration budget");
        c->add_option("--x", opt.x, "chain endpoint");
        c->add_option("--y", opt.y, "chain endpoint");
        c->add_option("--cap", opt.cap, "enumeration size cap");
        c->add_option("--seed", opt.seed, "random seed");
        c->add_option("--probes", opt.probe_max, "probe points 0..K for the certificate");
    }

    for (const char* name : {"graph-components", "graph-decide", "subgraph"}) {
        CLI::App* c = app.add_subcommand(name);
        c->add_option("--edges", opt.edges_file, "edge-list file")->required();
        c->add_option("--subset", opt.subset, "comma-separated vertex ids");
        c->add_flag("--pretty", opt.pretty, "indent the JSON report");
        dispatch.emplace_back(c, name);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        for (auto& [c, name] : dispatch) {
            if (!c->parsed()) continue;
            if (name == "graph-components" || name == "graph-decide" || name == "subgraph")
                return run_graph_op(name, opt);
            if (name == "example") return run_op(opt.op, opt);
            if (name == "classify-map") return run_op("classify", opt);
            return run_op(name, opt);
        }
    } catch (const cm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cm::Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
