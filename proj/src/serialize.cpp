#include "qwalk/serialize.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qwalk {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) {
    // Our strings are digits and pattern characters; no escaping needed
    // beyond the quotes themselves.
    return "\"" + s + "\"";
}

std::string state_ref_to_json(const StateRef& ref) {
    return ref.kind == StateRef::Kind::vertex ? std::to_string(ref.vertex)
                                              : quoted(ref.pattern);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string graph_to_json(const WeightedGraph& g) {
    std::ostringstream out;
    out << "{\"n\": " << g.order() << ", \"entries\": [";
    bool first = true;
    for (const auto& e : g.canonical_entries()) {
        if (!first) out << ", ";
        first = false;
        out << "[" << e.i << ", " << e.j << ", " << format_double(e.w) << "]";
    }
    out << "]}";
    return out.str();
}

WeightedGraph graph_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw ParseError("graph json: expected object with \"n\" and \"entries\"");
    if (!doc["n"].is_number_integer())
        throw ParseError("graph json: \"n\" must be an integer");
    if (!doc["entries"].is_array())
        throw ParseError("graph json: \"entries\" must be an array");

    const int n = doc["n"].get<int>();
    std::vector<WeightEntry> entries;
    for (const auto& item : doc["entries"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number())
            throw ParseError("graph json: entries must be [i, j, w] triples");
        entries.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
    }
    return WeightedGraph::build(n, entries);
}

std::string spectrum_to_json(const Spectrum& s) {
    std::ostringstream out;
    out << "{\"eigenvalues\": [";
    for (int j = 0; j < s.size(); ++j) {
        if (j) out << ", ";
        out << format_double(s.eigenvalues()(j));
    }
    out << "], \"eigenvectors\": [";
    for (int j = 0; j < s.size(); ++j) {
        if (j) out << ", ";
        out << "[";
        for (int r = 0; r < s.size(); ++r) {
            if (r) out << ", ";
            out << format_double(s.eigenvectors()(r, j));
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

std::string certificate_to_json(const PSTCertificate& cert) {
    std::ostringstream out;
    out << "{\"source\": " << state_ref_to_json(cert.source)
        << ", \"target\": " << state_ref_to_json(cert.target)
        << ", \"time\": " << format_double(cert.time)
        << ", \"fidelity\": " << format_double(cert.fidelity)
        << ", \"tolerance\": " << format_double(cert.tolerance)
        << ", \"verdict\": " << (cert.pass ? "\"pass\"" : "\"fail\"") << "}";
    return out.str();
}

std::string scan_to_csv(const ScanResult& result) {
    std::ostringstream out;
    out << "t,re_amplitude,im_amplitude,fidelity\n";
    for (const auto& row : result.rows)
        out << format_double(row.t) << "," << format_double(row.amplitude.real())
            << "," << format_double(row.amplitude.imag()) << ","
            << format_double(row.fidelity) << "\n";
    return out.str();
}

std::string synthesis_to_json(const std::string& weights_object, double t_star,
                              const WeightedGraph& graph,
                              const PSTCertificate& cert) {
    std::ostringstream out;
    out << "{\"weights\": " << weights_object
        << ", \"t_star\": " << format_double(t_star)
        << ", \"graph\": " << graph_to_json(graph)
        << ", \"certificate\": " << certificate_to_json(cert) << "}";
    return out.str();
}

std::string double_cone_weights_to_json(const DoubleConeWeights& w) {
    std::ostringstream out;
    out << "{\"p\": " << w.p << ", \"q\": " << w.q << ", \"b\": " << w.b
        << ", \"n\": " << w.n << ", \"k\": " << w.k
        << ", \"delta\": " << format_double(w.delta)
        << ", \"Delta\": " << format_double(w.big_delta)
        << ", \"eta\": " << format_double(w.eta)
        << ", \"mu\": " << format_double(w.mu)
        << ", \"t_star\": " << format_double(w.t_star) << "}";
    return out.str();
}

std::string probe_report_to_json(const ProbeReport& report, double t_max,
                                 std::size_t steps, std::uint64_t seed) {
    std::ostringstream out;
    out << "{\"t_max\": " << format_double(t_max) << ", \"steps\": " << steps
        << ", \"seed\": " << seed << ", \"samples\": [";
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const auto& s = report.samples[i];
        if (i) out << ", ";
        out << "{\"mu\": " << format_double(s.weights.mu)
            << ", \"eta\": " << format_double(s.weights.eta)
            << ", \"kappa\": " << format_double(s.weights.kappa)
            << ", \"tau\": " << format_double(s.weights.tau)
            << ", \"rho\": " << format_double(s.weights.rho)
            << ", \"eps\": " << format_double(s.weights.eps)
            << ", \"max_fidelity\": " << format_double(s.max_fidelity)
            << ", \"argmax_time\": " << format_double(s.argmax_time)
            << ", \"evaluations\": " << s.evaluations << "}";
    }
    out << "], \"max_fidelity\": " << format_double(report.max_fidelity)
        << ", \"argmax_sample\": " << report.argmax_sample
        << ", \"argmax_time\": " << format_double(report.argmax_time) << "}";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
    if (!out) throw ParseError("write failed: " + path);
}

WeightedGraph load_graph(const std::string& path) {
    return graph_from_json(read_file(path));
}

}  // namespace qwalk
