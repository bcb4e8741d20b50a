#ifndef QWALK_SERIALIZE_HPP
#define QWALK_SERIALIZE_HPP

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/synth.hpp"
#include "qwalk/walk.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Raised for unreadable files and malformed documents, as opposed to
/// well-formed inputs that violate an operation's preconditions.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Shortest-of-17-significant-digits decimal form ("%.17g"); round-trips
/// every double exactly and is byte-stable across runs.
std::string format_double(double value);

// Graph JSON: {"n": <int>, "entries": [[i, j, w], ...]} with i <= j and
// entries sorted lexicographically by (i, j); zero weights are omitted.
std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);

// Spectrum JSON: {"eigenvalues": [...], "eigenvectors": [[...], ...]},
// inner list j being the eigenvector paired with eigenvalue j.
std::string spectrum_to_json(const Spectrum& s);

std::string certificate_to_json(const PSTCertificate& cert);

// Scan CSV: header t,re_amplitude,im_amplitude,fidelity then one row per
// grid point.
std::string scan_to_csv(const ScanResult& result);

// Synthesis JSON: {"weights": <object>, "t_star": ..., "graph": ...,
// "certificate": ...}. The weights object is command-specific and passed
// in pre-rendered.
std::string synthesis_to_json(const std::string& weights_object, double t_star,
                              const WeightedGraph& graph,
                              const PSTCertificate& cert);

std::string double_cone_weights_to_json(const DoubleConeWeights& w);

std::string probe_report_to_json(const ProbeReport& report, double t_max,
                                 std::size_t steps, std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
WeightedGraph load_graph(const std::string& path);

}  // namespace qwalk

#endif
