// Command-line surface for the quantum-walk engine: graph construction,
// spectra, amplitude/fidelity scans, PST certification, weight synthesis
// and the half-join probe. All outputs are deterministic for identical
// argument vectors.

#include "qwalk/graph.hpp"
#include "qwalk/serialize.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/synth.hpp"
#include "qwalk/walk.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace qwalk;

constexpr double kDefaultCertTolerance = 1e-9;

double parse_double_token(const std::string& token) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("not a number: " + token);
    }
    if (pos != token.size()) throw ParseError("not a number: " + token);
    return value;
}

int parse_int_token(const std::string& token) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: " + token);
    }
    if (pos != token.size()) throw ParseError("not an integer: " + token);
    return value;
}

bool is_all_digits(const std::string& token) {
    if (token.empty()) return false;
    for (char c : token)
        if (c < '0' || c > '9') return false;
    return true;
}

// Pure-digit tokens are vertex indices; tokens containing '*' (or U+22C6)
// are subcube patterns.
StateRef parse_descriptor(const std::string& token) {
    if (is_all_digits(token)) return StateRef::of_vertex(parse_int_token(token));
    if (token.find('*') != std::string::npos ||
        token.find("\xe2\x8b\x86") != std::string::npos) {
        for (std::size_t i = 0; i < token.size(); ++i) {
            const char c = token[i];
            if (c == '0' || c == '1' || c == '*') continue;
            if (i + 2 < token.size() && static_cast<unsigned char>(c) == 0xe2 &&
                static_cast<unsigned char>(token[i + 1]) == 0x8b &&
                static_cast<unsigned char>(token[i + 2]) == 0x86) {
                i += 2;
                continue;
            }
            throw ParseError("bad state descriptor: " + token);
        }
        return StateRef::of_pattern(SubcubeSpec::parse(token).pattern());
    }
    throw ParseError("bad state descriptor: " + token);
}

QuantumState descriptor_state(const StateRef& ref, int order) {
    if (ref.kind == StateRef::Kind::vertex) return basis_state(order, ref.vertex);
    const SubcubeSpec spec = SubcubeSpec::parse(ref.pattern);
    if (spec.length() >= 31 || (1 << spec.length()) != order)
        throw std::invalid_argument("subcube pattern length does not match graph order");
    return subcube_normal_state(spec);
}

std::vector<int> parse_word(const std::string& token, int q) {
    std::vector<int> word;
    if (token.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= token.size()) {
            const std::size_t comma = token.find(',', start);
            const std::string piece =
                token.substr(start, comma == std::string::npos ? std::string::npos
                                                               : comma - start);
            word.push_back(parse_int_token(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        if (!is_all_digits(token)) throw ParseError("bad word: " + token);
        if (q > 10)
            throw ParseError("alphabet larger than 10 needs comma-separated digits: " + token);
        for (char c : token) word.push_back(c - '0');
    }
    return word;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text + "\n");
}

// Plain circulant with the given connection offsets; default base graph
// for double-cone synthesis when the caller does not supply one.
WeightedGraph circulant_graph(int n, const std::vector<int>& offsets) {
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int o : offsets) edges.insert(std::minmax(v, (v + o) % n));
    std::vector<WeightEntry> entries;
    for (const auto& [i, j] : edges) entries.push_back({i, j, 1.0});
    return WeightedGraph::build(n, entries);
}

WeightedGraph default_regular_base(int n, int k) {
    if (k >= n)
        throw std::invalid_argument("double-cone base: degree must be below the order");
    if (k == 0) return empty_graph(n);
    if (k == n - 1) return complete_graph(n);
    std::vector<int> offsets;
    for (int o = 1; o <= k / 2; ++o) offsets.push_back(o);
    if (k % 2 == 1) {
        if (n % 2 == 1)
            throw std::invalid_argument(
                "double-cone base: no default circulant for odd degree on odd order; "
                "provide --base");
        offsets.push_back(n / 2);
    }
    return circulant_graph(n, offsets);
}

struct Paths {
    std::string out;
    std::string graph_out;
};

void emit_synthesis(const std::string& weights_object, double t_star,
                    const WeightedGraph& graph, const PSTCertificate& cert,
                    const Paths& paths) {
    emit(synthesis_to_json(weights_object, t_star, graph, cert), paths.out);
    if (!paths.graph_out.empty()) write_file(paths.graph_out, graph_to_json(graph) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-graph continuous-time quantum walk engine"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "construct and combine graphs");
    graph_cmd->require_subcommand(1);

    auto* family = graph_cmd->add_subcommand("family", "standard graph families");
    std::string family_name, family_out;
    int family_n = 0, family_q = 0, family_k = -1, family_l = -1, family_m = -1;
    family->add_option("--name", family_name)->required();
    family->add_option("--n", family_n);
    family->add_option("--q", family_q);
    family->add_option("--k", family_k);
    family->add_option("--l", family_l);
    family->add_option("--m", family_m);
    family->add_option("--out", family_out);
    family->callback([&] {
        const auto need = [&](bool ok, const char* what) {
            if (!ok) throw ParseError(std::string("family ") + family_name +
                                      " needs " + what);
        };
        std::optional<WeightedGraph> g;
        if (family_name == "complete") {
            need(family_n != 0, "--n");
            g = complete_graph(family_n);
        } else if (family_name == "empty") {
            need(family_n != 0, "--n");
            g = empty_graph(family_n);
        } else if (family_name == "cycle") {
            need(family_n != 0, "--n");
            g = cycle_graph(family_n);
        } else if (family_name == "path") {
            need(family_n != 0, "--n");
            g = path_graph(family_n);
        } else if (family_name == "hypercube") {
            need(family_n != 0, "--n");
            g = hypercube_graph(family_n);
        } else if (family_name == "hamming") {
            need(family_q != 0 && family_n != 0, "--q and --n");
            g = hamming_graph(family_q, family_n);
        } else if (family_name == "path-hypercubic") {
            need(family_n != 0, "--n");
            g = path_hypercubic(family_n);
        } else if (family_name == "subcube-hypercube") {
            need(family_k >= 0 && family_l >= 0 && family_m >= 0, "--k --l --m");
            g = subcube_hypercube(family_k, family_l, family_m);
        } else {
            throw ParseError("unknown family: " + family_name);
        }
        emit(graph_to_json(*g), family_out);
    });

    auto* build = graph_cmd->add_subcommand("build", "graph from a JSON spec");
    std::string build_spec, build_out;
    build->add_option("--spec", build_spec)->required();
    build->add_option("--out", build_out);
    build->callback([&] { emit(graph_to_json(load_graph(build_spec)), build_out); });

    auto* op = graph_cmd->add_subcommand("op", "join, product and cone operators");
    std::vector<std::string> op_join, op_cartesian, op_double_cone, op_half_join;
    double op_rho = 1.0;
    std::string op_out;
    op->add_option("--join", op_join)->expected(2);
    op->add_option("--rho", op_rho);
    op->add_option("--cartesian", op_cartesian)->expected(2);
    op->add_option("--double-cone", op_double_cone)->expected(4);
    op->add_option("--half-join", op_half_join)->expected(7);
    op->add_option("--out", op_out);
    op->callback([&] {
        const int variants = !op_join.empty() + !op_cartesian.empty() +
                             !op_double_cone.empty() + !op_half_join.empty();
        if (variants != 1)
            throw ParseError("graph op needs exactly one of --join, --cartesian, "
                             "--double-cone, --half-join");
        std::optional<WeightedGraph> g;
        if (!op_join.empty()) {
            g = join(load_graph(op_join[0]), load_graph(op_join[1]), op_rho);
        } else if (!op_cartesian.empty()) {
            g = cartesian(load_graph(op_cartesian[0]), load_graph(op_cartesian[1]));
        } else if (!op_double_cone.empty()) {
            g = double_cone(parse_int_token(op_double_cone[0]),
                            parse_double_token(op_double_cone[1]),
                            parse_double_token(op_double_cone[2]),
                            load_graph(op_double_cone[3]));
        } else {
            g = half_join(parse_double_token(op_half_join[0]),
                          parse_double_token(op_half_join[1]),
                          parse_double_token(op_half_join[2]),
                          parse_double_token(op_half_join[3]),
                          parse_double_token(op_half_join[4]),
                          parse_double_token(op_half_join[5]),
                          load_graph(op_half_join[6]));
        }
        emit(graph_to_json(*g), op_out);
    });

    // ---- spectrum ----
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigendecompose a graph");
    std::string spectrum_graph, spectrum_out;
    spectrum_cmd->add_option("--graph", spectrum_graph)->required();
    spectrum_cmd->add_option("--out", spectrum_out);
    spectrum_cmd->callback([&] {
        emit(spectrum_to_json(eigendecompose(load_graph(spectrum_graph))), spectrum_out);
    });

    // ---- amplitude ----
    auto* amp_cmd = app.add_subcommand("amplitude", "transfer amplitude at one time");
    std::string amp_graph, amp_source, amp_target;
    double amp_time = 0.0;
    amp_cmd->add_option("--graph", amp_graph)->required();
    amp_cmd->add_option("--source", amp_source)->required();
    amp_cmd->add_option("--target", amp_target)->required();
    amp_cmd->add_option("--time", amp_time)->required();
    amp_cmd->callback([&] {
        const WeightedGraph g = load_graph(amp_graph);
        const Spectrum s = eigendecompose(g);
        const auto value = transfer_amplitude(
            s, descriptor_state(parse_descriptor(amp_source), g.order()),
            descriptor_state(parse_descriptor(amp_target), g.order()), amp_time);
        std::cout << "re " << format_double(value.real()) << " im "
                  << format_double(value.imag()) << "\n";
    });

    // ---- scan ----
    auto* scan_cmd = app.add_subcommand("scan", "fidelity over a time grid");
    std::string scan_graph, scan_source, scan_target, scan_out;
    double scan_t_max = 0.0;
    std::size_t scan_steps = 0;
    scan_cmd->add_option("--graph", scan_graph)->required();
    scan_cmd->add_option("--source", scan_source)->required();
    scan_cmd->add_option("--target", scan_target)->required();
    scan_cmd->add_option("--t-max", scan_t_max)->required();
    scan_cmd->add_option("--steps", scan_steps)->required();
    scan_cmd->add_option("--out", scan_out)->required();
    scan_cmd->callback([&] {
        const WeightedGraph g = load_graph(scan_graph);
        const Spectrum s = eigendecompose(g);
        const ScanResult result =
            scan(s, descriptor_state(parse_descriptor(scan_source), g.order()),
                 descriptor_state(parse_descriptor(scan_target), g.order()),
                 scan_t_max, scan_steps);
        write_file(scan_out, scan_to_csv(result));
    });

    // ---- certify ----
    auto* certify_cmd = app.add_subcommand("certify", "PST pass/fail at one time");
    std::string cert_graph, cert_source, cert_target, cert_out;
    double cert_time = 0.0, cert_tol = 0.0;
    certify_cmd->add_option("--graph", cert_graph)->required();
    certify_cmd->add_option("--source", cert_source)->required();
    certify_cmd->add_option("--target", cert_target)->required();
    certify_cmd->add_option("--time", cert_time)->required();
    certify_cmd->add_option("--tol", cert_tol)->required();
    certify_cmd->add_option("--out", cert_out);
    certify_cmd->callback([&] {
        const WeightedGraph g = load_graph(cert_graph);
        const Spectrum s = eigendecompose(g);
        const StateRef source_ref = parse_descriptor(cert_source);
        const StateRef target_ref = parse_descriptor(cert_target);
        const PSTCertificate cert =
            certify(s, descriptor_state(source_ref, g.order()),
                    descriptor_state(target_ref, g.order()), cert_time, cert_tol,
                    source_ref, target_ref);
        const std::string text = certificate_to_json(cert);
        std::cout << text << "\n";
        if (!cert_out.empty()) write_file(cert_out, text + "\n");
        if (!cert.pass) exit_code = 3;
    });

    // ---- synth ----
    auto* synth_cmd = app.add_subcommand("synth", "weight synthesis recipes");
    synth_cmd->require_subcommand(1);

    auto* dc = synth_cmd->add_subcommand("double-cone", "apex PST on a double cone");
    int dc_n = 0, dc_k = 0, dc_b = 0, dc_p = 0, dc_q = 0;
    double dc_tol = kDefaultCertTolerance;
    std::string dc_base;
    Paths dc_paths;
    dc->add_option("--n", dc_n)->required();
    dc->add_option("--k", dc_k)->required();
    dc->add_option("--b", dc_b)->required();
    dc->add_option("--p", dc_p);
    dc->add_option("--q", dc_q);
    dc->add_option("--base", dc_base);
    dc->add_option("--tol", dc_tol);
    dc->add_option("--out", dc_paths.out);
    dc->add_option("--graph-out", dc_paths.graph_out);
    dc->callback([&] {
        if ((dc_p == 0) != (dc_q == 0))
            throw ParseError("synth double-cone: give both --p and --q or neither");
        const DoubleConeWeights w = dc_p ? double_cone_weights(dc_n, dc_k, dc_b, dc_p, dc_q)
                                         : double_cone_weights(dc_n, dc_k, dc_b);
        WeightedGraph base = dc_base.empty() ? default_regular_base(dc_n, dc_k)
                                             : load_graph(dc_base);
        if (base.order() != dc_n)
            throw std::invalid_argument("double-cone base: order must equal --n");
        const auto degree = regularity(base);
        if (!base.is_plain() || !degree || *degree != dc_k)
            throw std::invalid_argument("double-cone base: must be plain k-regular");
        const WeightedGraph graph = double_cone(dc_b, w.mu, w.eta, base);
        const PSTCertificate cert =
            certify(eigendecompose(graph), 0, 1, w.t_star, dc_tol);
        emit_synthesis(double_cone_weights_to_json(w), w.t_star, graph, cert, dc_paths);
    });

    auto* hamming = synth_cmd->add_subcommand("hamming", "universal PST on H(q, n)");
    int ham_q = 0, ham_n = 0;
    double ham_t_star = 0.0, ham_tol = kDefaultCertTolerance;
    std::string ham_a, ham_b;
    Paths ham_paths;
    hamming->add_option("--q", ham_q)->required();
    hamming->add_option("--n", ham_n)->required();
    hamming->add_option("--a", ham_a)->required();
    hamming->add_option("--b", ham_b)->required();
    hamming->add_option("--t-star", ham_t_star)->required();
    hamming->add_option("--tol", ham_tol);
    hamming->add_option("--out", ham_paths.out);
    hamming->add_option("--graph-out", ham_paths.graph_out);
    hamming->callback([&] {
        const ComposedTransfer ct = hamming_universal(
            ham_q, ham_n, parse_word(ham_a, ham_q), parse_word(ham_b, ham_q), ham_t_star);
        const PSTCertificate cert =
            certify(eigendecompose(ct.graph), ct.source, ct.target, ct.t_star, ham_tol);
        std::string weights = "{\"q\": " + std::to_string(ham_q) +
                              ", \"n\": " + std::to_string(ham_n) + ", \"scales\": [";
        for (std::size_t j = 0; j < ct.scales.size(); ++j) {
            if (j) weights += ", ";
            weights += format_double(ct.scales[j]);
        }
        weights += "]}";
        emit_synthesis(weights, ct.t_star, ct.graph, cert, ham_paths);
    });

    auto* subcube = synth_cmd->add_subcommand("subcube", "vertex-to-subcube transfer");
    int sc_k = -1, sc_l = -1, sc_m = -1;
    double sc_tol = kDefaultCertTolerance;
    Paths sc_paths;
    subcube->add_option("--k", sc_k)->required();
    subcube->add_option("--l", sc_l)->required();
    subcube->add_option("--m", sc_m)->required();
    subcube->add_option("--tol", sc_tol);
    subcube->add_option("--out", sc_paths.out);
    subcube->add_option("--graph-out", sc_paths.graph_out);
    subcube->callback([&] {
        const SubcubeTransfer st = hypercube_subcube_transfer(sc_k, sc_l, sc_m);
        const PSTCertificate cert =
            certify(eigendecompose(st.graph), st.source, st.target, st.t_star, sc_tol,
                    StateRef::of_vertex(0), StateRef::of_pattern(st.target_spec.pattern()));
        const std::string weights = "{\"k\": " + std::to_string(sc_k) +
                                    ", \"l\": " + std::to_string(sc_l) +
                                    ", \"m\": " + std::to_string(sc_m) + "}";
        emit_synthesis(weights, st.t_star, st.graph, cert, sc_paths);
    });

    // ---- probe ----
    auto* probe_cmd = app.add_subcommand("probe", "numerical no-go probes");
    probe_cmd->require_subcommand(1);
    auto* hj = probe_cmd->add_subcommand("half-join", "apex fidelity sweep");
    std::string hj_graph, hj_out;
    std::size_t hj_samples = 0, hj_steps = 0;
    double hj_t_max = 0.0;
    std::uint64_t hj_seed = kDefaultProbeSeed;
    hj->add_option("--graph", hj_graph)->required();
    hj->add_option("--samples", hj_samples)->required();
    hj->add_option("--t-max", hj_t_max)->required();
    hj->add_option("--steps", hj_steps)->required();
    hj->add_option("--seed", hj_seed);
    hj->add_option("--out", hj_out);
    hj->callback([&] {
        const WeightedGraph base = load_graph(hj_graph);
        const ProbeReport report = halfjoin_no_pst_probe(
            base, sample_halfjoin_weights(hj_samples, hj_seed), hj_t_max, hj_steps);
        emit(probe_report_to_json(report, hj_t_max, hj_steps, hj_seed), hj_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
