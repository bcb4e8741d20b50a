#include "qwalk/synth.hpp"

#include "qwalk/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kFactorCertTolerance = 1e-9;

// Permutation placing old vertices 0, 1 at positions a, b; the remaining
// vertices fill the remaining slots in increasing order.
std::vector<int> apex_placement(int order, int a, int b) {
    std::vector<int> old_of_new(order, -1);
    old_of_new[a] = 0;
    old_of_new[b] = 1;
    int next = 2;
    for (int v = 0; v < order; ++v)
        if (old_of_new[v] < 0) old_of_new[v] = next++;
    return old_of_new;
}

}  // namespace

DoubleConeWeights double_cone_weights(int n, int k, int b, int p, int q) {
    if (n < 1) throw std::invalid_argument("double_cone_weights: base size must be positive");
    if (k < 0) throw std::invalid_argument("double_cone_weights: base degree must be nonnegative");
    if (b != 0 && b != 1)
        throw std::invalid_argument("double_cone_weights: connectivity flag must be 0 or 1");
    if (p < 1 || q <= p)
        throw std::invalid_argument("double_cone_weights: need q > p >= 1");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("double_cone_weights: p and q must be coprime");
    const int same_parity = (p % 2 == q % 2) ? 1 : 0;
    if (same_parity != b)
        throw std::invalid_argument(
            "double_cone_weights: parity of (p, q) must match the connectivity flag");

    DoubleConeWeights w;
    w.p = p;
    w.q = q;
    w.b = b;
    w.n = n;
    w.k = k;
    const double root = std::sqrt(8.0 * n / (static_cast<double>(q) * q - static_cast<double>(p) * p));
    w.delta = p * root;
    w.big_delta = q * root;
    w.eta = root / 4.0;
    w.mu = w.delta + k - b * w.eta;
    w.t_star = std::numbers::pi / (2.0 * w.eta);
    return w;
}

DoubleConeWeights double_cone_weights(int n, int k, int b) {
    return b == 1 ? double_cone_weights(n, k, b, 1, 3)
                  : double_cone_weights(n, k, b, 1, 2);
}

double double_cone_mu_alternative(const DoubleConeWeights& w) {
    return w.b * w.eta - w.k - w.delta;
}

ComposedTransfer cartesian_compose(const FactorPlan& plan) {
    if (plan.factors.empty())
        throw std::invalid_argument("cartesian_compose: need at least one factor");
    if (!(plan.t_star > 0.0))
        throw std::invalid_argument("cartesian_compose: t_star must be positive");

    ComposedTransfer out{plan.factors.front().graph, 0, 0, plan.t_star, {}};
    bool first = true;
    for (std::size_t j = 0; j < plan.factors.size(); ++j) {
        const TransferFactor& f = plan.factors[j];
        const int n = f.graph.order();
        if (f.source < 0 || f.source >= n || f.target < 0 || f.target >= n)
            throw std::invalid_argument("cartesian_compose: factor vertex out of range");
        if (!(f.native_time > 0.0))
            throw std::invalid_argument("cartesian_compose: factor native time must be positive");
        const Spectrum s = eigendecompose(f.graph);
        const double f_native = std::norm(amplitude(s, f.source, f.target, f.native_time));
        if (f_native < 1.0 - kFactorCertTolerance)
            throw std::invalid_argument(
                "cartesian_compose: factor " + std::to_string(j) +
                " is not certified at its native time (fidelity " +
                std::to_string(f_native) + ")");

        const double scale = f.native_time / plan.t_star;
        out.scales.push_back(scale);
        const WeightedGraph scaled = scale_weights(f.graph, scale);
        if (first) {
            out.graph = scaled;
            out.source = f.source;
            out.target = f.target;
            first = false;
        } else {
            out.graph = cartesian(out.graph, scaled);
            out.source = out.source * n + f.source;
            out.target = out.target * n + f.target;
        }
    }
    return out;
}

ComposedTransfer hamming_universal(int q, int n, const std::vector<int>& a,
                                   const std::vector<int>& b, double t_star) {
    if (q < 2) throw std::invalid_argument("hamming_universal: alphabet size must be at least 2");
    if (n < 1) throw std::invalid_argument("hamming_universal: dimension must be positive");
    if (!(t_star > 0.0))
        throw std::invalid_argument("hamming_universal: t_star must be positive");
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("hamming_universal: words must have length n");
    for (int j = 0; j < n; ++j)
        if (a[j] < 0 || a[j] >= q || b[j] < 0 || b[j] >= q)
            throw std::invalid_argument("hamming_universal: word digit out of range");
    if (a == b) throw std::invalid_argument("hamming_universal: words must differ");

    FactorPlan plan;
    plan.t_star = t_star;
    for (int j = 0; j < n; ++j) {
        // Endpoints for this coordinate: the pair carrying the transfer, or
        // (a_j, other) when the coordinate does not move.
        const bool moves = a[j] != b[j];
        const int lo = a[j];
        const int hi = moves ? b[j] : (a[j] + 1) % q;

        WeightedGraph factor = complete_graph(q);
        double native = 0.0;
        if (q == 2) {
            native = std::numbers::pi / 2.0;  // plain K2 transfers at pi/2
        } else {
            const DoubleConeWeights w = double_cone_weights(q - 2, q - 3, 1, 1, 3);
            factor = relabel(double_cone(1, w.mu, w.eta, complete_graph(q - 2)),
                             apex_placement(q, lo, hi));
            native = w.t_star;
        }
        if (!moves) native *= 2.0;  // ride the transfer out and back
        plan.factors.push_back({factor, a[j], moves ? b[j] : a[j], native});
    }
    return cartesian_compose(plan);
}

SubcubeTransfer hypercube_subcube_transfer(int k, int l, int m) {
    const WeightedGraph graph = subcube_hypercube(k, l, m);
    const int dim = k + l + m;
    const std::string pattern =
        std::string(k, '1') + std::string(l, '0') + std::string(m, '*');
    SubcubeSpec spec = SubcubeSpec::parse(pattern);
    QuantumState source = basis_state(1 << dim, 0);
    QuantumState target = subcube_normal_state(spec);
    return SubcubeTransfer{graph, std::move(source), std::move(target),
                           std::move(spec), std::numbers::pi / 2.0};
}

std::vector<HalfJoinWeights> sample_halfjoin_weights(std::size_t count,
                                                     std::uint64_t seed) {
    if (count < 1)
        throw std::invalid_argument("sample_halfjoin_weights: need at least one sample");
    DeterministicRng rng(seed);
    std::vector<HalfJoinWeights> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        HalfJoinWeights w;
        w.mu = rng.uniform(-3.0, 3.0);
        w.eta = rng.nonzero_uniform(-3.0, 3.0);
        w.kappa = rng.uniform(-3.0, 3.0);
        w.tau = rng.uniform(-3.0, 3.0);
        w.rho = rng.uniform_excl_lo(0.0, 3.0);
        w.eps = rng.uniform_excl_lo(0.0, 3.0);
        samples.push_back(w);
    }
    return samples;
}

ProbeReport halfjoin_no_pst_probe(const WeightedGraph& base,
                                  const std::vector<HalfJoinWeights>& samples,
                                  double t_max, std::size_t steps) {
    if (samples.empty())
        throw std::invalid_argument("halfjoin_no_pst_probe: need at least one sample");
    if (!(t_max > 0.0))
        throw std::invalid_argument("halfjoin_no_pst_probe: t_max must be positive");
    if (steps < 2)
        throw std::invalid_argument("halfjoin_no_pst_probe: need at least 2 steps");
    if (!base.is_plain())
        throw std::invalid_argument("halfjoin_no_pst_probe: base graph must be plain");
    const auto degree = regularity(base);
    if (!degree)
        throw std::invalid_argument("halfjoin_no_pst_probe: base graph must be regular");
    for (const auto& w : samples)
        if (w.eps == 0.0)
            throw std::invalid_argument("halfjoin_no_pst_probe: samples must have eps != 0");

    ProbeReport report;
    report.max_fidelity = -1.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& w = samples[i];
        const HalfJoinParams params = half_join_params(
            w.mu, w.eta, w.kappa, w.tau, w.rho, w.eps, base.order(), *degree);
        ProbeSample ps;
        ps.weights = w;
        ps.max_fidelity = -1.0;
        for (std::size_t step = 0; step < steps; ++step) {
            const double t = static_cast<double>(step) * t_max / static_cast<double>(steps);
            const double f = std::norm(half_join_amplitude_closed_form(params, t));
            ++ps.evaluations;
            if (f > ps.max_fidelity) {
                ps.max_fidelity = f;
                ps.argmax_time = t;
            }
        }
        if (ps.max_fidelity > report.max_fidelity) {
            report.max_fidelity = ps.max_fidelity;
            report.argmax_sample = i;
            report.argmax_time = ps.argmax_time;
        }
        report.samples.push_back(ps);
    }
    return report;
}

}  // namespace qwalk
