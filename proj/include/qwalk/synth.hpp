#ifndef QWALK_SYNTH_HPP
#define QWALK_SYNTH_HPP

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

#include <cstdint>
#include <vector>

namespace qwalk {

/// Weight certificate for apex-to-apex transfer on the double cone over a
/// k-regular base of order n. The integers (p, q) pick one admissible
/// solution; delta/(4 eta) = p and Delta/(4 eta) = q by construction.
struct DoubleConeWeights {
    int p = 1;
    int q = 3;
    int b = 1;
    int n = 1;
    int k = 0;
    double delta = 0.0;      // p * sqrt(8n / (q^2 - p^2))
    double big_delta = 0.0;  // q * sqrt(8n / (q^2 - p^2))
    double eta = 0.0;        // sqrt(8n / (q^2 - p^2)) / 4
    double mu = 0.0;         // delta + k - b * eta
    double t_star = 0.0;     // pi / (2 eta)
};

/// Requires q > p >= 1 coprime with p = q mod 2 exactly when b = 1.
DoubleConeWeights double_cone_weights(int n, int k, int b, int p, int q);

/// Defaults to the smallest admissible pair: (1, 3) when b = 1, (1, 2)
/// when b = 0.
DoubleConeWeights double_cone_weights(int n, int k, int b);

/// The paper's closing-line alternative for the loop weight; kept only so
/// its failure can be demonstrated against the resolved formula above.
double double_cone_mu_alternative(const DoubleConeWeights& w);

/// One factor of a Cartesian composition: a graph with a known
/// vertex-to-vertex transfer (or return) at its native time.
struct TransferFactor {
    WeightedGraph graph;
    int source = 0;
    int target = 0;
    double native_time = 0.0;
};

struct FactorPlan {
    std::vector<TransferFactor> factors;
    double t_star = 0.0;
};

struct ComposedTransfer {
    WeightedGraph graph;
    int source = 0;
    int target = 0;
    double t_star = 0.0;
    std::vector<double> scales;  // s_j = t_j / t_star
};

/// Cartesian product of the factors with each weight table scaled by
/// s_j = t_j / t_star, so every factor reaches its native time at t_star
/// simultaneously. Each factor's transfer is verified (fidelity at least
/// 1 - 1e-9 at its native time) before composing.
ComposedTransfer cartesian_compose(const FactorPlan& plan);

/// Weighted Hamming graph H(q, n) with perfect state transfer from word a
/// to word b at the chosen time. Coordinates with a_j != b_j get a
/// double-cone-weighted K_q placed on (a_j, b_j); equal coordinates reuse
/// the same construction through its return time.
ComposedTransfer hamming_universal(int q, int n, const std::vector<int>& a,
                                   const std::vector<int>& b, double t_star);

struct SubcubeTransfer {
    WeightedGraph graph;
    QuantumState source;
    QuantumState target;
    SubcubeSpec target_spec;
    double t_star = 0.0;  // always pi/2
};

/// Weighted n-cube (n = k+l+m) transferring |0...0> onto the normal-form
/// superposition of the subcube 1^k 0^l *^m at time pi/2.
SubcubeTransfer hypercube_subcube_transfer(int k, int l, int m);

struct HalfJoinWeights {
    double mu = 0.0, eta = 0.0, kappa = 0.0, tau = 0.0, rho = 0.0, eps = 0.0;
};

inline constexpr std::uint64_t kDefaultProbeSeed = 3;

/// Seeded draw: mu, kappa, tau uniform on [-3, 3), eta uniform on [-3, 3)
/// excluding 0, rho and eps uniform on (0, 3].
std::vector<HalfJoinWeights> sample_halfjoin_weights(std::size_t count,
                                                     std::uint64_t seed);

struct ProbeSample {
    HalfJoinWeights weights;
    double max_fidelity = 0.0;
    double argmax_time = 0.0;
    std::size_t evaluations = 0;
};

struct ProbeReport {
    std::vector<ProbeSample> samples;
    double max_fidelity = 0.0;
    std::size_t argmax_sample = 0;
    double argmax_time = 0.0;
};

/// Sweeps the closed-form apex fidelity of every sampled half-join over
/// the grid t_j = j * t_max / steps, j = 0..steps-1, and reports the
/// per-sample and global maxima. Evidence gathering only: a maximum below
/// 1 - 1e-6 is the expected outcome, not a contract.
ProbeReport halfjoin_no_pst_probe(const WeightedGraph& base,
                                  const std::vector<HalfJoinWeights>& samples,
                                  double t_max, std::size_t steps);

}  // namespace qwalk

#endif
