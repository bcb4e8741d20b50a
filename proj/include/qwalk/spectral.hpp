#ifndef QWALK_SPECTRAL_HPP
#define QWALK_SPECTRAL_HPP

#include "qwalk/graph.hpp"

#include <complex>
#include <cstdint>

namespace qwalk {

/// Full orthonormal eigensystem of a weight table: eigenvalues ascending,
/// eigenvector j in column j of the real orthogonal table. Immutable;
/// amplitude evaluation on a shared Spectrum is safe from any thread.
class Spectrum {
public:
    int size() const { return static_cast<int>(values_.size()); }
    const Eigen::VectorXd& eigenvalues() const { return values_; }
    const Eigen::MatrixXd& eigenvectors() const { return vectors_; }
    /// Largest |weight| of the decomposed table, for relative tolerances.
    double scale() const { return scale_; }

private:
    friend Spectrum eigendecompose(const WeightedGraph& g);
    Spectrum(Eigen::VectorXd values, Eigen::MatrixXd vectors, double scale)
        : values_(std::move(values)), vectors_(std::move(vectors)), scale_(scale) {}

    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
    double scale_ = 0.0;
};

/// Deterministic cyclic-Jacobi eigendecomposition. Sweeps a fixed (p, q)
/// order until the off-diagonal Frobenius norm drops below 1e-13 times the
/// Frobenius norm of the input (at most 100 sweeps), then sorts eigenpairs
/// ascending and fixes each eigenvector's sign so its largest-magnitude
/// component (lowest index on ties) is positive.
Spectrum eigendecompose(const WeightedGraph& g);

/// <b| exp(-i t W) |a> via the spectral sum.
std::complex<double> amplitude(const Spectrum& s, int a, int b, double t);

/// The derived quantities of the join eigensystem for parts of sizes
/// n1, n2 with weighted degrees kappa1, kappa2.
struct JoinSpectrumParts {
    int n1 = 0;
    int n2 = 0;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double delta = 0.0;         // kappa1 - kappa2
    double delta_hat = 0.0;     // kappa1 + kappa2
    double big_delta = 0.0;     // sqrt(delta^2 + 4 n1 n2)
    double alpha_plus = 0.0;    // (delta + big_delta) / (2 n1)
    double alpha_minus = 0.0;
    double l_plus = 0.0;        // n1 alpha^2 + n2
    double l_minus = 0.0;
    double lambda_plus = 0.0;   // n1 alpha + kappa2
    double lambda_minus = 0.0;
};

JoinSpectrumParts join_spectrum_parts(int n1, int n2, double kappa1, double kappa2);

/// Description of the uniformly weighted regular part G1(mu, eta) of a
/// join, carrying the spectrum of the plain base graph.
struct JoinFactor {
    Spectrum base;
    double loop_weight = 0.0;
    double edge_weight = 1.0;
    double degree = 0.0;
    int order = 0;

    double weighted_degree() const { return loop_weight + edge_weight * degree; }
};

/// Validates that base is plain and regular and pairs it with its spectrum.
JoinFactor describe_join_factor(const WeightedGraph& base, double loop_weight,
                                double edge_weight);

/// Closed-form amplitude <b| exp(-i t A) |a> between vertices a, b of the
/// first part of the join G1(mu1, eta1) + G2, where the second part is
/// regular with weighted degree kappa2 on n2 vertices:
///
///   base term  exp(-i mu1 t) <b| exp(-i eta1 t A_G1) |a>
///   plus       exp(-i kappa1 t)/n1 *
///              { exp(i delta t / 2) [cos(D t/2) - i (delta/D) sin(D t/2)] - 1 }
///
/// with delta = kappa1 - kappa2 and D = sqrt(delta^2 + 4 n1 n2).
std::complex<double> join_amplitude_closed_form(const JoinFactor& f1, double kappa2,
                                                int n2, int a, int b, double t);

/// Parameters of the half-join spectrum. The quadratic roots and their
/// normalizations are exposed for the identity suite; they carry the 1/eps
/// factor that makes xi_plus * xi_minus = -n hold. The root whose
/// numerator would cancel is evaluated through that product, so both stay
/// accurate when |delta| dominates eps.
struct HalfJoinParams {
    double mu = 0.0, eta = 0.0, kappa = 0.0, tau = 0.0, rho = 0.0, eps = 0.0;
    int n = 0;
    double k = 0.0;
    double delta_alpha = 0.0;      // (mu+eta) - (kappa + tau k + rho n)
    double delta_beta = 0.0;       // (mu-eta) - (kappa + tau k - rho n)
    double big_delta_alpha = 0.0;  // sqrt(delta_alpha^2 + 4 eps^2 n)
    double big_delta_beta = 0.0;

    double alpha_plus() const {
        return delta_alpha >= 0.0 ? (delta_alpha + big_delta_alpha) / (2.0 * eps)
                                  : -2.0 * eps * n / (delta_alpha - big_delta_alpha);
    }
    double alpha_minus() const {
        return delta_alpha >= 0.0 ? -2.0 * eps * n / (delta_alpha + big_delta_alpha)
                                  : (delta_alpha - big_delta_alpha) / (2.0 * eps);
    }
    double beta_plus() const {
        return delta_beta >= 0.0 ? (delta_beta + big_delta_beta) / (2.0 * eps)
                                 : -2.0 * eps * n / (delta_beta - big_delta_beta);
    }
    double beta_minus() const {
        return delta_beta >= 0.0 ? -2.0 * eps * n / (delta_beta + big_delta_beta)
                                 : (delta_beta - big_delta_beta) / (2.0 * eps);
    }
    double l_alpha_plus() const { return 2.0 * alpha_plus() * alpha_plus() + 2.0 * n; }
    double l_alpha_minus() const { return 2.0 * alpha_minus() * alpha_minus() + 2.0 * n; }
    double l_beta_plus() const { return 2.0 * beta_plus() * beta_plus() + 2.0 * n; }
    double l_beta_minus() const { return 2.0 * beta_minus() * beta_minus() + 2.0 * n; }
};

/// Requires eps != 0; n is the base order, k its degree.
HalfJoinParams half_join_params(double mu, double eta, double kappa, double tau,
                                double rho, double eps, int n, double k);

/// Exact two-branch apex-to-apex amplitude of the half-join:
///
///   exp(-i (kappa + tau k) t)/2 *
///   [ exp(-i rho n t) exp(-i da t/2) (cos(Da t/2) - i (da/Da) sin(Da t/2))
///   - exp(+i rho n t) exp(-i db t/2) (cos(Db t/2) - i (db/Db) sin(Db t/2)) ]
std::complex<double> half_join_amplitude_closed_form(const HalfJoinParams& p, double t);

/// Known hypercube walk values. At t = pi/4 the amplitude is
/// (-i)^{|a xor b|} / sqrt(2^dim) (exact); at t = pi/2 it is the antipodal
/// indicator [a xor b == 1...1], stated up to the global phase (-i)^dim.
/// Only these two times are supported.
std::complex<double> hypercube_amplitude_closed_form(int dim, std::uint64_t a,
                                                     std::uint64_t b, double t);

}  // namespace qwalk

#endif
