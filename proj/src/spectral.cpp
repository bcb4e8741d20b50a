#include "qwalk/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qwalk {

namespace {

double offdiagonal_norm(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) sum += a(p, q) * a(p, q);
    return std::sqrt(2.0 * sum);
}

// One Jacobi rotation zeroing a(p, q), accumulated into v.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, int p, int q) {
    const int n = static_cast<int>(a.rows());
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;  // tan of a tiny angle; the exact formula would overflow
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        a(r, p) = c * arp - s * arq;
        a(p, r) = a(r, p);
        a(r, q) = s * arp + c * arq;
        a(q, r) = a(r, q);
    }
    for (int r = 0; r < n; ++r) {
        const double vrp = v(r, p);
        const double vrq = v(r, q);
        v(r, p) = c * vrp - s * vrq;
        v(r, q) = s * vrp + c * vrq;
    }
}

}  // namespace

Spectrum eigendecompose(const WeightedGraph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = g.weights();
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double threshold = 1e-13 * a.norm();

    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        if (offdiagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kMaxSweeps) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, v, p, q);
    }
    if (!converged)
        throw std::runtime_error("eigendecompose: Jacobi sweeps did not converge");

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&a](int i, int j) { return a(i, i) < a(j, j); });

    Eigen::VectorXd values(n);
    Eigen::MatrixXd vectors(n, n);
    for (int j = 0; j < n; ++j) {
        values(j) = a(idx[j], idx[j]);
        vectors.col(j) = v.col(idx[j]);
        int lead = 0;
        for (int r = 1; r < n; ++r)
            if (std::abs(vectors(r, j)) > std::abs(vectors(lead, j))) lead = r;
        if (vectors(lead, j) < 0.0) vectors.col(j) = -vectors.col(j);
    }
    return Spectrum(std::move(values), std::move(vectors), g.max_abs_weight());
}

std::complex<double> amplitude(const Spectrum& s, int a, int b, double t) {
    const int n = s.size();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("amplitude: vertex index out of range");
    if (!std::isfinite(t)) throw std::invalid_argument("amplitude: time must be finite");
    std::complex<double> sum = 0.0;
    for (int k = 0; k < n; ++k)
        sum += s.eigenvectors()(b, k) * s.eigenvectors()(a, k) *
               std::polar(1.0, -t * s.eigenvalues()(k));
    return sum;
}

JoinSpectrumParts join_spectrum_parts(int n1, int n2, double kappa1, double kappa2) {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("join_spectrum_parts: part sizes must be positive");
    JoinSpectrumParts p;
    p.n1 = n1;
    p.n2 = n2;
    p.kappa1 = kappa1;
    p.kappa2 = kappa2;
    p.delta = kappa1 - kappa2;
    p.delta_hat = kappa1 + kappa2;
    p.big_delta = std::sqrt(p.delta * p.delta + 4.0 * n1 * n2);
    // The root whose numerator cancels is rebuilt from the exact product
    // alpha_plus * alpha_minus = -n2/n1, keeping both accurate for any delta.
    if (p.delta >= 0.0) {
        p.alpha_plus = (p.delta + p.big_delta) / (2.0 * n1);
        p.alpha_minus = -2.0 * n2 / (p.delta + p.big_delta);
    } else {
        p.alpha_minus = (p.delta - p.big_delta) / (2.0 * n1);
        p.alpha_plus = -2.0 * n2 / (p.delta - p.big_delta);
    }
    p.l_plus = n1 * p.alpha_plus * p.alpha_plus + n2;
    p.l_minus = n1 * p.alpha_minus * p.alpha_minus + n2;
    p.lambda_plus = n1 * p.alpha_plus + kappa2;
    p.lambda_minus = n1 * p.alpha_minus + kappa2;
    return p;
}

JoinFactor describe_join_factor(const WeightedGraph& base, double loop_weight,
                                double edge_weight) {
    if (!base.is_plain())
        throw std::invalid_argument("join factor: base graph must be plain");
    const auto degree = regularity(base);
    if (!degree)
        throw std::invalid_argument("join factor: base graph must be regular");
    return JoinFactor{eigendecompose(base), loop_weight, edge_weight, *degree,
                      base.order()};
}

std::complex<double> join_amplitude_closed_form(const JoinFactor& f1, double kappa2,
                                                int n2, int a, int b, double t) {
    if (n2 < 1) throw std::invalid_argument("join closed form: n2 must be positive");
    if (a < 0 || a >= f1.order || b < 0 || b >= f1.order)
        throw std::invalid_argument("join closed form: vertex index out of range");

    const std::complex<double> base =
        std::polar(1.0, -f1.loop_weight * t) *
        amplitude(f1.base, a, b, f1.edge_weight * t);

    const double kappa1 = f1.weighted_degree();
    const double delta = kappa1 - kappa2;
    const double big_delta =
        std::sqrt(delta * delta + 4.0 * static_cast<double>(f1.order) * n2);
    const std::complex<double> bracket =
        std::polar(1.0, t * delta / 2.0) *
            std::complex<double>(std::cos(big_delta * t / 2.0),
                                 -(delta / big_delta) * std::sin(big_delta * t / 2.0)) -
        1.0;
    return base + std::polar(1.0 / f1.order, -t * kappa1) * bracket;
}

HalfJoinParams half_join_params(double mu, double eta, double kappa, double tau,
                                double rho, double eps, int n, double k) {
    if (n < 1) throw std::invalid_argument("half_join_params: base order must be positive");
    if (eps == 0.0)
        throw std::invalid_argument("half_join_params: connecting weight eps must be nonzero");
    HalfJoinParams p;
    p.mu = mu;
    p.eta = eta;
    p.kappa = kappa;
    p.tau = tau;
    p.rho = rho;
    p.eps = eps;
    p.n = n;
    p.k = k;
    const double core = kappa + tau * k;
    p.delta_alpha = (mu + eta) - (core + rho * n);
    p.delta_beta = (mu - eta) - (core - rho * n);
    p.big_delta_alpha = std::sqrt(p.delta_alpha * p.delta_alpha + 4.0 * eps * eps * n);
    p.big_delta_beta = std::sqrt(p.delta_beta * p.delta_beta + 4.0 * eps * eps * n);
    return p;
}

std::complex<double> half_join_amplitude_closed_form(const HalfJoinParams& p, double t) {
    if (p.eps == 0.0)
        throw std::invalid_argument("half-join closed form: eps must be nonzero");
    const auto branch = [t](double delta, double big_delta) {
        return std::polar(1.0, -delta * t / 2.0) *
               std::complex<double>(std::cos(big_delta * t / 2.0),
                                    -(delta / big_delta) * std::sin(big_delta * t / 2.0));
    };
    const double core = p.kappa + p.tau * p.k;
    const std::complex<double> alpha =
        std::polar(1.0, -p.rho * p.n * t) * branch(p.delta_alpha, p.big_delta_alpha);
    const std::complex<double> beta =
        std::polar(1.0, p.rho * p.n * t) * branch(p.delta_beta, p.big_delta_beta);
    return std::polar(0.5, -core * t) * (alpha - beta);
}

std::complex<double> hypercube_amplitude_closed_form(int dim, std::uint64_t a,
                                                     std::uint64_t b, double t) {
    if (dim < 1 || dim >= 63)
        throw std::invalid_argument("hypercube closed form: bad dimension");
    const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
    if (a > mask || b > mask)
        throw std::invalid_argument("hypercube closed form: vertex index out of range");

    constexpr double kQuarterPi = std::numbers::pi / 4.0;
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    static const std::complex<double> kMinusIPow[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};

    if (t == kQuarterPi) {
        const int distance = std::popcount(a ^ b);
        return kMinusIPow[distance % 4] / std::sqrt(std::pow(2.0, dim));
    }
    if (t == kHalfPi) return (a ^ b) == mask ? 1.0 : 0.0;
    throw std::invalid_argument("hypercube closed form: time must be pi/4 or pi/2");
}

}  // namespace qwalk
