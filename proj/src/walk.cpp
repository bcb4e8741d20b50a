#include "qwalk/walk.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qwalk {

QuantumState QuantumState::from_amplitudes(Eigen::VectorXcd amplitudes) {
    if (amplitudes.size() < 1)
        throw std::invalid_argument("state: dimension must be positive");
    const double norm2 = amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("state: amplitudes must have unit norm");
    return QuantumState(std::move(amplitudes));
}

QuantumState basis_state(int n, int i) {
    if (n < 1) throw std::invalid_argument("basis_state: dimension must be positive");
    if (i < 0 || i >= n) throw std::invalid_argument("basis_state: vertex out of range");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n);
    amps(i) = 1.0;
    return QuantumState::from_amplitudes(std::move(amps));
}

QuantumState subcube_normal_state(const SubcubeSpec& spec) {
    const int k = spec.ones();  // rejects non-canonical patterns
    const int l = spec.zeros();
    const int m = spec.stars();
    const int dim = k + l + m;
    if (dim >= 31 || (1 << dim) > kMaxOrder)
        throw std::invalid_argument("subcube_normal_state: pattern too long for dense storage");
    const int n = 1 << dim;

    // Matching vertices share the fixed prefix 1^k 0^l; the m free (least
    // significant) bits enumerate the subcube.
    int prefix = 0;
    for (int pos = 0; pos < k; ++pos) prefix |= 1 << (dim - 1 - pos);
    static const std::complex<double> kMinusIPow[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    const double norm = 1.0 / std::sqrt(std::pow(2.0, m));

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n);
    for (int free = 0; free < (1 << m); ++free)
        amps(prefix | free) = kMinusIPow[std::popcount(static_cast<unsigned>(free)) % 4] * norm;
    return QuantumState::from_amplitudes(std::move(amps));
}

QuantumState evolve(const Spectrum& s, const QuantumState& psi, double t) {
    if (s.size() != psi.dimension())
        throw std::invalid_argument("evolve: dimension mismatch");
    if (!std::isfinite(t)) throw std::invalid_argument("evolve: time must be finite");
    Eigen::VectorXcd coeffs = s.eigenvectors().transpose() * psi.amplitudes();
    for (int j = 0; j < s.size(); ++j)
        coeffs(j) *= std::polar(1.0, -t * s.eigenvalues()(j));
    return QuantumState::from_amplitudes(s.eigenvectors() * coeffs);
}

std::complex<double> transfer_amplitude(const Spectrum& s, const QuantumState& source,
                                        const QuantumState& target, double t) {
    if (s.size() != source.dimension() || s.size() != target.dimension())
        throw std::invalid_argument("transfer_amplitude: dimension mismatch");
    if (!std::isfinite(t))
        throw std::invalid_argument("transfer_amplitude: time must be finite");
    std::complex<double> sum = 0.0;
    for (int j = 0; j < s.size(); ++j) {
        const std::complex<double> into =
            s.eigenvectors().col(j).cast<std::complex<double>>().dot(target.amplitudes());
        const std::complex<double> from =
            s.eigenvectors().col(j).cast<std::complex<double>>().dot(source.amplitudes());
        // <target|u_j><u_j|source>, with real u_j: conj on the target side only.
        sum += std::conj(into) * from * std::polar(1.0, -t * s.eigenvalues()(j));
    }
    return sum;
}

double fidelity(const Spectrum& s, const QuantumState& source,
                const QuantumState& target, double t) {
    return std::norm(transfer_amplitude(s, source, target, t));
}

ScanResult scan(const Spectrum& s, const QuantumState& source,
                const QuantumState& target, double t_max, std::size_t steps) {
    if (!(t_max > 0.0)) throw std::invalid_argument("scan: t_max must be positive");
    if (steps < 2) throw std::invalid_argument("scan: need at least 2 steps");

    // Precompute the per-eigenvalue overlap products once; each row is then
    // one pass over the spectrum.
    const int n = s.size();
    if (n != source.dimension() || n != target.dimension())
        throw std::invalid_argument("scan: dimension mismatch");
    Eigen::VectorXcd weights(n);
    for (int j = 0; j < n; ++j) {
        const auto col = s.eigenvectors().col(j).cast<std::complex<double>>();
        weights(j) = std::conj(col.dot(target.amplitudes())) * col.dot(source.amplitudes());
    }

    ScanResult result;
    result.rows.reserve(steps);
    result.best_fidelity = -1.0;
    for (std::size_t step = 0; step < steps; ++step) {
        const double t = static_cast<double>(step) * t_max / static_cast<double>(steps);
        std::complex<double> amp = 0.0;
        for (int j = 0; j < n; ++j)
            amp += weights(j) * std::polar(1.0, -t * s.eigenvalues()(j));
        const double f = std::norm(amp);
        result.rows.push_back({t, amp, f});
        if (f > result.best_fidelity) {
            result.best_fidelity = f;
            result.best_time = t;
        }
    }
    return result;
}

PSTCertificate certify(const Spectrum& s, const QuantumState& source,
                       const QuantumState& target, double time, double tolerance,
                       StateRef source_ref, StateRef target_ref) {
    if (!(tolerance > 0.0 && tolerance < 1.0))
        throw std::invalid_argument("certify: tolerance must lie in (0, 1)");
    PSTCertificate cert;
    cert.source = std::move(source_ref);
    cert.target = std::move(target_ref);
    cert.time = time;
    cert.tolerance = tolerance;
    cert.fidelity = fidelity(s, source, target, time);
    cert.pass = cert.fidelity >= 1.0 - tolerance;
    return cert;
}

PSTCertificate certify(const Spectrum& s, int a, int b, double time, double tolerance) {
    return certify(s, basis_state(s.size(), a), basis_state(s.size(), b), time,
                   tolerance, StateRef::of_vertex(a), StateRef::of_vertex(b));
}

}  // namespace qwalk
