#ifndef QWALK_WALK_HPP
#define QWALK_WALK_HPP

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qwalk {

/// Unit-norm complex amplitude vector over vertices.
class QuantumState {
public:
    static QuantumState from_amplitudes(Eigen::VectorXcd amplitudes);

    int dimension() const { return static_cast<int>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    double squared_norm() const { return amplitudes_.squaredNorm(); }

private:
    explicit QuantumState(Eigen::VectorXcd amplitudes)
        : amplitudes_(std::move(amplitudes)) {}
    Eigen::VectorXcd amplitudes_;
};

QuantumState basis_state(int n, int i);

/// Normal-form state on the 2^len(spec) cube: the fixed 1/0 coordinates
/// select the subcube, and each matching vertex carries amplitude
/// (-i)^{|free bits|} / sqrt(2^m). Requires a canonical pattern.
QuantumState subcube_normal_state(const SubcubeSpec& spec);

QuantumState evolve(const Spectrum& s, const QuantumState& psi, double t);

/// <target| exp(-i t W) |source>.
std::complex<double> transfer_amplitude(const Spectrum& s, const QuantumState& source,
                                        const QuantumState& target, double t);

/// Squared modulus of the transfer amplitude.
double fidelity(const Spectrum& s, const QuantumState& source,
                const QuantumState& target, double t);

struct ScanRow {
    double t = 0.0;
    std::complex<double> amplitude;
    double fidelity = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    double best_time = 0.0;
    double best_fidelity = 0.0;
};

/// Fidelity on the uniform grid t_j = j * t_max / steps, j = 0..steps-1.
/// best_time is the argmax, smallest t on ties.
ScanResult scan(const Spectrum& s, const QuantumState& source,
                const QuantumState& target, double t_max, std::size_t steps);

/// Descriptor of a state for certificates: a vertex index or a subcube
/// pattern.
struct StateRef {
    enum class Kind { vertex, pattern };
    Kind kind = Kind::vertex;
    int vertex = 0;
    std::string pattern;

    static StateRef of_vertex(int v) { return {Kind::vertex, v, {}}; }
    static StateRef of_pattern(std::string p) { return {Kind::pattern, 0, std::move(p)}; }
};

struct PSTCertificate {
    StateRef source;
    StateRef target;
    double time = 0.0;
    double fidelity = 0.0;
    double tolerance = 0.0;
    bool pass = false;  // fidelity >= 1 - tolerance
};

PSTCertificate certify(const Spectrum& s, const QuantumState& source,
                       const QuantumState& target, double time, double tolerance,
                       StateRef source_ref, StateRef target_ref);

/// Vertex-to-vertex convenience form.
PSTCertificate certify(const Spectrum& s, int a, int b, double time, double tolerance);

}  // namespace qwalk

#endif
