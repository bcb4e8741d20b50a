#include "qwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qwalk {

namespace {

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be positive");
    if (n > kMaxOrder)
        throw std::invalid_argument("graph: vertex count exceeds dense-storage cap " +
                                    std::to_string(kMaxOrder));
}

void set_sym(Eigen::MatrixXd& w, int i, int j, double value) {
    w(i, j) = value;
    w(j, i) = value;
}

}  // namespace

WeightedGraph WeightedGraph::zero(int n) {
    check_order(n);
    return WeightedGraph(Eigen::MatrixXd::Zero(n, n));
}

WeightedGraph WeightedGraph::build(int n, const std::vector<WeightEntry>& entries) {
    check_order(n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            throw std::invalid_argument("build: vertex index out of range");
        if (!std::isfinite(e.w))
            throw std::invalid_argument("build: weight must be finite");
        auto key = std::minmax(e.i, e.j);
        if (!seen.insert(key).second)
            throw std::invalid_argument("build: duplicate entry (" +
                                        std::to_string(e.i) + ", " +
                                        std::to_string(e.j) + ")");
        set_sym(w, e.i, e.j, e.w);
    }
    return WeightedGraph(std::move(w));
}

WeightedGraph WeightedGraph::from_matrix(const Eigen::MatrixXd& w) {
    if (w.rows() != w.cols())
        throw std::invalid_argument("graph: weight table must be square");
    check_order(static_cast<int>(w.rows()));
    const int n = static_cast<int>(w.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(w(i, j)))
                throw std::invalid_argument("graph: weight must be finite");
            if (w(i, j) != w(j, i))
                throw std::invalid_argument("graph: weight table must be symmetric");
        }
    return WeightedGraph(w);
}

double WeightedGraph::weight(int i, int j) const {
    if (i < 0 || i >= order() || j < 0 || j >= order())
        throw std::invalid_argument("graph: vertex index out of range");
    return weights_(i, j);
}

bool WeightedGraph::has_zero_diagonal() const {
    for (int i = 0; i < order(); ++i)
        if (weights_(i, i) != 0.0) return false;
    return true;
}

bool WeightedGraph::is_plain() const {
    if (!has_zero_diagonal()) return false;
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j) {
            const double w = weights_(i, j);
            if (w != 0.0 && w != 1.0) return false;
        }
    return true;
}

std::vector<WeightEntry> WeightedGraph::canonical_entries() const {
    std::vector<WeightEntry> out;
    for (int i = 0; i < order(); ++i)
        for (int j = i; j < order(); ++j)
            if (weights_(i, j) != 0.0) out.push_back({i, j, weights_(i, j)});
    return out;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.order() == b.order() && a.weights_ == b.weights_;
}

WeightedGraph complete_graph(int n) {
    check_order(n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Ones(n, n);
    w.diagonal().setZero();
    return WeightedGraph::from_matrix(w);
}

WeightedGraph empty_graph(int n) { return WeightedGraph::zero(n); }

WeightedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    check_order(n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) set_sym(w, i, (i + 1) % n, 1.0);
    return WeightedGraph::from_matrix(w);
}

WeightedGraph path_graph(int n) {
    check_order(n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) set_sym(w, i, i + 1, 1.0);
    return WeightedGraph::from_matrix(w);
}

WeightedGraph hypercube_graph(int dim) {
    if (dim < 1) throw std::invalid_argument("hypercube: dimension must be positive");
    if (dim >= 31 || (1 << dim) > kMaxOrder)
        throw std::invalid_argument("hypercube: dimension too large for dense storage");
    const int n = 1 << dim;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b) set_sym(w, v, v ^ (1 << b), 1.0);
    return WeightedGraph::from_matrix(w);
}

WeightedGraph hamming_graph(int q, int n) {
    if (q < 2) throw std::invalid_argument("hamming: alphabet size must be at least 2");
    if (n < 1) throw std::invalid_argument("hamming: dimension must be positive");
    double size = 1.0;
    for (int i = 0; i < n; ++i) size *= q;
    if (size > kMaxOrder)
        throw std::invalid_argument("hamming: graph too large for dense storage");
    const int order = static_cast<int>(size);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(order, order);
    // Words differ in exactly one digit iff their indices differ by
    // d * q^pos for some digit change d at position pos.
    for (int v = 0; v < order; ++v) {
        int place = 1;
        for (int pos = 0; pos < n; ++pos) {
            const int digit = (v / place) % q;
            for (int d = 0; d < q; ++d)
                if (d != digit) set_sym(w, v, v + (d - digit) * place, 1.0);
            place *= q;
        }
    }
    return WeightedGraph::from_matrix(w);
}

WeightedGraph uniform_weighting(const WeightedGraph& g, double loop_weight,
                                double edge_weight) {
    if (!g.has_zero_diagonal())
        throw std::invalid_argument("uniform_weighting: input graph must be loopless");
    if (!std::isfinite(loop_weight) || !std::isfinite(edge_weight))
        throw std::invalid_argument("uniform_weighting: weights must be finite");
    const int n = g.order();
    Eigen::MatrixXd w(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = loop_weight;
        for (int j = i + 1; j < n; ++j) {
            const double v = edge_weight * g.weights()(i, j);
            w(i, j) = v;
            w(j, i) = v;
        }
    }
    return WeightedGraph::from_matrix(w);
}

WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h, double rho) {
    if (!std::isfinite(rho)) throw std::invalid_argument("join: cross weight must be finite");
    const int n1 = g.order(), n2 = h.order();
    check_order(n1 + n2);
    Eigen::MatrixXd w(n1 + n2, n1 + n2);
    w.topLeftCorner(n1, n1) = g.weights();
    w.bottomRightCorner(n2, n2) = h.weights();
    w.topRightCorner(n1, n2).setConstant(rho);
    w.bottomLeftCorner(n2, n1).setConstant(rho);
    return WeightedGraph::from_matrix(w);
}

WeightedGraph cartesian(const WeightedGraph& g, const WeightedGraph& h) {
    const int n1 = g.order(), n2 = h.order();
    if (static_cast<long long>(n1) * n2 > kMaxOrder)
        throw std::invalid_argument("cartesian: product too large for dense storage");
    const int n = n1 * n2;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
            const int v = a * n2 + b;
            // I (x) W_H block: same g-vertex, edges within h.
            for (int b2 = 0; b2 < n2; ++b2) w(v, a * n2 + b2) += h.weights()(b, b2);
            // W_G (x) I block: same h-vertex, edges within g.
            for (int a2 = 0; a2 < n1; ++a2) w(v, a2 * n2 + b) += g.weights()(a, a2);
        }
    return WeightedGraph::from_matrix(w);
}

WeightedGraph double_cone(int b, double mu, double eta, const WeightedGraph& g) {
    if (b != 0 && b != 1)
        throw std::invalid_argument("double_cone: connectivity flag must be 0 or 1");
    Eigen::MatrixXd apex(2, 2);
    apex << mu, b * eta, b * eta, mu;
    return join(WeightedGraph::from_matrix(apex), g, 1.0);
}

WeightedGraph half_join(double mu, double eta, double kappa, double tau,
                        double rho, double eps, const WeightedGraph& g) {
    if (!g.is_plain())
        throw std::invalid_argument("half_join: base graph must be plain (0/1 weights, no loops)");
    if (!regularity(g).has_value())
        throw std::invalid_argument("half_join: base graph must be regular");
    for (double v : {mu, eta, kappa, tau, rho, eps})
        if (!std::isfinite(v)) throw std::invalid_argument("half_join: weights must be finite");
    const int n = g.order();
    check_order(2 + 2 * n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 + 2 * n, 2 + 2 * n);
    w(0, 0) = mu;
    w(1, 1) = mu;
    set_sym(w, 0, 1, eta);
    Eigen::MatrixXd block = tau * g.weights();
    block.diagonal().setConstant(kappa);
    w.block(2, 2, n, n) = block;
    w.block(2 + n, 2 + n, n, n) = block;
    w.block(2, 2 + n, n, n).setConstant(rho);
    w.block(2 + n, 2, n, n).setConstant(rho);
    for (int v = 0; v < n; ++v) {
        set_sym(w, 0, 2 + v, eps);
        set_sym(w, 1, 2 + n + v, eps);
    }
    return WeightedGraph::from_matrix(w);
}

WeightedGraph path_hypercubic(int n) {
    if (n < 2) throw std::invalid_argument("path_hypercubic: need at least 2 vertices");
    check_order(n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j < n; ++j)
        set_sym(w, j - 1, j, std::sqrt(static_cast<double>(j) * (n - j)));
    return WeightedGraph::from_matrix(w);
}

WeightedGraph subcube_hypercube(int k, int l, int m) {
    if (k < 0 || l < 0 || m < 0)
        throw std::invalid_argument("subcube_hypercube: block sizes must be nonnegative");
    const int dim = k + l + m;
    if (dim < 1) throw std::invalid_argument("subcube_hypercube: dimension must be positive");
    if (dim >= 31 || (1 << dim) > kMaxOrder)
        throw std::invalid_argument("subcube_hypercube: dimension too large for dense storage");
    const int n = 1 << dim;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        for (int pos = 0; pos < dim; ++pos) {
            // Coordinate pos counts from the most significant bit.
            const double weight = pos < k ? 1.0 : (pos < k + l ? 0.0 : 0.5);
            if (weight != 0.0) set_sym(w, v, v ^ (1 << (dim - 1 - pos)), weight);
        }
    }
    return WeightedGraph::from_matrix(w);
}

WeightedGraph scale_weights(const WeightedGraph& g, double factor) {
    if (!std::isfinite(factor))
        throw std::invalid_argument("scale_weights: factor must be finite");
    const int n = g.order();
    Eigen::MatrixXd w(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = factor * g.weights()(i, i);
        for (int j = i + 1; j < n; ++j) {
            const double v = factor * g.weights()(i, j);
            w(i, j) = v;
            w(j, i) = v;
        }
    }
    return WeightedGraph::from_matrix(w);
}

WeightedGraph relabel(const WeightedGraph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation length must match order");
    std::vector<bool> hit(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("relabel: not a permutation");
        hit[v] = true;
    }
    Eigen::MatrixXd w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = g.weights()(perm[i], perm[j]);
    return WeightedGraph::from_matrix(w);
}

std::optional<double> regularity(const WeightedGraph& g) {
    const int n = g.order();
    if (g.is_plain()) {
        int degree = 0;
        for (int j = 0; j < n; ++j)
            if (g.weights()(0, j) != 0.0) ++degree;
        for (int i = 1; i < n; ++i) {
            int d = 0;
            for (int j = 0; j < n; ++j)
                if (g.weights()(i, j) != 0.0) ++d;
            if (d != degree) return std::nullopt;
        }
        return static_cast<double>(degree);
    }
    // Weighted case: common off-diagonal row sum, compared with a scale-aware
    // slack since the sums accumulate rounding.
    const double tol = 1e-12 * std::max(1.0, g.max_abs_weight() * n);
    double degree = 0.0;
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) sum += g.weights()(i, j);
        if (i == 0)
            degree = sum;
        else if (std::abs(sum - degree) > tol)
            return std::nullopt;
    }
    return degree;
}

SubcubeSpec SubcubeSpec::parse(const std::string& text) {
    std::string pattern;
    pattern.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        // U+22C6 (star operator) is the three-byte sequence e2 8b 86.
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x8b &&
            static_cast<unsigned char>(text[i + 2]) == 0x86) {
            pattern.push_back('*');
            i += 3;
            continue;
        }
        const char c = text[i];
        if (c != '0' && c != '1' && c != '*')
            throw std::invalid_argument("subcube pattern: characters must be 0, 1 or *");
        pattern.push_back(c);
        ++i;
    }
    if (pattern.empty()) throw std::invalid_argument("subcube pattern: empty");
    return SubcubeSpec(std::move(pattern));
}

bool SubcubeSpec::is_canonical() const {
    // 1-block, then 0-block, then *-block; any block may be empty.
    std::size_t i = 0;
    while (i < pattern_.size() && pattern_[i] == '1') ++i;
    while (i < pattern_.size() && pattern_[i] == '0') ++i;
    while (i < pattern_.size() && pattern_[i] == '*') ++i;
    return i == pattern_.size();
}

void SubcubeSpec::require_canonical() const {
    if (!is_canonical())
        throw std::invalid_argument("subcube pattern: not in canonical block form 1..1 0..0 *..*");
}

int SubcubeSpec::ones() const {
    require_canonical();
    return static_cast<int>(std::count(pattern_.begin(), pattern_.end(), '1'));
}

int SubcubeSpec::zeros() const {
    require_canonical();
    return static_cast<int>(std::count(pattern_.begin(), pattern_.end(), '0'));
}

int SubcubeSpec::stars() const {
    require_canonical();
    return static_cast<int>(std::count(pattern_.begin(), pattern_.end(), '*'));
}

}  // namespace qwalk
