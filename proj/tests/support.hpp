#ifndef QWALK_TESTS_SUPPORT_HPP
#define QWALK_TESTS_SUPPORT_HPP

#include "qwalk/graph.hpp"
#include "qwalk/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace qwalk::testing {

// |a - b| <= tol * max(1, |a|, |b|); the relative form used by the
// identity suites, safe near zero.
inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double abs_err(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b);
}

// Random symmetric weight table with entries in [-limit, limit]; loops
// included with probability 1/2.
inline WeightedGraph random_weighted_graph(DeterministicRng& rng, int n,
                                           double limit = 2.0) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (rng.unit() < 0.5) w(i, i) = rng.uniform(-limit, limit);
        for (int j = i + 1; j < n; ++j) {
            const double v = rng.unit() < 0.75 ? rng.uniform(-limit, limit) : 0.0;
            w(i, j) = v;
            w(j, i) = v;
        }
    }
    return WeightedGraph::from_matrix(w);
}

}  // namespace qwalk::testing

#endif
