#ifndef QWALK_GRAPH_HPP
#define QWALK_GRAPH_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

// Dense storage only; instances beyond this order are rejected.
inline constexpr int kMaxOrder = 4096;

struct WeightEntry {
    int i = 0;
    int j = 0;
    double w = 0.0;
};

/// Symmetric real weight table over n vertices. Entry (i,j) is the edge
/// weight, entry (i,i) the self-loop weight; 0 means the edge/loop is
/// absent. Symmetry is exact by construction (both triangles hold the
/// same double), and instances are immutable once built.
class WeightedGraph {
public:
    static WeightedGraph zero(int n);
    static WeightedGraph build(int n, const std::vector<WeightEntry>& entries);
    static WeightedGraph from_matrix(const Eigen::MatrixXd& w);

    int order() const { return static_cast<int>(weights_.rows()); }
    double weight(int i, int j) const;
    const Eigen::MatrixXd& weights() const { return weights_; }
    double max_abs_weight() const { return weights_.cwiseAbs().maxCoeff(); }

    bool has_zero_diagonal() const;
    // Zero diagonal and every off-diagonal weight exactly 0 or 1.
    bool is_plain() const;

    // Nonzero entries with i <= j, sorted lexicographically by (i, j).
    std::vector<WeightEntry> canonical_entries() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    explicit WeightedGraph(Eigen::MatrixXd w) : weights_(std::move(w)) {}
    Eigen::MatrixXd weights_;
};

// Standard unweighted families (unit edge weights, no loops).
WeightedGraph complete_graph(int n);
WeightedGraph empty_graph(int n);
WeightedGraph cycle_graph(int n);
WeightedGraph path_graph(int n);
// Vertices are dim-bit strings; vertex index = binary value.
WeightedGraph hypercube_graph(int dim);
// Vertices are words in {0..q-1}^n; index = base-q value, leftmost digit
// most significant. Two words are adjacent iff they differ in one digit.
WeightedGraph hamming_graph(int q, int n);

/// loop*I + edge*A for a loopless graph with adjacency table A.
WeightedGraph uniform_weighting(const WeightedGraph& g, double loop_weight,
                                double edge_weight);

/// Weighted join: block matrix [[W_G, rho*J], [rho*J, W_H]]. Vertices of g
/// keep their indices, vertices of h are offset by g.order().
WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h, double rho);

/// Cartesian product: I (x) W_H + W_G (x) I. Vertex (a, b) maps to index
/// a*h.order() + b. Self-loop weights add on the diagonal.
WeightedGraph cartesian(const WeightedGraph& g, const WeightedGraph& h);

/// Double cone: join of the two-vertex apex graph (connected when b = 1,
/// edgeless when b = 0, loop weight mu, apex edge weight eta) with g,
/// cross weight 1. Apexes are vertices 0 and 1.
WeightedGraph double_cone(int b, double mu, double eta, const WeightedGraph& g);

/// Half-join of a weighted two-vertex graph with two rho-joined copies of
/// the plain regular graph g: apexes 0 and 1 carry loops mu and the mutual
/// edge eta; each copy carries kappa*I + tau*A_G; the copies are joined
/// with weight rho; apex 0 connects to every vertex of copy one and apex 1
/// to every vertex of copy two, with weight eps.
WeightedGraph half_join(double mu, double eta, double kappa, double tau,
                        double rho, double eps, const WeightedGraph& g);

/// Path 0-1-...-(n-1) with edge (j-1, j) weighted sqrt(j*(n-j)).
WeightedGraph path_hypercubic(int n);

/// Weighted n-cube with n = k+l+m: weight 1 on edges of the first k
/// coordinates, no edges on the middle l coordinates, weight 1/2 on edges
/// of the last m coordinates. Coordinate 0 is the most significant bit.
WeightedGraph subcube_hypercube(int k, int l, int m);

WeightedGraph scale_weights(const WeightedGraph& g, double factor);

/// Relabeled copy: new vertex i is old vertex perm[i]; perm must be a
/// permutation of 0..n-1.
WeightedGraph relabel(const WeightedGraph& g, const std::vector<int>& perm);

/// Common degree of g, if any. Plain graphs report their integer degree;
/// weighted graphs report the common off-diagonal row sum when all rows
/// agree. Returns nullopt otherwise.
std::optional<double> regularity(const WeightedGraph& g);

/// Subcube pattern over {1, 0, *} ('*' also accepted as U+22C6). The
/// canonical block form is 1...1 0...0 *...*; block sizes (k, l, m) are
/// only defined for canonical patterns.
class SubcubeSpec {
public:
    static SubcubeSpec parse(const std::string& text);

    int length() const { return static_cast<int>(pattern_.size()); }
    const std::string& pattern() const { return pattern_; }
    bool is_canonical() const;
    int ones() const;
    int zeros() const;
    int stars() const;

private:
    explicit SubcubeSpec(std::string pattern) : pattern_(std::move(pattern)) {}
    void require_canonical() const;
    std::string pattern_;
};

}  // namespace qwalk

#endif
