#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dvote/bd_chain.hpp"
#include "dvote/configuration.hpp"
#include "dvote/protocol.hpp"

namespace dvote {

// ---------------------------------------------------------------------------
// Cycle run structure and the sqrt potential
// ---------------------------------------------------------------------------

// Maximal same-opinion arcs of a cycle configuration, in cyclic order.
struct RunDecomposition {
    std::vector<int> lengths;  // sum = n; first run starts at the lowest-index
                               // vertex that begins a run
    int first_start = 0;       // vertex where lengths[0] begins

    int runs() const { return static_cast<int>(lengths.size()); }
    int singletons() const;
    // kappa = 2k - s
    int discordant_vertices() const { return 2 * runs() - singletons(); }
};

// Requires a cycle graph and a non-consensus configuration.
RunDecomposition run_decomposition(const Configuration& c);

// psi = sum_i sqrt(l_i); zero iff no runs.
double potential(const RunDecomposition& d);
double potential(const Configuration& c);  // 0 at consensus

// ---------------------------------------------------------------------------
// One-step drift of the potential under push/pull
// ---------------------------------------------------------------------------

enum class DriftCase { A, B, C };  // A: no singleton endpoint, B: one, C: both

struct EdgeDrift {
    int edge;          // edge index in the graph
    int u, v;          // endpoints; v is the singleton in case B
    int len_u, len_v;  // run lengths at the endpoints
    DriftCase kind;
    double delta_uv;   // exact expected psi change attributed to this edge
};

struct DriftReport {
    double delta = 0.0;           // exact E[psi(X_{t+1}) - psi(X_t)]
    double delta_marginal = 0.0;  // same quantity via step_distribution
    int k = 0;                    // discordant edges
    int s = 0;                    // singletons
    int kappa = 0;                // discordant vertices
    std::vector<EdgeDrift> edges;
};

// Enumerates the exact one-step distribution of the push or pull process on a
// cycle configuration. Per-edge contributions use the singleton-halving
// weights, so delta == (1/kappa) * sum of delta_uv.
DriftReport potential_drift(const Configuration& c, Protocol p);

// Exhaustive scan over every non-consensus configuration of C_n, checking the
// per-edge case bounds and the aggregate drift bound. Margins are
// (bound - value), so every margin must be >= 0.
struct DriftScanResult {
    int n = 0;
    Protocol protocol = Protocol::push;
    std::uint64_t configs = 0;
    std::uint64_t edges_checked = 0;
    std::uint64_t violations = 0;
    double worst_edge_margin = 0.0;
    double worst_aggregate_margin = 0.0;
    double worst_potential_margin = 0.0;  // min over configs of sqrt(kn) - psi
};
DriftScanResult drift_scan(int n, Protocol p);

// Per-edge constants of the case analysis: delta_uv <= -c * (lu^-3/2 + lv^-3/2).
double drift_case_constant(Protocol p, DriftCase kind);
// Aggregate constant: delta <= -(1/agg) * (k/n)^(3/2).
double drift_aggregate_divisor(Protocol p);  // 40 for push, 80 for pull

// Margins of the two auxiliary inequalities (nonnegative when they hold):
//   sqrt(l+1) + sqrt(l-1) <= 2 sqrt(l) - l^(-3/2)/4
double sqrt_concavity_margin(double l);
//   sqrt(l1) + sqrt(l2) + 1 >= sqrt(l1+l2+1) + (3 - sqrt(3))
double merge_separation_margin(double l1, double l2);

// ---------------------------------------------------------------------------
// The greedy linear program and its dual certificate
// ---------------------------------------------------------------------------

// max c.x subject to sum_{j<=r} x_j <= b_r, x >= 0, with 0 < b_1 < ... < b_nu
// and c_1 > ... > c_nu > 0. The greedy primal is x_1 = b_1, x_j = b_j-b_{j-1};
// the dual certificate is y_nu = c_nu, y_j = c_j - c_{j+1}.
struct LpSolution {
    std::vector<BigRat> x, y;
    BigRat primal, dual;
};
LpSolution lp_bound(const std::vector<BigRat>& b, const std::vector<BigRat>& c);

// Exact sums of rational multiples of square roots of integers; enough to
// carry the cycle LP instance, whose data are rational multiples of surds.
class SurdSum {
public:
    SurdSum() = default;
    static SurdSum of_rational(const BigRat& q);
    static SurdSum sqrt_of(long long m, const BigRat& coeff = 1);  // coeff * sqrt(m)

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum operator+(const SurdSum& o) const;
    SurdSum operator-(const SurdSum& o) const;
    SurdSum operator*(const SurdSum& o) const;
    bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

    double value() const;

private:
    // surd index (squarefree) -> rational coefficient; no zero coefficients
    std::map<long long, BigRat> terms_;
};

// The cycle instance: b_r = sqrt(2 r n), c_r = 10 sqrt(2) n^(3/2) / r^(3/2),
// for r in 1..r0.
struct CycleLpInstance {
    std::vector<SurdSum> b, c;
};
CycleLpInstance cycle_lp_instance(int n, int r0);

struct CycleLpSolution {
    SurdSum primal, dual;  // exactly equal
    double tstar;          // numeric value of the optimum
};
CycleLpSolution cycle_lp_bound(int n, int r0);

// ---------------------------------------------------------------------------
// Star pseudo-state quantities
// ---------------------------------------------------------------------------

// Exit probabilities of pseudo-state S(r) on the n-vertex star for the push
// process, entering at centre colour X: probability of leaving upward (via the
// all-red side, P_X(R,r) ) and downward ( P_X(B,r) ). P_R(R,r) = r/n,
// P_B(R,r) = (r-1)/n. Requires 1 <= r <= n-1.
struct StarExitProbabilities {
    double to_red;   // P_X(R, r)
    double to_blue;  // P_X(B, r)
};
StarExitProbabilities star_exit_probability(int r, int n, Opinion entering);

// Conditional expected loop counts mu_XY(r) inside S(r), and
// rho = r b (r-1) (b+1) / n^2 with b = n - r. Requires 2 <= r <= n-2.
struct StarLoopExpectations {
    double rho;
    double rr, br, rb, bb;
};
StarLoopExpectations star_loop_expectations(int r, int n);

// Probability that a pull run starting at (r, n-r, R) reaches (x, n-x, R):
// (n-x+1)/(n-r+1). Requires r <= x <= n.
double star_pull_run_probability(int r, int x, int n);

// ---------------------------------------------------------------------------
// Double-star quantities
// ---------------------------------------------------------------------------

// Pull-run probabilities rho(b, k | R) with b blue leaves and both centres
// red: k = 0 gives the probability the next step recolours a centre; k >= 1
// gives the probability of a run of length at least k. Requires 0 <= k <= b.
double double_star_run_probability(int b, int k);

// Push up-step probability bound: exact value
// (r+2)(n-r+2) / ((n+3)(n-r+1)) and the simplification (r+3)/(n+3), valid for
// r <= (n-1)/2; the simplification is <= 1/5 when r <= (n-12)/5.
struct DoubleStarUpBound {
    double exact;
    double simplified;
};
DoubleStarUpBound double_star_up_bound(int r, int n);

// ---------------------------------------------------------------------------
// Graph parameters
// ---------------------------------------------------------------------------

inline constexpr int kCutEnumerationMaxVertices = 20;

// Conductance: min over proper cuts of E(S:S^c) / min(d(S), d(S^c)).
// Exhaustive over subsets; requires n <= kCutEnumerationMaxVertices.
double conductance(const Graph& g);
BigRat conductance_exact(const Graph& g);

// The parameter governing the ordinary push-voting bound E T = O(1/Psi):
//   (2 C(G) / (n d_max)) * min_S (1/min(J(S), J(S^c)))
//                                * sum_{vw in E(S:S^c)} 1/(d(v) d(w)).
// For regular graphs equals (2/n^2) * conductance.
double push_bound_parameter(const Graph& g);
BigRat push_bound_parameter_exact(const Graph& g);

// Degree irregularity nu = sum_v d(v)^2 / (d_ave^2 n); 1 for regular graphs,
// Theta(n) for stars.
double degree_irregularity(const Graph& g);
BigRat degree_irregularity_exact(const Graph& g);

}  // namespace dvote
