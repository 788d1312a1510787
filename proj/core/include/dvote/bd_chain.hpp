#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dvote {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Birth-and-death chain on {0..N} given by up-probabilities p_0..p_N with
// q_i = 1 - p_i. The reflecting variant has p_0 = 1 and p_N = 0; hitting-time
// formulas additionally require p_i > 0 for i < N and q_i > 0 for i >= 1.
struct ChainSpec {
    int top = 0;              // N
    std::vector<double> up;   // size N+1, up[N] = 0

    void validate_reflecting() const;  // throws std::invalid_argument
};

// p_i = 1/2 + i/n + delta/n on the interior, p_0 = 1, p_{n/2} = 0.
// Requires even n >= 4 and delta in {-1, 0, +1}.
ChainSpec push_chain(int n, int delta);
// Interior probabilities reversed: 1/2 - i/n - delta/n.
ChainSpec pull_chain(int n, int delta);
// Exact rational up-probabilities of the same chains.
std::vector<BigRat> push_chain_exact(int n, int delta);
std::vector<BigRat> pull_chain_exact(int n, int delta);

// Unnormalized stationary weights from the balance recurrence
// w_0 = 1, w_{i+1} = w_i p_i / q_{i+1}; satisfies w_i p_i = w_{i+1} q_{i+1}
// across every transition, including the reflecting boundary.
std::vector<double> stationary_weights(const ChainSpec& c);
std::vector<double> stationary_log_weights(const ChainSpec& c);

// Per-step expectations E_{i-1}T_i (index 1..N) and cumulative E_0T_M,
// computed in log space so exponentially large chains do not overflow.
// `step` and `cum` are exp() of the log values and may be +inf.
struct HitProfile {
    std::vector<double> step_log;  // [0] unused
    std::vector<double> cum_log;   // cum_log[0] = -inf (E_0T_0 = 0)
    std::vector<double> step;
    std::vector<double> cum;
};

// Product-formula route: E_iT_{i+1} = 1/p_i + (q_i/p_i) E_{i-1}T_i.
HitProfile hit_profile(const ChainSpec& c);
// Detailed-balance route: E_{i-1}T_i = (sum_{k<i} w_k) / (q_i w_i).
HitProfile hit_profile_by_balance(const ChainSpec& c);
// Exact rational per-step expectations for a rational chain (index 1..N).
std::vector<BigRat> hit_profile_exact(const std::vector<BigRat>& up);

// Probability that a (p, 1-p) walk started at `start` hits `nu` before 0.
double ruin_probability(double p_up, int nu, int start = 1);

// Expected absorption time of a symmetric +-1 walk at barriers {1, n-1}:
// (start-1)(n-1-start).
double symmetric_walk_duration(int n, int start);

// Both sides of the reciprocal-binomial identity
//   sum_{k=0}^{n} 1/C(n,k) = (n+1)/2^n * sum_{i=0}^{n} 2^i/(i+1),
// in exact rationals. The summation range on the left is the full one; it is
// the unique natural range for which the two sides agree.
struct ReciprocalBinomialIdentity {
    BigRat lhs;
    BigRat rhs;
    BigRat difference() const { return lhs - rhs; }
};
ReciprocalBinomialIdentity reciprocal_binomial_identity(int n);

// sum_{k=0}^{N-1} C(n, N+k) with N = n/2: the final-step hitting time of the
// complete-graph pull chain computed with interior binomial weights. Equals
// (2^n - 2 + C(n, N)) / 2.
BigInt kn_pull_final_step_weight_sum(int n);

// sum_{i=1}^{N} 1/C(n, N+i): the reciprocal-weight sum in the O(2^n) upper
// bound for the complete-graph pull chain.
BigRat kn_pull_reciprocal_weight_sum(int n);

BigInt binomial(int n, int k);

}  // namespace dvote
