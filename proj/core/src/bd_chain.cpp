#include "dvote/bd_chain.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dvote {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

void check_even(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("chain requires even n >= 4");
    if (n / 2 + 1 > (1 << 26)) throw std::invalid_argument("chain too large");
}

void check_delta(int delta) {
    if (delta < -1 || delta > 1) throw std::invalid_argument("delta must be in {-1,0,+1}");
}

}  // namespace

void ChainSpec::validate_reflecting() const {
    if (top < 1 || static_cast<int>(up.size()) != top + 1)
        throw std::invalid_argument("chain: up-probability array must have N+1 entries");
    if (up[0] != 1.0) throw std::invalid_argument("chain: reflecting variant needs p_0 = 1");
    if (up[top] != 0.0) throw std::invalid_argument("chain: p_N must be 0");
    for (int i = 0; i <= top; ++i)
        if (up[i] < 0.0 || up[i] > 1.0)
            throw std::invalid_argument("chain: probabilities must lie in [0,1]");
    for (int i = 1; i < top; ++i) {
        if (up[i] <= 0.0)
            throw std::invalid_argument("chain: zero interior up-probability");
        if (up[i] >= 1.0)
            throw std::invalid_argument("chain: zero interior down-probability");
    }
}

ChainSpec push_chain(int n, int delta) {
    check_even(n);
    check_delta(delta);
    int N = n / 2;
    ChainSpec c;
    c.top = N;
    c.up.assign(N + 1, 0.0);
    c.up[0] = 1.0;
    for (int i = 1; i < N; ++i)
        c.up[i] = 0.5 + static_cast<double>(i) / n + static_cast<double>(delta) / n;
    return c;
}

ChainSpec pull_chain(int n, int delta) {
    check_even(n);
    check_delta(delta);
    int N = n / 2;
    ChainSpec c;
    c.top = N;
    c.up.assign(N + 1, 0.0);
    c.up[0] = 1.0;
    for (int i = 1; i < N; ++i)
        c.up[i] = 0.5 - static_cast<double>(i) / n - static_cast<double>(delta) / n;
    return c;
}

std::vector<BigRat> push_chain_exact(int n, int delta) {
    check_even(n);
    check_delta(delta);
    int N = n / 2;
    std::vector<BigRat> up(N + 1, BigRat(0));
    up[0] = 1;
    for (int i = 1; i < N; ++i) up[i] = BigRat(n + 2 * i + 2 * delta, 2 * n);
    return up;
}

std::vector<BigRat> pull_chain_exact(int n, int delta) {
    check_even(n);
    check_delta(delta);
    int N = n / 2;
    std::vector<BigRat> up(N + 1, BigRat(0));
    up[0] = 1;
    for (int i = 1; i < N; ++i) up[i] = BigRat(n - 2 * i - 2 * delta, 2 * n);
    return up;
}

std::vector<double> stationary_log_weights(const ChainSpec& c) {
    c.validate_reflecting();
    std::vector<double> lw(c.top + 1, 0.0);
    for (int i = 0; i < c.top; ++i) {
        double q_next = 1.0 - c.up[i + 1];
        lw[i + 1] = lw[i] + std::log(c.up[i]) - std::log(q_next);
    }
    return lw;
}

std::vector<double> stationary_weights(const ChainSpec& c) {
    std::vector<double> lw = stationary_log_weights(c);
    std::vector<double> w(lw.size());
    for (std::size_t i = 0; i < lw.size(); ++i) w[i] = std::exp(lw[i]);
    return w;
}

HitProfile hit_profile(const ChainSpec& c) {
    c.validate_reflecting();
    int N = c.top;
    HitProfile h;
    h.step_log.assign(N + 1, kNegInf);
    h.cum_log.assign(N + 1, kNegInf);
    // E_0T_1 = 1/p_0; then E_iT_{i+1} = 1/p_i + (q_i/p_i) E_{i-1}T_i.
    double prev = -std::log(c.up[0]);
    h.step_log[1] = prev;
    for (int i = 1; i < N; ++i) {
        double lp = std::log(c.up[i]);
        double lq = std::log1p(-c.up[i]);
        prev = log_add(-lp, lq - lp + prev);
        h.step_log[i + 1] = prev;
    }
    double cum = kNegInf;
    for (int i = 1; i <= N; ++i) {
        cum = log_add(cum, h.step_log[i]);
        h.cum_log[i] = cum;
    }
    h.step.resize(N + 1);
    h.cum.resize(N + 1);
    h.step[0] = 0.0;
    h.cum[0] = 0.0;
    for (int i = 1; i <= N; ++i) {
        h.step[i] = std::exp(h.step_log[i]);
        h.cum[i] = std::exp(h.cum_log[i]);
    }
    return h;
}

HitProfile hit_profile_by_balance(const ChainSpec& c) {
    std::vector<double> lw = stationary_log_weights(c);
    int N = c.top;
    HitProfile h;
    h.step_log.assign(N + 1, kNegInf);
    h.cum_log.assign(N + 1, kNegInf);
    double prefix = kNegInf;  // log sum_{k<i} w_k
    for (int i = 1; i <= N; ++i) {
        prefix = log_add(prefix, lw[i - 1]);
        double lq = std::log1p(-c.up[i]);
        h.step_log[i] = prefix - lq - lw[i];
    }
    double cum = kNegInf;
    for (int i = 1; i <= N; ++i) {
        cum = log_add(cum, h.step_log[i]);
        h.cum_log[i] = cum;
    }
    h.step.resize(N + 1);
    h.cum.resize(N + 1);
    h.step[0] = 0.0;
    h.cum[0] = 0.0;
    for (int i = 1; i <= N; ++i) {
        h.step[i] = std::exp(h.step_log[i]);
        h.cum[i] = std::exp(h.cum_log[i]);
    }
    return h;
}

std::vector<BigRat> hit_profile_exact(const std::vector<BigRat>& up) {
    int N = static_cast<int>(up.size()) - 1;
    if (N < 1) throw std::invalid_argument("hit_profile_exact: chain too small");
    if (up[0] != 1 || up[N] != 0)
        throw std::invalid_argument("hit_profile_exact: need p_0 = 1, p_N = 0");
    for (int i = 1; i < N; ++i)
        if (up[i] <= 0 || up[i] >= 1)
            throw std::invalid_argument("hit_profile_exact: interior probabilities must be in (0,1)");
    std::vector<BigRat> step(N + 1, BigRat(0));
    step[1] = 1;  // 1 / p_0
    for (int i = 1; i < N; ++i) {
        BigRat q = BigRat(1) - up[i];
        step[i + 1] = (BigRat(1) + q * step[i]) / up[i];
    }
    return step;
}

double ruin_probability(double p_up, int nu, int start) {
    if (!(p_up > 0.0 && p_up < 1.0))
        throw std::invalid_argument("ruin_probability: p_up must lie in (0,1)");
    if (nu < 2) throw std::invalid_argument("ruin_probability: nu >= 2 required");
    if (start < 1 || start >= nu)
        throw std::invalid_argument("ruin_probability: start must be in [1, nu)");
    double q = 1.0 - p_up;
    if (p_up == 0.5) return static_cast<double>(start) / nu;
    double rho = q / p_up;
    return (std::pow(rho, start) - 1.0) / (std::pow(rho, nu) - 1.0);
}

double symmetric_walk_duration(int n, int start) {
    if (start < 1 || start > n - 1)
        throw std::invalid_argument("symmetric_walk_duration: start must be in [1, n-1]");
    return static_cast<double>(start - 1) * static_cast<double>(n - 1 - start);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

ReciprocalBinomialIdentity reciprocal_binomial_identity(int n) {
    if (n < 1) throw std::invalid_argument("reciprocal_binomial_identity: n >= 1 required");
    ReciprocalBinomialIdentity out;
    BigRat lhs = 0;
    for (int k = 0; k <= n; ++k) lhs += BigRat(1) / BigRat(binomial(n, k));
    BigRat rhs = 0;
    BigInt pw = 1;
    for (int i = 0; i <= n; ++i) {
        rhs += BigRat(pw, i + 1);
        pw *= 2;
    }
    rhs *= BigRat(n + 1, BigInt(1) << n);
    out.lhs = lhs;
    out.rhs = rhs;
    return out;
}

BigInt kn_pull_final_step_weight_sum(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("kn_pull_final_step_weight_sum: even n >= 4 required");
    int N = n / 2;
    BigInt s = 0;
    for (int k = 0; k < N; ++k) s += binomial(n, N + k);
    return s;
}

BigRat kn_pull_reciprocal_weight_sum(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("kn_pull_reciprocal_weight_sum: even n >= 4 required");
    int N = n / 2;
    BigRat s = 0;
    for (int i = 1; i <= N; ++i) s += BigRat(1) / BigRat(binomial(n, N + i));
    return s;
}

}  // namespace dvote
