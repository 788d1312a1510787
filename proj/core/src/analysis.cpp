#include "dvote/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dvote/coloring.hpp"

namespace dvote {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

void require_cycle(const Configuration& c) {
    if (!c.graph().family() || *c.graph().family() != Family::cycle)
        throw std::invalid_argument("operation requires a cycle graph");
}

}  // namespace

// ---------------------------------------------------------------------------
// Runs and the potential
// ---------------------------------------------------------------------------

int RunDecomposition::singletons() const {
    return static_cast<int>(std::count(lengths.begin(), lengths.end(), 1));
}

RunDecomposition run_decomposition(const Configuration& c) {
    require_cycle(c);
    if (c.at_consensus())
        throw std::domain_error("run_decomposition: consensus configuration has no runs");
    int n = c.vertex_count();
    // First vertex that starts a run: opinion differs from its predecessor.
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (c.opinion(v) != c.opinion((v + n - 1) % n)) {
            start = v;
            break;
        }
    }
    RunDecomposition d;
    d.first_start = start;
    int pos = start;
    int covered = 0;
    while (covered < n) {
        int len = 1;
        while (c.opinion((pos + len) % n) == c.opinion(pos) && len < n) ++len;
        d.lengths.push_back(len);
        pos = (pos + len) % n;
        covered += len;
    }
    return d;
}

double potential(const RunDecomposition& d) {
    double s = 0.0;
    for (int l : d.lengths) s += std::sqrt(static_cast<double>(l));
    return s;
}

double potential(const Configuration& c) {
    require_cycle(c);
    if (c.at_consensus()) return 0.0;
    return potential(run_decomposition(c));
}

// ---------------------------------------------------------------------------
// Drift
// ---------------------------------------------------------------------------

double drift_case_constant(Protocol p, DriftCase kind) {
    if (p == Protocol::push) {
        switch (kind) {
            case DriftCase::A: return 0.25;
            case DriftCase::B: return 0.5;
            case DriftCase::C: return 0.2;
        }
    } else if (p == Protocol::pull) {
        switch (kind) {
            case DriftCase::A: return 0.25;
            case DriftCase::B: return 0.1;
            case DriftCase::C: return 0.5;
        }
    }
    throw std::invalid_argument("drift cases apply to push and pull only");
}

double drift_aggregate_divisor(Protocol p) {
    if (p == Protocol::push) return 40.0;
    if (p == Protocol::pull) return 80.0;
    throw std::invalid_argument("drift cases apply to push and pull only");
}

DriftReport potential_drift(const Configuration& c, Protocol p) {
    require_cycle(c);
    if (p == Protocol::oblivious)
        throw std::invalid_argument("potential_drift applies to push and pull");
    if (c.at_consensus()) throw std::domain_error("potential_drift: consensus configuration");

    const Graph& g = c.graph();
    int n = c.vertex_count();
    RunDecomposition d = run_decomposition(c);

    // Run length of the run containing each vertex.
    std::vector<int> run_len(n, 0);
    {
        int pos = d.first_start;
        for (int len : d.lengths) {
            for (int i = 0; i < len; ++i) run_len[(pos + i) % n] = len;
            pos = (pos + len) % n;
        }
    }

    double psi0 = potential(d);
    Configuration scratch = c;
    auto psi_after_flip = [&](int w) {
        scratch.flip(w);
        double val = scratch.at_consensus() ? 0.0 : potential(run_decomposition(scratch));
        scratch.flip(w);
        return val;
    };

    // delta_v = E[psi change | v active].
    std::vector<double> delta_v(n, 0.0);
    for (int v : c.discordant_vertices()) {
        double acc = 0.0;
        Opinion ov = c.opinion(v);
        for (int u : g.neighbors(v)) {
            if (c.opinion(u) == ov) continue;
            int flipped = (p == Protocol::push) ? u : v;
            acc += psi_after_flip(flipped) - psi0;
        }
        delta_v[v] = acc / c.discordant_degree(v);
    }

    DriftReport report;
    report.k = d.runs();
    report.s = d.singletons();
    report.kappa = d.discordant_vertices();

    double total = 0.0;
    for (int v : c.discordant_vertices()) total += delta_v[v];
    report.delta = total / report.kappa;

    // Same quantity through the marginal flip distribution.
    std::vector<double> dist = step_distribution(c, p);
    double marg = 0.0;
    for (int w = 0; w < n; ++w)
        if (dist[w] > 0.0) marg += dist[w] * (psi_after_flip(w) - psi0);
    report.delta_marginal = marg;

    // Per-edge attribution with singleton halving.
    for (int e : c.discordant_edges()) {
        auto [u, v] = g.edge(e);
        bool su = run_len[u] == 1;
        bool sv = run_len[v] == 1;
        EdgeDrift ed;
        ed.edge = e;
        if (su && !sv) std::swap(u, v), std::swap(su, sv);  // singleton goes to v
        ed.u = u;
        ed.v = v;
        ed.len_u = run_len[u];
        ed.len_v = run_len[v];
        ed.kind = (su && sv) ? DriftCase::C : (sv ? DriftCase::B : DriftCase::A);
        double wu = su ? 0.5 : 1.0;
        double wv = sv ? 0.5 : 1.0;
        ed.delta_uv = wu * delta_v[u] + wv * delta_v[v];
        report.edges.push_back(ed);
    }
    return report;
}

DriftScanResult drift_scan(int n, Protocol p) {
    if (n < 3 || n > 20) throw std::invalid_argument("drift_scan: n must be in [3, 20]");
    Graph g = Graph::cycle(n);
    DriftScanResult res;
    res.n = n;
    res.protocol = p;
    res.worst_edge_margin = std::numeric_limits<double>::infinity();
    res.worst_aggregate_margin = std::numeric_limits<double>::infinity();
    res.worst_potential_margin = std::numeric_limits<double>::infinity();

    std::vector<Opinion> bits(n);
    const std::uint64_t space = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask + 1 < space; ++mask) {
        for (int v = 0; v < n; ++v) bits[v] = static_cast<Opinion>((mask >> v) & 1);
        Configuration c(g, bits);
        DriftReport rep = potential_drift(c, p);
        ++res.configs;

        double psi0 = potential(c);
        double pot_margin = std::sqrt(static_cast<double>(rep.k) * n) - psi0;
        res.worst_potential_margin = std::min(res.worst_potential_margin, pot_margin);
        if (pot_margin < -1e-12) ++res.violations;

        for (const EdgeDrift& ed : rep.edges) {
            double curv = std::pow(static_cast<double>(ed.len_u), -1.5) +
                          std::pow(static_cast<double>(ed.len_v), -1.5);
            double bound = -drift_case_constant(p, ed.kind) * curv;
            double margin = bound - ed.delta_uv;
            res.worst_edge_margin = std::min(res.worst_edge_margin, margin);
            ++res.edges_checked;
            if (margin < -1e-12) ++res.violations;
        }

        double agg_bound = -std::pow(static_cast<double>(rep.k) / n, 1.5) /
                           drift_aggregate_divisor(p);
        double agg_margin = agg_bound - rep.delta;
        res.worst_aggregate_margin = std::min(res.worst_aggregate_margin, agg_margin);
        if (agg_margin < -1e-12) ++res.violations;
    }
    return res;
}

double sqrt_concavity_margin(double l) {
    if (l < 1.0) throw std::invalid_argument("sqrt_concavity_margin: l >= 1 required");
    HighFloat x(l);
    HighFloat margin = 2 * sqrt(x) - HighFloat(0.25) / (x * sqrt(x)) - sqrt(x + 1) - sqrt(x - 1);
    return margin.convert_to<double>();
}

double merge_separation_margin(double l1, double l2) {
    if (l1 < 1.0 || l2 < 1.0)
        throw std::invalid_argument("merge_separation_margin: l1, l2 >= 1 required");
    HighFloat a(l1), b(l2);
    HighFloat margin = sqrt(a) + sqrt(b) + 1 - sqrt(a + b + 1) - (3 - sqrt(HighFloat(3)));
    return margin.convert_to<double>();
}

// ---------------------------------------------------------------------------
// Greedy LP with dual certificate
// ---------------------------------------------------------------------------

LpSolution lp_bound(const std::vector<BigRat>& b, const std::vector<BigRat>& c) {
    std::size_t nu = b.size();
    if (nu == 0 || c.size() != nu)
        throw std::invalid_argument("lp_bound: b and c must be nonempty and equally sized");
    if (!(b[0] > 0) || !(c[nu - 1] > 0))
        throw std::invalid_argument("lp_bound: bounds and costs must be positive");
    // Non-strict monotonicity suffices for the greedy primal and the dual
    // certificate; the strict case is the one the usage needs.
    for (std::size_t i = 1; i < nu; ++i) {
        if (b[i] < b[i - 1]) throw std::invalid_argument("lp_bound: b must be increasing");
        if (c[i] > c[i - 1]) throw std::invalid_argument("lp_bound: c must be decreasing");
    }
    LpSolution s;
    s.x.resize(nu);
    s.y.resize(nu);
    s.x[0] = b[0];
    for (std::size_t j = 1; j < nu; ++j) s.x[j] = b[j] - b[j - 1];
    s.y[nu - 1] = c[nu - 1];
    for (std::size_t j = 0; j + 1 < nu; ++j) s.y[j] = c[j] - c[j + 1];
    s.primal = 0;
    s.dual = 0;
    for (std::size_t j = 0; j < nu; ++j) {
        s.primal += c[j] * s.x[j];
        s.dual += b[j] * s.y[j];
    }
    return s;
}

// ---------------------------------------------------------------------------
// SurdSum
// ---------------------------------------------------------------------------

namespace {

// m = square * f with f squarefree; returns (sqrt(square), f).
std::pair<long long, long long> reduce_surd(long long m) {
    long long root = 1, free_part = 1;
    for (long long d = 2; d * d <= m; ++d) {
        while (m % (d * d) == 0) {
            m /= d * d;
            root *= d;
        }
        if (m % d == 0) {
            m /= d;
            free_part *= d;
        }
    }
    return {root, free_part * m};
}

}  // namespace

SurdSum SurdSum::of_rational(const BigRat& q) {
    SurdSum s;
    if (q != 0) s.terms_[1] = q;
    return s;
}

SurdSum SurdSum::sqrt_of(long long m, const BigRat& coeff) {
    if (m < 0) throw std::invalid_argument("SurdSum: negative radicand");
    SurdSum s;
    if (m == 0 || coeff == 0) return s;
    auto [root, f] = reduce_surd(m);
    BigRat c = coeff * root;
    if (c != 0) s.terms_[f] = c;
    return s;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [f, c] : o.terms_) {
        auto it = terms_.find(f);
        if (it == terms_.end()) {
            terms_.emplace(f, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [f, c] : o.terms_) {
        auto it = terms_.find(f);
        if (it == terms_.end()) {
            terms_.emplace(f, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SurdSum SurdSum::operator+(const SurdSum& o) const {
    SurdSum s = *this;
    s += o;
    return s;
}

SurdSum SurdSum::operator-(const SurdSum& o) const {
    SurdSum s = *this;
    s -= o;
    return s;
}

SurdSum SurdSum::operator*(const SurdSum& o) const {
    SurdSum s;
    for (const auto& [f1, c1] : terms_) {
        for (const auto& [f2, c2] : o.terms_) {
            // both squarefree: sqrt(f1) sqrt(f2) = g sqrt((f1/g)(f2/g))
            long long g = std::gcd(f1, f2);
            long long f = (f1 / g) * (f2 / g);
            BigRat c = c1 * c2 * g;
            auto it = s.terms_.find(f);
            if (it == s.terms_.end()) {
                if (c != 0) s.terms_.emplace(f, c);
            } else {
                it->second += c;
                if (it->second == 0) s.terms_.erase(it);
            }
        }
    }
    return s;
}

double SurdSum::value() const {
    double v = 0.0;
    for (const auto& [f, c] : terms_)
        v += c.convert_to<double>() * std::sqrt(static_cast<double>(f));
    return v;
}

CycleLpInstance cycle_lp_instance(int n, int r0) {
    if (n < 2 || r0 < 1 || r0 > n / 2)
        throw std::invalid_argument("cycle_lp_instance: need n >= 2 and 1 <= r0 <= n/2");
    CycleLpInstance inst;
    inst.b.reserve(r0);
    inst.c.reserve(r0);
    for (int r = 1; r <= r0; ++r) {
        inst.b.push_back(SurdSum::sqrt_of(2LL * r * n));
        // 10 sqrt(2) n^(3/2) / r^(3/2) = (10 n / r^2) sqrt(2 n r)
        inst.c.push_back(SurdSum::sqrt_of(2LL * n * r, BigRat(10 * n, r * r)));
    }
    return inst;
}

CycleLpSolution cycle_lp_bound(int n, int r0) {
    CycleLpInstance inst = cycle_lp_instance(n, r0);
    int nu = static_cast<int>(inst.b.size());
    std::vector<SurdSum> x(nu), y(nu);
    x[0] = inst.b[0];
    for (int j = 1; j < nu; ++j) x[j] = inst.b[j] - inst.b[j - 1];
    y[nu - 1] = inst.c[nu - 1];
    for (int j = 0; j + 1 < nu; ++j) y[j] = inst.c[j] - inst.c[j + 1];

    CycleLpSolution sol;
    for (int j = 0; j < nu; ++j) {
        sol.primal += inst.c[j] * x[j];
        sol.dual += inst.b[j] * y[j];
    }
    sol.tstar = sol.primal.value();
    return sol;
}

// ---------------------------------------------------------------------------
// Star pseudo-state quantities
// ---------------------------------------------------------------------------

StarExitProbabilities star_exit_probability(int r, int n, Opinion entering) {
    if (n < 2 || r < 1 || r > n - 1)
        throw std::invalid_argument("star_exit_probability: need 1 <= r <= n-1");
    double dn = n;
    if (entering == kRed) return {r / dn, (n - r) / dn};
    return {(r - 1) / dn, (n - r + 1) / dn};
}

StarLoopExpectations star_loop_expectations(int r, int n) {
    if (r < 2 || r > n - 2)
        throw std::invalid_argument("star_loop_expectations: need 2 <= r <= n-2");
    double b = n - r;
    StarLoopExpectations out;
    out.rho = static_cast<double>(r) * b * (r - 1) * (b + 1) / (static_cast<double>(n) * n);
    out.rr = out.rho * n / (r * (b + 1));
    out.br = out.rho * n / (r * (b + 1));
    out.rb = out.rho * (n / (n - r)) * (b / (r * (b + 1)));
    out.bb = out.rho * (n / (n - r + 1.0)) * (1.0 / r);
    return out;
}

double star_pull_run_probability(int r, int x, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("star_pull_run_probability: bad r");
    if (x < r || x > n)
        throw std::invalid_argument("star_pull_run_probability: need r <= x <= n");
    return static_cast<double>(n - x + 1) / static_cast<double>(n - r + 1);
}

// ---------------------------------------------------------------------------
// Double-star quantities
// ---------------------------------------------------------------------------

double double_star_run_probability(int b, int k) {
    if (b < 0 || k < 0 || k > b)
        throw std::invalid_argument("double_star_run_probability: need 0 <= k <= b");
    double db = b;
    if (k == 0) return 2.0 / (db + 2);
    if (k == 1) return db / (db + 2);
    return (db - k + 2) * (db - k + 1) / ((db + 2) * (db + 1));
}

DoubleStarUpBound double_star_up_bound(int r, int n) {
    if (r < 0 || r > n) throw std::invalid_argument("double_star_up_bound: need 0 <= r <= n");
    DoubleStarUpBound out;
    out.exact = static_cast<double>(r + 2) * (n - r + 2) /
                (static_cast<double>(n + 3) * (n - r + 1));
    out.simplified = static_cast<double>(r + 3) / (n + 3);
    return out;
}

// ---------------------------------------------------------------------------
// Graph parameters
// ---------------------------------------------------------------------------

namespace {

template <typename T>
T conductance_impl(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCutEnumerationMaxVertices)
        throw std::invalid_argument("conductance: graph too large for exhaustive cuts");
    if (n < 2) throw std::invalid_argument("conductance: need n >= 2");

    long long total_deg = 2LL * g.edge_count();
    std::vector<char> in_s(n, 0);
    long long cut = 0, deg_s = 0;

    bool have = false;
    T best{};
    // Gray-code walk over subsets of {0..n-2}; vertex n-1 stays outside, which
    // covers each complementary pair once.
    std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < subsets; ++i) {
        int v = __builtin_ctzll(i);
        // toggle v
        if (in_s[v]) {
            in_s[v] = 0;
            deg_s -= g.degree(v);
            for (int u : g.neighbors(v)) cut += in_s[u] ? 1 : -1;
        } else {
            in_s[v] = 1;
            deg_s += g.degree(v);
            for (int u : g.neighbors(v)) cut += in_s[u] ? -1 : 1;
        }
        long long small = std::min(deg_s, total_deg - deg_s);
        T ratio;
        if (cut == 0) {
            ratio = T(0);
        } else {
            ratio = T(cut) / T(small);
        }
        if (!have || ratio < best) {
            best = ratio;
            have = true;
        }
    }
    return best;
}

// J(S) = sum_{v in S} 1/d(v); cut_sum = sum over cut edges of 1/(d(v)d(w)).
template <typename T>
T push_bound_parameter_impl(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCutEnumerationMaxVertices)
        throw std::invalid_argument("push bound parameter: graph too large for exhaustive cuts");
    if (!g.connected()) throw std::invalid_argument("push bound parameter: graph must be connected");

    std::vector<T> inv_deg(n);
    T j_total{};
    for (int v = 0; v < n; ++v) {
        inv_deg[v] = T(1) / T(g.degree(v));
        j_total += inv_deg[v];
    }
    T capacity = T(1) / j_total;  // C(G)

    std::vector<char> in_s(n, 0);
    T j_s{};
    T cut_sum{};
    bool have = false;
    T best{};
    std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < subsets; ++i) {
        int v = __builtin_ctzll(i);
        if (in_s[v]) {
            in_s[v] = 0;
            j_s -= inv_deg[v];
            for (int u : g.neighbors(v)) {
                T w = inv_deg[v] * inv_deg[u];
                cut_sum += in_s[u] ? w : -w;
            }
        } else {
            in_s[v] = 1;
            j_s += inv_deg[v];
            for (int u : g.neighbors(v)) {
                T w = inv_deg[v] * inv_deg[u];
                cut_sum += in_s[u] ? -w : w;
            }
        }
        T j_min = std::min(j_s, T(j_total - j_s));
        T value = cut_sum / j_min;
        if (!have || value < best) {
            best = value;
            have = true;
        }
    }
    return T(2) * capacity / (T(n) * T(g.max_degree())) * best;
}

template <typename T>
T degree_irregularity_impl(const Graph& g) {
    int n = g.vertex_count();
    if (!g.connected()) throw std::invalid_argument("degree irregularity: graph must be connected");
    T sum_sq{};
    for (int v = 0; v < n; ++v) sum_sq += T(g.degree(v)) * T(g.degree(v));
    T avg = T(2) * T(g.edge_count()) / T(n);
    return sum_sq / (avg * avg * T(n));
}

}  // namespace

double conductance(const Graph& g) { return conductance_impl<double>(g); }
BigRat conductance_exact(const Graph& g) { return conductance_impl<BigRat>(g); }

double push_bound_parameter(const Graph& g) { return push_bound_parameter_impl<double>(g); }
BigRat push_bound_parameter_exact(const Graph& g) { return push_bound_parameter_impl<BigRat>(g); }

double degree_irregularity(const Graph& g) { return degree_irregularity_impl<double>(g); }
BigRat degree_irregularity_exact(const Graph& g) { return degree_irregularity_impl<BigRat>(g); }

}  // namespace dvote
