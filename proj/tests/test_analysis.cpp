#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "dvote/analysis.hpp"
#include "dvote/coloring.hpp"
#include "dvote/protocol.hpp"
#include "test_util.hpp"

using namespace dvote;

namespace {

Configuration cycle_config(const Graph& g, std::uint64_t mask) {
    std::vector<Opinion> bits(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        bits[v] = static_cast<Opinion>((mask >> v) & 1);
    return Configuration(g, bits);
}

double curv(double l) { return std::sqrt(l + 1) + std::sqrt(l - 1) - 2 * std::sqrt(l); }

}  // namespace

TEST_CASE("run decomposition of canonical colorings") {
    Graph g18 = Graph::cycle(18);
    RunDecomposition alt = run_decomposition(init_configuration(g18, ColoringSpec::alternating()));
    CHECK(alt.runs() == 18);
    CHECK(alt.singletons() == 18);
    CHECK(alt.discordant_vertices() == 18);
    for (int l : alt.lengths) CHECK(l == 1);

    RunDecomposition arc = run_decomposition(init_configuration(g18, ColoringSpec::half_arc()));
    CHECK(arc.runs() == 2);
    CHECK(arc.lengths == std::vector<int>{9, 9});
    CHECK(arc.singletons() == 0);
    CHECK(arc.discordant_vertices() == 4);

    Graph g6 = Graph::cycle(6);
    std::vector<Opinion> bits(6, kRed);
    bits[2] = kBlue;
    RunDecomposition single = run_decomposition(Configuration(g6, bits));
    CHECK(single.runs() == 2);
    CHECK(single.singletons() == 1);
    CHECK(single.discordant_vertices() == 3);
    std::multiset<int> lens(single.lengths.begin(), single.lengths.end());
    CHECK(lens == std::multiset<int>{1, 5});
}

TEST_CASE("run decomposition preconditions") {
    Graph k4 = Graph::complete(4);
    Configuration c(k4, {kRed, kBlue, kRed, kBlue});
    CHECK_THROWS_AS(run_decomposition(c), std::invalid_argument);
    Graph c5 = Graph::cycle(5);
    Configuration cons = init_configuration(c5, ColoringSpec::first_r_red(5));
    CHECK_THROWS_AS(run_decomposition(cons), std::domain_error);
}

TEST_CASE("run lengths sum to n and k equals |K|") {
    Rng rng(808);
    Graph g = Graph::cycle(13);
    for (int trial = 0; trial < 100; ++trial) {
        Configuration c(g, testutil::random_bits(rng, 13));
        if (c.at_consensus()) continue;
        RunDecomposition d = run_decomposition(c);
        int total = 0;
        for (int l : d.lengths) total += l;
        CHECK(total == 13);
        CHECK(d.runs() == c.discordant_edge_count());
        CHECK(d.discordant_vertices() == c.discordant_vertex_count());
    }
}

TEST_CASE("potential values") {
    Graph g18 = Graph::cycle(18);
    CHECK(potential(init_configuration(g18, ColoringSpec::first_r_red(18))) == 0.0);
    // alternating meets psi = sqrt(kn) with equality
    Configuration alt = init_configuration(g18, ColoringSpec::alternating());
    CHECK(potential(alt) == doctest::Approx(18.0).epsilon(1e-14));
    CHECK(potential(alt) == doctest::Approx(std::sqrt(18.0 * 18.0)).epsilon(1e-14));

    RunDecomposition d;
    d.lengths = {3, 3};
    CHECK(potential(d) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("potential bound psi <= sqrt(kn), exhaustive small and randomized large") {
    for (int n = 3; n <= 10; ++n) {
        Graph g = Graph::cycle(n);
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
            Configuration c = cycle_config(g, mask);
            RunDecomposition d = run_decomposition(c);
            CHECK(potential(d) <= std::sqrt(static_cast<double>(d.runs()) * n) + 1e-12);
        }
    }
    Rng rng(99);
    Graph big = Graph::cycle(10000);
    for (int trial = 0; trial < 5; ++trial) {
        Configuration c(big, testutil::random_bits(rng, 10000));
        RunDecomposition d = run_decomposition(c);
        CHECK(potential(d) <= std::sqrt(static_cast<double>(d.runs()) * 10000.0) + 1e-9);
    }
}

TEST_CASE("drift report: enumeration and marginal routes agree, edges partition delta") {
    Rng rng(606);
    Graph g = Graph::cycle(12);
    for (int trial = 0; trial < 50; ++trial) {
        Configuration c(g, testutil::random_bits(rng, 12));
        if (c.at_consensus()) continue;
        for (Protocol p : {Protocol::push, Protocol::pull}) {
            DriftReport rep = potential_drift(c, p);
            CHECK(rep.delta == doctest::Approx(rep.delta_marginal).epsilon(1e-12));
            double edge_sum = 0.0;
            for (const EdgeDrift& e : rep.edges) edge_sum += e.delta_uv;
            CHECK(edge_sum / rep.kappa == doctest::Approx(rep.delta).epsilon(1e-12));
            CHECK(rep.kappa == 2 * rep.k - rep.s);
        }
    }
}

TEST_CASE("arc configuration: case A drift matches the hand-expanded expression") {
    int n = 14, l = 5;  // runs of length 5 and 9, no singletons
    Graph g = Graph::cycle(n);
    Configuration c = init_configuration(g, {ColoringKind::first_r_red, l, 0, {}});
    DriftReport rep = potential_drift(c, Protocol::push);
    REQUIRE(rep.edges.size() == 2);
    double expect_uv = curv(l) + curv(n - l);
    for (const EdgeDrift& e : rep.edges) {
        CHECK(e.kind == DriftCase::A);
        CHECK(e.delta_uv == doctest::Approx(expect_uv).epsilon(1e-12));
    }
    CHECK(rep.delta == doctest::Approx(2.0 * expect_uv / 4.0).epsilon(1e-12));
    // pull coincides here: no singletons, every discordant vertex has one
    // discordant neighbour
    DriftReport pull_rep = potential_drift(c, Protocol::pull);
    CHECK(pull_rep.delta == doctest::Approx(rep.delta).epsilon(1e-12));
}

TEST_CASE("alternating configuration: all edges are case C with delta_uv = sqrt(3) - 3") {
    Graph g = Graph::cycle(8);
    Configuration c = init_configuration(g, ColoringSpec::alternating());
    for (Protocol p : {Protocol::push, Protocol::pull}) {
        DriftReport rep = potential_drift(c, p);
        for (const EdgeDrift& e : rep.edges) {
            CHECK(e.kind == DriftCase::C);
            CHECK(e.delta_uv == doctest::Approx(std::sqrt(3.0) - 3.0).epsilon(1e-12));
        }
        CHECK(rep.edges.back().delta_uv < -1.25);
    }
}

TEST_CASE("case B appears with the singleton as endpoint v") {
    Graph g = Graph::cycle(9);
    std::vector<Opinion> bits(9, kRed);
    bits[4] = kBlue;  // singleton blue run against an 8-run
    Configuration c(g, bits);
    DriftReport rep = potential_drift(c, Protocol::push);
    for (const EdgeDrift& e : rep.edges) {
        CHECK(e.kind == DriftCase::B);
        CHECK(e.len_v == 1);
        CHECK(e.len_u == 8);
    }
}

TEST_CASE("exhaustive drift scan: no violations up to n = 12") {
    for (int n = 3; n <= 12; ++n) {
        for (Protocol p : {Protocol::push, Protocol::pull}) {
            DriftScanResult res = drift_scan(n, p);
            CHECK(res.violations == 0);
            CHECK(res.configs == (std::uint64_t{1} << n) - 2);
            CHECK(res.worst_edge_margin >= 0.0);
            CHECK(res.worst_aggregate_margin >= 0.0);
            CHECK(res.worst_potential_margin >= -1e-12);
        }
    }
}

TEST_CASE("empirical one-step drift matches the exact drift") {
    Graph g = Graph::cycle(16);
    Configuration base = init_configuration(g, ColoringSpec::random_balanced(5));
    const int samples = 1000000;
    for (Protocol p : {Protocol::push, Protocol::pull}) {
        DriftReport rep = potential_drift(base, p);
        double psi0 = potential(base);
        Rng rng(1234 + static_cast<int>(p));
        double sum = 0.0, sumsq = 0.0;
        Configuration work = base;
        for (int i = 0; i < samples; ++i) {
            StepOutcome o = step(work, p, rng);
            double d = potential(work) - psi0;
            work.flip(o.change_vertex);  // restore
            sum += d;
            sumsq += d * d;
        }
        double mean = sum / samples;
        double var = sumsq / samples - mean * mean;
        double sigma = std::sqrt(var / samples);
        CHECK(std::abs(mean - rep.delta) <= 4.0 * sigma);
    }
}

TEST_CASE("auxiliary square-root inequalities") {
    // l = 1: sqrt(2) <= 2 - 1/4
    CHECK(sqrt_concavity_margin(1.0) ==
          doctest::Approx(1.75 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(merge_separation_margin(1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-30));

    Rng rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        double l = 1.0 + rng.below(1000000);
        CHECK(sqrt_concavity_margin(l) >= 0.0);
        double l1 = 1.0 + rng.below(1000000);
        double l2 = 1.0 + rng.below(1000000);
        CHECK(merge_separation_margin(l1, l2) >= -1e-35);
    }
    CHECK(sqrt_concavity_margin(1000000.0) >= 0.0);
    CHECK_THROWS_AS(sqrt_concavity_margin(0.5), std::invalid_argument);
}

TEST_CASE("greedy LP with dual certificate: worked example") {
    std::vector<BigRat> b{1, 3}, c{5, 2};
    LpSolution s = lp_bound(b, c);
    CHECK(s.x == std::vector<BigRat>{1, 2});
    CHECK(s.primal == BigRat(9));
    CHECK(s.y == std::vector<BigRat>{3, 2});
    CHECK(s.dual == BigRat(9));
}

TEST_CASE("LP duality is exact on random monotone rational instances") {
    Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int nu = 1 + static_cast<int>(rng.below(50));
        std::vector<BigRat> b(nu), c(nu);
        BigRat bv = 0;
        for (int j = 0; j < nu; ++j) {
            bv += BigRat(1 + static_cast<int>(rng.below(100)), 1 + static_cast<int>(rng.below(9)));
            b[j] = bv;
        }
        BigRat acc = BigRat(1, 3);
        for (int j = nu - 1; j >= 0; --j) {
            c[j] = acc;
            acc += BigRat(1 + static_cast<int>(rng.below(20)),
                          1 + static_cast<int>(rng.below(7)));
        }
        LpSolution s = lp_bound(b, c);
        CHECK(s.primal == s.dual);
        // primal feasibility: prefix sums meet the bounds with equality
        BigRat prefix = 0;
        for (int j = 0; j < nu; ++j) {
            CHECK(s.x[j] >= 0);
            prefix += s.x[j];
            CHECK(prefix == b[j]);
        }
        // dual feasibility: suffix sums equal the costs
        BigRat suffix = 0;
        for (int j = nu - 1; j >= 0; --j) {
            CHECK(s.y[j] >= 0);
            suffix += s.y[j];
            CHECK(suffix == c[j]);
        }
    }
}

TEST_CASE("LP accepts constant costs: objective telescopes to c * b_nu") {
    std::vector<BigRat> b{2, 5, 11}, c{7, 7, 7};
    LpSolution s = lp_bound(b, c);
    CHECK(s.primal == BigRat(77));
    CHECK(s.dual == BigRat(77));
}

TEST_CASE("LP rejects broken monotonicity") {
    CHECK_THROWS_AS(lp_bound({BigRat(3), BigRat(1)}, {BigRat(5), BigRat(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lp_bound({BigRat(1), BigRat(3)}, {BigRat(2), BigRat(5)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lp_bound({BigRat(1), BigRat(3)}, {BigRat(5), BigRat(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lp_bound({}, {}), std::invalid_argument);
}

TEST_CASE("cycle LP instance: exact primal/dual equality and the n^2 bound") {
    for (int n : {10, 36, 100, 200}) {
        CycleLpSolution sol = cycle_lp_bound(n, n / 2);
        CHECK(sol.primal == sol.dual);
        CHECK((sol.primal - sol.dual).is_zero());
        double limit = (10.0 * std::numbers::pi * std::numbers::pi / 3.0) * n * n;
        CHECK(sol.tstar > 0.0);
        CHECK(sol.tstar <= limit);
        // numeric agreement with a plain floating-point greedy evaluation
        double direct = 0.0, prev = 0.0;
        for (int r = 1; r <= n / 2; ++r) {
            double br = std::sqrt(2.0 * r * n);
            double cr = 10.0 * std::sqrt(2.0) * std::pow(n, 1.5) / std::pow(r, 1.5);
            direct += cr * (br - prev);
            prev = br;
        }
        CHECK(sol.tstar == doctest::Approx(direct).epsilon(1e-11));
    }
    CHECK_THROWS_AS(cycle_lp_instance(10, 6), std::invalid_argument);
}

TEST_CASE("SurdSum arithmetic") {
    SurdSum a = SurdSum::sqrt_of(8);             // 2 sqrt(2)
    SurdSum b = SurdSum::sqrt_of(2, BigRat(2));  // 2 sqrt(2)
    CHECK(a == b);
    CHECK((a - b).is_zero());
    SurdSum c = a * a;  // 8
    CHECK(c == SurdSum::of_rational(BigRat(8)));
    SurdSum d = SurdSum::sqrt_of(6) * SurdSum::sqrt_of(10);  // 2 sqrt(15)
    CHECK(d == SurdSum::sqrt_of(15, BigRat(2)));
    CHECK(d.value() == doctest::Approx(2.0 * std::sqrt(15.0)).epsilon(1e-14));
}

TEST_CASE("star exit probabilities match the two-state absorbing solve") {
    for (int n : {6, 17, 50}) {
        for (int r = 1; r <= n - 1; ++r) {
            StarExitProbabilities from_r = star_exit_probability(r, n, kRed);
            StarExitProbabilities from_b = star_exit_probability(r, n, kBlue);
            CHECK(from_r.to_red == doctest::Approx(static_cast<double>(r) / n).epsilon(1e-14));
            CHECK(from_b.to_red ==
                  doctest::Approx(static_cast<double>(r - 1) / n).epsilon(1e-14));
            CHECK(from_r.to_red + from_r.to_blue == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(from_b.to_red + from_b.to_blue == doctest::Approx(1.0).epsilon(1e-14));

            // linear solve of the internal chain:
            //   pU = 1/(b+1) + (b/(b+1)) pL ;  pL = ((r-1)/r) pU
            double bb = n - r;
            double pU = (1.0 / (bb + 1)) / (1.0 - (bb / (bb + 1)) * ((r - 1.0) / r));
            CHECK(from_r.to_red == doctest::Approx(pU).epsilon(1e-12));
            CHECK(from_b.to_red == doctest::Approx(((r - 1.0) / r) * pU).epsilon(1e-12));
        }
    }
    CHECK(star_exit_probability(3, 6, kRed).to_red == doctest::Approx(0.5));
    CHECK_THROWS_AS(star_exit_probability(0, 6, kRed), std::invalid_argument);
    CHECK_THROWS_AS(star_exit_probability(6, 6, kRed), std::invalid_argument);
}

TEST_CASE("star loop expectations: closed forms and the n/4 limit") {
    StarLoopExpectations eight = star_loop_expectations(4, 8);
    CHECK(eight.rho == doctest::Approx(4.0 * 4 * 3 * 5 / 64.0).epsilon(1e-14));
    // all four conditional expectations coincide at b(r-1)/n = 1.5
    for (double v : {eight.rr, eight.br, eight.rb, eight.bb})
        CHECK(v == doctest::Approx(1.5).epsilon(1e-12));

    // rho = lambda/(1-lambda)^2 with lambda = (b/(b+1)) ((r-1)/r)
    for (int n : {12, 30}) {
        for (int r = 2; r <= n - 2; ++r) {
            double b = n - r;
            double lambda = (b / (b + 1)) * ((r - 1.0) / r);
            double rho = lambda / ((1 - lambda) * (1 - lambda));
            StarLoopExpectations e = star_loop_expectations(r, n);
            CHECK(e.rho == doctest::Approx(rho).epsilon(1e-11));
            CHECK(e.rr == doctest::Approx(e.rho * n / (r * (b + 1))).epsilon(1e-12));
        }
    }

    for (int n : {40, 100, 400}) {
        StarLoopExpectations e = star_loop_expectations(n / 2, n);
        for (double v : {e.rr, e.br, e.rb, e.bb})
            CHECK(std::abs(v - n / 4.0) <= 0.10 * (n / 4.0));
    }
    CHECK_THROWS_AS(star_loop_expectations(1, 8), std::invalid_argument);
}

TEST_CASE("star loop expectations agree with a simulated pseudo-state loop count") {
    int n = 8, r = 4, b = n - r;
    // two-state loop: from U exit up w.p. 1/(b+1), else to L; from L return to
    // U w.p. (r-1)/r, else exit down. Count U->L->U loops by exit side.
    Rng rng(777);
    const int sims = 1000000;
    long long loops_r = 0, count_r = 0, loops_b = 0, count_b = 0;
    for (int i = 0; i < sims; ++i) {
        int loops = 0;
        bool done = false;
        while (!done) {
            if (rng.unit() < 1.0 / (b + 1)) {  // exit via R from U
                ++count_r;
                loops_r += loops;
                done = true;
            } else if (rng.unit() < (r - 1.0) / r) {
                ++loops;  // returned to U: one completed loop
            } else {
                ++count_b;  // exit via B from L
                loops_b += loops;
                done = true;
            }
        }
    }
    StarLoopExpectations e = star_loop_expectations(r, n);
    double mu_r = static_cast<double>(loops_r) / count_r;
    double mu_b = static_cast<double>(loops_b) / count_b;
    CHECK(std::abs(mu_r - e.rr) < 0.02);
    CHECK(std::abs(mu_b - e.rb) < 0.02);
}

TEST_CASE("star pull run probabilities telescope") {
    CHECK(star_pull_run_probability(2, 4, 6) == doctest::Approx(0.6).epsilon(1e-14));
    for (int n : {6, 19}) {
        for (int r = 1; r <= n; ++r) {
            CHECK(star_pull_run_probability(r, r, n) == doctest::Approx(1.0));
            CHECK(star_pull_run_probability(r, n, n) ==
                  doctest::Approx(1.0 / (n - r + 1)).epsilon(1e-14));
            for (int x = r; x <= n; ++x) {
                double prod = 1.0;
                for (int y = r; y < x; ++y)
                    prod *= static_cast<double>(n - y) / (n - y + 1);
                CHECK(star_pull_run_probability(r, x, n) ==
                      doctest::Approx(prod).epsilon(1e-12));
            }
        }
    }
    CHECK_THROWS_AS(star_pull_run_probability(4, 3, 6), std::invalid_argument);
}

TEST_CASE("double star pull run probabilities") {
    for (int b : {1, 2, 5, 9}) {
        CHECK(double_star_run_probability(b, 0) ==
              doctest::Approx(2.0 / (b + 2)).epsilon(1e-14));
        CHECK(double_star_run_probability(b, 1) ==
              doctest::Approx(static_cast<double>(b) / (b + 2)).epsilon(1e-14));
        CHECK(double_star_run_probability(b, b) ==
              doctest::Approx(2.0 / (static_cast<double>(b) + 1) / (b + 2)).epsilon(1e-12));
        // telescoping product for the run-length tail, k >= 1
        double prod = 1.0;
        int d = b + 2, num = b;
        for (int k = 1; k <= b; ++k) {
            prod *= static_cast<double>(num) / d;
            --num;
            --d;
            CHECK(double_star_run_probability(b, k) == doctest::Approx(prod).epsilon(1e-12));
        }
        // non-increasing over k >= 1
        for (int k = 2; k <= b; ++k)
            CHECK(double_star_run_probability(b, k) <= double_star_run_probability(b, k - 1));
    }
    // with n >= max(b, 4) leaves per side the final run is at least 1/n^2
    for (int n = 4; n <= 12; ++n)
        for (int b = 1; b <= n; ++b)
            CHECK(double_star_run_probability(b, b) >= 1.0 / (static_cast<double>(n) * n));
    CHECK_THROWS_AS(double_star_run_probability(3, 4), std::invalid_argument);
}

TEST_CASE("double star up-step bound") {
    DoubleStarUpBound b0 = double_star_up_bound(0, 10);
    CHECK(b0.exact == doctest::Approx(24.0 / 143.0).epsilon(1e-14));
    CHECK(b0.simplified == doctest::Approx(3.0 / 13.0).epsilon(1e-14));
    for (int n : {10, 25, 60}) {
        for (int r = 0; r <= n; ++r) {
            DoubleStarUpBound b = double_star_up_bound(r, n);
            if (2 * r <= n - 1) CHECK(b.exact <= b.simplified + 1e-14);
            if (5 * r <= n - 12) CHECK(b.simplified <= 0.2 + 1e-14);
            // geometric-series oracle: (1/(n-r+1)) sum lambda^k
            double lambda = ((r + 1.0) / (r + 2.0)) * ((n - r + 1.0) / (n - r + 2.0));
            double series = 0.0, term = 1.0;
            for (int k = 0; k < 4000; ++k) {
                series += term;
                term *= lambda;
            }
            CHECK(b.exact == doctest::Approx(series / (n - r + 1)).epsilon(1e-9));
        }
    }
}

TEST_CASE("conductance of the named graphs") {
    CHECK(conductance(Graph::complete(4)) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(conductance_exact(Graph::complete(4)) == BigRat(2, 3));
    CHECK(conductance(Graph::cycle(6)) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(conductance_exact(Graph::cycle(6)) == BigRat(1, 3));
    Graph disc = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(conductance(disc) == 0.0);
    CHECK_THROWS_AS(conductance(Graph::cycle(21)), std::invalid_argument);
}

TEST_CASE("conductance matches a direct per-subset recount") {
    Rng rng(3131);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 8, 5);
        int n = 8;
        double best = 1e300;
        for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
            long long cut = 0, dS = 0;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1) dS += g.degree(v);
            for (auto [u, v] : g.edges())
                if ((((s >> u) & 1) != ((s >> v) & 1))) ++cut;
            long long other = 2LL * g.edge_count() - dS;
            double ratio = cut == 0 ? 0.0 : static_cast<double>(cut) / std::min(dS, other);
            best = std::min(best, ratio);
        }
        CHECK(conductance(g) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("push-bound parameter equals (2/n^2) conductance on regular graphs") {
    for (int n : {4, 6, 8, 12, 16}) {
        Graph cyc = Graph::cycle(n);
        BigRat lhs = push_bound_parameter_exact(cyc);
        BigRat rhs = BigRat(2, static_cast<long long>(n) * n) * conductance_exact(cyc);
        CHECK(lhs == rhs);
    }
    for (int n : {4, 6, 10}) {
        Graph k = Graph::complete(n);
        CHECK(push_bound_parameter_exact(k) ==
              BigRat(2, static_cast<long long>(n) * n) * conductance_exact(k));
        CHECK(push_bound_parameter(k) ==
              doctest::Approx(2.0 / (n * n) * conductance(k)).epsilon(1e-12));
    }
}

TEST_CASE("degree irregularity: regular graphs give 1, stars grow linearly") {
    CHECK(degree_irregularity_exact(Graph::complete(4)) == BigRat(1));
    CHECK(degree_irregularity_exact(Graph::cycle(9)) == BigRat(1));
    CHECK(degree_irregularity(Graph::complete(7)) == doctest::Approx(1.0).epsilon(1e-13));

    // star on n vertices: nu = n^2 / (4 (n-1))
    for (int n : {8, 16, 64}) {
        BigRat expect(static_cast<long long>(n) * n, 4LL * (n - 1));
        CHECK(degree_irregularity_exact(Graph::star(n)) == expect);
    }
    double prev_ratio = 0.0;
    for (int n : {16, 32, 64, 128}) {
        double ratio =
            degree_irregularity(Graph::star(2 * n)) / degree_irregularity(Graph::star(n));
        CHECK(ratio > prev_ratio);
        CHECK(ratio > 1.8);
        CHECK(ratio <= 2.0);
        prev_ratio = ratio;
    }
}
