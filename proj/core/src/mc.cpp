#include "dvote/mc.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dvote {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DVOTE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

EstimateStats estimate_consensus_time(const Graph& g, const ColoringSpec& spec, Protocol p,
                                      std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t cutoff, int threads) {
    if (trials < 1) throw std::invalid_argument("estimate_consensus_time: trials >= 1 required");
    Configuration start = init_configuration(g, spec);

    // steps[i] for trial i; censored trials marked by the cutoff sentinel.
    std::vector<std::uint64_t> steps(trials);
    std::vector<char> censored(trials, 0);

    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            TrialResult r = run_to_consensus(start, p, Rng::for_trial(seed, i), cutoff);
            steps[i] = r.steps;
            censored[i] = r.censored ? 1 : 0;
        }
    };

    int nthreads = resolve_threads(threads);
    if (nthreads <= 1 || trials < 2) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (trials + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    EstimateStats out;
    out.trials = trials;
    // Kahan summation in trial-index order: independent of thread count.
    double sum = 0.0, comp = 0.0;
    std::uint64_t used = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (censored[i]) {
            ++out.censored;
            continue;
        }
        ++used;
        double y = static_cast<double>(steps[i]) - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    out.is_lower_bound = out.censored > 0;
    if (used == 0) {
        out.mean = std::numeric_limits<double>::quiet_NaN();
        out.std_dev = std::numeric_limits<double>::quiet_NaN();
        out.ci95_halfwidth = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.mean = sum / static_cast<double>(used);
    double ss = 0.0, sc = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (censored[i]) continue;
        double d = static_cast<double>(steps[i]) - out.mean;
        double y = d * d - sc;
        double t = ss + y;
        sc = (t - ss) - y;
        ss = t;
    }
    out.std_dev = used > 1 ? std::sqrt(ss / static_cast<double>(used - 1)) : 0.0;
    out.ci95_halfwidth = 1.96 * out.std_dev / std::sqrt(static_cast<double>(used));
    return out;
}

double Normalizer::value(int n, int r) const {
    switch (kind) {
        case Kind::none: return 1.0;
        case Kind::n_squared: return static_cast<double>(n) * n;
        case Kind::n_log_n: return n * std::log(static_cast<double>(n));
        case Kind::n2_log_n: return static_cast<double>(n) * n * std::log(static_cast<double>(n));
        case Kind::n_fourth: return std::pow(static_cast<double>(n), 4.0);
        case Kind::oblivious_rnr: return static_cast<double>(r) * (n - r);
        case Kind::pow2: return std::exp2(pow2_scale * n);
    }
    return 1.0;
}

std::string Normalizer::name() const {
    switch (kind) {
        case Kind::none: return "none";
        case Kind::n_squared: return "n^2";
        case Kind::n_log_n: return "n*ln(n)";
        case Kind::n2_log_n: return "n^2*ln(n)";
        case Kind::n_fourth: return "n^4";
        case Kind::oblivious_rnr: return "r(n-r)";
        case Kind::pow2: return "2^(" + std::to_string(pow2_scale) + "n)";
    }
    return "none";
}

std::vector<SweepRow> sweep(Family f, const ColoringSpec& spec, Protocol p,
                            const std::vector<int>& sizes, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t cutoff, const Normalizer& norm,
                            int threads) {
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("sweep: sizes must be strictly ascending");

    std::vector<SweepRow> rows;
    rows.reserve(sizes.size());
    for (int size : sizes) {
        SweepRow row;
        row.family = f;
        row.protocol = p;
        try {
            Graph g = Graph::generate(f, size);
            row.n = g.vertex_count();
            Configuration start = init_configuration(g, spec);
            int r = start.count(kRed);
            row.stats = estimate_consensus_time(g, spec, p, trials, seed, cutoff, threads);
            row.normalized = row.stats.mean / norm.value(row.n, r);
        } catch (const std::exception& e) {
            row.n = row.n == 0 ? size : row.n;
            row.error = e.what();
            row.stats = {};
            row.normalized = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dvote
