#include "dvote/exact.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dvote/bd_chain.hpp"

namespace dvote {

namespace {

constexpr std::size_t kDenseLimit = 4000;

// Transition rows over all states; absorbing states are marked and their rows
// ignored.
struct AbsorbingSystem {
    std::vector<std::vector<std::pair<int, double>>> rows;
    std::vector<char> absorbing;
};

std::vector<double> solve_transient(
    const std::vector<std::vector<std::pair<int, double>>>& q) {
    int m = static_cast<int>(q.size());
    if (m == 0) return {};

    if (static_cast<std::size_t>(m) <= kDenseLimit) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m);
        for (int i = 0; i < m; ++i)
            for (auto [j, p] : q[i]) a(i, j) -= p;
        Eigen::VectorXd b = Eigen::VectorXd::Ones(m);
        Eigen::VectorXd h = a.partialPivLu().solve(b);
        if (!h.allFinite()) throw std::runtime_error("absorbing solve failed (singular system)");
        return std::vector<double>(h.data(), h.data() + m);
    }

    Eigen::SparseMatrix<double> a(m, m);
    {
        std::vector<Eigen::Triplet<double>> trips;
        std::size_t nnz = m;
        for (const auto& row : q) nnz += row.size();
        trips.reserve(nnz);
        for (int i = 0; i < m; ++i) {
            trips.emplace_back(i, i, 1.0);
            for (auto [j, p] : q[i]) trips.emplace_back(i, j, -p);
        }
        a.setFromTriplets(trips.begin(), trips.end());
    }
    Eigen::VectorXd b = Eigen::VectorXd::Ones(m);

    auto residual_of = [&](const Eigen::VectorXd& h) {
        return h.allFinite() ? (a * h - b).cwiseAbs().maxCoeff()
                             : std::numeric_limits<double>::infinity();
    };
    auto good = [&](const Eigen::VectorXd& h, double resid) {
        double scale = std::max(1.0, h.allFinite() ? h.cwiseAbs().maxCoeff() : 1.0);
        return resid <= 1e-10 * scale;
    };

    // Diagonal-preconditioned BiCGSTAB converges in tens of iterations on
    // these chains; the ILUT pass is a fallback.
    {
        Eigen::BiCGSTAB<Eigen::SparseMatrix<double>> solver;
        solver.setTolerance(1e-13);
        solver.setMaxIterations(20000);
        solver.compute(a);
        Eigen::VectorXd h = solver.solve(b);
        double resid = residual_of(h);
        if (good(h, resid)) return std::vector<double>(h.data(), h.data() + m);
    }
    {
        Eigen::BiCGSTAB<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> solver;
        solver.preconditioner().setDroptol(1e-5);
        solver.preconditioner().setFillfactor(40);
        solver.setTolerance(1e-13);
        solver.setMaxIterations(20000);
        solver.compute(a);
        Eigen::VectorXd h = solver.solve(b);
        double resid = residual_of(h);
        if (good(h, resid)) return std::vector<double>(h.data(), h.data() + m);
    }
    throw std::runtime_error("iterative absorbing solve did not converge");
}

// Expected absorption steps for every state; 0 at absorbing states.
std::vector<double> solve_absorbing(const AbsorbingSystem& sys) {
    std::size_t total = sys.rows.size();
    std::vector<int> transient_id(total, -1);
    std::vector<int> transient_list;
    for (std::size_t i = 0; i < total; ++i) {
        if (!sys.absorbing[i]) {
            transient_id[i] = static_cast<int>(transient_list.size());
            transient_list.push_back(static_cast<int>(i));
        }
    }
    std::vector<std::vector<std::pair<int, double>>> q(transient_list.size());
    for (std::size_t t = 0; t < transient_list.size(); ++t) {
        for (auto [j, prob] : sys.rows[transient_list[t]])
            if (transient_id[j] >= 0) q[t].emplace_back(transient_id[j], prob);
    }
    std::vector<double> h = solve_transient(q);
    std::vector<double> full(total, 0.0);
    for (std::size_t t = 0; t < transient_list.size(); ++t) full[transient_list[t]] = h[t];
    return full;
}

}  // namespace

bool BruteForceResult::contains(std::uint64_t key) const {
    for (std::uint64_t k : state_keys)
        if (k == key) return true;
    return false;
}

double BruteForceResult::at(std::uint64_t key) const {
    for (std::size_t i = 0; i < state_keys.size(); ++i)
        if (state_keys[i] == key) return expected_steps[i];
    throw std::out_of_range("configuration not reachable from the start state");
}

BruteForceResult brute_force_table(const Graph& g, const Configuration& start, Protocol p) {
    int n = g.vertex_count();
    if (n > kBruteForceMaxVertices)
        throw std::domain_error("brute force limited to 16 vertices");
    if (!g.connected())
        throw std::invalid_argument("brute force requires a connected graph");

    const std::uint64_t space = std::uint64_t{1} << n;
    std::vector<std::int32_t> index(space, -1);

    BruteForceResult out;
    index[start.opinion_key()] = 0;
    out.state_keys.push_back(start.opinion_key());

    auto config_of = [&](std::uint64_t key) {
        std::vector<Opinion> bits(n);
        for (int v = 0; v < n; ++v) bits[v] = static_cast<Opinion>((key >> v) & 1);
        return Configuration(g, std::move(bits));
    };

    AbsorbingSystem sys;
    for (std::size_t head = 0; head < out.state_keys.size(); ++head) {
        std::uint64_t key = out.state_keys[head];
        Configuration c = config_of(key);
        sys.rows.emplace_back();
        sys.absorbing.push_back(c.at_consensus() ? 1 : 0);
        if (c.at_consensus()) continue;
        std::vector<double> dist = step_distribution(c, p);
        auto& row = sys.rows.back();
        for (int v = 0; v < n; ++v) {
            if (dist[v] <= 0.0) continue;
            std::uint64_t nk = key ^ (std::uint64_t{1} << v);
            if (index[nk] < 0) {
                index[nk] = static_cast<std::int32_t>(out.state_keys.size());
                out.state_keys.push_back(nk);
            }
            row.emplace_back(index[nk], dist[v]);
        }
    }

    out.expected_steps = solve_absorbing(sys);
    out.start_index = 0;
    return out;
}

double brute_force_expected_time(const Graph& g, const Configuration& start, Protocol p) {
    return brute_force_table(g, start, p).start_value();
}

double complete_lumped_expected_time(int n, Protocol p) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("complete-graph lumping requires even n >= 4");
    int N = n / 2;
    switch (p) {
        case Protocol::push: return hit_profile(push_chain(n, 0)).cum[N];
        case Protocol::pull: return hit_profile(pull_chain(n, 0)).cum[N];
        case Protocol::oblivious: return static_cast<double>(N) * N;
    }
    throw std::invalid_argument("unknown protocol");
}

BigRat complete_lumped_expected_time_exact(int n, Protocol p) {
    if (p == Protocol::oblivious) {
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("complete-graph lumping requires even n >= 4");
        return BigRat(n / 2) * BigRat(n / 2);
    }
    auto up = (p == Protocol::push) ? push_chain_exact(n, 0) : pull_chain_exact(n, 0);
    std::vector<BigRat> step = hit_profile_exact(up);
    BigRat total = 0;
    for (std::size_t i = 1; i < step.size(); ++i) total += step[i];
    return total;
}

namespace {

void check_star_state(int n, int red_count, Opinion center) {
    if (n < 2) throw std::invalid_argument("star lumping requires n >= 2");
    if (red_count < 0 || red_count > n)
        throw std::invalid_argument("star state: red count out of range");
    if (center == kRed && red_count < 1)
        throw std::invalid_argument("star state: red centre needs red count >= 1");
    if (center == kBlue && red_count > n - 1)
        throw std::invalid_argument("star state: blue centre needs red count <= n-1");
}

// state ids: centre red, r in 1..n -> r-1 ; centre blue, r in 0..n-1 -> n + r
int star_state_id(int n, int r, Opinion center) {
    return center == kRed ? r - 1 : n + r;
}

}  // namespace

std::vector<StarMove> star_lumped_moves(int n, Protocol p, int red_count, Opinion center) {
    check_star_state(n, red_count, center);
    int r = red_count;
    std::vector<StarMove> moves;
    if (center == kRed) {
        if (r == n) return moves;  // absorbing
        double b = static_cast<double>(n - r);  // blue leaves
        switch (p) {
            case Protocol::push:
                moves.push_back({r + 1, kRed, 1.0 / (b + 1)});
                moves.push_back({r - 1, kBlue, b / (b + 1)});
                break;
            case Protocol::pull:
                moves.push_back({r + 1, kRed, b / (b + 1)});
                moves.push_back({r - 1, kBlue, 1.0 / (b + 1)});
                break;
            case Protocol::oblivious:
                moves.push_back({r + 1, kRed, 0.5});
                moves.push_back({r - 1, kBlue, 0.5});
                break;
        }
    } else {
        if (r == 0) return moves;  // absorbing
        double rl = static_cast<double>(r);  // red leaves
        switch (p) {
            case Protocol::push:
                moves.push_back({r + 1, kRed, rl / (rl + 1)});
                moves.push_back({r - 1, kBlue, 1.0 / (rl + 1)});
                break;
            case Protocol::pull:
                moves.push_back({r + 1, kRed, 1.0 / (rl + 1)});
                moves.push_back({r - 1, kBlue, rl / (rl + 1)});
                break;
            case Protocol::oblivious:
                moves.push_back({r + 1, kRed, 0.5});
                moves.push_back({r - 1, kBlue, 0.5});
                break;
        }
    }
    return moves;
}

StarLumpedTable star_lumped_table(int n, Protocol p) {
    if (n < 2) throw std::invalid_argument("star lumping requires n >= 2");
    int total = 2 * n;
    AbsorbingSystem sys;
    sys.rows.resize(total);
    sys.absorbing.assign(total, 0);
    sys.absorbing[star_state_id(n, n, kRed)] = 1;
    sys.absorbing[star_state_id(n, 0, kBlue)] = 1;
    for (int r = 1; r <= n; ++r)
        for (const StarMove& mv : star_lumped_moves(n, p, r, kRed))
            sys.rows[star_state_id(n, r, kRed)].emplace_back(
                star_state_id(n, mv.red_count, mv.center), mv.probability);
    for (int r = 0; r <= n - 1; ++r)
        for (const StarMove& mv : star_lumped_moves(n, p, r, kBlue))
            sys.rows[star_state_id(n, r, kBlue)].emplace_back(
                star_state_id(n, mv.red_count, mv.center), mv.probability);
    std::vector<double> h = solve_absorbing(sys);

    StarLumpedTable table;
    table.center_red.assign(n + 1, 0.0);
    table.center_blue.assign(n + 1, 0.0);
    for (int r = 1; r <= n; ++r) table.center_red[r] = h[star_state_id(n, r, kRed)];
    for (int r = 0; r <= n - 1; ++r) table.center_blue[r] = h[star_state_id(n, r, kBlue)];
    return table;
}

double star_lumped_expected_time(int n, Protocol p, int red_count, Opinion center) {
    check_star_state(n, red_count, center);
    StarLumpedTable table = star_lumped_table(n, p);
    return center == kRed ? table.center_red[red_count] : table.center_blue[red_count];
}

}  // namespace dvote
