#include "ricci/curvature.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

namespace ricci {

namespace {

int thread_budget() {
    const char* env = std::getenv("RICCI_THREADS");
    if (env == nullptr || *env == '\0')
        return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1)
        return 1;
    unsigned hw = std::thread::hardware_concurrency();
    long cap = hw == 0 ? 1 : static_cast<long>(hw);
    return static_cast<int>(std::min(v, cap));
}

// Runs fn(0..count-1) on the RICCI_THREADS budget. Work items write to
// disjoint slots, so results are identical at any thread count; the first
// exception wins and is rethrown on the caller.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace

Rational kappa_eps(const Graph& g, int x, int y, const Rational& eps) {
    if (!g.has_edge(x, y))
        throw NotAnEdge("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not an edge");
    Measure mu = lazy_measure(g, x, eps);
    Measure nu = lazy_measure(g, y, eps);
    return Rational(1) - wasserstein(g, mu, nu).value;
}

Rational condensed(const Graph& g, int x, int y, bool verify_linearity) {
    if (!g.regular_degree())
        throw IrregularGraph("condensed curvature by scaling needs a regular graph");
    Rational at_half = kappa_eps(g, x, y, Rational(1, 2));
    Rational slope = at_half * 2;
    if (verify_linearity) {
        Rational at_quarter = kappa_eps(g, x, y, Rational(1, 4));
        if (at_quarter * 4 != slope)
            throw MathInconsistency("kappa is not linear in eps on a regular graph: slope " +
                                    slope.str() + " at 1/2, " + (at_quarter * 4).str() +
                                    " at 1/4");
    }
    return slope;
}

namespace {

struct SlopeLimit {
    Rational slope;
    Rational eps;   // the laziness whose chord already matches the limit
    Rational kappa; // kappa at that laziness
};

// Halve eps until two successive chord slopes agree. Concavity plus
// kappa(0) = 0 make equal chords at eps and eps/2 force linearity on
// [0, eps], so the shared slope is the limit.
SlopeLimit slope_limit(const Graph& g, int x, int y) {
    int d = std::max(g.degree(x), g.degree(y));
    Rational eps(1, d + 1);
    Rational kappa = kappa_eps(g, x, y, eps);
    Rational slope = kappa / eps;
    for (int step = 0; step < 64; ++step) {
        Rational next_eps = eps / 2;
        Rational next_kappa = kappa_eps(g, x, y, next_eps);
        Rational next_slope = next_kappa / next_eps;
        if (next_slope == slope)
            return {slope, eps, kappa};
        eps = next_eps;
        kappa = next_kappa;
        slope = next_slope;
    }
    throw MathInconsistency("chord slope failed to stabilize while halving eps");
}

} // namespace

Rational condensed_limit(const Graph& g, int x, int y) {
    if (g.regular_degree())
        return condensed(g, x, y);
    return slope_limit(g, x, y).slope;
}

Rational srg_formula(const SrgParams& p, int matching_size) {
    int exclusive = p.d - p.alpha - 1;
    if (matching_size < 0 || matching_size > exclusive)
        throw InvalidMatchingSize("matching size " + std::to_string(matching_size) +
                                  " outside [0, " + std::to_string(exclusive) + "]");
    return Rational(p.alpha + 2 - (exclusive - matching_size), p.d);
}

CurvatureReport srg_curvature_certified(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y))
        throw NotAnEdge("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not an edge");
    auto d = g.regular_degree();
    int diam = g.diameter();
    if (!d || diam == kUnreachable || diam > 2)
        throw UnsupportedGraph("certified route needs a connected regular graph of diameter <= 2");

    CoreNeighborhood cn = decompose(g, x, y);
    BipartiteGraph h = induced_bipartite(g, cn);
    Matching m = maximum_matching(h);
    auto pairing = two_step_pairing(g, h, m);
    TransportPlan plan = srg_plan(g, cn, h, m, pairing);
    Potential pot = srg_potential(cn, h, m);

    Measure mu = lazy_measure(g, x, Rational(1, 2));
    Measure nu = lazy_measure(g, y, Rational(1, 2));
    Rational plan_cost = plan.cost(g);
    Rational dual = dual_bound(g, pot, mu, nu);
    WassersteinResult flow = wasserstein(g, mu, nu);
    if (plan_cost != flow.value || dual != flow.value)
        throw MathInconsistency("certificates fail to pinch: plan " + plan_cost.str() +
                                ", dual " + dual.str() + ", flow " + flow.value.str());

    Rational at_half = Rational(1) - flow.value;
    Rational slope = at_half * 2;
    int alpha = static_cast<int>(cn.triangle.size());
    Rational formula = srg_formula(SrgParams{g.vertex_count(), *d, alpha, 0}, m.size());
    if (formula != slope)
        throw MathInconsistency("matching formula " + formula.str() +
                                " disagrees with transport " + slope.str());

    CurvatureReport report;
    report.u = x;
    report.v = y;
    report.eps = Rational(1, 2);
    report.w1 = flow.value;
    report.kappa_eps = at_half;
    report.condensed = slope;
    report.method = Method::Both;
    report.certificate = {plan_cost, dual, true};
    report.matching_size = m.size();
    return report;
}

namespace {

CurvatureReport flow_report(const Graph& g, int x, int y) {
    CurvatureReport report;
    report.u = x;
    report.v = y;
    report.method = Method::Flow;
    if (g.regular_degree()) {
        report.eps = Rational(1, 2);
        report.kappa_eps = kappa_eps(g, x, y, report.eps);
        report.condensed = report.kappa_eps * 2;
    } else {
        SlopeLimit limit = slope_limit(g, x, y);
        report.eps = limit.eps;
        report.kappa_eps = limit.kappa;
        report.condensed = limit.slope;
    }
    // Re-solve at the reported eps to expose the primal/dual pair.
    Measure mu = lazy_measure(g, x, report.eps);
    Measure nu = lazy_measure(g, y, report.eps);
    WassersteinResult flow = wasserstein(g, mu, nu);
    report.w1 = flow.value;
    Rational plan_cost = flow.plan.cost(g);
    Rational dual = dual_bound(g, flow.potential, mu, nu);
    report.certificate = {plan_cost, dual, plan_cost == flow.value && dual == flow.value};
    if (!report.certificate.gap_zero)
        throw MathInconsistency("flow certificates fail to pinch on edge (" + std::to_string(x) +
                                ", " + std::to_string(y) + ")");
    if (report.kappa_eps != Rational(1) - flow.value)
        throw MathInconsistency("re-solved transport value changed");
    return report;
}

} // namespace

CurvatureReport edge_report(const Graph& g, int x, int y) {
    int diam = g.diameter();
    if (g.regular_degree() && diam != kUnreachable && diam <= 2)
        return srg_curvature_certified(g, x, y);
    return flow_report(g, x, y);
}

CurvatureProfile curvature_profile(const Graph& g) {
    if (!g.is_connected())
        throw Disconnected("curvature profile needs a connected graph");
    auto edge_list = g.edges();
    g.distance_matrix(); // fill the cache before threads fan out
    CurvatureProfile profile;
    profile.reports.resize(edge_list.size());
    for_each_index(edge_list.size(), [&](std::size_t i) {
        auto [u, v] = edge_list[i];
        profile.reports[i] = edge_report(g, u, v);
    });
    auto& s = profile.summary;
    if (!profile.reports.empty()) {
        s.min_value = s.max_value = profile.reports[0].condensed;
        Rational sum = 0;
        s.uniform = true;
        for (const auto& r : profile.reports) {
            sum += r.condensed;
            s.min_value = min(s.min_value, r.condensed);
            s.max_value = max(s.max_value, r.condensed);
            if (r.condensed != profile.reports[0].condensed)
                s.uniform = false;
        }
        s.mean_value = sum / Rational(static_cast<long long>(profile.reports.size()));
    } else {
        s.uniform = true;
    }
    return profile;
}

RigidityResult rigidity_check(const Graph& g) {
    if (!g.is_connected())
        throw Disconnected("rigidity check needs a connected graph");
    const long long n = g.vertex_count();
    RigidityResult out;
    out.is_complete = static_cast<long long>(g.edge_count()) == n * (n - 1) / 2;
    bool all_above_one = true;
    if (g.edge_count() > 0) {
        CurvatureProfile profile = curvature_profile(g);
        out.min_edge_curvature = profile.summary.min_value;
        all_above_one = Rational(1) < profile.summary.min_value;
    }
    out.consistent = out.is_complete == all_above_one;
    return out;
}

std::optional<Rational> girth_special_cases(const Graph& g) {
    auto params = detect_srg(g);
    if (!params)
        return std::nullopt;
    auto girth_value = girth(g);
    if (!girth_value)
        return std::nullopt;
    if (*girth_value == 4)
        return Rational(2, params->d);
    if (*girth_value == 5)
        return Rational(3 - params->d, params->d);
    return std::nullopt;
}

std::vector<ConjectureRow> conjecture_scan(const std::vector<long long>& qs) {
    std::vector<ConjectureRow> rows;
    for (long long q : qs) {
        if (q < 13 || (q - 1) % 4 != 0)
            throw UnsupportedParameter("conjecture scan needs a prime q = 4 beta + 1 with beta >= 2");
        Graph g = paley_graph(q);
        auto params = detect_srg(g);
        if (!params)
            throw MathInconsistency("Paley graph failed strong regularity detection");
        long long beta = params->beta;
        ConjectureRow row;
        row.q = q;
        row.params = *params;
        row.conjectured = Rational(beta + 1, 2 * beta);

        auto edge_list = g.edges();
        g.distance_matrix();
        std::vector<CurvatureReport> reports(edge_list.size());
        std::vector<char> perfect(edge_list.size());
        for_each_index(edge_list.size(), [&](std::size_t i) {
            auto [u, v] = edge_list[i];
            reports[i] = srg_curvature_certified(g, u, v);
            BipartiteGraph h = induced_bipartite(g, decompose(g, u, v));
            perfect[i] = hall_check(h, Side::Left).satisfied ? 1 : 0;
        });
        row.curvature = reports.empty() ? Rational(0) : reports[0].condensed;
        row.uniform = true;
        row.perfect_matching_everywhere = true;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].condensed != row.curvature)
                row.uniform = false;
            if (!perfect[i])
                row.perfect_matching_everywhere = false;
        }
        row.agrees = row.uniform && row.curvature == row.conjectured;
        rows.push_back(row);
    }
    return rows;
}

} // namespace ricci
