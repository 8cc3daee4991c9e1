#include "ricci/transport.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <tuple>

namespace ricci {

Rational Measure::at(int v) const {
    auto it = mass.find(v);
    return it == mass.end() ? Rational(0) : it->second;
}

Rational Measure::total() const {
    Rational t = 0;
    for (const auto& [v, m] : mass)
        t += m;
    return t;
}

bool Measure::is_probability() const {
    for (const auto& [v, m] : mass)
        if (m.is_negative())
            return false;
    return total() == Rational(1);
}

Measure lazy_measure(const Graph& g, int x, const Rational& eps) {
    if (eps.is_negative() || Rational(1) < eps)
        throw UnsupportedParameter("laziness must lie in [0, 1], got " + eps.str());
    int deg = g.degree(x);
    Measure m;
    if (eps.is_zero()) {
        m.mass[x] = 1;
        return m;
    }
    if (deg == 0)
        throw DegreeZero("vertex " + std::to_string(x) + " is isolated");
    Rational stay = Rational(1) - eps;
    if (!stay.is_zero())
        m.mass[x] = stay;
    Rational share = eps / deg;
    for (int v : g.neighbors(x))
        m.mass[v] = share;
    return m;
}

Rational TransportPlan::cost(const Graph& g) const {
    Rational c = 0;
    for (const auto& [key, m] : entries) {
        auto [u, v] = key;
        if (u == v || m.is_zero())
            continue;
        int d = g.distance(u, v);
        if (d == kUnreachable)
            throw Unreachable("plan ships mass between components: (" + std::to_string(u) +
                              ", " + std::to_string(v) + ")");
        c += m * d;
    }
    return c;
}

PlanCheck verify_plan(const TransportPlan& plan) {
    std::map<int, Rational> row, col;
    for (const auto& [key, m] : plan.entries) {
        auto [u, v] = key;
        if (m.is_negative())
            return {false, "negative mass at (" + std::to_string(u) + ", " + std::to_string(v) +
                               ")"};
        if (m.is_zero())
            continue;
        row[u] += m;
        col[v] += m;
    }
    auto marginal_matches = [](const std::map<int, Rational>& got, const Measure& want,
                               const char* which, std::string& detail) {
        for (const auto& [v, m] : got) {
            if (want.at(v) != m) {
                detail = std::string(which) + " marginal off at vertex " + std::to_string(v) +
                         ": plan " + m.str() + ", measure " + want.at(v).str();
                return false;
            }
        }
        for (const auto& [v, m] : want.mass) {
            if (!m.is_zero() && got.find(v) == got.end()) {
                detail = std::string(which) + " marginal misses vertex " + std::to_string(v);
                return false;
            }
        }
        return true;
    };
    std::string detail;
    if (!marginal_matches(row, plan.source, "source", detail))
        return {false, detail};
    if (!marginal_matches(col, plan.target, "target", detail))
        return {false, detail};
    return {true, ""};
}

long long Potential::at(int v) const {
    auto it = values.find(v);
    return it == values.end() ? 0 : it->second;
}

LipschitzReport check_lipschitz(const Graph& g, const Potential& f) {
    const auto& dist = g.distance_matrix();
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        long long fu = f.at(u);
        for (int v = u + 1; v < n; ++v) {
            int d = dist[u][v];
            if (d == kUnreachable)
                continue;
            long long diff = fu - f.at(v);
            if (diff > d || -diff > d)
                return {false, u, v};
        }
    }
    return {true, -1, -1};
}

Rational dual_bound(const Graph& g, const Potential& f, const Measure& mu, const Measure& nu) {
    LipschitzReport lip = check_lipschitz(g, f);
    if (!lip.ok)
        throw NotLipschitz("potential stretches pair (" + std::to_string(lip.u) + ", " +
                               std::to_string(lip.v) + ") beyond its distance",
                           lip.u, lip.v);
    Rational bound = 0;
    for (const auto& [v, m] : mu.mass)
        bound += m * f.at(v);
    for (const auto& [v, m] : nu.mass)
        bound -= m * f.at(v);
    return bound;
}

namespace {

struct FlowEdge {
    int to;
    long long cap;
    long long cost;
    int rev; // index of the reverse edge in g_[to]
};

// Integer min-cost flow via successive shortest augmenting paths with node
// potentials; all initial costs are nonnegative, so Dijkstra works from the
// start and reduced costs stay nonnegative across augmentations.
class MinCostFlow {
  public:
    explicit MinCostFlow(int n) : g_(n) {}

    void add_edge(int u, int v, long long cap, long long cost) {
        g_[u].push_back({v, cap, cost, static_cast<int>(g_[v].size())});
        g_[v].push_back({u, 0, -cost, static_cast<int>(g_[u].size()) - 1});
    }

    const std::vector<FlowEdge>& edges_of(int u) const { return g_[u]; }

    long long shipped(int u, int edge_index) const {
        const FlowEdge& e = g_[u][edge_index];
        return g_[e.to][e.rev].cap; // reverse capacity equals pushed flow
    }

    long long run(int s, int t, long long amount) {
        const long long kInf = LLONG_MAX / 4;
        const int n = static_cast<int>(g_.size());
        std::vector<long long> pi(n, 0), dist(n);
        std::vector<int> pv(n), pe(n);
        long long total_cost = 0;
        while (amount > 0) {
            std::fill(dist.begin(), dist.end(), kInf);
            std::fill(pv.begin(), pv.end(), -1);
            dist[s] = 0;
            using Item = std::pair<long long, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            pq.emplace(0, s);
            while (!pq.empty()) {
                auto [d, u] = pq.top();
                pq.pop();
                if (d > dist[u])
                    continue;
                for (int i = 0; i < static_cast<int>(g_[u].size()); ++i) {
                    const FlowEdge& e = g_[u][i];
                    if (e.cap <= 0)
                        continue;
                    long long nd = d + e.cost + pi[u] - pi[e.to];
                    if (nd < dist[e.to]) {
                        dist[e.to] = nd;
                        pv[e.to] = u;
                        pe[e.to] = i;
                        pq.emplace(nd, e.to);
                    }
                }
            }
            if (dist[t] >= kInf)
                throw MathInconsistency("transport network exhausted before demand was met");
            // Clamping unreached nodes at dist[t] keeps reduced costs valid.
            for (int v = 0; v < n; ++v)
                pi[v] += std::min(dist[v], dist[t]);
            long long push = amount;
            for (int v = t; v != s; v = pv[v])
                push = std::min(push, g_[pv[v]][pe[v]].cap);
            for (int v = t; v != s; v = pv[v]) {
                FlowEdge& e = g_[pv[v]][pe[v]];
                e.cap -= push;
                g_[v][e.rev].cap += push;
                total_cost += push * e.cost;
            }
            amount -= push;
        }
        return total_cost;
    }

  private:
    std::vector<std::vector<FlowEdge>> g_;
};

// Integral shortest-walk labels over the graph's unit edges plus one arc of
// length -dist(i, j) per positive shipment. Relaxation fixes f(i) - f(j) to
// exactly dist(i, j) across every shipment while keeping f 1-Lipschitz; a
// remaining relaxable arc would mean a negative cycle, i.e. a cheaper plan.
Potential extract_potential(const Graph& g, const TransportPlan& plan) {
    const int n = g.vertex_count();
    std::vector<std::tuple<int, int, long long>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v, 1);
        arcs.emplace_back(v, u, 1);
    }
    for (const auto& [key, m] : plan.entries) {
        auto [i, j] = key;
        if (i != j && !m.is_zero())
            arcs.emplace_back(i, j, -static_cast<long long>(g.distance(i, j)));
    }
    std::vector<long long> f(n, 0);
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& [u, v, w] : arcs) {
            if (f[u] + w < f[v]) {
                f[v] = f[u] + w;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    for (const auto& [u, v, w] : arcs)
        if (f[u] + w < f[v])
            throw MathInconsistency("transport plan admits an improving cycle");
    Potential out;
    for (int v = 0; v < n; ++v)
        if (f[v] != 0)
            out.values[v] = f[v];
    return out;
}

} // namespace

WassersteinResult wasserstein(const Graph& g, const Measure& mu, const Measure& nu) {
    if (!mu.is_probability() || !nu.is_probability())
        throw PreconditionViolated("both measures must be probability measures");
    std::map<int, Rational> delta;
    for (const auto& [v, m] : mu.mass)
        delta[v] += m;
    for (const auto& [v, m] : nu.mass)
        delta[v] -= m;
    int anchor = -1;
    for (const auto& [v, m] : delta) {
        if (anchor == -1)
            anchor = v;
        if (g.distance(anchor, v) == kUnreachable)
            throw Unreachable("measures are supported on different components");
    }

    TransportPlan plan;
    plan.source = mu;
    plan.target = nu;
    for (const auto& [v, m] : mu.mass) {
        Rational shared = min(m, nu.at(v));
        if (!shared.is_zero())
            plan.entries[{v, v}] = shared; // shared mass never moves
    }

    std::vector<std::pair<int, Rational>> sources, sinks;
    for (const auto& [v, d] : delta) {
        if (d.is_zero())
            continue;
        if (d.is_negative())
            sinks.emplace_back(v, -d);
        else
            sources.emplace_back(v, d);
    }

    Rational value = 0;
    if (!sources.empty()) {
        BigInt scale = 1;
        for (const auto& [v, r] : sources)
            scale = boost::multiprecision::lcm(scale, r.den());
        for (const auto& [v, r] : sinks)
            scale = boost::multiprecision::lcm(scale, r.den());
        if (scale > (BigInt(1) << 40))
            throw UnsupportedParameter("measure denominators too large for exact scaling");
        auto units = [&](const Rational& r) {
            return BigInt(r.num() * (scale / r.den())).convert_to<long long>();
        };
        const int a = static_cast<int>(sources.size());
        const int b = static_cast<int>(sinks.size());
        const int s = 0, t = a + b + 1;
        MinCostFlow net(a + b + 2);
        long long total = 0;
        long long max_dist = 1;
        for (int i = 0; i < a; ++i) {
            long long u = units(sources[i].second);
            total += u;
            net.add_edge(s, 1 + i, u, 0);
        }
        long long check = 0;
        for (int j = 0; j < b; ++j) {
            long long u = units(sinks[j].second);
            check += u;
            net.add_edge(a + 1 + j, t, u, 0);
        }
        if (check != total)
            throw MathInconsistency("scaled surplus and deficit differ");
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                long long d = g.distance(sources[i].first, sinks[j].first);
                max_dist = std::max(max_dist, d);
                net.add_edge(1 + i, a + 1 + j, units(sources[i].second), d);
            }
        }
        if (total > (LLONG_MAX / 4) / max_dist)
            throw UnsupportedParameter("instance too large for exact 64-bit flow costs");
        long long cost = net.run(s, t, total);
        value = Rational(BigInt(cost), scale);
        for (int i = 0; i < a; ++i) {
            const auto& edges = net.edges_of(1 + i);
            for (int idx = 0; idx < static_cast<int>(edges.size()); ++idx) {
                if (edges[idx].to < a + 1 || edges[idx].to > a + b)
                    continue; // reverse arc back to the super source
                long long f = net.shipped(1 + i, idx);
                if (f > 0)
                    plan.entries[{sources[i].first, sinks[edges[idx].to - a - 1].first}] =
                        Rational(BigInt(f), scale);
            }
        }
    }

    PlanCheck chk = verify_plan(plan);
    if (!chk.ok)
        throw MathInconsistency("flow plan failed marginal check: " + chk.detail);
    Potential f = extract_potential(g, plan);
    Rational plan_cost = plan.cost(g);
    Rational dual = dual_bound(g, f, mu, nu);
    if (plan_cost != value || dual != value)
        throw MathInconsistency("duality gap: plan " + plan_cost.str() + ", dual " + dual.str() +
                                ", flow " + value.str());
    return {value, plan, f};
}

std::vector<std::pair<int, int>> two_step_pairing(const Graph& g, const BipartiteGraph& h,
                                                  const Matching& m) {
    std::vector<int> ux, uy;
    for (int l = 0; l < h.left_size(); ++l)
        if (m.left_to_right[l] == -1)
            ux.push_back(h.left_ids[l]);
    for (int r = 0; r < h.right_size(); ++r)
        if (m.right_to_left[r] == -1)
            uy.push_back(h.right_ids[r]);
    if (ux.size() != uy.size())
        throw InvalidPairing("unmatched sides differ in size: " + std::to_string(ux.size()) +
                             " vs " + std::to_string(uy.size()));
    std::vector<std::pair<int, int>> pairing;
    for (std::size_t k = 0; k < ux.size(); ++k) {
        if (g.distance(ux[k], uy[k]) != 2)
            throw InvalidPairing("unmatched pair (" + std::to_string(ux[k]) + ", " +
                                 std::to_string(uy[k]) + ") is not at distance 2");
        pairing.emplace_back(ux[k], uy[k]);
    }
    return pairing;
}

TransportPlan srg_plan(const Graph& g, const CoreNeighborhood& cn, const BipartiteGraph& h,
                       const Matching& m, const std::vector<std::pair<int, int>>& pairing) {
    const int d = g.degree(cn.x);
    if (g.degree(cn.y) != d)
        throw IrregularGraph("plan needs equal endpoint degrees, got " + std::to_string(d) +
                             " and " + std::to_string(g.degree(cn.y)));
    std::vector<int> ux, uy;
    for (int l = 0; l < h.left_size(); ++l)
        if (m.left_to_right[l] == -1)
            ux.push_back(h.left_ids[l]);
    for (int r = 0; r < h.right_size(); ++r)
        if (m.right_to_left[r] == -1)
            uy.push_back(h.right_ids[r]);
    std::vector<int> firsts, seconds;
    for (auto [u, v] : pairing) {
        firsts.push_back(u);
        seconds.push_back(v);
        if (g.distance(u, v) != 2)
            throw InvalidPairing("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") is not at distance 2");
    }
    std::sort(firsts.begin(), firsts.end());
    std::sort(seconds.begin(), seconds.end());
    if (firsts != ux || seconds != uy)
        throw InvalidPairing("pairing is not a bijection between the unmatched sides");

    const Rational half(1, 2);
    const Rational share(1, 2LL * d);
    TransportPlan plan;
    plan.source = lazy_measure(g, cn.x, half);
    plan.target = lazy_measure(g, cn.y, half);
    Rational along_edge = half - share;
    if (!along_edge.is_zero())
        plan.entries[{cn.x, cn.y}] = along_edge;
    plan.entries[{cn.x, cn.x}] = share;
    plan.entries[{cn.y, cn.y}] = share;
    for (int v : cn.triangle)
        plan.entries[{v, v}] = share;
    for (auto [l, r] : m.pairs())
        plan.entries[{h.left_ids[l], h.right_ids[r]}] = share;
    for (auto [u, v] : pairing)
        plan.entries[{u, v}] = share;

    PlanCheck chk = verify_plan(plan);
    if (!chk.ok)
        throw MathInconsistency("structured plan failed marginal check: " + chk.detail);
    return plan;
}

Potential srg_potential(const CoreNeighborhood& cn, const BipartiteGraph& h, const Matching& m) {
    if (has_augmenting_path(h, m))
        throw PreconditionViolated("potential needs a maximum matching");
    AlternatingReach reach = alternating_reach(h, m, Side::Right);
    Potential f;
    f.values[cn.x] = 1;
    std::vector<char> reachable_left(h.left_size());
    for (int l : reach.reach_t)
        reachable_left[l] = 1;
    for (int l = 0; l < h.left_size(); ++l)
        if (!reachable_left[l])
            f.values[h.left_ids[l]] = 1;
    for (int r : reach.reach_s)
        f.values[h.right_ids[r]] = -1;
    return f;
}

} // namespace ricci
