#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ricci {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0)
        throw InvalidGraph("vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidGraph("edge endpoint out of range [0, " + std::to_string(n) + "): (" +
                               std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw InvalidGraph("loop at vertex " + std::to_string(u));
        seen.emplace(std::min(u, v), std::max(u, v));
    }
    adj_.assign(n, {});
    for (auto [u, v] : seen) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
    m_ = seen.size();
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidGraph("vertex " + std::to_string(v) + " out of range [0, " +
                           std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

const std::vector<std::vector<int>>& Graph::distance_matrix() const {
    std::call_once(cache_->once, [this] {
        auto& d = cache_->d;
        d.assign(n_, std::vector<int>(n_, kUnreachable));
        std::vector<int> queue;
        queue.reserve(n_);
        for (int s = 0; s < n_; ++s) {
            auto& row = d[s];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int v : adj_[u]) {
                    if (row[v] == kUnreachable) {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
    });
    return cache_->d;
}

int Graph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return distance_matrix()[u][v];
}

bool Graph::is_connected() const {
    if (n_ <= 1)
        return true;
    const auto& row = distance_matrix()[0];
    return std::find(row.begin(), row.end(), kUnreachable) == row.end();
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0)
        return std::nullopt;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& nbrs : adj_)
        if (static_cast<int>(nbrs.size()) != d)
            return std::nullopt;
    return d;
}

int Graph::diameter() const {
    if (!is_connected())
        return kUnreachable;
    int best = 0;
    for (const auto& row : distance_matrix())
        for (int d : row)
            best = std::max(best, d);
    return best;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(n, edge_list);
}

bool SrgParams::feasible() const {
    return static_cast<long long>(d) * (d - alpha - 1) ==
           static_cast<long long>(n - d - 1) * beta;
}

std::optional<SrgParams> detect_srg(const Graph& g) {
    const int n = g.vertex_count();
    if (!g.is_connected())
        return std::nullopt;
    auto d = g.regular_degree();
    if (!d)
        return std::nullopt;
    auto common = [&](int u, int v) {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        return static_cast<int>(both.size());
    };
    int alpha = -1;
    int beta = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int c = common(u, v);
            int& slot = g.has_edge(u, v) ? alpha : beta;
            if (slot == -1)
                slot = c;
            else if (slot != c)
                return std::nullopt;
        }
    }
    if (alpha == -1 || beta < 1)
        return std::nullopt; // no edges, complete, or a nonadjacent pair with no common neighbor
    return SrgParams{n, *d, alpha, beta};
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    const auto all_edges = g.edges();
    int best = -1;
    std::vector<int> dist(n), parent(n), queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        // Every non-tree edge closes a cycle through its BFS-tree branch point
        // of length at most dist[u] + dist[v] + 1; the minimum over all roots
        // is exactly the girth.
        for (auto [u, v] : all_edges) {
            if (dist[u] == kUnreachable || dist[v] == kUnreachable)
                continue;
            if (parent[u] == v || parent[v] == u)
                continue;
            int len = dist[u] + dist[v] + 1;
            if (best == -1 || len < best)
                best = len;
        }
    }
    if (best == -1)
        return std::nullopt;
    return best;
}

Graph complete_graph(int n) {
    if (n < 1)
        throw UnsupportedParameter("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw UnsupportedParameter("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int s, int t) {
    if (s < 1 || t < 1)
        throw UnsupportedParameter("complete bipartite graph needs both sides nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v)
            edges.emplace_back(u, s + v);
    return Graph(s + t, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            subsets.emplace_back(a, b);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d)
                edges.emplace_back(i, j);
        }
    }
    return Graph(10, edges);
}

Graph rooks_graph(int r) {
    if (r < 2)
        throw UnsupportedParameter("rook's graph needs r >= 2");
    std::vector<std::pair<int, int>> edges;
    auto id = [r](int i, int j) { return i * r + j; };
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            for (int k = j + 1; k < r; ++k)
                edges.emplace_back(id(i, j), id(i, k)); // same row
            for (int k = i + 1; k < r; ++k)
                edges.emplace_back(id(i, j), id(k, j)); // same column
        }
    }
    return Graph(r * r, edges);
}

Graph shrikhande_graph() {
    static const int dx[] = {1, 3, 0, 0, 1, 3};
    static const int dy[] = {0, 0, 1, 3, 1, 3};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 6; ++k)
                edges.emplace_back(i * 4 + j, ((i + dx[k]) % 4) * 4 + (j + dy[k]) % 4);
    return Graph(16, edges);
}

namespace {

bool is_prime(long long q) {
    if (q < 2)
        return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0)
            return false;
    return true;
}

} // namespace

Graph paley_graph(long long q) {
    if (!is_prime(q) || q % 4 != 1)
        throw UnsupportedParameter("Paley graph needs a prime q with q % 4 == 1, got " +
                                   std::to_string(q));
    std::vector<char> is_square(q, 0);
    for (long long x = 1; x < q; ++x)
        is_square[(x * x) % q] = 1;
    std::vector<std::pair<int, int>> edges;
    for (long long u = 0; u < q; ++u)
        for (long long v = u + 1; v < q; ++v)
            if (is_square[v - u])
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph(static_cast<int>(q), edges);
}

Graph hoffman_singleton_graph() {
    std::vector<std::pair<int, int>> edges;
    auto p = [](int h, int j) { return 5 * h + j; };
    auto q = [](int i, int j) { return 25 + 5 * i + j; };
    for (int h = 0; h < 5; ++h) {
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(p(h, j), p(h, (j + 1) % 5)); // pentagon
            edges.emplace_back(q(h, j), q(h, (j + 2) % 5)); // pentagram
        }
    }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                edges.emplace_back(p(h, j), q(i, (h * i + j) % 5));
    return Graph(50, edges);
}

namespace {

long long parse_generator_int(const std::string& text) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UnsupportedParameter("bad generator argument: '" + text + "'");
    }
}

} // namespace

Graph generate_named(const std::string& spec) {
    std::string name = spec;
    std::vector<long long> args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::size_t start = 0;
        while (true) {
            auto comma = rest.find(',', start);
            args.push_back(parse_generator_int(
                rest.substr(start, comma == std::string::npos ? comma : comma - start)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw UnsupportedParameter("generator '" + name + "' takes " + std::to_string(k) +
                                       " argument(s), got " + std::to_string(args.size()));
    };
    auto as_int = [](long long v) {
        if (v < 0 || v > 1'000'000)
            throw UnsupportedParameter("generator argument out of range: " + std::to_string(v));
        return static_cast<int>(v);
    };
    if (name == "complete") {
        want(1);
        return complete_graph(as_int(args[0]));
    }
    if (name == "cycle") {
        want(1);
        return cycle_graph(as_int(args[0]));
    }
    if (name == "bipartite") {
        want(2);
        return complete_bipartite_graph(as_int(args[0]), as_int(args[1]));
    }
    if (name == "rooks") {
        want(1);
        return rooks_graph(as_int(args[0]));
    }
    if (name == "paley") {
        want(1);
        return paley_graph(args[0]);
    }
    if (name == "petersen") {
        want(0);
        return petersen_graph();
    }
    if (name == "shrikhande") {
        want(0);
        return shrikhande_graph();
    }
    if (name == "hoffman-singleton") {
        want(0);
        return hoffman_singleton_graph();
    }
    throw UnsupportedParameter("unknown generator '" + name + "'");
}

Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n) {
    if (min_n < 2 || max_n < min_n)
        throw UnsupportedParameter("random graph needs 2 <= min_n <= max_n");
    while (true) {
        int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        int percent = 30 + static_cast<int>(rng() % 41);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < static_cast<std::uint64_t>(percent))
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        if (g.is_connected())
            return g;
    }
}

} // namespace ricci
