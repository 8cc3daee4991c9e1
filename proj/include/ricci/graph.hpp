#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci {

// Marker for "no finite distance" in distance matrices and diameters.
inline constexpr int kUnreachable = -1;

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; adjacency lists are sorted ascending. The all-pairs distance
// matrix is computed on first use and cached (thread safe).
class Graph {
  public:
    // Rejects loops and out-of-range endpoints; duplicate edges collapse.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // BFS distance; kUnreachable when u and v are in different components.
    int distance(int u, int v) const;
    const std::vector<std::vector<int>>& distance_matrix() const;

    bool is_connected() const;
    // Common degree if all vertices share one, otherwise nullopt.
    std::optional<int> regular_degree() const;
    // Largest distance when g is connected; kUnreachable otherwise.
    int diameter() const;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;

    struct DistanceCache {
        std::once_flag once;
        std::vector<std::vector<int>> d;
    };
    std::shared_ptr<DistanceCache> cache_ = std::make_shared<DistanceCache>();
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Strong regularity parameters: n vertices, degree d, adjacent pairs share
// alpha common neighbors, nonadjacent pairs share beta >= 1.
struct SrgParams {
    int n = 0;
    int d = 0;
    int alpha = 0;
    int beta = 0;

    // d(d - alpha - 1) == (n - d - 1) beta, a counting identity every strongly
    // regular graph satisfies.
    bool feasible() const;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Returns parameters iff g is connected, regular, and the common-neighbor
// counts are constant over adjacent pairs and over nonadjacent pairs with
// beta >= 1. Complete graphs have no nonadjacent pair and yield nullopt.
std::optional<SrgParams> detect_srg(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Generators. Each documents its canonical vertex labeling so that outputs
// are reproducible byte for byte.

Graph complete_graph(int n);
Graph cycle_graph(int n);                      // n >= 3
Graph complete_bipartite_graph(int s, int t);  // left 0..s-1, right s..s+t-1

// Kneser graph K(5,2): vertices are 2-subsets of {0..4} in lexicographic
// order ({0,1}=0, {0,2}=1, ..., {3,4}=9), edges join disjoint subsets.
Graph petersen_graph();

// r x r rook's graph: cell (i, j) is vertex i*r + j; edges join cells in a
// common row or column.
Graph rooks_graph(int r);

// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
// cell (i, j) is vertex i*4 + j. Strongly regular (16, 6, 2, 2).
Graph shrikhande_graph();

// Paley graph on GF(q) for prime q ≡ 1 (mod 4); vertices are field elements,
// edges join pairs whose difference is a nonzero square. Prime powers that
// are not prime are rejected.
Graph paley_graph(long long q);

// The unique (50, 7, 0, 1) strongly regular graph. Labeling: pentagon P_h has
// vertices 5h+j (j ~ j±1 mod 5) for h in 0..4, pentagram Q_i has vertices
// 25+5i+j (j ~ j±2 mod 5), and P_h[j] ~ Q_i[h*i + j mod 5].
Graph hoffman_singleton_graph();

// Builds a generator by name: "petersen", "shrikhande", "hoffman-singleton",
// "complete:n", "cycle:n", "bipartite:s,t", "rooks:r", "paley:q".
Graph generate_named(const std::string& spec);

// Erdos-Renyi-style connected graph: n drawn uniformly from [min_n, max_n],
// edge percentage uniformly from [30, 70], each pair kept when
// rng() % 100 < percentage; the draw repeats until the result is connected.
Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n);

} // namespace ricci
