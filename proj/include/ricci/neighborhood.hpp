#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

// Partition of the vertices around an edge (x, y): the common neighbors
// (triangle), the exclusive neighbors of each endpoint, and the vertices at
// distance exactly 2 from both endpoints (pentagon). Together with {x, y}
// these six blocks are pairwise disjoint; they cover the whole graph iff it
// has diameter at most 2. Each list is sorted ascending.
struct CoreNeighborhood {
    int x = 0;
    int y = 0;
    std::vector<int> triangle;
    std::vector<int> exclusive_x;
    std::vector<int> exclusive_y;
    std::vector<int> pentagon;
};

CoreNeighborhood decompose(const Graph& g, int x, int y);

// Bipartite graph induced between the exclusive neighbors of x (left) and of
// y (right); edges are the host graph's edges between the two sides. Sides
// are indexed locally 0.. with parent ids kept for translation.
struct BipartiteGraph {
    std::vector<int> left_ids;  // ascending host vertex ids
    std::vector<int> right_ids; // ascending host vertex ids
    std::vector<std::vector<int>> adj; // adj[l] = sorted local right indices
    std::size_t edge_count = 0;

    int left_size() const { return static_cast<int>(left_ids.size()); }
    int right_size() const { return static_cast<int>(right_ids.size()); }
    std::vector<std::pair<int, int>> edges() const; // local (l, r), lexicographic
};

BipartiteGraph induced_bipartite(const Graph& g, const CoreNeighborhood& cn);

} // namespace ricci
