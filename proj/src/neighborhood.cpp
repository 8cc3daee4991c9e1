#include "ricci/neighborhood.hpp"

#include <algorithm>

namespace ricci {

CoreNeighborhood decompose(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y))
        throw NotAnEdge("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not an edge");
    CoreNeighborhood cn;
    cn.x = x;
    cn.y = y;
    const auto& nx = g.neighbors(x);
    const auto& ny = g.neighbors(y);
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                          std::back_inserter(cn.triangle));
    auto exclusive = [&](const std::vector<int>& own, const std::vector<int>& other, int mate) {
        std::vector<int> out;
        std::set_difference(own.begin(), own.end(), other.begin(), other.end(),
                            std::back_inserter(out));
        out.erase(std::remove(out.begin(), out.end(), mate), out.end());
        return out;
    };
    cn.exclusive_x = exclusive(nx, ny, y);
    cn.exclusive_y = exclusive(ny, nx, x);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.distance(x, v) == 2 && g.distance(y, v) == 2)
            cn.pentagon.push_back(v);
    return cn;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count);
    for (int l = 0; l < left_size(); ++l)
        for (int r : adj[l])
            out.emplace_back(l, r);
    return out;
}

BipartiteGraph induced_bipartite(const Graph& g, const CoreNeighborhood& cn) {
    BipartiteGraph h;
    h.left_ids = cn.exclusive_x;
    h.right_ids = cn.exclusive_y;
    h.adj.assign(h.left_ids.size(), {});
    for (int l = 0; l < h.left_size(); ++l) {
        for (int r = 0; r < h.right_size(); ++r) {
            if (g.has_edge(h.left_ids[l], h.right_ids[r])) {
                h.adj[l].push_back(r);
                ++h.edge_count;
            }
        }
    }
    return h;
}

} // namespace ricci
