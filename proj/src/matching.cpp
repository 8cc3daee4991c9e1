#include "ricci/matching.hpp"

#include <algorithm>
#include <functional>

namespace ricci {

int Matching::size() const {
    return static_cast<int>(std::count_if(left_to_right.begin(), left_to_right.end(),
                                          [](int r) { return r >= 0; }));
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < static_cast<int>(left_to_right.size()); ++l)
        if (left_to_right[l] >= 0)
            out.emplace_back(l, left_to_right[l]);
    return out;
}

Matching maximum_matching(const BipartiteGraph& h) {
    Matching m;
    m.left_to_right.assign(h.left_size(), -1);
    m.right_to_left.assign(h.right_size(), -1);
    std::vector<char> visited(h.right_size());
    std::function<bool(int)> try_augment = [&](int l) {
        for (int r : h.adj[l]) {
            if (visited[r])
                continue;
            visited[r] = 1;
            if (m.right_to_left[r] == -1 || try_augment(m.right_to_left[r])) {
                m.left_to_right[l] = r;
                m.right_to_left[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < h.left_size(); ++l) {
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(l);
    }
    if (has_augmenting_path(h, m))
        throw MathInconsistency("matching reported maximum but an augmenting path exists");
    return m;
}

bool has_augmenting_path(const BipartiteGraph& h, const Matching& m) {
    // BFS over alternating paths from the unmatched left vertices; any
    // augmenting path has one unmatched endpoint on each side.
    std::vector<char> seen_left(h.left_size()), seen_right(h.right_size());
    std::vector<int> queue;
    for (int l = 0; l < h.left_size(); ++l) {
        if (m.left_to_right[l] == -1) {
            seen_left[l] = 1;
            queue.push_back(l);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int l = queue[head];
        for (int r : h.adj[l]) {
            if (r == m.left_to_right[l] || seen_right[r])
                continue;
            seen_right[r] = 1;
            int back = m.right_to_left[r];
            if (back == -1)
                return true;
            if (!seen_left[back]) {
                seen_left[back] = 1;
                queue.push_back(back);
            }
        }
    }
    return false;
}

namespace {

// Adjacency and matching arrays of h viewed with side s as the source side.
struct SideView {
    std::vector<std::vector<int>> s_adj;
    std::vector<int> s_partner; // -1 when unmatched
    std::vector<int> t_partner;
};

SideView view_from(const BipartiteGraph& h, const Matching& m, Side s) {
    SideView v;
    if (s == Side::Left) {
        v.s_adj = h.adj;
        v.s_partner = m.left_to_right;
        v.t_partner = m.right_to_left;
    } else {
        v.s_adj.assign(h.right_size(), {});
        for (int l = 0; l < h.left_size(); ++l)
            for (int r : h.adj[l])
                v.s_adj[r].push_back(l);
        v.s_partner = m.right_to_left;
        v.t_partner = m.left_to_right;
    }
    return v;
}

} // namespace

AlternatingReach alternating_reach(const BipartiteGraph& h, const Matching& m, Side s) {
    SideView v = view_from(h, m, s);
    const int ns = static_cast<int>(v.s_adj.size());
    std::vector<char> seen_s(ns), seen_t(v.t_partner.size());
    std::vector<int> queue;
    for (int u = 0; u < ns; ++u) {
        if (v.s_partner[u] == -1) {
            seen_s[u] = 1;
            queue.push_back(u);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : v.s_adj[u]) {
            if (w == v.s_partner[u] || seen_t[w])
                continue;
            seen_t[w] = 1;
            int back = v.t_partner[w];
            if (back != -1 && !seen_s[back]) {
                seen_s[back] = 1;
                queue.push_back(back);
            }
        }
    }
    AlternatingReach out;
    out.from_side = s;
    for (int u = 0; u < ns; ++u)
        if (seen_s[u])
            out.reach_s.push_back(u);
    for (int w = 0; w < static_cast<int>(seen_t.size()); ++w)
        if (seen_t[w])
            out.reach_t.push_back(w);
    return out;
}

CountingIdentity counting_identity_check(const BipartiteGraph& h, const Matching& m, Side s) {
    if (has_augmenting_path(h, m))
        throw PreconditionViolated("counting identity needs a maximum matching");
    AlternatingReach reach = alternating_reach(h, m, s);
    CountingIdentity out;
    out.reach_s = static_cast<int>(reach.reach_s.size());
    out.reach_t = static_cast<int>(reach.reach_t.size());
    out.side_size = s == Side::Left ? h.left_size() : h.right_size();
    out.matching_size = m.size();
    out.holds = out.reach_s == out.reach_t + out.side_size - out.matching_size;
    return out;
}

HallResult hall_check(const BipartiteGraph& h, Side s) {
    Matching m = maximum_matching(h);
    const int side_size = s == Side::Left ? h.left_size() : h.right_size();
    if (m.size() == side_size)
        return {true, {}};
    // Deficiency witness: the S-vertices reachable by alternating paths from
    // the unmatched ones. All their neighbors are matched back into the same
    // set, so the neighborhood is smaller than the witness.
    AlternatingReach reach = alternating_reach(h, m, s);
    SideView v = view_from(h, m, s);
    std::vector<char> nbr(v.t_partner.size());
    for (int u : reach.reach_s)
        for (int w : v.s_adj[u])
            nbr[w] = 1;
    auto nbr_count = std::count(nbr.begin(), nbr.end(), char(1));
    if (nbr_count >= static_cast<long>(reach.reach_s.size()))
        throw MathInconsistency("Hall witness has enough neighbors after all");
    return {false, reach.reach_s};
}

} // namespace ricci
