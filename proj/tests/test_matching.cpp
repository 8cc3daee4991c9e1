#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ricci/errors.hpp"
#include "ricci/matching.hpp"

using namespace ricci;
using ricci::testing::oracle_matching_size;

namespace {

BipartiteGraph make_bipartite(std::vector<int> left_ids, std::vector<int> right_ids,
                              std::vector<std::vector<int>> adj) {
    BipartiteGraph h;
    h.left_ids = std::move(left_ids);
    h.right_ids = std::move(right_ids);
    h.adj = std::move(adj);
    for (const auto& row : h.adj)
        h.edge_count += row.size();
    return h;
}

BipartiteGraph random_bipartite(std::mt19937_64& rng, int max_side) {
    int l = 1 + static_cast<int>(rng() % max_side);
    int r = 1 + static_cast<int>(rng() % max_side);
    int percent = static_cast<int>(rng() % 101);
    std::vector<std::vector<int>> adj(l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j)
            if (static_cast<int>(rng() % 100) < percent)
                adj[i].push_back(j);
    std::vector<int> left(l), right(r);
    for (int i = 0; i < l; ++i)
        left[i] = i;
    for (int j = 0; j < r; ++j)
        right[j] = 100 + j;
    return make_bipartite(std::move(left), std::move(right), std::move(adj));
}

bool matching_is_valid(const BipartiteGraph& h, const Matching& m) {
    std::set<int> used;
    for (int i = 0; i < h.left_size(); ++i) {
        int j = m.left_to_right[i];
        if (j < 0)
            continue;
        if (!std::binary_search(h.adj[i].begin(), h.adj[i].end(), j))
            return false;
        if (!used.insert(j).second)
            return false;
        if (m.right_to_left[j] != i)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("perfect matching on fully connected sides") {
    auto h = make_bipartite({0, 1, 2}, {3, 4, 5},
                            {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    auto m = maximum_matching(h);
    CHECK(m.size() == 3);
    CHECK(matching_is_valid(h, m));
    CHECK_FALSE(has_augmenting_path(h, m));
    // Pairs are local indices into the two sides, ascending in the left.
    auto pairs = m.pairs();
    CHECK(pairs.size() == 3);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs[i].first == static_cast<int>(i));
        CHECK(pairs[i].second >= 0);
        CHECK(pairs[i].second < 3);
    }
}

TEST_CASE("bottleneck right vertex caps the matching at one") {
    auto h = make_bipartite({10, 11, 12}, {20}, {{0}, {0}, {0}});
    auto m = maximum_matching(h);
    CHECK(m.size() == 1);

    auto hall = hall_check(h, Side::Left);
    CHECK_FALSE(hall.satisfied);
    // The witness is a set of left vertices with too small a neighborhood.
    CHECK(hall.witness.size() == 3);

    auto ci = counting_identity_check(h, m, Side::Left);
    CHECK(ci.holds);
    CHECK(ci.side_size == 3);
    CHECK(ci.matching_size == 1);
    CHECK(ci.reach_s == 3);
    CHECK(ci.reach_t == 1);
}

TEST_CASE("empty matching on a connected graph admits an augmenting path") {
    auto h = make_bipartite({0, 1}, {2, 3}, {{0, 1}, {0, 1}});
    Matching empty;
    empty.left_to_right.assign(2, -1);
    empty.right_to_left.assign(2, -1);
    CHECK(has_augmenting_path(h, empty));
    CHECK(maximum_matching(h).size() == 2);
}

TEST_CASE("alternating reach uses any edge leaving S and matched edges back") {
    // Lefts 0,1 both see right 0 only; left 2 sees right 1.
    auto h = make_bipartite({0, 1, 2}, {50, 51}, {{0}, {0}, {1}});
    auto m = maximum_matching(h);
    CHECK(m.size() == 2);
    auto reach = alternating_reach(h, m, Side::Left);
    CHECK(reach.from_side == Side::Left);
    // One left is unmatched, it reaches right 0 and its partner.
    std::set<int> rs(reach.reach_s.begin(), reach.reach_s.end());
    std::set<int> rt(reach.reach_t.begin(), reach.reach_t.end());
    CHECK(rs == std::set<int>{0, 1});
    CHECK(rt == std::set<int>{0});

    // Every neighbor of a reached S vertex must itself be reached.
    for (int i : reach.reach_s)
        for (int j : h.adj[i])
            CHECK(rt.count(j) == 1);
}

TEST_CASE("matching size is invariant under reversing the left order") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 80; ++trial) {
        auto h = random_bipartite(rng, 9);
        auto m = maximum_matching(h);
        CHECK(matching_is_valid(h, m));

        BipartiteGraph rev = h;
        std::reverse(rev.adj.begin(), rev.adj.end());
        std::reverse(rev.left_ids.begin(), rev.left_ids.end());
        CHECK(maximum_matching(rev).size() == m.size());
    }
}

TEST_CASE("matching size matches the exhaustive oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        auto h = random_bipartite(rng, 9);
        auto m = maximum_matching(h);
        CAPTURE(trial);
        CHECK(m.size() == oracle_matching_size(h));
        CHECK_FALSE(has_augmenting_path(h, m));
    }
}

TEST_CASE("counting identity holds from both sides on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = random_bipartite(rng, 8);
        auto m = maximum_matching(h);
        for (Side s : {Side::Left, Side::Right}) {
            auto ci = counting_identity_check(h, m, s);
            CAPTURE(trial);
            CHECK(ci.holds);
            CHECK(ci.reach_s == ci.reach_t + ci.side_size - ci.matching_size);
        }
    }
}

TEST_CASE("counting identity rejects non-maximum matchings") {
    auto h = make_bipartite({0, 1}, {2, 3}, {{0, 1}, {0, 1}});
    Matching empty;
    empty.left_to_right.assign(2, -1);
    empty.right_to_left.assign(2, -1);
    CHECK_THROWS_AS(counting_identity_check(h, empty, Side::Left), PreconditionViolated);
}

TEST_CASE("deficiency verdicts agree with the matching size") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = random_bipartite(rng, 7);
        auto m = maximum_matching(h);
        for (Side s : {Side::Left, Side::Right}) {
            int side = s == Side::Left ? h.left_size() : h.right_size();
            auto hall = hall_check(h, s);
            CAPTURE(trial);
            CHECK(hall.satisfied == (m.size() == side));
            if (hall.satisfied)
                continue;
            // The witness has fewer neighbors than members.
            std::set<int> neighborhood;
            for (int i : hall.witness) {
                if (s == Side::Left) {
                    for (int j : h.adj[i])
                        neighborhood.insert(j);
                } else {
                    for (int l = 0; l < h.left_size(); ++l)
                        if (std::binary_search(h.adj[l].begin(), h.adj[l].end(), i))
                            neighborhood.insert(l);
                }
            }
            CHECK(neighborhood.size() < hall.witness.size());
        }
    }
}
