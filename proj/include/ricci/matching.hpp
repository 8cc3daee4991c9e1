#pragma once

#include <utility>
#include <vector>

#include "ricci/neighborhood.hpp"

namespace ricci {

enum class Side { Left, Right };

// Matching in a BipartiteGraph, stored in local indices; -1 means unmatched.
struct Matching {
    std::vector<int> left_to_right;
    std::vector<int> right_to_left;

    int size() const;
    // Matched (l, r) local pairs, ascending in l.
    std::vector<std::pair<int, int>> pairs() const;
};

// Deterministic maximum matching: augments from left vertices in ascending
// order, scanning neighbors in ascending order. The result is certified
// maximum via Berge's lemma before it is returned.
Matching maximum_matching(const BipartiteGraph& h);

// True iff an alternating path joins two unmatched vertices, i.e. the
// matching is not maximum (Berge's lemma).
bool has_augmenting_path(const BipartiteGraph& h, const Matching& m);

// Vertices reachable from the unmatched vertices of side S by alternating
// paths that leave S on non-matching edges. reach_s holds local indices on
// side S, reach_t on the other side; both sorted ascending. For a maximum
// matching every vertex of reach_t is matched.
struct AlternatingReach {
    Side from_side = Side::Left;
    std::vector<int> reach_s;
    std::vector<int> reach_t;
};

AlternatingReach alternating_reach(const BipartiteGraph& h, const Matching& m, Side s);

// For a maximum matching, |reach over S| == |reach over T| + |S| - |M|.
struct CountingIdentity {
    int reach_s = 0;
    int reach_t = 0;
    int side_size = 0;
    int matching_size = 0;
    bool holds = false;
};

// Requires m maximum (Berge-checked); throws PreconditionViolated otherwise.
CountingIdentity counting_identity_check(const BipartiteGraph& h, const Matching& m, Side s);

// Hall's condition for a matching saturating side S. When it fails, witness
// is a subset W of S (local indices) with fewer neighbors than |W|.
struct HallResult {
    bool satisfied = false;
    std::vector<int> witness;
};

HallResult hall_check(const BipartiteGraph& h, Side s);

} // namespace ricci
