#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ricci/matching.hpp"
#include "ricci/neighborhood.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Finitely supported measure on graph vertices; only nonzero masses are
// stored. Probability measures (nonnegative, total 1) are what the curvature
// code feeds in, but the container itself does not enforce that.
struct Measure {
    std::map<int, Rational> mass;

    Rational at(int v) const;
    Rational total() const;
    bool is_probability() const;
};

// Mass 1 - eps at x, eps/deg(x) spread over the neighbors of x.
Measure lazy_measure(const Graph& g, int x, const Rational& eps);

// Coupling between source and target, stored as sparse nonzero entries.
struct TransportPlan {
    std::map<std::pair<int, int>, Rational> entries;
    Measure source;
    Measure target;

    // Sum of mass * distance; throws Unreachable on an infinite-distance pair.
    Rational cost(const Graph& g) const;
};

struct PlanCheck {
    bool ok = false;
    std::string detail; // empty when ok
};

// Marginal and nonnegativity check; pure arithmetic, no graph needed.
PlanCheck verify_plan(const TransportPlan& plan);

// Integer-valued vertex potential; vertices absent from values carry 0.
struct Potential {
    std::map<int, long long> values;

    long long at(int v) const;
};

struct LipschitzReport {
    bool ok = false;
    int u = -1; // witness pair when !ok
    int v = -1;
};

// |f(u) - f(v)| <= dist(u, v) over all pairs in one component; pairs in
// different components are unconstrained.
LipschitzReport check_lipschitz(const Graph& g, const Potential& f);

// Kantorovich lower bound sum f d(mu - nu); throws NotLipschitz when f fails
// the Lipschitz check. Never exceeds the cost of any feasible plan.
Rational dual_bound(const Graph& g, const Potential& f, const Measure& mu, const Measure& nu);

// Exact 1-Wasserstein distance together with both optimality certificates:
// a feasible plan of cost `value` and a 1-Lipschitz potential whose dual
// bound equals `value`. Equality is asserted before returning.
struct WassersteinResult {
    Rational value;
    TransportPlan plan;
    Potential potential;
};

WassersteinResult wasserstein(const Graph& g, const Measure& mu, const Measure& nu);

// Unmatched left/right vertices of h paired ascending by host id, as host-id
// pairs. For a maximum matching in the exclusive-neighbor graph of an edge,
// any such pair is nonadjacent; each pair is required to be at distance
// exactly 2 (throws InvalidPairing otherwise, e.g. when the host graph has
// diameter > 2).
std::vector<std::pair<int, int>> two_step_pairing(const Graph& g, const BipartiteGraph& h,
                                                  const Matching& m);

// Closed-form coupling between the half-lazy measures of a regular edge:
// 1/2 - 1/(2d) moves along the edge, 1/(2d) stays put on each common
// neighbor and both endpoints, 1/(2d) crosses each matched pair and each
// two-step pair. `pairing` uses host ids and must biject the unmatched left
// vertices onto the unmatched right ones along distance-2 pairs.
TransportPlan srg_plan(const Graph& g, const CoreNeighborhood& cn, const BipartiteGraph& h,
                       const Matching& m, const std::vector<std::pair<int, int>>& pairing);

// Matching optimal potential: +1 on x and the exclusive x-neighbors missed by
// alternating reach over the right side, -1 on the reachable right side, 0
// elsewhere. Requires m maximum.
Potential srg_potential(const CoreNeighborhood& cn, const BipartiteGraph& h, const Matching& m);

} // namespace ricci
