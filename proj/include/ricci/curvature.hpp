#pragma once

#include <optional>
#include <vector>

#include "ricci/transport.hpp"

namespace ricci {

enum class Method { Flow, SrgFormula, Both };

// Primal/dual pair for one transport problem; gap_zero records that both
// sides met the flow value exactly.
struct Certificate {
    Rational plan_cost;
    Rational dual_value;
    bool gap_zero = false;
};

struct CurvatureReport {
    int u = 0;
    int v = 0;
    Rational eps;       // laziness at which the transport problem was solved
    Rational w1;        // distance between the two lazy measures at eps
    Rational kappa_eps; // 1 - w1
    Rational condensed; // limit of kappa/eps as eps -> 0
    Method method = Method::Flow;
    Certificate certificate;
    std::optional<int> matching_size; // present on the certified route
};

// Coarse curvature at laziness eps: 1 - W(m_x^eps, m_y^eps) for an edge xy.
Rational kappa_eps(const Graph& g, int x, int y, const Rational& eps);

// Condensed curvature of a regular graph's edge: kappa is linear in eps up
// to d/(d+1), so the limit slope is 2 * kappa at eps = 1/2. The optional
// flag re-derives the slope at eps = 1/4 and insists the two agree.
Rational condensed(const Graph& g, int x, int y, bool verify_linearity = false);

// Condensed curvature on any graph. kappa is a concave piecewise-linear
// function of eps vanishing at 0, so once two successive halvings of eps
// give the same chord slope, that slope is the exact limit.
Rational condensed_limit(const Graph& g, int x, int y);

// (alpha + 2)/d - (exclusive - m)/d where exclusive = d - alpha - 1.
Rational srg_formula(const SrgParams& p, int matching_size);

// Certified route for edges of regular graphs with diameter <= 2: builds the
// structured plan and the matching potential, pinches them against the flow
// value, and cross-checks the closed formula. Every disagreement throws
// MathInconsistency.
CurvatureReport srg_curvature_certified(const Graph& g, int x, int y);

// One edge, routed automatically: certified when the graph is regular with
// diameter <= 2, flow otherwise.
CurvatureReport edge_report(const Graph& g, int x, int y);

struct ProfileSummary {
    Rational min_value;
    Rational max_value;
    Rational mean_value;
    bool uniform = false;
};

// Condensed curvature of every edge (ascending); parallel across edges when
// RICCI_THREADS asks for it. Summary fields are zero on edgeless graphs.
struct CurvatureProfile {
    std::vector<CurvatureReport> reports;
    ProfileSummary summary;
};

CurvatureProfile curvature_profile(const Graph& g);

struct RigidityResult {
    bool is_complete = false;
    std::optional<Rational> min_edge_curvature; // nullopt when no edges
    bool consistent = false; // is_complete iff every edge curvature exceeds 1
};

// Tests the discrete Bonnet-Myers-style rigidity: a connected graph is
// complete exactly when all its edges have condensed curvature above 1.
RigidityResult rigidity_check(const Graph& g);

// 2/d for girth-4 strongly regular graphs, 3/d - 1 for girth 5; nullopt for
// other girths or non-strongly-regular input.
std::optional<Rational> girth_special_cases(const Graph& g);

struct ConjectureRow {
    long long q = 0;
    SrgParams params;
    bool perfect_matching_everywhere = false;
    bool uniform = false;
    Rational curvature;   // first edge's value; uniform says whether all match
    Rational conjectured; // 1/2 + 1/(2 beta)
    bool agrees = false;
};

// Observational scan of Paley graphs against the conjectured uniform value;
// rows are reported, never asserted. Each q must be a prime with q % 4 == 1
// and beta = (q - 1)/4 >= 2.
std::vector<ConjectureRow> conjecture_scan(const std::vector<long long>& qs);

} // namespace ricci
