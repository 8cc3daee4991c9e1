#pragma once

#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Dense symmetric matrix, packed upper triangle.
class SymMatrix {
  public:
    explicit SymMatrix(int order);

    int order() const { return n_; }
    double at(int i, int j) const;
    void set(int i, int j, double value);

  private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<double> a_;
};

// I - D^{-1/2} A D^{-1/2}; throws DegreeZero on an isolated vertex.
SymMatrix normalized_laplacian(const Graph& g);

// All eigenvalues, ascending, via cyclic Jacobi sweeps. A sweep rotates away
// each off-diagonal entry above tol; throws NoConvergence if 100 sweeps are
// not enough.
std::vector<double> eigenvalues(SymMatrix m, double tol = 1e-12);

struct Lambda1Report {
    double lambda1 = 0.0;
    bool leq_bound_ok = false;    // lambda1 <= n/(n-1) + 1e-9
    bool lichnerowicz_ok = false; // lambda1 >= min curvature - 1e-9, when positive
    bool connected = false;
};

// Checks the spectral gap of the normalized Laplacian against the universal
// n/(n-1) bound and, when min_curvature is positive, the Lichnerowicz-style
// lower bound. The curvature bound reports true when not binding. Needs
// n >= 2; lambda1 is near 0 (and the bounds vacuous) when g is disconnected.
Lambda1Report lambda1_checks(const Graph& g, const Rational& min_curvature);

} // namespace ricci
