#include "ricci/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace ricci {

SymMatrix::SymMatrix(int order) : n_(order) {
    if (order < 0)
        throw UnsupportedParameter("matrix order must be nonnegative");
    a_.assign(static_cast<std::size_t>(order) * (order + 1) / 2, 0.0);
}

std::size_t SymMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw UnsupportedParameter("matrix index out of range");
    if (i > j)
        std::swap(i, j);
    // Row-major packed upper triangle: row i starts after i full rows.
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + j;
}

double SymMatrix::at(int i, int j) const {
    return a_[index(i, j)];
}

void SymMatrix::set(int i, int j, double value) {
    a_[index(i, j)] = value;
}

SymMatrix normalized_laplacian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> inv_sqrt_deg(n);
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0)
            throw DegreeZero("vertex " + std::to_string(v) + " is isolated");
        inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    SymMatrix L(n);
    for (int v = 0; v < n; ++v) {
        L.set(v, v, 1.0);
        for (int w : g.neighbors(v))
            if (v < w)
                L.set(v, w, -inv_sqrt_deg[v] * inv_sqrt_deg[w]);
    }
    return L;
}

std::vector<double> eigenvalues(SymMatrix m, double tol) {
    const int n = m.order();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off_max = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off_max = std::max(off_max, std::abs(m.at(p, q)));
        if (off_max <= tol) {
            std::vector<double> eigs(n);
            for (int i = 0; i < n; ++i)
                eigs[i] = m.at(i, i);
            std::sort(eigs.begin(), eigs.end());
            return eigs;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) <= tol)
                    continue;
                double app = m.at(p, p);
                double aqq = m.at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                m.set(p, p, app - t * apq);
                m.set(q, q, aqq + t * apq);
                m.set(p, q, 0.0);
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    double akp = m.at(k, p);
                    double akq = m.at(k, q);
                    m.set(k, p, c * akp - s * akq);
                    m.set(k, q, s * akp + c * akq);
                }
            }
        }
    }
    throw NoConvergence("Jacobi sweeps did not reach tolerance within 100 rounds");
}

Lambda1Report lambda1_checks(const Graph& g, const Rational& min_curvature) {
    const int n = g.vertex_count();
    if (n < 2)
        throw UnsupportedParameter("spectral gap needs at least two vertices");
    std::vector<double> eigs = eigenvalues(normalized_laplacian(g));
    Lambda1Report report;
    report.connected = g.is_connected();
    report.lambda1 = eigs[1];
    double bound = static_cast<double>(n) / (n - 1);
    report.leq_bound_ok = report.lambda1 <= bound + 1e-9;
    report.lichnerowicz_ok = !(Rational(0) < min_curvature) ||
                             report.lambda1 >= min_curvature.to_double() - 1e-9;
    return report;
}

} // namespace ricci
