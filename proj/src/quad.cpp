#include "snp/quad.hpp"

#include <cmath>

#include "snp/constants.hpp"

namespace snp {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev start, Newton on P_n
        double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double rel_tol, int max_nodes) {
    QuadResult res;
    double prev = 0.0;
    bool have_prev = false;
    std::vector<double> x, w;
    for (int n = 64; n <= max_nodes; n *= 2) {
        gauss_legendre(n, x, w);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u = 0.5 * (x[i] + 1.0);       // (0,1)
            const double t = u / (1.0 - u);
            const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
            sum += 0.5 * w[i] * f(t) * jac;
        }
        res.value = sum;
        res.nodes = n;
        if (have_prev) {
            res.error_estimate = std::abs(sum - prev);
            const double scale = std::max(std::abs(sum), 1e-300);
            if (res.error_estimate / scale < rel_tol) {
                res.converged = true;
                return res;
            }
        }
        prev = sum;
        have_prev = true;
    }
    return res;
}

}  // namespace snp
