#pragma once

#include <functional>
#include <vector>

namespace snp {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |last refinement change|
    int nodes = 0;
    bool converged = false;
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integral of f over [0, inf), mapped to (0,1) with t = u/(1-u). Node count
// doubles until the relative change drops below rel_tol or max_nodes is hit.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double rel_tol, int max_nodes);

}  // namespace snp
