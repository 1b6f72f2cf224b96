#include "snp/sn_potential.hpp"

#include <algorithm>
#include <cmath>

#include "snp/constants.hpp"
#include "snp/errors.hpp"
#include "snp/quad.hpp"
#include "snp/rng.hpp"

namespace snp {

namespace c = constants;

double sn_frequency(double atomic_mass, double delta_x_int) {
    if (!(atomic_mass > 0.0) || !(delta_x_int > 0.0)) {
        throw ConfigError("sn_frequency: atomic mass and delta_x_int must be positive");
    }
    const double dx3 = delta_x_int * delta_x_int * delta_x_int;
    return c::gravitation * atomic_mass / (6.0 * std::sqrt(c::pi) * dx3);
}

double sn_frequency(const SnModel& model) {
    return sn_frequency(model.atomic_mass, model.delta_x_int);
}

double omega_q(double omega_m, double omega_sn) {
    if (omega_m < 0.0 || omega_sn < 0.0) {
        throw ConfigError("omega_q: frequencies must be non-negative");
    }
    return std::hypot(omega_m, omega_sn);
}

namespace {

// One factor of the axis-factorized reduction: the Gaussian average of
// exp(-s^2 (a - u)^2) over u ~ N(0,1),
//   g(a, s) = exp(-a^2 s^2 / (1 + 2 s^2)) / sqrt(1 + 2 s^2).
// Applying 1/r = (2/sqrt(pi)) Int_0^inf exp(-r^2 t^2) dt axis by axis turns the
// 3D kernel into a 1D integral with no singular point.
inline double axis_factor(double a, double s) {
    const double s2 = s * s;
    return std::exp(-a * a * s2 / (1.0 + 2.0 * s2)) / std::sqrt(1.0 + 2.0 * s2);
}

// d/dx of the x-axis factor, for forces.
inline double axis_factor_dx(double a, double s) {
    const double s2 = s * s;
    return axis_factor(a, s) * (-2.0 * a * s2 / (1.0 + 2.0 * s2));
}

double reduced_integral(double x, double y, double z, double c1, double c2,
                        const SelfGravityOptions& opts, bool derivative,
                        SelfGravityResult* diag) {
    auto f = [&](double t) {
        const double fx = derivative ? axis_factor_dx(x, t) : axis_factor(x, t);
        return fx * axis_factor(y, t / c1) * axis_factor(z, t / c2);
    };
    QuadResult q = integrate_semi_infinite(f, opts.rel_tol, opts.max_nodes);
    if (!q.converged) {
        throw NumericalError("self-gravity quadrature did not reach rel_tol=" +
                             std::to_string(opts.rel_tol) + "; achieved " +
                             std::to_string(q.error_estimate / std::max(std::abs(q.value), 1e-300)) +
                             " with " + std::to_string(q.nodes) + " nodes");
    }
    if (diag) {
        diag->error_estimate = std::max(diag->error_estimate, q.error_estimate);
        diag->nodes = std::max(diag->nodes, q.nodes);
    }
    return 2.0 / std::sqrt(c::pi) * q.value;
}

double kernel(double x_tilde, double c1, double c2, const SelfGravityOptions& opts,
              double offset, bool derivative, SelfGravityResult* diag) {
    const double x = x_tilde - offset;
    if (!opts.marginalize) {
        return reduced_integral(x, 0.0, 0.0, c1, c2, opts, derivative, diag);
    }
    Rng rng(opts.nuisance_seed, 0);
    double sum = 0.0;
    for (int k = 0; k < opts.n_nuisance; ++k) {
        const double y = rng.normal();
        const double z = rng.normal();
        sum += reduced_integral(x, y, z, c1, c2, opts, derivative, diag);
    }
    return sum / opts.n_nuisance;
}

}  // namespace

SelfGravityResult self_gravity_integral(double x_tilde, double c1, double c2,
                                        const SelfGravityOptions& opts, double offset) {
    if (!(c1 >= 1.0) || !(c2 >= 1.0)) {
        throw ConfigError("self_gravity_integral: c1, c2 must be >= 1");
    }
    SelfGravityResult res;
    res.mode = opts.marginalize ? "marginalize" : "slice";
    res.value = kernel(x_tilde, c1, c2, opts, offset, false, &res);
    return res;
}

double self_gravity_integral_mc(double x_tilde, double c1, double c2,
                                std::uint64_t n_samples, std::uint64_t seed, double offset) {
    Rng rng(seed, 1);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        const double ux = rng.normal();
        const double uy = rng.normal();
        const double uz = rng.normal();
        const double dx = x_tilde - offset - ux;
        const double dy = uy / c1;
        const double dz = uz / c2;
        sum += 1.0 / std::sqrt(dx * dx + dy * dy + dz * dz);
    }
    return sum / static_cast<double>(n_samples);
}

GaussianFit fit_gaussian_potential(const std::vector<double>& x, const std::vector<double>& y,
                                   int max_iterations, double tol) {
    if (x.size() != y.size() || x.size() < 21) {
        throw ConfigError("fit_gaussian_potential: need >= 21 symmetric samples");
    }
    const double ymax = *std::max_element(y.begin(), y.end());
    const double ymin = *std::min_element(y.begin(), y.end());
    if (ymax == ymin) throw NumericalError("fit_gaussian_potential: degenerate flat curve");

    // moment-based start: b1 from the half-maximum crossing
    double a = ymax;
    double b1 = 1.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (x[i] >= 0.0 && y[i] >= 0.5 * ymax && y[i + 1] < 0.5 * ymax) {
            b1 = x[i] * x[i] / (2.0 * std::log(2.0));
            break;
        }
    }
    if (!(b1 > 0.0)) b1 = 1.0;

    GaussianFit fit;
    double lambda = 1e-3;  // Levenberg damping on the normal equations
    auto cost = [&](double A, double B) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = A * std::exp(-x[i] * x[i] / (2.0 * B)) - y[i];
            s += r * r;
        }
        return s;
    };
    double prev_cost = cost(a, b1);
    bool converged = false;
    int it = 0;
    for (; it < max_iterations && !converged; ++it) {
        double jtj00 = 0, jtj01 = 0, jtj11 = 0, jtr0 = 0, jtr1 = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double e = std::exp(-x[i] * x[i] / (2.0 * b1));
            const double r = a * e - y[i];
            const double j0 = e;                                    // d/dA
            const double j1 = a * e * x[i] * x[i] / (2.0 * b1 * b1);  // d/db1
            jtj00 += j0 * j0;
            jtj01 += j0 * j1;
            jtj11 += j1 * j1;
            jtr0 += j0 * r;
            jtr1 += j1 * r;
        }
        const double d00 = jtj00 * (1.0 + lambda);
        const double d11 = jtj11 * (1.0 + lambda);
        const double det = d00 * d11 - jtj01 * jtj01;
        if (det == 0.0) break;
        const double da = (-jtr0 * d11 + jtr1 * jtj01) / det;
        const double db = (-jtr1 * d00 + jtr0 * jtj01) / det;
        double anew = a + da, bnew = b1 + db;
        if (!(bnew > 0.0)) bnew = b1 * 0.5;
        const double cnew = cost(anew, bnew);
        if (cnew <= prev_cost) {
            a = anew;
            b1 = bnew;
            lambda = std::max(lambda * 0.3, 1e-12);
            const double rel = std::abs(prev_cost - cnew) / std::max(prev_cost, 1e-300);
            prev_cost = cnew;
            if (rel < tol) converged = true;
        } else {
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
    }
    if (!converged) {
        throw NumericalError("fit_gaussian_potential: no convergence after " +
                             std::to_string(it) + " iterations");
    }
    fit.amplitude = a;
    fit.width_b1 = b1;
    fit.iterations = it;
    double maxres = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = a * std::exp(-x[i] * x[i] / (2.0 * b1)) - y[i];
        maxres = std::max(maxres, std::abs(r));
    }
    fit.max_rel_residual = maxres / std::abs(ymax);
    fit.converged = true;
    return fit;
}

double geometric_factor(const std::vector<double>& radii) {
    if (radii.empty()) throw ConfigError("geometric_factor: empty radius list");
    double inv = 0.0;
    for (double r : radii) {
        if (!(r > 0.0)) throw ConfigError("geometric_factor: radii must be positive");
        inv += 1.0 / r;
    }
    return static_cast<double>(radii.size()) / inv;
}

SnTorque effective_sn_torque(double theta, double sigma_theta, const SnModel& model,
                             const PendulumParams& pendulum) {
    if (!(sigma_theta > 0.0)) throw ConfigError("effective_sn_torque: sigma_theta must be positive");
    if (!(model.fit_a > 0.0) || !(model.fit_b1 > 0.0) || !(model.r_tilde > 0.0)) {
        throw ConfigError("effective_sn_torque: model needs fit_a, fit_b1, r_tilde");
    }
    const double e0 = model.fit_a * c::gravitation * pendulum.mass * model.atomic_mass /
                      (model.r_tilde * sigma_theta);
    const double gauss = std::exp(-theta * theta / (2.0 * model.fit_b1 * sigma_theta * sigma_theta));
    SnTorque out;
    out.energy = -e0 * gauss;
    out.torque = -e0 * gauss * theta / (model.fit_b1 * sigma_theta * sigma_theta);
    return out;
}

PotentialCurve mutual_gravity_curve(const std::vector<double>& x_grid_m, const SnModel& model,
                                    int neighbors, const SelfGravityOptions& opts) {
    if (neighbors < 0) throw ConfigError("mutual_gravity_curve: neighbors must be >= 0");
    if (!(model.sigma_x > 0.0) || !(model.sigma_y > 0.0) || !(model.sigma_z > 0.0)) {
        throw ConfigError("mutual_gravity_curve: model needs sigma_x, sigma_y, sigma_z");
    }
    if (neighbors > 0 && !(model.lattice_const > 0.0)) {
        throw ConfigError("mutual_gravity_curve: neighbors > 0 needs lattice_const");
    }
    const double c1 = model.c1(), c2 = model.c2();
    const double prefactor = c::gravitation * model.atomic_mass * model.atomic_mass / model.sigma_x;
    const double a_over_sigma = neighbors > 0 ? model.lattice_const / model.sigma_x : 0.0;

    PotentialCurve curve;
    curve.abscissa = x_grid_m;
    curve.potential.resize(x_grid_m.size());
    curve.force.resize(x_grid_m.size());
    curve.regime_tag = neighbors > 0 ? "with_mutual" : "self_only";

    SelfGravityResult diag;
    for (std::size_t i = 0; i < x_grid_m.size(); ++i) {
        const double xt = x_grid_m[i] / model.sigma_x;
        double e = 0.0, de = 0.0;
        for (int k = -neighbors; k <= neighbors; ++k) {
            const double off = k * a_over_sigma;
            e += kernel(xt, c1, c2, opts, off, false, &diag);
            de += kernel(xt, c1, c2, opts, off, true, &diag);
        }
        curve.potential[i] = -prefactor * e;
        // d/dx = (1/sigma_x) d/dx_tilde
        curve.force[i] = prefactor * de / model.sigma_x;
    }
    curve.metadata["mode"] = opts.marginalize ? "marginalize" : "slice";
    curve.metadata["force_method"] = "analytic_under_integral";
    curve.metadata["neighbors"] = std::to_string(neighbors);
    curve.metadata["rel_tol"] = std::to_string(opts.rel_tol);
    curve.metadata["max_quad_error"] = std::to_string(diag.error_estimate);
    if (neighbors > 0) curve.metadata["a_over_sigma_x"] = std::to_string(a_over_sigma);
    return curve;
}

}  // namespace snp
