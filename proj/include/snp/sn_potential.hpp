#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "snp/params.hpp"

namespace snp {

// SN frequency scale of a lattice material: G m / (6 sqrt(pi) dx^3).
double sn_frequency(double atomic_mass, double delta_x_int);
double sn_frequency(const SnModel& model);

// Quantum-branch resonance sqrt(omega_m^2 + omega_sn^2).
double omega_q(double omega_m, double omega_sn);

struct SelfGravityOptions {
    double rel_tol = 1e-4;
    int max_nodes = 20000;
    bool marginalize = true;      // average over nuisance (y,z) draws; else slice at y=z=0
    int n_nuisance = 64;
    std::uint64_t nuisance_seed = 9001;
};

struct SelfGravityResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int nodes = 0;
    std::string mode;             // "marginalize" or "slice"
};

// Normalized self-gravity kernel I(x) for a unit-variance anisotropic Gaussian
// mass distribution, evaluated through the axis-factorized one-dimensional
// reduction (exact; see docs/numerics.md). x in units of sigma_x, offset shifts
// the source centroid in the same units (0 for the self term).
SelfGravityResult self_gravity_integral(double x_tilde, double c1, double c2,
                                        const SelfGravityOptions& opts,
                                        double offset = 0.0);

// Brute-force Monte Carlo estimate of the same kernel (fallback / cross-check).
double self_gravity_integral_mc(double x_tilde, double c1, double c2,
                                std::uint64_t n_samples, std::uint64_t seed,
                                double offset = 0.0);

struct GaussianFit {
    double amplitude = 0.0;       // A
    double width_b1 = 0.0;        // b1
    double max_rel_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Least squares of A exp(-x^2 / (2 b1)) on linear values, uniform weights.
GaussianFit fit_gaussian_potential(const std::vector<double>& x,
                                   const std::vector<double>& y,
                                   int max_iterations = 200, double tol = 1e-12);

// Harmonic-mean radius n / sum(1/r_i).
double geometric_factor(const std::vector<double>& radii);

struct SnTorque {
    double energy = 0.0;   // J
    double torque = 0.0;   // N m
};

// Parametric Gaussian SN potential in the rotation angle and its analytic torque.
SnTorque effective_sn_torque(double theta, double sigma_theta, const SnModel& model,
                             const PendulumParams& pendulum);

struct PotentialCurve {
    std::vector<double> abscissa;   // m (or rad for torque curves)
    std::vector<double> potential;  // J
    std::vector<double> force;      // N (or N m)
    std::string regime_tag;         // "self_only" or "with_mutual"
    std::map<std::string, std::string> metadata;
};

// Per-atom SN energy along x for a 1D lattice chain: self term plus
// 2*neighbors mutual terms at offsets +-k*a. Force by analytic
// differentiation under the integral.
PotentialCurve mutual_gravity_curve(const std::vector<double>& x_grid_m,
                                    const SnModel& model, int neighbors,
                                    const SelfGravityOptions& opts);

}  // namespace snp
