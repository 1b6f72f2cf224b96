#pragma once

#include <cmath>
#include <string>

#include "snp/constants.hpp"
#include "snp/errors.hpp"

namespace snp {

// Torsion pendulum mechanical description. All angular frequencies in rad/s,
// everything else SI.
struct PendulumParams {
    double inertia_rz = 0.0;    // kg m^2
    double omega_m = 0.0;       // rad/s
    double q_factor = 0.0;
    double arm_length = 0.0;    // m
    double mass = 0.0;          // kg
    double temperature = 0.0;   // K

    // viscous convention: damping torque -I gamma_m dTheta/dt
    double gamma_m() const { return omega_m / q_factor; }

    void validate() const;
};

// Cavity and laser description.
struct OpticalParams {
    double wavelength = 0.0;             // m
    double input_transmissivity = 0.0;   // power transmissivity
    double round_trip_loss = 0.0;
    double finesse = 0.0;
    double p_cav = 0.0;                  // W, intracavity
    double buildup = 0.0;                // 0 means "use 2 F / pi"
    double g_fss = 1.0;                  // frequency-servo gain
    double g_iss = 1.0;                  // intensity-servo gain
    double detuning = 0.0;               // rad, round trip
    double t_rt = 0.0;                   // s, round-trip time

    double buildup_or_default() const {
        return buildup > 0.0 ? buildup : 2.0 * finesse / constants::pi;
    }
    // laser angular frequency
    double omega_0() const { return constants::two_pi * constants::speed_of_light / wavelength; }
    // optomechanical coupling strength, laser frequency convention
    double coupling_alpha() const {
        const double c = constants::speed_of_light;
        return std::sqrt(8.0 * omega_0() * p_cav / (constants::planck_reduced * input_transmissivity * c * c));
    }

    void validate() const;
};

// Material and gravitational-potential description.
struct SnModel {
    double atomic_mass = 0.0;     // kg
    double delta_x_int = 0.0;     // m
    double lattice_const = 0.0;   // m
    double omega_sn = 0.0;        // rad/s; 0 means "derive from atomic_mass, delta_x_int"
    double fit_a = 0.0;           // Gaussian fit amplitude
    double fit_b1 = 0.0;          // Gaussian fit width parameter
    double r_tilde = 0.0;         // m, harmonic-mean radius
    double sigma_x = 0.0;         // m
    double sigma_y = 0.0;         // m
    double sigma_z = 0.0;         // m

    // relative gap between a stored omega_sn and the value derived from
    // atomic_mass and delta_x_int; 0 when either input is absent
    double omega_sn_discrepancy = 0.0;

    double c1() const { return sigma_x / sigma_y; }
    double c2() const { return sigma_x / sigma_z; }

    void validate() const;
};

}  // namespace snp
