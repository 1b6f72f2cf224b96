#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snp/params.hpp"

namespace snp {

enum class SnMode { off, quadratic_preselection, nonquadratic };
enum class ThermalModel { viscous, structural };
enum class QrpnModel { s_ff, alpha };

std::string to_string(SnMode m);
std::string to_string(ThermalModel m);
std::string to_string(QrpnModel m);

// Everything from the [run] section. Frequencies already in rad/s where the
// field name says so, Hz where it says hz.
struct RunSettings {
    std::uint64_t seed = 20240001ULL;
    double dt = 1e-2;                  // s
    double duration = 0.0;             // s
    int n_traj = 1;
    double t_bw = 32768.0;             // s, spectral segment length
    SnMode sn_mode = SnMode::off;
    int record_decimation = 1;

    double sigma_theta = 0.0;          // rad, potential width for nonquadratic mode
    ThermalModel thermal_model = ThermalModel::viscous;
    QrpnModel qrpn_model = QrpnModel::s_ff;

    bool thermal_on = true;
    bool qrpn_on = true;
    bool sensor_on = true;
    double sensor_noise_asd = 0.0;     // rad/sqrt(Hz)
    double sensor_zp_fraction = 0.0;   // portion of sensor PSD treated as quantum
    bool sensor_coherent = false;      // coherent measurement-operator sensor term

    bool servo_on = false;
    std::vector<double> servo_num;     // ascending s-polynomial coefficients, unit gain
    std::vector<double> servo_den;
    double servo_a0 = 0.0;             // 0 requests calibration at omega_ugf
    double omega_ugf = 0.0;            // rad/s

    bool include_dg = false;
    double dg_drive_psd = 0.0;         // expectation-value forcing PSD for the dG branch

    double f_min_hz = 1e-4;            // spectrum grid
    double f_max_hz = 1e-2;
    int n_freq = 2000;

    double band_center_hz = 0.0;       // ringup band
    double band_width_hz = 0.0;
    double band_min_hz = 0.0;          // detection band
    double band_max_hz = 0.0;

    double quad_rel_tol = 1e-4;
    int quad_max_nodes = 20000;
    bool nuisance_marginalize = true;
    int n_nuisance = 64;
    double fit_window = 5.0;           // |x| <= fit_window, in units of sigma_x
    int fit_points = 41;

    int mutual_neighbors = 8;

    std::string actuator_psd_file;
    std::string classical_radiation_psd_file;
    std::string sensor_psd_file;

    // loss-mechanism inputs (documented defaults: fused silica fiber, H2 gas)
    double fiber_youngs_modulus = 72e9;         // Pa
    double fiber_heat_capacity = 746.0;         // J/(kg K)
    double fiber_conductivity = 1.38;           // W/(m K)
    double fiber_density = 2200.0;              // kg/m^3
    double fiber_alpha_thermal = 5.5e-7;        // 1/K
    double fiber_static_stress = 1.9e8;         // Pa
    double fiber_beta_te = 1.52e-4;             // 1/K
    double fiber_diameter = 100e-6;             // m
    double fiber_surface_loss_depth = 6.15e-12; // m, h*Phi_s
    double gas_mass = 1.0;                      // kg
    double gas_area = 0.075;                    // m^2
    double gas_molar_mass = 2e-3;               // kg/mol
    double gas_pressure = 2e-6 * 133.322;       // Pa
    double gas_temperature = 300.0;             // K
    double gas_frequency = 6e-4;                // Hz
    double eddy_damping_factor = 5.3e-9;        // N s/m
    double eddy_lever_arm = 0.50;               // m
    double dac_rms_start = 4e-6;                // m
    double dac_rms_end = 7e-6;                  // m
    double dac_frequency = 6e-4;                // Hz
};

struct ParamSet {
    PendulumParams pendulum;
    OpticalParams optics;
    SnModel sn;
    RunSettings run;
};

// Parses the line-oriented `key = value` format with [section] headers and
// `#` comments. Later files override earlier ones key by key. Unknown keys,
// missing required keys and non-positive physical values raise ConfigError.
ParamSet load_config(const std::vector<std::string>& paths);
ParamSet load_config(const std::string& path);

// Full-precision serialization; reloading reproduces every value bit for bit.
std::string serialize_config(const ParamSet& ps);
void save_config(const ParamSet& ps, const std::string& path);

// FNV-1a over the canonical serialization, as a hex string.
std::string config_hash(const ParamSet& ps);

}  // namespace snp
