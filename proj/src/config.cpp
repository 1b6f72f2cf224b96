#include "snp/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "snp/constants.hpp"
#include "snp/sn_potential.hpp"

namespace snp {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

using KvMap = std::map<std::string, std::string>;  // "section.key" -> raw value

void parse_file(const std::string& path, KvMap& out) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(path + ":" + std::to_string(lineno) + ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (section.empty() || key.empty() || val.empty()) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": key outside section or empty key/value");
        }
        out[section + "." + key] = val;
    }
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "pendulum.inertia", "pendulum.omega_m_hz", "pendulum.omega_m_rad", "pendulum.q",
        "pendulum.arm_length", "pendulum.arm_length_mm", "pendulum.mass", "pendulum.temperature",

        "optics.wavelength", "optics.wavelength_nm", "optics.input_transmissivity",
        "optics.round_trip_loss", "optics.finesse", "optics.p_cav", "optics.buildup",
        "optics.g_fss", "optics.g_iss", "optics.detuning", "optics.detuning_unit", "optics.t_rt",

        "sn.atomic_mass_kg", "sn.atomic_mass_u", "sn.delta_x_int", "sn.lattice_const",
        "sn.omega_sn_hz", "sn.omega_sn_rad", "sn.fit_a", "sn.fit_b1", "sn.r_tilde",
        "sn.sigma_x", "sn.sigma_y", "sn.sigma_z",

        "run.seed", "run.dt", "run.duration", "run.n_traj", "run.t_bw", "run.sn_mode",
        "run.record_decimation", "run.sigma_theta", "run.thermal_model", "run.qrpn_model",
        "run.thermal_on", "run.qrpn_on", "run.sensor_on", "run.sensor_noise_asd",
        "run.sensor_zp_fraction", "run.sensor_coherent",
        "run.servo_on", "run.servo_preset", "run.servo_num", "run.servo_den",
        "run.servo_a0", "run.servo_epsilon", "run.omega_ugf_hz",
        "run.include_dg", "run.dg_drive_psd",
        "run.f_min_hz", "run.f_max_hz", "run.n_freq",
        "run.band_center_hz", "run.band_width_hz", "run.band_min_hz", "run.band_max_hz",
        "run.quad_rel_tol", "run.quad_max_nodes", "run.nuisance_mode", "run.n_nuisance",
        "run.fit_window", "run.fit_points", "run.mutual_neighbors",
        "run.actuator_psd_file", "run.classical_radiation_psd_file", "run.sensor_psd_file",
        "run.fiber_youngs_modulus", "run.fiber_heat_capacity", "run.fiber_conductivity",
        "run.fiber_density", "run.fiber_alpha_thermal", "run.fiber_static_stress",
        "run.fiber_beta_te", "run.fiber_diameter", "run.fiber_surface_loss_depth",
        "run.gas_mass", "run.gas_area", "run.gas_molar_mass", "run.gas_pressure",
        "run.gas_pressure_unit", "run.gas_temperature", "run.gas_frequency",
        "run.eddy_damping_factor", "run.eddy_lever_arm",
        "run.dac_rms_start", "run.dac_rms_end", "run.dac_frequency",
    };
    return keys;
}

class Reader {
public:
    explicit Reader(const KvMap& kv) : kv_(kv) {}

    bool has(const std::string& k) const { return kv_.count(k) > 0; }

    double num(const std::string& k) const {
        const std::string& raw = kv_.at(k);
        errno = 0;
        char* end = nullptr;
        double v = std::strtod(raw.c_str(), &end);
        if (end == raw.c_str() || *end != '\0' || errno == ERANGE) {
            throw ConfigError("key " + k + ": cannot parse number '" + raw + "'");
        }
        return v;
    }
    double num_or(const std::string& k, double dflt) const { return has(k) ? num(k) : dflt; }

    std::uint64_t u64(const std::string& k) const {
        const std::string& raw = kv_.at(k);
        errno = 0;
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw.c_str(), &end, 10);
        if (end == raw.c_str() || *end != '\0' || errno == ERANGE) {
            throw ConfigError("key " + k + ": cannot parse integer '" + raw + "'");
        }
        return static_cast<std::uint64_t>(v);
    }

    int integer(const std::string& k) const {
        return static_cast<int>(num(k));
    }

    bool flag(const std::string& k, bool dflt) const {
        if (!has(k)) return dflt;
        const std::string& v = kv_.at(k);
        if (v == "on" || v == "true" || v == "1") return true;
        if (v == "off" || v == "false" || v == "0") return false;
        throw ConfigError("key " + k + ": expected on/off, got '" + v + "'");
    }

    std::string str(const std::string& k) const { return kv_.at(k); }
    std::string str_or(const std::string& k, const std::string& dflt) const {
        return has(k) ? kv_.at(k) : dflt;
    }

    std::vector<double> num_list(const std::string& k) const {
        std::vector<double> out;
        std::stringstream ss(kv_.at(k));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            errno = 0;
            char* end = nullptr;
            double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0') {
                throw ConfigError("key " + k + ": cannot parse list entry '" + tok + "'");
            }
            out.push_back(v);
        }
        if (out.empty()) throw ConfigError("key " + k + ": empty list");
        return out;
    }

private:
    const KvMap& kv_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void servo_preset(const std::string& name, double eps, std::vector<double>& num,
                  std::vector<double>& den) {
    const double pi = constants::pi;
    if (name == "baseline") {
        // (s + 2pi e-3)^2 / (s (s + 2pi))
        const double wz = 2 * pi * 1e-3;
        num = {wz * wz, 2 * wz, 1.0};
        den = {0.0, 2 * pi, 1.0};
    } else if (name == "quadratic_upgrade") {
        // (eps s^2 + 4pi e-3 s + 4pi^2 e-6) / (s (s + 2pi))
        num = {4 * pi * pi * 1e-6, 4 * pi * 1e-3, eps};
        den = {0.0, 2 * pi, 1.0};
    } else if (name == "nonquadratic_upgrade") {
        // (eps s^2 + 4pi e-2 s + 4pi^2 e-4) / (s (s + 20pi))
        num = {4 * pi * pi * 1e-4, 4 * pi * 1e-2, eps};
        den = {0.0, 20 * pi, 1.0};
    } else {
        throw ConfigError("unknown servo_preset '" + name + "'");
    }
}

}  // namespace

std::string to_string(SnMode m) {
    switch (m) {
        case SnMode::off: return "off";
        case SnMode::quadratic_preselection: return "quadratic_preselection";
        case SnMode::nonquadratic: return "nonquadratic";
    }
    return "?";
}
std::string to_string(ThermalModel m) {
    return m == ThermalModel::viscous ? "viscous" : "structural";
}
std::string to_string(QrpnModel m) { return m == QrpnModel::s_ff ? "s_ff" : "alpha"; }

ParamSet load_config(const std::string& path) {
    return load_config(std::vector<std::string>{path});
}

ParamSet load_config(const std::vector<std::string>& paths) {
    if (paths.empty()) throw ConfigError("no config file given");
    KvMap kv;
    for (const auto& p : paths) parse_file(p, kv);

    // typo guard: any unknown key is an error, not a warning
    for (const auto& [k, v] : kv) {
        if (!known_keys().count(k)) throw ConfigError("unknown config key: " + k);
    }

    // a key may be given in exactly one unit variant
    static const std::vector<std::pair<std::string, std::string>> exclusive = {
        {"pendulum.omega_m_hz", "pendulum.omega_m_rad"},
        {"pendulum.arm_length", "pendulum.arm_length_mm"},
        {"optics.wavelength", "optics.wavelength_nm"},
        {"sn.atomic_mass_kg", "sn.atomic_mass_u"},
        {"sn.omega_sn_hz", "sn.omega_sn_rad"},
    };
    for (const auto& [a, b] : exclusive) {
        if (kv.count(a) && kv.count(b)) {
            throw ConfigError("config gives both " + a + " and " + b);
        }
    }

    Reader r(kv);
    std::vector<std::string> missing;
    auto need_any = [&](std::initializer_list<const char*> variants) {
        for (auto* v : variants) {
            if (r.has(v)) return;
        }
        missing.push_back(*variants.begin());
    };
    need_any({"pendulum.inertia"});
    need_any({"pendulum.omega_m_hz", "pendulum.omega_m_rad"});
    need_any({"pendulum.q"});
    need_any({"pendulum.arm_length", "pendulum.arm_length_mm"});
    need_any({"pendulum.mass"});
    need_any({"pendulum.temperature"});
    need_any({"optics.wavelength", "optics.wavelength_nm"});
    need_any({"optics.input_transmissivity"});
    need_any({"optics.finesse"});
    need_any({"optics.p_cav"});
    need_any({"sn.atomic_mass_kg", "sn.atomic_mass_u"});
    need_any({"sn.delta_x_int"});
    if (!missing.empty()) {
        std::string msg = "missing required config keys:";
        for (const auto& k : missing) msg += " " + k;
        throw ConfigError(msg);
    }

    ParamSet ps;

    ps.pendulum.inertia_rz = r.num("pendulum.inertia");
    ps.pendulum.omega_m = r.has("pendulum.omega_m_rad")
                              ? r.num("pendulum.omega_m_rad")
                              : constants::two_pi * r.num("pendulum.omega_m_hz");
    ps.pendulum.q_factor = r.num("pendulum.q");
    ps.pendulum.arm_length = r.has("pendulum.arm_length")
                                 ? r.num("pendulum.arm_length")
                                 : r.num("pendulum.arm_length_mm") / 1e3;
    ps.pendulum.mass = r.num("pendulum.mass");
    ps.pendulum.temperature = r.num("pendulum.temperature");
    ps.pendulum.validate();

    ps.optics.wavelength = r.has("optics.wavelength") ? r.num("optics.wavelength")
                                                      : r.num("optics.wavelength_nm") / 1e9;
    ps.optics.input_transmissivity = r.num("optics.input_transmissivity");
    ps.optics.round_trip_loss = r.num_or("optics.round_trip_loss", 0.0);
    ps.optics.finesse = r.num("optics.finesse");
    ps.optics.p_cav = r.num("optics.p_cav");
    ps.optics.buildup = r.num_or("optics.buildup", 0.0);
    ps.optics.g_fss = r.num_or("optics.g_fss", 1.0);
    ps.optics.g_iss = r.num_or("optics.g_iss", 1.0);
    {
        double det = r.num_or("optics.detuning", 0.0);
        std::string unit = r.str_or("optics.detuning_unit", "rad");
        if (unit == "deg") det *= constants::pi / 180.0;
        else if (unit != "rad") throw ConfigError("optics.detuning_unit must be rad or deg");
        ps.optics.detuning = det;
    }
    ps.optics.t_rt = r.num_or("optics.t_rt", 0.0);
    ps.optics.validate();

    ps.sn.atomic_mass = r.has("sn.atomic_mass_kg")
                            ? r.num("sn.atomic_mass_kg")
                            : r.num("sn.atomic_mass_u") * constants::atomic_mass_unit;
    ps.sn.delta_x_int = r.num("sn.delta_x_int");
    ps.sn.lattice_const = r.num_or("sn.lattice_const", 0.0);
    ps.sn.fit_a = r.num_or("sn.fit_a", 0.0);
    ps.sn.fit_b1 = r.num_or("sn.fit_b1", 0.0);
    ps.sn.r_tilde = r.num_or("sn.r_tilde", 0.0);
    ps.sn.sigma_x = r.num_or("sn.sigma_x", 0.0);
    ps.sn.sigma_y = r.num_or("sn.sigma_y", 0.0);
    ps.sn.sigma_z = r.num_or("sn.sigma_z", 0.0);
    {
        const double derived = sn_frequency(ps.sn.atomic_mass, ps.sn.delta_x_int);
        if (r.has("sn.omega_sn_rad") || r.has("sn.omega_sn_hz")) {
            // stored value wins; keep the relative gap to the derived one
            ps.sn.omega_sn = r.has("sn.omega_sn_rad") ? r.num("sn.omega_sn_rad")
                                                      : constants::two_pi * r.num("sn.omega_sn_hz");
            ps.sn.omega_sn_discrepancy = std::abs(ps.sn.omega_sn - derived) / derived;
        } else {
            ps.sn.omega_sn = derived;
            ps.sn.omega_sn_discrepancy = 0.0;
        }
    }
    ps.sn.validate();

    RunSettings& run = ps.run;
    if (r.has("run.seed")) run.seed = r.u64("run.seed");
    run.dt = r.num_or("run.dt", run.dt);
    run.duration = r.num_or("run.duration", run.duration);
    if (r.has("run.n_traj")) run.n_traj = r.integer("run.n_traj");
    run.t_bw = r.num_or("run.t_bw", run.t_bw);
    if (r.has("run.sn_mode")) {
        std::string m = r.str("run.sn_mode");
        if (m == "off") run.sn_mode = SnMode::off;
        else if (m == "quadratic_preselection") run.sn_mode = SnMode::quadratic_preselection;
        else if (m == "nonquadratic") run.sn_mode = SnMode::nonquadratic;
        else throw ConfigError("run.sn_mode must be off|quadratic_preselection|nonquadratic");
    }
    if (r.has("run.record_decimation")) run.record_decimation = r.integer("run.record_decimation");
    run.sigma_theta = r.num_or("run.sigma_theta", 0.0);
    if (r.has("run.thermal_model")) {
        std::string m = r.str("run.thermal_model");
        if (m == "viscous") run.thermal_model = ThermalModel::viscous;
        else if (m == "structural") run.thermal_model = ThermalModel::structural;
        else throw ConfigError("run.thermal_model must be viscous|structural");
    }
    if (r.has("run.qrpn_model")) {
        std::string m = r.str("run.qrpn_model");
        if (m == "s_ff") run.qrpn_model = QrpnModel::s_ff;
        else if (m == "alpha") run.qrpn_model = QrpnModel::alpha;
        else throw ConfigError("run.qrpn_model must be s_ff|alpha");
    }
    run.thermal_on = r.flag("run.thermal_on", run.thermal_on);
    run.qrpn_on = r.flag("run.qrpn_on", run.qrpn_on);
    run.sensor_on = r.flag("run.sensor_on", run.sensor_on);
    run.sensor_noise_asd = r.num_or("run.sensor_noise_asd", 0.0);
    run.sensor_zp_fraction = r.num_or("run.sensor_zp_fraction", 0.0);
    if (run.sensor_zp_fraction < 0.0 || run.sensor_zp_fraction > 1.0) {
        throw ConfigError("run.sensor_zp_fraction must lie in [0,1]");
    }
    run.sensor_coherent = r.flag("run.sensor_coherent", false);

    run.servo_on = r.flag("run.servo_on", false);
    if (r.has("run.servo_preset")) {
        servo_preset(r.str("run.servo_preset"), r.num_or("run.servo_epsilon", 0.1),
                     run.servo_num, run.servo_den);
    }
    if (r.has("run.servo_num") != r.has("run.servo_den")) {
        throw ConfigError("servo_num and servo_den must be given together");
    }
    if (r.has("run.servo_num")) {
        run.servo_num = r.num_list("run.servo_num");
        run.servo_den = r.num_list("run.servo_den");
    }
    run.servo_a0 = r.num_or("run.servo_a0", 0.0);
    if (r.has("run.omega_ugf_hz")) run.omega_ugf = constants::two_pi * r.num("run.omega_ugf_hz");
    if (run.servo_on && run.servo_num.empty()) {
        throw ConfigError("servo_on requires servo_preset or servo_num/servo_den");
    }
    if (run.servo_on && run.servo_a0 <= 0.0 && run.omega_ugf <= 0.0) {
        throw ConfigError("servo gain: give servo_a0 or omega_ugf_hz for calibration");
    }

    run.include_dg = r.flag("run.include_dg", false);
    run.dg_drive_psd = r.num_or("run.dg_drive_psd", 0.0);

    run.f_min_hz = r.num_or("run.f_min_hz", run.f_min_hz);
    run.f_max_hz = r.num_or("run.f_max_hz", run.f_max_hz);
    if (r.has("run.n_freq")) run.n_freq = r.integer("run.n_freq");
    run.band_center_hz = r.num_or("run.band_center_hz", 0.0);
    run.band_width_hz = r.num_or("run.band_width_hz", 0.0);
    run.band_min_hz = r.num_or("run.band_min_hz", 0.0);
    run.band_max_hz = r.num_or("run.band_max_hz", 0.0);

    run.quad_rel_tol = r.num_or("run.quad_rel_tol", run.quad_rel_tol);
    if (r.has("run.quad_max_nodes")) run.quad_max_nodes = r.integer("run.quad_max_nodes");
    if (r.has("run.nuisance_mode")) {
        std::string m = r.str("run.nuisance_mode");
        if (m == "marginalize") run.nuisance_marginalize = true;
        else if (m == "slice") run.nuisance_marginalize = false;
        else throw ConfigError("run.nuisance_mode must be marginalize|slice");
    }
    if (r.has("run.n_nuisance")) run.n_nuisance = r.integer("run.n_nuisance");
    run.fit_window = r.num_or("run.fit_window", run.fit_window);
    if (r.has("run.fit_points")) run.fit_points = r.integer("run.fit_points");
    if (r.has("run.mutual_neighbors")) run.mutual_neighbors = r.integer("run.mutual_neighbors");

    run.actuator_psd_file = r.str_or("run.actuator_psd_file", "");
    run.classical_radiation_psd_file = r.str_or("run.classical_radiation_psd_file", "");
    run.sensor_psd_file = r.str_or("run.sensor_psd_file", "");

    run.fiber_youngs_modulus = r.num_or("run.fiber_youngs_modulus", run.fiber_youngs_modulus);
    run.fiber_heat_capacity = r.num_or("run.fiber_heat_capacity", run.fiber_heat_capacity);
    run.fiber_conductivity = r.num_or("run.fiber_conductivity", run.fiber_conductivity);
    run.fiber_density = r.num_or("run.fiber_density", run.fiber_density);
    run.fiber_alpha_thermal = r.num_or("run.fiber_alpha_thermal", run.fiber_alpha_thermal);
    run.fiber_static_stress = r.num_or("run.fiber_static_stress", run.fiber_static_stress);
    run.fiber_beta_te = r.num_or("run.fiber_beta_te", run.fiber_beta_te);
    run.fiber_diameter = r.num_or("run.fiber_diameter", run.fiber_diameter);
    run.fiber_surface_loss_depth = r.num_or("run.fiber_surface_loss_depth", run.fiber_surface_loss_depth);
    run.gas_mass = r.num_or("run.gas_mass", run.gas_mass);
    run.gas_area = r.num_or("run.gas_area", run.gas_area);
    run.gas_molar_mass = r.num_or("run.gas_molar_mass", run.gas_molar_mass);
    if (r.has("run.gas_pressure")) {
        double p = r.num("run.gas_pressure");
        std::string unit = r.str_or("run.gas_pressure_unit", "pa");
        if (unit == "torr") p *= constants::torr_to_pa;
        else if (unit != "pa") throw ConfigError("run.gas_pressure_unit must be pa or torr");
        run.gas_pressure = p;
    }
    run.gas_temperature = r.num_or("run.gas_temperature", run.gas_temperature);
    run.gas_frequency = r.num_or("run.gas_frequency", run.gas_frequency);
    run.eddy_damping_factor = r.num_or("run.eddy_damping_factor", run.eddy_damping_factor);
    run.eddy_lever_arm = r.num_or("run.eddy_lever_arm", run.eddy_lever_arm);
    run.dac_rms_start = r.num_or("run.dac_rms_start", run.dac_rms_start);
    run.dac_rms_end = r.num_or("run.dac_rms_end", run.dac_rms_end);
    run.dac_frequency = r.num_or("run.dac_frequency", run.dac_frequency);

    return ps;
}

std::string serialize_config(const ParamSet& ps) {
    std::ostringstream o;
    const RunSettings& run = ps.run;
    o << "[pendulum]\n";
    o << "inertia = " << fmt(ps.pendulum.inertia_rz) << "\n";
    o << "omega_m_rad = " << fmt(ps.pendulum.omega_m) << "\n";
    o << "q = " << fmt(ps.pendulum.q_factor) << "\n";
    o << "arm_length = " << fmt(ps.pendulum.arm_length) << "\n";
    o << "mass = " << fmt(ps.pendulum.mass) << "\n";
    o << "temperature = " << fmt(ps.pendulum.temperature) << "\n";
    o << "\n[optics]\n";
    o << "wavelength = " << fmt(ps.optics.wavelength) << "\n";
    o << "input_transmissivity = " << fmt(ps.optics.input_transmissivity) << "\n";
    o << "round_trip_loss = " << fmt(ps.optics.round_trip_loss) << "\n";
    o << "finesse = " << fmt(ps.optics.finesse) << "\n";
    o << "p_cav = " << fmt(ps.optics.p_cav) << "\n";
    if (ps.optics.buildup > 0.0) o << "buildup = " << fmt(ps.optics.buildup) << "\n";
    o << "g_fss = " << fmt(ps.optics.g_fss) << "\n";
    o << "g_iss = " << fmt(ps.optics.g_iss) << "\n";
    o << "detuning = " << fmt(ps.optics.detuning) << "\n";
    o << "t_rt = " << fmt(ps.optics.t_rt) << "\n";
    o << "\n[sn]\n";
    o << "atomic_mass_kg = " << fmt(ps.sn.atomic_mass) << "\n";
    o << "delta_x_int = " << fmt(ps.sn.delta_x_int) << "\n";
    if (ps.sn.lattice_const > 0.0) o << "lattice_const = " << fmt(ps.sn.lattice_const) << "\n";
    o << "omega_sn_rad = " << fmt(ps.sn.omega_sn) << "\n";
    if (ps.sn.fit_a > 0.0) o << "fit_a = " << fmt(ps.sn.fit_a) << "\n";
    if (ps.sn.fit_b1 > 0.0) o << "fit_b1 = " << fmt(ps.sn.fit_b1) << "\n";
    if (ps.sn.r_tilde > 0.0) o << "r_tilde = " << fmt(ps.sn.r_tilde) << "\n";
    if (ps.sn.sigma_x > 0.0) o << "sigma_x = " << fmt(ps.sn.sigma_x) << "\n";
    if (ps.sn.sigma_y > 0.0) o << "sigma_y = " << fmt(ps.sn.sigma_y) << "\n";
    if (ps.sn.sigma_z > 0.0) o << "sigma_z = " << fmt(ps.sn.sigma_z) << "\n";
    o << "\n[run]\n";
    o << "seed = " << run.seed << "\n";
    o << "dt = " << fmt(run.dt) << "\n";
    o << "duration = " << fmt(run.duration) << "\n";
    o << "n_traj = " << run.n_traj << "\n";
    o << "t_bw = " << fmt(run.t_bw) << "\n";
    o << "sn_mode = " << to_string(run.sn_mode) << "\n";
    o << "record_decimation = " << run.record_decimation << "\n";
    if (run.sigma_theta > 0.0) o << "sigma_theta = " << fmt(run.sigma_theta) << "\n";
    o << "thermal_model = " << to_string(run.thermal_model) << "\n";
    o << "qrpn_model = " << to_string(run.qrpn_model) << "\n";
    o << "thermal_on = " << (run.thermal_on ? "on" : "off") << "\n";
    o << "qrpn_on = " << (run.qrpn_on ? "on" : "off") << "\n";
    o << "sensor_on = " << (run.sensor_on ? "on" : "off") << "\n";
    if (run.sensor_noise_asd > 0.0) o << "sensor_noise_asd = " << fmt(run.sensor_noise_asd) << "\n";
    o << "sensor_zp_fraction = " << fmt(run.sensor_zp_fraction) << "\n";
    o << "sensor_coherent = " << (run.sensor_coherent ? "on" : "off") << "\n";
    o << "servo_on = " << (run.servo_on ? "on" : "off") << "\n";
    if (!run.servo_num.empty()) {
        auto list = [&](const std::vector<double>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
            return s;
        };
        o << "servo_num = " << list(run.servo_num) << "\n";
        o << "servo_den = " << list(run.servo_den) << "\n";
    }
    if (run.servo_a0 > 0.0) o << "servo_a0 = " << fmt(run.servo_a0) << "\n";
    if (run.omega_ugf > 0.0) o << "omega_ugf_hz = " << fmt(run.omega_ugf / constants::two_pi) << "\n";
    o << "include_dg = " << (run.include_dg ? "on" : "off") << "\n";
    if (run.dg_drive_psd > 0.0) o << "dg_drive_psd = " << fmt(run.dg_drive_psd) << "\n";
    o << "f_min_hz = " << fmt(run.f_min_hz) << "\n";
    o << "f_max_hz = " << fmt(run.f_max_hz) << "\n";
    o << "n_freq = " << run.n_freq << "\n";
    if (run.band_center_hz > 0.0) o << "band_center_hz = " << fmt(run.band_center_hz) << "\n";
    if (run.band_width_hz > 0.0) o << "band_width_hz = " << fmt(run.band_width_hz) << "\n";
    if (run.band_min_hz > 0.0) o << "band_min_hz = " << fmt(run.band_min_hz) << "\n";
    if (run.band_max_hz > 0.0) o << "band_max_hz = " << fmt(run.band_max_hz) << "\n";
    o << "quad_rel_tol = " << fmt(run.quad_rel_tol) << "\n";
    o << "quad_max_nodes = " << run.quad_max_nodes << "\n";
    o << "nuisance_mode = " << (run.nuisance_marginalize ? "marginalize" : "slice") << "\n";
    o << "n_nuisance = " << run.n_nuisance << "\n";
    o << "fit_window = " << fmt(run.fit_window) << "\n";
    o << "fit_points = " << run.fit_points << "\n";
    o << "mutual_neighbors = " << run.mutual_neighbors << "\n";
    if (!run.actuator_psd_file.empty()) o << "actuator_psd_file = " << run.actuator_psd_file << "\n";
    if (!run.classical_radiation_psd_file.empty())
        o << "classical_radiation_psd_file = " << run.classical_radiation_psd_file << "\n";
    if (!run.sensor_psd_file.empty()) o << "sensor_psd_file = " << run.sensor_psd_file << "\n";
    o << "fiber_youngs_modulus = " << fmt(run.fiber_youngs_modulus) << "\n";
    o << "fiber_heat_capacity = " << fmt(run.fiber_heat_capacity) << "\n";
    o << "fiber_conductivity = " << fmt(run.fiber_conductivity) << "\n";
    o << "fiber_density = " << fmt(run.fiber_density) << "\n";
    o << "fiber_alpha_thermal = " << fmt(run.fiber_alpha_thermal) << "\n";
    o << "fiber_static_stress = " << fmt(run.fiber_static_stress) << "\n";
    o << "fiber_beta_te = " << fmt(run.fiber_beta_te) << "\n";
    o << "fiber_diameter = " << fmt(run.fiber_diameter) << "\n";
    o << "fiber_surface_loss_depth = " << fmt(run.fiber_surface_loss_depth) << "\n";
    o << "gas_mass = " << fmt(run.gas_mass) << "\n";
    o << "gas_area = " << fmt(run.gas_area) << "\n";
    o << "gas_molar_mass = " << fmt(run.gas_molar_mass) << "\n";
    o << "gas_pressure = " << fmt(run.gas_pressure) << "\n";
    o << "gas_temperature = " << fmt(run.gas_temperature) << "\n";
    o << "gas_frequency = " << fmt(run.gas_frequency) << "\n";
    o << "eddy_damping_factor = " << fmt(run.eddy_damping_factor) << "\n";
    o << "eddy_lever_arm = " << fmt(run.eddy_lever_arm) << "\n";
    o << "dac_rms_start = " << fmt(run.dac_rms_start) << "\n";
    o << "dac_rms_end = " << fmt(run.dac_rms_end) << "\n";
    o << "dac_frequency = " << fmt(run.dac_frequency) << "\n";
    return o.str();
}

void save_config(const ParamSet& ps, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file: " + path);
    out << serialize_config(ps);
}

std::string config_hash(const ParamSet& ps) {
    const std::string s = serialize_config(ps);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace snp
