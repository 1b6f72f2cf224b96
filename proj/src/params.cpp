#include "snp/params.hpp"

#include <cmath>

namespace snp {

namespace {
void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string("non-positive physical value: ") + name);
    }
}
}  // namespace

void PendulumParams::validate() const {
    require_positive(inertia_rz, "pendulum.inertia");
    require_positive(omega_m, "pendulum.omega_m");
    require_positive(q_factor, "pendulum.q");
    require_positive(arm_length, "pendulum.arm_length");
    require_positive(mass, "pendulum.mass");
    require_positive(temperature, "pendulum.temperature");
}

void OpticalParams::validate() const {
    require_positive(wavelength, "optics.wavelength");
    require_positive(input_transmissivity, "optics.input_transmissivity");
    require_positive(finesse, "optics.finesse");
    if (p_cav < 0.0) throw ConfigError("non-positive physical value: optics.p_cav");
    if (round_trip_loss < 0.0) throw ConfigError("optics.round_trip_loss < 0");
    if (buildup < 0.0) throw ConfigError("optics.buildup < 0");
}

void SnModel::validate() const {
    require_positive(atomic_mass, "sn.atomic_mass");
    require_positive(delta_x_int, "sn.delta_x_int");
    if (sigma_x > 0.0 && sigma_y > 0.0 && c1() < 1.0) {
        throw ConfigError("sn.sigma_y exceeds sigma_x (c1 < 1 unsupported)");
    }
    if (sigma_x > 0.0 && sigma_z > 0.0 && c2() < 1.0) {
        throw ConfigError("sn.sigma_z exceeds sigma_x (c2 < 1 unsupported)");
    }
}

}  // namespace snp
