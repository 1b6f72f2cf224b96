#pragma once

namespace snp::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// CODATA 2018
inline constexpr double speed_of_light = 299792458.0;            // m/s
inline constexpr double planck_reduced = 1.054571817e-34;        // J s
inline constexpr double boltzmann = 1.380649e-23;                // J/K
inline constexpr double gravitation = 6.67430e-11;               // m^3 kg^-1 s^-2
inline constexpr double gas_constant = 8.314462618;              // J/(mol K)
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg

inline constexpr double torr_to_pa = 133.322;
inline constexpr double seconds_per_year = 3.15576e7;            // Julian year
inline constexpr double seconds_per_day = 86400.0;

}  // namespace snp::constants
