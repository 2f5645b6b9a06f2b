#pragma once

namespace phoncas {

// CODATA-2018 values, SI. These are fixed: the library has no runtime
// override, only the struct itself is constructible for test code that
// wants to evaluate a formula with different constants.
struct PhysicalConstants {
    double hbar    = 1.054571817e-34; // J s
    double k_B     = 1.380649e-23;    // J / K
    double c_light = 2.99792458e8;    // m / s
};

inline constexpr PhysicalConstants codata2018{};

} // namespace phoncas
