#pragma once

#include <stdexcept>
#include <string>

namespace phoncas {

// Bad user input: malformed config files, out-of-range parameters,
// unknown media. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine could not deliver the requested accuracy or hit a
// genuine singularity. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature / summation failure that still has a usable estimate attached.
class ToleranceError : public NumericalError {
public:
    ToleranceError(const std::string& what, double best, double err)
        : NumericalError(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// Separation on the sound cone: the closed-form correlator is singular there.
class SoundConeError : public NumericalError {
public:
    explicit SoundConeError(const std::string& what) : NumericalError(what) {}
};

// Geometry without an image construction (e.g. wedge angle not pi/n).
class UnsupportedGeometryError : public ConfigError {
public:
    explicit UnsupportedGeometryError(const std::string& what) : ConfigError(what) {}
};

} // namespace phoncas
