#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "phoncas/constants.hpp"
#include "phoncas/errors.hpp"

namespace phoncas {

// A fluid supporting linear-dispersion sound, plus the optical data needed
// for light-scattering estimates. All fields SI.
struct FluidMedium {
    double rho0 = 0;        // mean mass density, kg/m^3
    double c_sound = 0;     // speed of sound, m/s
    double eta = 1;         // mean refractive index at the probe wavelength
    double depsilon = 0;    // rho0 * (d eps / d rho0) at constant entropy
    double temperature = 0; // K

    bool operator==(const FluidMedium&) const = default;
};

// Throws ConfigError naming the offending field if an invariant is violated.
// Returns non-fatal warnings (currently: implausibly large |depsilon|).
std::vector<std::string> validate_medium(std::string_view name, const FluidMedium& m);

// Named media. Built-in entries are immutable and cannot be shadowed.
class MediumRegistry {
public:
    // Registry holding only the built-in media ("water_293K").
    static MediumRegistry with_builtins();

    void add(const std::string& name, const FluidMedium& m);

    const FluidMedium& at(std::string_view name) const;
    bool contains(std::string_view name) const;
    bool is_builtin(std::string_view name) const;
    std::size_t size() const { return entries_.size(); }
    std::vector<std::string> names() const;

    // Warnings recorded when the entry was validated (may be empty).
    const std::vector<std::string>& warnings_for(std::string_view name) const;

    bool operator==(const MediumRegistry& other) const { return entries_ == other.entries_; }

private:
    std::map<std::string, FluidMedium, std::less<>> entries_;
    std::map<std::string, std::vector<std::string>, std::less<>> warnings_;
    std::set<std::string, std::less<>> builtins_;
};

// Config ingestion. The file is UTF-8 JSON of the form
//   {"media": {"name": {"rho0":..., "c_sound":..., "eta":..., "depsilon":..., "temperature":...}}}
// with all five fields required and numeric. The result always contains the
// built-ins; a file entry reusing a built-in (or repeated) name is an error.
MediumRegistry load_media_config(const std::filesystem::path& path);
MediumRegistry parse_media_config(std::string_view json_text);

// Serializes the user-added entries (not the built-ins) back to config JSON,
// so load(serialize(load(f))) reproduces the same registry.
std::string serialize_user_media(const MediumRegistry& reg);

} // namespace phoncas
