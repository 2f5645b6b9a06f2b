#include "phoncas/medium.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phoncas {

namespace {

void require(bool ok, std::string_view name, const std::string& msg) {
    if (!ok) throw ConfigError("medium '" + std::string(name) + "': " + msg);
}

} // namespace

std::vector<std::string> validate_medium(std::string_view name, const FluidMedium& m) {
    require(std::isfinite(m.rho0) && m.rho0 > 0, name, "rho0 must be > 0");
    require(std::isfinite(m.c_sound) && m.c_sound > 0, name, "c_sound must be > 0");
    require(m.c_sound < codata2018.c_light, name, "c_sound must be below the speed of light");
    require(std::isfinite(m.eta) && m.eta >= 1.0, name, "eta must be >= 1");
    require(std::isfinite(m.depsilon), name, "depsilon must be finite");
    require(std::isfinite(m.temperature) && m.temperature >= 0, name,
            "temperature must be >= 0");

    std::vector<std::string> warnings;
    if (std::fabs(m.depsilon) > 10.0)
        warnings.push_back("medium '" + std::string(name) +
                           "': |depsilon| > 10 is physically implausible");
    return warnings;
}

MediumRegistry MediumRegistry::with_builtins() {
    MediumRegistry reg;
    // Room-temperature water; the optical constants are the standard probe
    // values near 350 nm.
    reg.add("water_293K", FluidMedium{.rho0 = 998.0,
                                      .c_sound = 1480.0,
                                      .eta = 1.4,
                                      .depsilon = 0.79,
                                      .temperature = 293.0});
    reg.builtins_.insert("water_293K");
    return reg;
}

void MediumRegistry::add(const std::string& name, const FluidMedium& m) {
    if (name.empty()) throw ConfigError("medium name must not be empty");
    if (entries_.count(name)) {
        if (builtins_.count(name))
            throw ConfigError("medium '" + name + "' would shadow a built-in entry");
        throw ConfigError("duplicate medium name '" + name + "'");
    }
    auto warnings = validate_medium(name, m);
    entries_.emplace(name, m);
    if (!warnings.empty()) warnings_.emplace(name, std::move(warnings));
}

const FluidMedium& MediumRegistry::at(std::string_view name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw ConfigError("unknown medium '" + std::string(name) + "'");
    return it->second;
}

bool MediumRegistry::contains(std::string_view name) const {
    return entries_.find(name) != entries_.end();
}

bool MediumRegistry::is_builtin(std::string_view name) const {
    return builtins_.find(name) != builtins_.end();
}

std::vector<std::string> MediumRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

const std::vector<std::string>& MediumRegistry::warnings_for(std::string_view name) const {
    static const std::vector<std::string> empty;
    auto it = warnings_.find(name);
    return it == warnings_.end() ? empty : it->second;
}

namespace {

// JSON objects silently collapse duplicate keys, so repeated medium names
// have to be caught at the parser-event level.
void check_duplicate_media_names(const std::string& text, const std::string& origin) {
    std::vector<std::pair<int, std::string>> keys; // (depth, key)
    nlohmann::json::parser_callback_t cb = [&](int depth, nlohmann::json::parse_event_t ev,
                                               nlohmann::json& parsed) {
        if (ev == nlohmann::json::parse_event_t::key)
            keys.emplace_back(depth, parsed.get<std::string>());
        return true;
    };
    try {
        (void)nlohmann::json::parse(text, cb);
    } catch (const nlohmann::json::exception&) {
        return; // the caller reports parse failures
    }
    // Medium names are the keys one level below the top-level "media" key.
    int media_depth = -1;
    std::set<std::string> seen;
    for (const auto& [depth, key] : keys) {
        if (key == "media" && media_depth == -1) {
            media_depth = depth + 1;
            continue;
        }
        if (depth == media_depth && !seen.insert(key).second)
            throw ConfigError(origin + ": duplicate medium name '" + key + "'");
    }
}

MediumRegistry registry_from_json(const nlohmann::json& doc, const std::string& origin) {
    if (!doc.is_object())
        throw ConfigError(origin + ": top level must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "media")
            throw ConfigError(origin + ": unexpected top-level key '" + key + "'");
    }

    MediumRegistry reg = MediumRegistry::with_builtins();
    if (!doc.contains("media")) return reg;

    const auto& media = doc.at("media");
    if (!media.is_object())
        throw ConfigError(origin + ": \"media\" must be an object");

    static constexpr const char* kFields[] = {"rho0", "c_sound", "eta", "depsilon",
                                              "temperature"};
    for (const auto& [name, body] : media.items()) {
        if (!body.is_object())
            throw ConfigError(origin + ": medium '" + name + "' must be an object");
        FluidMedium m;
        for (const char* field : kFields) {
            if (!body.contains(field))
                throw ConfigError(origin + ": medium '" + name + "' is missing field '" +
                                  field + "'");
            const auto& v = body.at(field);
            if (!v.is_number())
                throw ConfigError(origin + ": medium '" + name + "' field '" + field +
                                  "' must be a number");
        }
        for (const auto& [key, value] : body.items()) {
            bool known = false;
            for (const char* field : kFields) known |= (key == field);
            if (!known)
                throw ConfigError(origin + ": medium '" + name + "' has unknown field '" +
                                  key + "'");
        }
        m.rho0 = body.at("rho0").get<double>();
        m.c_sound = body.at("c_sound").get<double>();
        m.eta = body.at("eta").get<double>();
        m.depsilon = body.at("depsilon").get<double>();
        m.temperature = body.at("temperature").get<double>();
        reg.add(name, m);
    }
    return reg;
}

} // namespace

MediumRegistry parse_media_config(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("media config parse failure: ") + e.what());
    }
    check_duplicate_media_names(std::string(json_text), "media config");
    return registry_from_json(doc, "media config");
}

MediumRegistry load_media_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open media config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("media config '" + path.string() + "': " + e.what());
    }
    check_duplicate_media_names(buf.str(), path.string());
    return registry_from_json(doc, path.string());
}

std::string serialize_user_media(const MediumRegistry& reg) {
    nlohmann::json media = nlohmann::json::object();
    for (const auto& name : reg.names()) {
        if (reg.is_builtin(name)) continue;
        const FluidMedium& m = reg.at(name);
        media[name] = {{"rho0", m.rho0},
                       {"c_sound", m.c_sound},
                       {"eta", m.eta},
                       {"depsilon", m.depsilon},
                       {"temperature", m.temperature}};
    }
    nlohmann::json doc;
    doc["media"] = media;
    return doc.dump(2);
}

} // namespace phoncas
