#include "wiremodel/codec_registry.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wiremodel/errors.hpp"

namespace wiremodel {

using nlohmann::json;

CodecRegistry::CodecRegistry(std::vector<CodecProfile> profiles) {
    for (const auto& p : profiles)
        add(p);
}

void CodecRegistry::add(const CodecProfile& profile) {
    validate_profile(profile);
    if (contains(profile.name))
        throw ConfigError("duplicate codec profile '" + profile.name + "'");
    profiles_.push_back(profile);
}

const CodecProfile& CodecRegistry::get(const std::string& name) const {
    for (const auto& p : profiles_)
        if (p.name == name)
            return p;
    throw ConfigError("codec profile '" + name + "' not found in registry");
}

bool CodecRegistry::contains(const std::string& name) const {
    for (const auto& p : profiles_)
        if (p.name == name)
            return true;
    return false;
}

std::string CodecRegistry::to_json() const {
    json arr = json::array();
    for (const auto& p : profiles_) {
        arr.push_back({{"name", p.name},
                       {"band", band_name(p.band)},
                       {"ie", p.ie},
                       {"bpl", p.bpl},
                       {"burst_r", p.default_burst_r}});
    }
    return arr.dump(2) + "\n";
}

CodecRegistry CodecRegistry::from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("codec registry is not valid JSON: ") + e.what());
    }
    if (!arr.is_array())
        throw ConfigError("codec registry must be a JSON array of profiles");
    CodecRegistry reg;
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("name") || !item.contains("band") ||
            !item.contains("ie") || !item.contains("bpl"))
            throw ConfigError("codec profile entries need name, band, ie, bpl");
        CodecProfile p;
        p.name = item.at("name").get<std::string>();
        p.band = band_from_name(item.at("band").get<std::string>());
        p.ie = item.at("ie").get<double>();
        p.bpl = item.at("bpl").get<double>();
        p.default_burst_r = item.value("burst_r", 1.0);
        reg.add(p);
    }
    return reg;
}

CodecRegistry CodecRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open codec registry '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("failed reading codec registry '" + path + "'");
    return from_json(buf.str());
}

void CodecRegistry::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write codec registry '" + path + "'");
    out << to_json();
    if (!out)
        throw IoError("failed writing codec registry '" + path + "'");
}

} // namespace wiremodel
