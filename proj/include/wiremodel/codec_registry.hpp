#pragma once

#include <string>
#include <vector>

#include "wiremodel/emodel.hpp"

namespace wiremodel {

// Named collection of codec impairment profiles, stored as a JSON array of
// {name, band, ie, bpl, burst_r}. Values are planning inputs supplied by the
// user (impairment-table data); the toolkit only validates ranges.
class CodecRegistry {
public:
    CodecRegistry() = default;
    explicit CodecRegistry(std::vector<CodecProfile> profiles);

    void add(const CodecProfile& profile); // throws ConfigError on duplicates/ranges
    const CodecProfile& get(const std::string& name) const; // throws ConfigError if absent
    bool contains(const std::string& name) const;
    const std::vector<CodecProfile>& profiles() const { return profiles_; }

    std::string to_json() const;
    static CodecRegistry from_json(const std::string& text); // throws ConfigError

    static CodecRegistry load(const std::string& path); // throws IoError / ConfigError
    void save(const std::string& path) const;           // throws IoError

private:
    std::vector<CodecProfile> profiles_;
};

} // namespace wiremodel
