#ifndef PDMWELL_IO_HPP
#define PDMWELL_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pdmwell/model.hpp"

// Config-file ingestion, number formatting for CSV and human tables,
// and the deterministic random config generator used by `verify`.

namespace pdmwell {

class ConfigParseError : public Error {
public:
    ConfigParseError(const std::string& msg, const std::string& key)
        : Error(msg), key_(key) {}
    const std::string& key() const { return key_; }
private:
    std::string key_;
};

/// Parses a flat key-value file with keys m1, m2, V1, V2, a, decimal
/// numbers, optional '=' separators and '#' comments. Unknown keys and
/// missing keys are rejected; the result is validated.
WellConfig parse_config_file(const std::string& path);
WellConfig parse_config_text(const std::string& text);

/// 12 significant digits, the machine-facing CSV precision.
std::string format_full(double v);
/// Fixed 4 decimals, the human table precision.
std::string format_table(double v);

/// Deterministic log-uniform draws in the documented verify ranges:
/// m1, m2 in [0.1, 10], V1 in [0.5, 5], a in [0.2, 5]; deltaV uniform
/// in [0, 5] with every eighth config exactly symmetric. The generator
/// is a splitmix64 stream, so output is identical across platforms.
std::vector<WellConfig> random_configs(std::uint64_t seed, int count);

/// Writes content to path via a temporary file and rename, so partial
/// output is never visible.
void atomic_write(const std::string& path, const std::string& content);

} // namespace pdmwell

#endif
