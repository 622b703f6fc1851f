#include "pdmwell/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace pdmwell {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// splitmix64, then a 53-bit mantissa mapped to [0, 1).
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double log_uniform(double lo, double hi) {
        return std::exp(std::log(lo) + uniform() * (std::log(hi) - std::log(lo)));
    }
};

} // namespace

WellConfig parse_config_text(const std::string& text) {
    std::map<std::string, double> values;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        std::string key, value_str;
        if (eq != std::string::npos) {
            key = trim(line.substr(0, eq));
            value_str = trim(line.substr(eq + 1));
        } else {
            const auto space = line.find_first_of(" \t");
            if (space == std::string::npos)
                throw ConfigParseError("missing value for key: " + line, line);
            key = trim(line.substr(0, space));
            value_str = trim(line.substr(space + 1));
        }

        if (key != "m1" && key != "m2" && key != "V1" && key != "V2" && key != "a")
            throw ConfigParseError("unknown config key: " + key, key);
        try {
            std::size_t pos = 0;
            const double v = std::stod(value_str, &pos);
            if (pos != value_str.size())
                throw ConfigParseError("malformed number for key: " + key, key);
            values[key] = v;
        } catch (const std::invalid_argument&) {
            throw ConfigParseError("malformed number for key: " + key, key);
        } catch (const std::out_of_range&) {
            throw ConfigParseError("number out of range for key: " + key, key);
        }
    }

    for (const char* key : {"m1", "m2", "V1", "V2", "a"})
        if (!values.count(key))
            throw ConfigParseError(std::string("missing config key: ") + key, key);

    WellConfig c;
    c.m1 = values["m1"];
    c.m2 = values["m2"];
    c.V1 = values["V1"];
    c.V2 = values["V2"];
    c.a = values["a"];
    return validate(c);
}

WellConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_table(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::vector<WellConfig> random_configs(std::uint64_t seed, int count) {
    SplitMix64 rng{seed};
    std::vector<WellConfig> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        WellConfig c;
        c.m1 = rng.log_uniform(0.1, 10.0);
        c.m2 = rng.log_uniform(0.1, 10.0);
        c.V1 = rng.log_uniform(0.5, 5.0);
        const double dv = rng.uniform() * 5.0;
        c.V2 = c.V1 + (i % 8 == 7 ? 0.0 : dv);
        c.a = rng.log_uniform(0.2, 5.0);
        out.push_back(validate(c));
    }
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open output file: " + tmp);
        out << content;
        if (!out.good()) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("rename failed: " + path);
}

} // namespace pdmwell
