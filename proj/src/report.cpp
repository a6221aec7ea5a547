#include "pairsec/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pairsec {

SecurityOptions RunConfig::security(bool sweep) const {
    SecurityOptions o;
    o.model = ModelParams::by_name(model);
    o.model.eq2_linalg = eq2_linalg;
    o.seed = seed;
    o.strict_setup = strict_setup;
    long n = sweep ? sweep_samples : samples;
    if (fast) n = std::max(64L, n / 10);
    o.grid.samples = n;
    o.grid.locate_samples = fast ? 128 : locate_samples;
    return o;
}

std::vector<std::string> RunConfig::family_list() const {
    if (!families.empty()) return families;
    std::vector<std::string> out;
    for (const auto& f : Registry::builtin().families()) out.push_back(f.name);
    return out;
}

void RunConfig::apply_kv(const std::string& key, const std::string& value) {
    try {
        if (key == "model")
            model = value;
        else if (key == "samples")
            samples = std::stol(value);
        else if (key == "sweep_samples")
            sweep_samples = std::stol(value);
        else if (key == "locate_samples")
            locate_samples = std::stol(value);
        else if (key == "seed")
            seed = std::stoull(value);
        else if (key == "fast")
            fast = value == "true" || value == "1";
        else if (key == "cost.eq2_linalg")
            eq2_linalg = value == "true" || value == "1";
        else if (key == "setup.strict")
            strict_setup = value == "true" || value == "1";
        else if (key == "format")
            format = value;
        else if (key == "out")
            out = value;
        else if (key == "families") {
            families.clear();
            std::istringstream is(value);
            std::string tok;
            while (std::getline(is, tok, ','))
                if (!tok.empty()) families.push_back(tok);
        } else
            throw ConfigError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad value for " + key + ": " + value);
    }
}

void RunConfig::apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line, section;
    int lineno = 0;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[' && s.back() == ']') {
            section = strip(s.substr(1, s.size() - 2));
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = strip(s.substr(0, eq));
        std::string value = strip(s.substr(eq + 1));
        apply_kv(section.empty() ? key : section + "." + key, value);
    }
}

nlohmann::json RunConfig::to_json() const {
    return {{"model", model},
            {"samples", samples},
            {"sweep_samples", sweep_samples},
            {"locate_samples", locate_samples},
            {"seed", seed},
            {"fast", fast},
            {"eq2_linalg", eq2_linalg},
            {"strict_setup", strict_setup},
            {"families", families}};
}

std::string RunConfig::hash() const {
    std::string s = to_json().dump();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fmt_bits(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

nlohmann::json profile_json(const SecurityProfile& p) {
    nlohmann::json j{{"curve", p.curve.name.empty() ? p.curve.family : p.curve.name},
                     {"family", p.curve.family},
                     {"u", p.curve.u.get_str()},
                     {"p_bits", p.curve.p_bits},
                     {"r_bits", p.curve.r_bits},
                     {"curve_bits", p.curve_bits},
                     {"security_bits", p.security_bits},
                     {"h_irreducible_mod_p", p.h_irreducible_mod_p},
                     {"extrapolated_recipe", p.extrapolated_recipe}};
    if (p.field.feasible) {
        j["field"] = {{"A", p.field.A},
                      {"log2_B", p.field.log2B},
                      {"log2_N1", p.field.log2_n1},
                      {"log2_N2", p.field.log2_n2},
                      {"log2_rho1", p.field.log2_rho1},
                      {"log2_rho2", p.field.log2_rho2},
                      {"log2_space", p.field.log2_space},
                      {"log2_relations", p.field.log2_relations},
                      {"log2_sieve", p.field.log2_sieve},
                      {"log2_linalg", p.field.log2_linalg},
                      {"log2_total", p.field.log2_total}};
        j["field_bits"] = p.field_bits;
    } else {
        j["field"] = nullptr;
        j["field_bits"] = nullptr;
    }
    return j;
}

nlohmann::json wrap_report(const std::string& command, const RunConfig& cfg,
                           nlohmann::json payload) {
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"config", cfg.to_json()},
            {"config_hash", cfg.hash()},
            {"result", std::move(payload)}};
}

std::string render_markdown_table(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << '|';
    for (const auto& h : header) os << ' ' << h << " |";
    os << "\n|";
    for (size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& row : rows) {
        os << '|';
        for (const auto& c : row) os << ' ' << c << " |";
        os << '\n';
    }
    return os.str();
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + cfg.out);
    f << text;
}

}  // namespace pairsec
