#ifndef PAIRSEC_REPORT_HPP
#define PAIRSEC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pairsec/pairing_cost.hpp"
#include "pairsec/security.hpp"

namespace pairsec {

inline constexpr const char* kSchemaVersion = "1";

struct RunConfig {
    std::string model = "BD";
    long samples = 25600;
    long sweep_samples = 640;   // per point in sweeps / crossovers / table8
    long locate_samples = 256;  // norm-growth model fitting
    uint64_t seed = 1;
    bool fast = false;
    bool eq2_linalg = false;
    bool strict_setup = false;
    std::string format = "json";  // json | csv | markdown
    std::string out;              // empty: stdout
    std::vector<std::string> families;  // empty: all registered

    // sweep=true swaps in the reduced per-point sample count
    SecurityOptions security(bool sweep) const;
    std::vector<std::string> family_list() const;

    // flat "key = value" file with optional [section] headers; section names
    // are joined as section.key. Unknown keys are rejected.
    void apply_file(const std::string& path);
    void apply_kv(const std::string& key, const std::string& value);

    nlohmann::json to_json() const;
    std::string hash() const;  // FNV-1a over the canonical serialization
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json profile_json(const SecurityProfile& p);
nlohmann::json wrap_report(const std::string& command, const RunConfig& cfg,
                           nlohmann::json payload);

// shared plain-text renderers
std::string render_markdown_table(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows);
std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

std::string fmt_bits(double v);  // fixed, 2 decimals; "inf"/"-" handled by callers

// to cfg.out if set, else stdout
void write_output(const RunConfig& cfg, const std::string& text);

}  // namespace pairsec

#endif
