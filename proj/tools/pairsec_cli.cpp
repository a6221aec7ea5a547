#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairsec/report.hpp"

using nlohmann::json;
using namespace pairsec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

const std::vector<double> kTable8Levels = {128, 160, 192, 256};

// rows rendered per the requested format; json payload passed alongside
void emit(const RunConfig& cfg, const std::string& command, json payload,
          const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
    if (cfg.format == "json")
        write_output(cfg, wrap_report(command, cfg, std::move(payload)).dump(2));
    else if (cfg.format == "csv")
        write_output(cfg, render_csv(header, rows));
    else if (cfg.format == "markdown")
        write_output(cfg, render_markdown_table(header, rows));
    else
        throw ConfigError("unknown format: " + cfg.format);
}

std::vector<std::string> profile_row(const std::string& name, const SecurityProfile& p) {
    return {name,
            p.field.feasible ? std::to_string(p.field.A) : "-",
            p.field.feasible ? fmt_bits(p.field.log2B) : "-",
            p.field.feasible ? fmt_bits(p.field.log2_n1) : "-",
            p.field.feasible ? fmt_bits(p.field.log2_n2) : "-",
            p.field.feasible ? fmt_bits(p.field_bits) : "-",
            fmt_bits(p.curve_bits),
            p.field.feasible ? fmt_bits(p.security_bits) : fmt_bits(p.curve_bits)};
}

const std::vector<std::string> kProfileHeader = {
    "curve", "A", "log2_B", "log2_N1", "log2_N2", "field_bits", "curve_bits",
    "security_bits"};

int cmd_estimate(const RunConfig& cfg, const std::string& curve_name) {
    const Registry& reg = Registry::builtin();
    if (!reg.has_curve(curve_name)) {
        std::cerr << "unknown curve: " << curve_name << "\n";
        return kExitUsage;
    }
    SecurityProfile p = profile(reg.curve(curve_name), cfg.security(false));
    emit(cfg, "estimate", profile_json(p), kProfileHeader, {profile_row(curve_name, p)});
    return p.field.feasible ? kExitOk : kExitInfeasible;
}

int cmd_table7(const RunConfig& cfg) {
    const Registry& reg = Registry::builtin();
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    bool all_feasible = true;
    for (const auto& rc : reg.curves()) {
        try {
            SecurityProfile p = profile(reg.curve(rc.name), cfg.security(false));
            items.push_back(profile_json(p));
            rows.push_back(profile_row(rc.name, p));
            all_feasible &= p.field.feasible;
        } catch (const std::exception& e) {
            items.push_back({{"curve", rc.name}, {"error", e.what()}});
            rows.push_back({rc.name, "error", e.what(), "", "", "", "", ""});
        }
    }
    emit(cfg, "table7", items, kProfileHeader, rows);
    return all_feasible ? kExitOk : kExitInfeasible;
}

int cmd_table8(const RunConfig& cfg) {
    SecurityOptions opts = cfg.security(true);
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"family"};
    for (double lv : kTable8Levels) header.push_back(fmt_bits(lv));
    for (const auto& fam : cfg.family_list()) {
        json levels = json::object();
        std::vector<std::string> row = {fam};
        for (double lv : kTable8Levels) {
            try {
                auto pb = min_p_for_level(fam, lv, opts);
                levels[fmt_bits(lv)] = pb ? json(*pb) : json(nullptr);
                row.push_back(pb ? std::to_string(*pb) : "-");
            } catch (const std::exception& e) {
                levels[fmt_bits(lv)] = {{"error", e.what()}};
                row.push_back("error");
            }
        }
        items.push_back({{"family", fam}, {"min_p_bits", levels}});
        rows.push_back(row);
    }
    emit(cfg, "table8", items, header, rows);
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const std::string& family, int lo, int hi, int step) {
    auto pts = sweep_family(family, lo, hi, step, cfg.security(true));
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pts) {
        items.push_back({{"p_bits", p.p_bits},
                         {"r_bits", p.r_bits},
                         {"u", p.u.get_str()},
                         {"field_bits", p.field_bits},
                         {"curve_bits", p.curve_bits},
                         {"security_bits", p.security_bits}});
        rows.push_back({std::to_string(p.p_bits), std::to_string(p.r_bits), p.u.get_str(),
                        fmt_bits(p.field_bits), fmt_bits(p.curve_bits),
                        fmt_bits(p.security_bits)});
    }
    json payload = {{"family", family}, {"points", items}};
    auto xo = find_crossover(family, lo, hi, cfg.security(true));
    if (xo)
        payload["crossover"] = {{"p_bits", xo->p_bits}, {"level", xo->level}};
    else
        payload["crossover"] = nullptr;
    emit(cfg, "sweep", payload,
         {"p_bits", "r_bits", "u", "field_bits", "curve_bits", "security_bits"}, rows);
    return pts.empty() ? kExitInfeasible : kExitOk;
}

int cmd_compare(const RunConfig& cfg, double level) {
    auto ranked = compare_at_level(level, cfg.security(true));
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : ranked) {
        items.push_back(
            {{"family", e.family}, {"p_bits", e.p_bits}, {"log2_cost", e.log2_cost}});
        rows.push_back({e.family, std::to_string(e.p_bits), fmt_bits(e.log2_cost)});
    }
    emit(cfg, "compare", {{"level_bits", level}, {"ranking", items}},
         {"family", "p_bits", "log2_pairing_cost"}, rows);
    return ranked.empty() ? kExitInfeasible : kExitOk;
}

int cmd_asymptote(const RunConfig& cfg, double q_bits, double tau) {
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    auto add = [&](const std::string& name, double c, std::optional<double> eps,
                   const std::string& note) {
        double bits = asymptotic_bits(q_bits, c, eps.value_or(0));
        items.push_back({{"variant", name},
                         {"c", c},
                         {"epsilon", eps ? json(*eps) : json(nullptr)},
                         {"bits", bits},
                         {"note", note}});
        rows.push_back({name, fmt_bits(c), eps ? fmt_bits(*eps) : "-", fmt_bits(bits)});
    };
    std::vector<AsymptoticVariant> vs = asymptotic_variants();
    std::stable_sort(vs.begin(), vs.end(),
                     [](const auto& a, const auto& b) { return a.c < b.c; });
    for (const auto& v : vs) add(v.name, v.c, v.epsilon, v.note);
    add("SNFS-JP", snfs_jp_c(tau), {}, "tau=" + fmt_bits(tau));
    emit(cfg, "asymptote", {{"Q_bits", q_bits}, {"variants", items}},
         {"variant", "c", "epsilon", "bits"}, rows);
    return kExitOk;
}

int cmd_list_curves(const RunConfig& cfg) {
    const Registry& reg = Registry::builtin();
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& rc : reg.curves()) {
        CurveInstance c = reg.curve(rc.name);
        items.push_back({{"name", c.name},
                         {"family", c.family},
                         {"k", c.k},
                         {"u", c.u.get_str()},
                         {"p_bits", c.p_bits},
                         {"r_bits", c.r_bits}});
        rows.push_back({c.name, c.family, std::to_string(c.k), c.u.get_str(),
                        std::to_string(c.p_bits), std::to_string(c.r_bits)});
    }
    emit(cfg, "list-curves", items, {"name", "family", "k", "u", "p_bits", "r_bits"},
         rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairing-friendly curve security and pairing-cost estimator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, families_csv;
    app.add_option("--config", config_path, "config file (key = value)");
    app.add_option("--model", cfg.model, "cost model: BD or GS");
    app.add_option("--samples", cfg.samples, "norm samples per estimate");
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_flag("--fast", cfg.fast, "reduced-sample profile");
    app.add_option("--format", cfg.format, "json | csv | markdown");
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--families", families_csv, "comma-separated family filter");

    std::string curve_name, family;
    int p_lo = 200, p_hi = 700, p_step = 20;
    double level = 128, q_bits = 3072, tau = 4;

    auto* est = app.add_subcommand("estimate", "security profile of one registered curve");
    est->add_option("curve", curve_name)->required();
    auto* t7 = app.add_subcommand("table7", "security of all registered curves");
    auto* t8 = app.add_subcommand("table8", "minimum p per family per security level");
    auto* sw = app.add_subcommand("sweep", "field vs curve security over p size");
    sw->add_option("family", family)->required();
    sw->add_option("--p-min", p_lo);
    sw->add_option("--p-max", p_hi);
    sw->add_option("--p-step", p_step);
    auto* cp = app.add_subcommand("compare", "pairing-cost ranking at a security level");
    cp->add_option("level", level)->required();
    auto* as = app.add_subcommand("asymptote", "asymptotic L_Q(1/3, c) security");
    as->add_option("q_bits", q_bits)->required();
    as->add_option("--tau", tau, "SNFS-JP parameter");
    auto* lc = app.add_subcommand("list-curves", "registered curves");
    for (CLI::App* s : {est, t7, t8, sw, cp, as, lc}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            // file values sit between defaults and explicit flags
            RunConfig cli = cfg;
            RunConfig merged;
            merged.apply_file(config_path);
            auto passed = [&](const std::string& name) {
                return app.get_option(name)->count() > 0;
            };
            if (passed("--model")) merged.model = cli.model;
            if (passed("--samples")) merged.samples = cli.samples;
            if (passed("--seed")) merged.seed = cli.seed;
            if (passed("--fast")) merged.fast = cli.fast;
            if (passed("--format")) merged.format = cli.format;
            if (passed("--out")) merged.out = cli.out;
            cfg = merged;
        }
        if (!families_csv.empty()) {
            cfg.families.clear();
            std::istringstream is(families_csv);
            std::string tok;
            while (std::getline(is, tok, ','))
                if (!tok.empty()) cfg.families.push_back(tok);
        }
        ModelParams::by_name(cfg.model);  // validate early

        if (est->parsed()) return cmd_estimate(cfg, curve_name);
        if (t7->parsed()) return cmd_table7(cfg);
        if (t8->parsed()) return cmd_table8(cfg);
        if (sw->parsed()) return cmd_sweep(cfg, family, p_lo, p_hi, p_step);
        if (cp->parsed()) return cmd_compare(cfg, level);
        if (as->parsed()) return cmd_asymptote(cfg, q_bits, tau);
        if (lc->parsed()) return cmd_list_curves(cfg);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    }
    return kExitUsage;
}
