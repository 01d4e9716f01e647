// dsq: dark-soliton qubit correlation dynamics.
//
// Subcommands:
//   rates     Gamma(d)/gamma and eta(d)/gamma over a separation grid
//   evolve    time series of populations, concurrence, C2 and Q
//   scan      sudden-death/revival windows over the initial-state alpha
//   validate  run the full validation suite
//
// Exit codes: 0 success, 1 validation failure, 2 physics-domain error,
// 3 unsupported-state error, 64 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsq/config.hpp"
#include "dsq/csv.hpp"
#include "dsq/presets.hpp"
#include "dsq/scenarios.hpp"
#include "dsq/validate.hpp"

namespace {

using dsq::format_sig17;
using nlohmann::json;

struct FlagOverrides {
    std::optional<std::string> config_path;
    std::optional<double> g, chi, M, m, n0, quant_length;
    std::optional<double> gamma, big_gamma, eta;
    std::optional<double> d, alpha, t_max, dt, d_max, alpha_min, alpha_max;
    std::optional<int> d_count, alpha_count;
    std::optional<std::string> scenario, unit, out;
    bool json_flag = false;
    bool with_vn = false;
};

void add_common_flags(CLI::App* cmd, FlagOverrides& f) {
    cmd->add_option("--config", f.config_path, "config file (key = value lines)");
    cmd->add_option("--g", f.g, "BEC particle-particle coupling, J m");
    cmd->add_option("--chi", f.chi, "BEC-impurity coupling, J m");
    cmd->add_option("--M", f.M, "condensate particle mass, kg");
    cmd->add_option("--m", f.m, "impurity mass, kg");
    cmd->add_option("--n0", f.n0, "linear density, 1/m");
    cmd->add_option("--quant-length", f.quant_length, "quantization length, units of xi");
    cmd->add_option("--gamma", f.gamma, "single-qubit decay (direct-rate mode)");
    cmd->add_option("--Gamma", f.big_gamma, "collective damping (direct-rate mode)");
    cmd->add_option("--eta", f.eta, "coherent coupling (direct-rate mode)");
    cmd->add_option("--d", f.d, "qubit separation, units of xi");
    cmd->add_option("--scenario", f.scenario, "superposition|entangled|mixed");
    cmd->add_option("--alpha", f.alpha, "initial-state alpha in [0, 1]");
    cmd->add_option("--t-max", f.t_max, "time-grid end");
    cmd->add_option("--dt", f.dt, "time-grid step");
    cmd->add_option("--unit", f.unit, "dimensionless|ms");
    cmd->add_option("--out", f.out, "output path (default stdout)");
    cmd->add_flag("--json", f.json_flag, "emit JSON instead of CSV");
}

dsq::RunConfig resolve(const FlagOverrides& f) {
    dsq::RunConfig cfg;
    if (f.config_path) cfg = dsq::RunConfig::from_file(*f.config_path);
    auto ov = [](auto& dst, const auto& src) {
        if (src) dst = *src;
    };
    ov(cfg.g, f.g);
    ov(cfg.chi, f.chi);
    ov(cfg.M, f.M);
    ov(cfg.m, f.m);
    ov(cfg.n0, f.n0);
    ov(cfg.quant_length, f.quant_length);
    ov(cfg.gamma, f.gamma);
    ov(cfg.big_gamma, f.big_gamma);
    ov(cfg.eta, f.eta);
    if (f.d) cfg.d = *f.d;
    if (f.alpha) cfg.alpha = *f.alpha;
    if (f.t_max) cfg.t_max = *f.t_max;
    if (f.dt) cfg.dt = *f.dt;
    if (f.d_max) cfg.d_max = *f.d_max;
    if (f.d_count) cfg.d_count = *f.d_count;
    if (f.alpha_min) cfg.alpha_min = *f.alpha_min;
    if (f.alpha_max) cfg.alpha_max = *f.alpha_max;
    if (f.alpha_count) cfg.alpha_count = *f.alpha_count;
    if (f.scenario) cfg.scenario = *f.scenario;
    if (f.unit) cfg.unit = *f.unit;
    if (f.out) cfg.out = *f.out;
    if (f.json_flag) cfg.json = true;
    if (f.with_vn) cfg.with_vn = true;
    return cfg;
}

void emit(const dsq::RunConfig& cfg, const std::string& content) {
    if (cfg.out.empty())
        std::cout << content;
    else
        dsq::write_atomic(cfg.out, content);
}

dsq::ScenarioKind scenario_kind(const std::string& name) {
    if (name == "superposition") return dsq::ScenarioKind::superposition;
    if (name == "entangled") return dsq::ScenarioKind::entangled;
    return dsq::ScenarioKind::mixed;
}

struct ResolvedRates {
    dsq::RateSet normalized;  // gamma = 1
    double gamma_si = 0.0;    // 1/s, physical mode only
    bool physical = false;
};

ResolvedRates resolve_rates(const dsq::RunConfig& cfg) {
    ResolvedRates rr;
    if (cfg.has_physical()) {
        dsq::BecParams p{*cfg.g, *cfg.chi, *cfg.M, *cfg.m, *cfg.n0, *cfg.quant_length};
        const dsq::DerivedParams dp = dsq::derive_params(p);
        const dsq::RateModel model(p, dp);
        rr.normalized = model.rates(cfg.d).normalized();
        rr.gamma_si = model.gamma() * dp.mu / dsq::kHbar;
        rr.physical = true;
    } else {
        rr.normalized = dsq::RateSet{*cfg.gamma, cfg.big_gamma.value_or(0.0) * *cfg.gamma,
                                     cfg.eta.value_or(0.0) * *cfg.gamma}
                            .normalized();
    }
    return rr;
}

// Time conversion between the output unit and internal 1/gamma units.
struct TimeScale {
    double to_internal;  // internal = user * to_internal
    double to_user;
};

TimeScale time_scale(const dsq::RunConfig& cfg, const ResolvedRates& rr) {
    if (cfg.unit == "ms") return {1e-3 * rr.gamma_si, 1e3 / rr.gamma_si};
    return {1.0, 1.0};
}

int cmd_rates(const dsq::RunConfig& cfg) {
    if (!cfg.has_physical())
        throw dsq::UsageError("rates: physical parameters are required");
    if (cfg.d_count < 2 || !(cfg.d_max > 0.0)) throw dsq::UsageError("rates: bad d grid");
    dsq::BecParams p{*cfg.g, *cfg.chi, *cfg.M, *cfg.m, *cfg.n0, *cfg.quant_length};
    const dsq::DerivedParams dp = dsq::derive_params(p);
    const dsq::RateModel model(p, dp);
    const double gamma = model.gamma();

    json rows = json::array();
    std::string csv = "d,Gamma_over_gamma,eta_over_gamma\n";
    for (int i = 0; i < cfg.d_count; ++i) {
        const double d = cfg.d_max * i / (cfg.d_count - 1);
        const dsq::RateSet r = model.rates(d);
        if (cfg.json)
            rows.push_back({{"d", d},
                            {"Gamma_over_gamma", r.big_gamma / gamma},
                            {"eta_over_gamma", r.eta / gamma}});
        else
            csv += dsq::csv_line({format_sig17(d), format_sig17(r.big_gamma / gamma),
                                  format_sig17(r.eta / gamma)});
    }
    emit(cfg, cfg.json ? rows.dump(2) + "\n" : csv);
    return 0;
}

int cmd_evolve(const dsq::RunConfig& cfg) {
    const ResolvedRates rr = resolve_rates(cfg);
    const TimeScale ts = time_scale(cfg, rr);

    dsq::ScenarioConfig scfg;
    scfg.kind = scenario_kind(cfg.scenario);
    scfg.state_alpha = cfg.alpha;
    scfg.rates = rr.normalized;
    const long n = static_cast<long>(std::floor(cfg.t_max / cfg.dt + 1e-9));
    for (long i = 0; i <= n; ++i) scfg.t_grid.push_back(i * cfg.dt * ts.to_internal);

    const auto series = dsq::time_series(scfg, cfg.with_vn);

    std::string header = "t,rho_ee,rho_ss,rho_aa,rho_gg,concurrence,c2_closed,c2_pipeline,q_closed,q_pipeline";
    if (cfg.with_vn) header += ",q_vn";
    header += ",flag\n";
    std::string csv = header;
    json rows = json::array();
    for (const dsq::TimeSeriesRecord& rec : series) {
        const double t_user = rec.t * ts.to_user;
        if (cfg.json) {
            json row{{"t", t_user},
                     {"rho_ee", rec.rho_ee},
                     {"rho_ss", rec.rho_ss},
                     {"rho_aa", rec.rho_aa},
                     {"rho_gg", rec.rho_gg},
                     {"concurrence", rec.concurrence},
                     {"c2_closed", rec.c2_closed},
                     {"c2_pipeline", rec.c2_pipeline},
                     {"q_closed", rec.q_closed},
                     {"q_pipeline", rec.q_pipeline},
                     {"flag", rec.flag}};
            if (rec.q_vn) row["q_vn"] = *rec.q_vn;
            rows.push_back(row);
        } else {
            std::vector<std::string> fields{
                format_sig17(t_user),        format_sig17(rec.rho_ee),
                format_sig17(rec.rho_ss),    format_sig17(rec.rho_aa),
                format_sig17(rec.rho_gg),    format_sig17(rec.concurrence),
                format_sig17(rec.c2_closed), format_sig17(rec.c2_pipeline),
                format_sig17(rec.q_closed),  format_sig17(rec.q_pipeline)};
            if (cfg.with_vn) fields.push_back(format_sig17(rec.q_vn.value_or(0.0)));
            fields.push_back(rec.flag ? "1" : "0");
            csv += dsq::csv_line(fields);
        }
    }
    emit(cfg, cfg.json ? rows.dump(2) + "\n" : csv);
    return 0;
}

int cmd_scan(const dsq::RunConfig& cfg) {
    if (cfg.scenario != "entangled" && cfg.scenario != "mixed")
        throw dsq::UsageError("scan: scenario must be entangled or mixed");
    if (cfg.alpha_count < 2) throw dsq::UsageError("scan: alpha_count must be >= 2");
    const ResolvedRates rr = resolve_rates(cfg);
    const TimeScale ts = time_scale(cfg, rr);

    std::vector<double> alpha_grid;
    for (int i = 0; i < cfg.alpha_count; ++i)
        alpha_grid.push_back(cfg.alpha_min +
                             (cfg.alpha_max - cfg.alpha_min) * i / (cfg.alpha_count - 1));
    const dsq::ScanResult scan =
        dsq::sudden_death_scan(scenario_kind(cfg.scenario), rr.normalized, alpha_grid,
                               cfg.t_max * ts.to_internal, cfg.dt * ts.to_internal);

    std::string csv = "alpha,death_start,revival_end,dark_duration\n";
    json rows = json::array();
    for (const dsq::ScanRow& row : scan.rows) {
        if (row.windows.empty()) {
            csv += dsq::csv_line({format_sig17(row.alpha), "", "", ""});
            if (cfg.json) rows.push_back({{"alpha", row.alpha}});
            continue;
        }
        const dsq::DeathWindow& w = row.windows.front();
        csv += dsq::csv_line({format_sig17(row.alpha), format_sig17(w.death_start * ts.to_user),
                              format_sig17(w.revival_end * ts.to_user),
                              format_sig17(w.duration() * ts.to_user)});
        if (cfg.json)
            rows.push_back({{"alpha", row.alpha},
                            {"death_start", w.death_start * ts.to_user},
                            {"revival_end", w.revival_end * ts.to_user},
                            {"dark_duration", w.duration() * ts.to_user}});
    }
    if (cfg.json) {
        json doc{{"rows", rows}};
        if (scan.threshold_alpha) doc["alpha_star"] = *scan.threshold_alpha;
        emit(cfg, doc.dump(2) + "\n");
    } else {
        csv += "# alpha_star = ";
        csv += scan.threshold_alpha ? format_sig17(*scan.threshold_alpha) : std::string("none");
        csv += "\n";
        emit(cfg, csv);
    }
    return 0;
}

int cmd_validate(const dsq::RunConfig& cfg) {
    const auto results = dsq::run_acceptance();
    if (cfg.json) {
        json rows = json::array();
        for (const auto& r : results)
            rows.push_back(
                {{"name", r.name}, {"passed", r.passed}, {"warned", r.warned}, {"detail", r.detail}});
        emit(cfg, rows.dump(2) + "\n");
    } else {
        std::string table;
        for (const auto& r : results) {
            table += r.passed ? (r.warned ? "PASS*" : "PASS ") : "FAIL ";
            table += " " + r.name + ": " + r.detail + "\n";
        }
        emit(cfg, table);
    }
    return dsq::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dark-soliton qubit correlation dynamics"};
    app.require_subcommand(1);

    FlagOverrides f_rates, f_evolve, f_scan, f_validate;
    CLI::App* rates = app.add_subcommand("rates", "collective damping and coupling vs distance");
    add_common_flags(rates, f_rates);
    rates->add_option("--d-max", f_rates.d_max, "largest separation, units of xi");
    rates->add_option("--d-count", f_rates.d_count, "grid size");

    CLI::App* evolve = app.add_subcommand("evolve", "correlation time series");
    add_common_flags(evolve, f_evolve);
    evolve->add_flag("--with-vn", f_evolve.with_vn, "add the von Neumann discord column");

    CLI::App* scan = app.add_subcommand("scan", "sudden-death windows over alpha");
    add_common_flags(scan, f_scan);
    scan->add_option("--alpha-min", f_scan.alpha_min, "grid start");
    scan->add_option("--alpha-max", f_scan.alpha_max, "grid end");
    scan->add_option("--alpha-count", f_scan.alpha_count, "grid size");

    CLI::App* validate = app.add_subcommand("validate", "run the validation suite");
    add_common_flags(validate, f_validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    }

    try {
        if (rates->parsed()) {
            const auto cfg = resolve(f_rates);
            cfg.validate_common();
            return cmd_rates(cfg);
        }
        if (evolve->parsed()) {
            const auto cfg = resolve(f_evolve);
            cfg.validate_common();
            return cmd_evolve(cfg);
        }
        if (scan->parsed()) {
            const auto cfg = resolve(f_scan);
            cfg.validate_common();
            return cmd_scan(cfg);
        }
        if (validate->parsed()) return cmd_validate(resolve(f_validate));
    } catch (const dsq::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const dsq::UnsupportedStateError& e) {
        std::cerr << "unsupported state: " << e.what() << "\n";
        return 3;
    } catch (const dsq::DomainError& e) {
        std::cerr << "physics-domain error: " << e.what() << "\n";
        return 2;
    } catch (const dsq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
