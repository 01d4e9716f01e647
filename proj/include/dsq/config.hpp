// Run configuration: flat "key = value" files with '#' comments, overridden
// by CLI flags. Parsing and re-serialization round-trip exactly.

#pragma once

#include <optional>
#include <string>

#include "dsq/cmatrix.hpp"

namespace dsq {

/// Command-line / config-file usage problems (exit code 64).
struct UsageError : Error {
    using Error::Error;
};

struct RunConfig {
    // Physical parameters (SI; quant_length in units of xi). All six are
    // required together.
    std::optional<double> g, chi, M, m, n0, quant_length;

    // Direct rates in units of gamma.
    std::optional<double> gamma, big_gamma, eta;

    double d = 2.5;  // qubit separation, units of xi
    std::string scenario = "superposition";
    double alpha = 1.0;
    double t_max = 5.0;
    double dt = 0.005;
    std::string unit = "dimensionless";  // or "ms"
    std::string out;                     // output path; empty writes stdout
    bool json = false;
    bool with_vn = false;

    // rates subcommand grid
    double d_max = 10.0;
    int d_count = 201;

    // scan subcommand grid
    double alpha_min = 0.0;
    double alpha_max = 1.0;
    int alpha_count = 101;

    bool has_physical() const;
    bool has_direct() const { return gamma.has_value(); }

    /// Throws UsageError on malformed files or unknown keys.
    static RunConfig from_file(const std::string& path);

    void apply_kv(const std::string& key, const std::string& value);

    /// Canonical textual form; parse(serialize(c)) == c.
    std::string serialize() const;

    /// Cross-field checks shared by every subcommand.
    void validate_common() const;
};

}  // namespace dsq
