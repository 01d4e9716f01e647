#include "dsq/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dsq/csv.hpp"

namespace dsq {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw UsageError("config: bad numeric value for '" + key + "': " + value);
    return x;
}

int parse_int(const std::string& key, const std::string& value) {
    const double x = parse_double(key, value);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x) throw UsageError("config: '" + key + "' must be an integer");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw UsageError("config: '" + key + "' must be true/false");
}

}  // namespace

bool RunConfig::has_physical() const {
    return g && chi && M && m && n0 && quant_length;
}

void RunConfig::apply_kv(const std::string& key, const std::string& value) {
    if (key == "g") g = parse_double(key, value);
    else if (key == "chi") chi = parse_double(key, value);
    else if (key == "M") M = parse_double(key, value);
    else if (key == "m") m = parse_double(key, value);
    else if (key == "n0") n0 = parse_double(key, value);
    else if (key == "quant_length") quant_length = parse_double(key, value);
    else if (key == "gamma") gamma = parse_double(key, value);
    else if (key == "Gamma") big_gamma = parse_double(key, value);
    else if (key == "eta") eta = parse_double(key, value);
    else if (key == "d") d = parse_double(key, value);
    else if (key == "scenario") scenario = value;
    else if (key == "alpha") alpha = parse_double(key, value);
    else if (key == "t_max") t_max = parse_double(key, value);
    else if (key == "dt") dt = parse_double(key, value);
    else if (key == "unit") unit = value;
    else if (key == "out") out = value;
    else if (key == "json") json = parse_bool(key, value);
    else if (key == "with_vn") with_vn = parse_bool(key, value);
    else if (key == "d_max") d_max = parse_double(key, value);
    else if (key == "d_count") d_count = parse_int(key, value);
    else if (key == "alpha_min") alpha_min = parse_double(key, value);
    else if (key == "alpha_max") alpha_max = parse_double(key, value);
    else if (key == "alpha_count") alpha_count = parse_int(key, value);
    else throw UsageError("config: unknown key '" + key + "'");
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config: line " + std::to_string(lineno) + " is not 'key = value'");
        cfg.apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) os << key << " = " << format_sig17(*v) << "\n";
    };
    put("g", g);
    put("chi", chi);
    put("M", M);
    put("m", m);
    put("n0", n0);
    put("quant_length", quant_length);
    put("gamma", gamma);
    put("Gamma", big_gamma);
    put("eta", eta);
    os << "d = " << format_sig17(d) << "\n";
    os << "scenario = " << scenario << "\n";
    os << "alpha = " << format_sig17(alpha) << "\n";
    os << "t_max = " << format_sig17(t_max) << "\n";
    os << "dt = " << format_sig17(dt) << "\n";
    os << "unit = " << unit << "\n";
    if (!out.empty()) os << "out = " << out << "\n";
    os << "json = " << (json ? "true" : "false") << "\n";
    os << "with_vn = " << (with_vn ? "true" : "false") << "\n";
    os << "d_max = " << format_sig17(d_max) << "\n";
    os << "d_count = " << d_count << "\n";
    os << "alpha_min = " << format_sig17(alpha_min) << "\n";
    os << "alpha_max = " << format_sig17(alpha_max) << "\n";
    os << "alpha_count = " << alpha_count << "\n";
    return os.str();
}

void RunConfig::validate_common() const {
    if (has_physical() == has_direct())
        throw UsageError("exactly one of {physical parameters, direct rates} must be supplied");
    if (!(t_max > 0.0)) throw UsageError("t_max must be > 0");
    if (!(dt > 0.0)) throw UsageError("dt must be > 0");
    if (scenario != "superposition" && scenario != "entangled" && scenario != "mixed")
        throw UsageError("scenario must be one of superposition|entangled|mixed");
    if (unit != "dimensionless" && unit != "ms") throw UsageError("unit must be dimensionless|ms");
    if (unit == "ms" && !has_physical())
        throw UsageError("unit = ms needs physical parameters (for the mu/hbar time scale)");
    if (alpha < 0.0 || alpha > 1.0) throw UsageError("alpha must lie in [0, 1]");
}

}  // namespace dsq
