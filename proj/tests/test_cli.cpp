#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "dsq/config.hpp"
#include "dsq/csv.hpp"

using namespace dsq;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("config parsing: comments, overrides, unknown keys") {
    const std::string path = write_temp("cfg_parse.conf",
                                        "# example\n"
                                        "gamma = 1.0   # direct rates\n"
                                        "Gamma = -0.35\n"
                                        "eta=0.9\n"
                                        "scenario = entangled\n"
                                        "alpha = 0.75\n");
    const RunConfig cfg = RunConfig::from_file(path);
    CHECK(cfg.gamma.has_value());
    CHECK(*cfg.gamma == 1.0);
    CHECK(*cfg.big_gamma == -0.35);
    CHECK(*cfg.eta == 0.9);
    CHECK(cfg.scenario == "entangled");
    CHECK(cfg.alpha == 0.75);
    CHECK_NOTHROW(cfg.validate_common());

    const std::string bad = write_temp("cfg_bad.conf", "nonsense_key = 3\n");
    CHECK_THROWS_AS(RunConfig::from_file(bad), UsageError);
    const std::string bad2 = write_temp("cfg_bad2.conf", "gamma 3\n");
    CHECK_THROWS_AS(RunConfig::from_file(bad2), UsageError);
}

TEST_CASE("config round trip is idempotent") {
    const std::string path = write_temp("cfg_round.conf",
                                        "gamma = 1\nGamma = 0.123456789012345678\neta = 2\n"
                                        "t_max = 7.5\ndt = 0.01\nscenario = mixed\nalpha = 0.2\n");
    const RunConfig cfg = RunConfig::from_file(path);
    const std::string ser1 = cfg.serialize();
    const std::string path2 = write_temp("cfg_round2.conf", ser1);
    const std::string ser2 = RunConfig::from_file(path2).serialize();
    CHECK(ser1 == ser2);
}

TEST_CASE("config cross-field validation") {
    RunConfig neither;
    CHECK_THROWS_AS(neither.validate_common(), UsageError);

    RunConfig both;
    both.gamma = 1.0;
    both.g = 1e-39;
    both.chi = 1e-38;
    both.M = 1e-25;
    both.m = 1e-26;
    both.n0 = 5e8;
    both.quant_length = 1000.0;
    CHECK_THROWS_AS(both.validate_common(), UsageError);

    RunConfig zero_t;
    zero_t.gamma = 1.0;
    zero_t.t_max = 0.0;
    CHECK_THROWS_AS(zero_t.validate_common(), UsageError);

    RunConfig ms_direct;
    ms_direct.gamma = 1.0;
    ms_direct.unit = "ms";
    CHECK_THROWS_AS(ms_direct.validate_common(), UsageError);
}

TEST_CASE("formatting: 17 significant digits, C locale") {
    CHECK(format_sig17(0.5) == "0.5");
    CHECK(format_sig17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_sig17(-0.0001) == "-0.0001");
    CHECK(csv_line({"a", "b", ""}) == "a,b,\n");
}

TEST_CASE("atomic write replaces content") {
    const std::string path = "atomic_test.csv";
    write_atomic(path, "x\n");
    write_atomic(path, "y\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "y\n");
    std::remove(path.c_str());
}
