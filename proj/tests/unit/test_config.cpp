#include "wqed/config.hpp"
#include "wqed/constants.hpp"
#include "wqed/rates.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace wqed;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Parses and returns the error; fails the test if parsing succeeds.
ConfigError parse_error(const std::string& text, std::optional<Scenario> s = std::nullopt) {
    try {
        parse_config(text, s);
    } catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a ConfigError for:\n" << text;
    return ConfigError("", 0, "");
}

const std::string kMinimalTwoLevel = "scenario = two-level\n"
                                     "Gamma10_MHz = 41\n"
                                     "Nin_rel = 0.01\n"
                                     "delta_min_rel = -10\n"
                                     "delta_max_rel = 10\n"
                                     "delta_points = 21\n";

} // namespace

TEST(ParseConfig, MinimalTwoLevel) {
    const RunConfig cfg = parse_config(kMinimalTwoLevel);
    ASSERT_EQ(cfg.scenario, Scenario::TwoLevel);
    ASSERT_TRUE(cfg.twoLevel);
    const TwoLevelSetup& s = *cfg.twoLevel;
    const double G = constants::two_pi * 41e6;
    EXPECT_DOUBLE_EQ(s.drive.Gamma10, G);
    EXPECT_DOUBLE_EQ(s.drive.gamma10, 0.5 * G);
    EXPECT_DOUBLE_EQ(s.drive.Nin, 0.01 * 41e6);
    ASSERT_EQ(s.deltaOverGamma10.size(), 21u);
    EXPECT_EQ(s.deltaOverGamma10.front(), -10.0);
    EXPECT_EQ(s.deltaOverGamma10.back(), 10.0);
    EXPECT_EQ(s.method, TwoLevelMethod::Both);
    EXPECT_TRUE(cfg.outputPath.empty());
    EXPECT_EQ(cfg.format, OutputFormat::Csv);
}

TEST(ParseConfig, CommentsBlankLinesAndUnicodeMinus) {
    const RunConfig cfg = parse_config("# header\n\n  scenario = two-level   # trailing\n"
                                       "Gamma10_GHz = 0.041\n"
                                       "Nin_rel=0.01\n"
                                       "delta_min_rel = \xE2\x88\x92" "5\n");
    EXPECT_DOUBLE_EQ(cfg.twoLevel->drive.Gamma10, constants::two_pi * 41e6);
    EXPECT_EQ(cfg.twoLevel->deltaOverGamma10.front(), -5.0);
}

TEST(ParseConfig, ReferenceG2Config) {
    const RunConfig cfg = parse_config(read_file(std::string(WQED_CONFIG_DIR) + "/g2.cfg"));
    ASSERT_EQ(cfg.scenario, Scenario::G2);
    ASSERT_TRUE(cfg.g2);
    const G2Setup& g = *cfg.g2;
    EXPECT_DOUBLE_EQ(g.base.Gamma10, constants::two_pi * 41e6);
    EXPECT_DOUBLE_EQ(g.base.omega10, constants::two_pi * 5.12e9);
    EXPECT_NEAR(g.base.Nin, 2.34e7, 0.01e7);
    ASSERT_EQ(g.curves.size(), 3u);
    EXPECT_EQ(g.curves[0], std::make_pair(0.0, constants::two_pi * 1000e6));
    EXPECT_EQ(g.curves[1], std::make_pair(0.0, constants::two_pi * 55e6));
    EXPECT_NEAR(g.curves[2].first, 0.05, 1e-15);
    EXPECT_TRUE(g.base.filtered);
    EXPECT_EQ(g.base.tauGrid.size(), 400u);
}

TEST(ParseConfig, ProductCombination) {
    const RunConfig cfg = parse_config("scenario = g2\nGamma10_MHz = 41\nf10_GHz = 5.12\nP_dBm = -131\n"
                                       "T_mK = 0, 50\nBW_MHz = 55, 1000\n");
    EXPECT_EQ(cfg.g2->curves.size(), 4u);
}

TEST(ParseConfig, ShippedConfigsParse) {
    for (const char* name : {"spectrum", "two_level", "three_level", "g2"}) {
        EXPECT_NO_THROW(parse_config(read_file(std::string(WQED_CONFIG_DIR) + "/" + name + ".cfg"))) << name;
    }
}

TEST(ParseConfig, UnknownKeyNamesKeyAndLine) {
    const ConfigError e = parse_error(kMinimalTwoLevel + "foo=1\n");
    EXPECT_EQ(e.key(), "foo");
    EXPECT_EQ(e.line(), 7);
    EXPECT_NE(std::string(e.what()).find("unknown key 'foo'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
}

TEST(ParseConfig, DistinctErrorMessages) {
    const ConfigError missing = parse_error("scenario = two-level\nNin_rel = 0.01\n");
    EXPECT_EQ(missing.key(), "Gamma10");
    EXPECT_NE(std::string(missing.what()).find("missing required key"), std::string::npos);

    const ConfigError unit = parse_error("scenario = two-level\nGamma10_mK = 41\nNin_rel = 0.01\n");
    EXPECT_EQ(unit.key(), "Gamma10_mK");
    EXPECT_EQ(unit.line(), 2);
    EXPECT_NE(std::string(unit.what()).find("unit-suffix mismatch"), std::string::npos);

    const ConfigError bare = parse_error("scenario = two-level\nGamma10 = 41\n");
    EXPECT_NE(std::string(bare.what()).find("unit-suffix mismatch"), std::string::npos);

    const ConfigError number = parse_error("scenario = two-level\nGamma10_MHz = 4x1\nNin_rel = 0.01\n");
    EXPECT_EQ(number.key(), "Gamma10_MHz");
    EXPECT_NE(std::string(number.what()).find("malformed number"), std::string::npos);

    const std::string a = missing.what(), b = unit.what(), c = number.what();
    EXPECT_NE(a.substr(0, 12), b.substr(0, 12));
    EXPECT_NE(b.substr(0, 12), c.substr(0, 12));
}

TEST(ParseConfig, OtherRejections) {
    EXPECT_NE(std::string(parse_error(kMinimalTwoLevel + "Gamma10_GHz = 0.041\n").what()).find("duplicate key"),
              std::string::npos);
    EXPECT_NE(std::string(parse_error(kMinimalTwoLevel + "BW_MHz = 55\n").what()).find("not used by scenario"),
              std::string::npos);
    EXPECT_EQ(parse_error(kMinimalTwoLevel + "just text\n").line(), 7);
    EXPECT_EQ(parse_error(kMinimalTwoLevel + "T_mK = 50\n").key(), "T_mK");
    EXPECT_EQ(parse_error(kMinimalTwoLevel + "method = fast\n").key(), "method");
    EXPECT_EQ(parse_error(kMinimalTwoLevel + "delta_points = 2.5\n").key(), "delta_points");
    EXPECT_EQ(parse_error(kMinimalTwoLevel + "gamma10_MHz = 10\n").key(), "gamma10_MHz");
    EXPECT_EQ(parse_error("Gamma10_MHz = 41\nNin_rel = 0.01\n").key(), "scenario");
    EXPECT_EQ(parse_error(kMinimalTwoLevel, Scenario::G2).key(), "scenario");
    EXPECT_EQ(parse_error("scenario = g2\nGamma10_MHz = 41\nf10_GHz = 5.12\nP_dBm = -131\n"
                          "T_mK = 0, 50\nBW_MHz = 55, 1000, 2000\ncombine = zip\n")
                  .key(),
              "combine");
    EXPECT_EQ(parse_error("scenario = two-level\nGamma10_MHz = 41, 42\nNin_rel = 0.01\n").key(), "Gamma10_MHz");
}

TEST(ParseConfig, ScenarioFromCommandLine) {
    const std::string body = "Gamma10_MHz = 41\nNin_rel = 0.01\n";
    EXPECT_EQ(parse_config(body, Scenario::TwoLevel).scenario, Scenario::TwoLevel);
    EXPECT_EQ(parse_scenario("three-level"), Scenario::ThreeLevel);
    EXPECT_EQ(scenario_name(Scenario::G2), "g2");
    EXPECT_THROW(parse_scenario("four-level"), ConfigError);
}

TEST(ParseConfig, ThermalTwoLevel) {
    const RunConfig cfg = parse_config("scenario = two-level\nGamma10_MHz = 41\nf10_GHz = 5.12\nT_mK = 50\n"
                                       "Nin_rel = 0.01\n");
    const double n = thermal_occupation(constants::two_pi * 5.12e9, 0.05);
    EXPECT_DOUBLE_EQ(cfg.twoLevel->drive.nTherm, n);
    EXPECT_DOUBLE_EQ(cfg.twoLevel->drive.gamma10, 0.5 * constants::two_pi * 41e6 * (1.0 + 2.0 * n));
    EXPECT_EQ(cfg.twoLevel->method, TwoLevelMethod::Numeric);
    EXPECT_THROW(parse_config("scenario = two-level\nGamma10_MHz = 41\nf10_GHz = 5.12\nT_mK = 50\n"
                              "Nin_rel = 0.01\nmethod = analytic\n"),
                 ConfigError);
}

TEST(ParseConfig, ThreeLevelDefaultsAndSweep) {
    const RunConfig cfg = parse_config(read_file(std::string(WQED_CONFIG_DIR) + "/three_level.cfg"));
    const ThreeLevelSetup& s = *cfg.threeLevel;
    const double G = constants::two_pi * 41e6;
    EXPECT_DOUBLE_EQ(s.drive.Gamma21, 2.0 * G);
    EXPECT_DOUBLE_EQ(s.drive.gamma10, 0.5 * G);
    EXPECT_DOUBLE_EQ(s.drive.gamma20, G);
    EXPECT_DOUBLE_EQ(s.drive.gamma21, 1.5 * G);
    EXPECT_EQ(s.NinCRel, (std::vector<double>{0.01, 1.0, 10.0}));
    ASSERT_EQ(s.controlSweepRel.size(), 61u);
    EXPECT_NEAR(s.controlSweepRel.front(), 1e-3, 1e-15);
    EXPECT_NEAR(s.controlSweepRel.back(), 100.0, 1e-10);
    EXPECT_EQ(s.method, Method::Analytic);
    const RunConfig detuned = parse_config("scenario = three-level\nGamma10_MHz = 41\ndeltaC_rel = 1\n");
    EXPECT_EQ(detuned.threeLevel->method, Method::Numeric);
    EXPECT_THROW(parse_config("scenario = three-level\nGamma10_MHz = 41\ndeltaC_rel = 1\nmethod = analytic\n"),
                 ConfigError);
}

TEST(ParseConfig, SpectrumUnits) {
    const RunConfig cfg = parse_config(read_file(std::string(WQED_CONFIG_DIR) + "/spectrum.cfg"));
    const CircuitParams& p = cfg.spectrum->circuit;
    EXPECT_DOUBLE_EQ(p.Cc, 10e-15);
    EXPECT_DOUBLE_EQ(p.CJ, 25e-15);
    EXPECT_DOUBLE_EQ(p.EJ, constants::h * 27.7e9);
    EXPECT_DOUBLE_EQ(p.T, 0.05);
    EXPECT_NEAR(p.Cc * p.VDC / (2.0 * constants::e), 0.25, 1e-15);
    EXPECT_THROW(parse_config("scenario = spectrum\nCc_fF = 10\nCJ_fF = 25\nEJ_GHz = 27\nZ0_ohm = 50\n"
                              "ng = 0.1\nVDC_mV = 1\n"),
                 ConfigError);
    EXPECT_THROW(parse_config("scenario = spectrum\nCc_fF = 10\nCJ_fF = -25\nEJ_GHz = 27\nZ0_ohm = 50\n"),
                 ConfigError);
}

TEST(DescribeColumns, CoversEveryScenario) {
    const std::string text = describe_columns();
    for (const char* word : {"spectrum", "two-level", "three-level", "g2", "delta_over_gamma10", "T_p", "tau_ns"}) {
        EXPECT_NE(text.find(word), std::string::npos) << word;
    }
}
