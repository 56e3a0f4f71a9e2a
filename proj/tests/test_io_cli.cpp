#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"

using namespace cuspdim;
using namespace cuspdim::cli;

static std::string run_classify(const std::string& range, const CliConfig& cfg, int* rc) {
    std::ostringstream os;
    *rc = cmd_classify(range, cfg, os);
    return os.str();
}

static CliConfig with_format(Format f) {
    CliConfig cfg;
    cfg.format = f;
    return cfg;
}

TEST(Io, SeriesJsonRoundTrip) {
    const FracQSeries f = eta_cubed(30);
    const auto j = io::to_json(f);
    EXPECT_EQ(j.size(), 3u);
    EXPECT_EQ(j["offset"], "1/8");
    EXPECT_EQ(io::series_from_json(j), f);
}

TEST(Io, CertificateJsonCarriesExactBound) {
    const auto j = io::to_json(classify(13));
    EXPECT_EQ(j["bound"], "2");
    EXPECT_EQ(j["rule"], "R1");
    EXPECT_TRUE(j["witness_divisor"].is_null());
    const auto j23 = io::to_json(classify(23));
    EXPECT_EQ(j23["differential_order_at_pole"], "1");
}

TEST(Cli, ClassifyRangeText) {
    int rc = -1;
    const std::string out = run_classify("1..23", with_format(Format::Text), &rc);
    EXPECT_EQ(rc, kOk);
    EXPECT_NE(out.find("dim 1 levels: 1 2 3 4 5 6 7 8 11 14 15 23"), std::string::npos);
    EXPECT_EQ(out.find("UNDECIDED"), std::string::npos);
}

TEST(Cli, ClassifyNineIsStrongBound) {
    int rc = -1;
    const std::string out = run_classify("9", with_format(Format::Tsv), &rc);
    EXPECT_EQ(rc, kOk);
    EXPECT_NE(out.find("9\tDimAtLeastTwo\tR1\t2\t0\t"), std::string::npos) << out;
}

TEST(Cli, ClassifyJsonIsDeterministic) {
    int rc1 = -1, rc2 = -1;
    const std::string a = run_classify("1..200", with_format(Format::Json), &rc1);
    const std::string b = run_classify("1..200", with_format(Format::Json), &rc2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(rc1, kOk);
    const auto j = nlohmann::json::parse(a);
    EXPECT_TRUE(j["matches_m23"].get<bool>());
    EXPECT_EQ(j["certificates"].size(), 200u);
}

TEST(Cli, UsageErrors) {
    CliConfig cfg;
    std::ostringstream os;
    EXPECT_THROW(cmd_classify("0", cfg, os), UsageError);
    EXPECT_THROW(cmd_classify("5..2", cfg, os), UsageError);
    EXPECT_THROW(cmd_classify("abc", cfg, os), UsageError);
    EXPECT_THROW(cmd_cusps("400", true, cfg, os), UsageError);
    EXPECT_THROW(cmd_qexp({"zeta"}, cfg, os), UsageError);
    EXPECT_THROW(cmd_qexp({"etaq", "23", "1:2,5:1"}, cfg, os), UsageError);
    EXPECT_THROW(cmd_qexp({"theta", "3", "3"}, cfg, os), UsageError);
    EXPECT_THROW(cmd_verify("nope", cfg, VerifyOptions{}, os), UsageError);
    cfg.precision = 8;
    EXPECT_THROW(cmd_qexp({"eta"}, cfg, os), UsageError);
    cfg.precision = 200;
    cfg.tolerance = 0.0;
    EXPECT_THROW(cmd_classify("3", cfg, os), UsageError);
    EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Cli, CuspsWithOracle) {
    std::ostringstream os;
    EXPECT_EQ(cmd_cusps("4", true, CliConfig{}, os), kOk);
    EXPECT_NE(os.str().find("oracle AGREE"), std::string::npos);
    std::ostringstream os23;
    cmd_cusps("23", false, with_format(Format::Json), os23);
    const auto j = nlohmann::json::parse(os23.str());
    ASSERT_EQ(j["cusps"].size(), 2u);
    EXPECT_EQ(j["cusps"][0]["width"], 23);
    EXPECT_EQ(j["cusps"][1]["width"], 1);
}

TEST(Cli, QexpSeries) {
    std::ostringstream a, b;
    cmd_qexp({"eta3", "10"}, CliConfig{}, a);
    cmd_qexp({"theta", "2", "1", "10"}, CliConfig{}, b);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str(), "{\"offset\":\"1/8\",\"step\":\"1\",\"coeffs\":[\"1\",\"-3\",\"0\",\"5\",\"0\",\"0\",\"-7\",\"0\",\"0\",\"0\"]}\n");
    std::ostringstream c;
    cmd_qexp({"etaq", "23", "1:2,23:2", "5"}, with_format(Format::Tsv), c);
    EXPECT_EQ(c.str().substr(0, 17), "exponent\tcoeff\n2\t");
}

TEST(Cli, VerifyEulerIdentity) {
    std::ostringstream os;
    EXPECT_EQ(cmd_verify("euler-identity", CliConfig{}, VerifyOptions{}, os), kOk);
    EXPECT_NE(os.str().find("euler-identity: PASS"), std::string::npos);
    EXPECT_NE(os.str().find("200 coefficients"), std::string::npos);
}

TEST(Cli, VerifyReportsMathFailure) {
    CliConfig cfg;
    cfg.tolerance = 1e-30;  // below double rounding, cannot be certified
    VerifyOptions opt;
    opt.samples = 3;
    std::ostringstream os;
    EXPECT_EQ(cmd_verify("eta-law", cfg, opt, os), kMathFailure);
    EXPECT_NE(os.str().find("FAIL"), std::string::npos);
}
