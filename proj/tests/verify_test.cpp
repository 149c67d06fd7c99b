#include <gtest/gtest.h>

#include <cstdlib>

#include "cda/io.hpp"
#include "cda/verify.hpp"

namespace cda {
namespace {

TEST(Config, RejectsNonDividingPair) {
    SuiteConfig c;
    c.contexts = {{5, 3}};
    EXPECT_THROW(validate(c), ConfigError);
    c.contexts = {{7, 3}};
    EXPECT_NO_THROW(validate(c));
    c.contexts = {{9, 2}};
    EXPECT_THROW(validate(c), ConfigError);
    c.contexts = {{13, 4}};
    EXPECT_THROW(validate(c), ConfigError);
}

TEST(Config, RejectedBeforeRunning) {
    SuiteConfig c;
    c.contexts = {{5, 3}};
    bool ran = false;
    EXPECT_THROW((void)run_suite(c, [&](const VerificationReport&) { ran = true; }), ConfigError);
    EXPECT_FALSE(ran);
    c.contexts = {{7, 3}};
    c.claims = {"no-such-claim"};
    EXPECT_THROW((void)run_suite(c), ConfigError);
}

TEST(Config, Precedence) {
    ::setenv("CDA_PRECISION", "25", 1);
    SuiteConfig c;
    apply_environment(c);
    EXPECT_EQ(c.precision, 25);
    apply_config_json(c, Json::parse(R"({"precision": 30, "seed": 4, "contexts": [[7, 3]]})"));
    EXPECT_EQ(c.precision, 30);
    EXPECT_EQ(c.seed, 4U);
    ASSERT_EQ(c.contexts.size(), 1U);
    EXPECT_THROW(apply_config_json(c, Json::parse(R"({"precison": 3})")), ConfigError);
    ::setenv("CDA_PRECISION", "x", 1);
    EXPECT_THROW(apply_environment(c), ConfigError);
    ::unsetenv("CDA_PRECISION");
}

TEST(Suite, QuickRunIsDeterministic) {
    SuiteConfig c;
    c.trials = 3;
    c.claims = {"norm-formula-oracle", "norm-valuation", "residue-of-norms", "structure-constants", "norm-closed-forms"};
    const auto a = reports_to_jsonl(run_suite(c), false);
    const auto b = reports_to_jsonl(run_suite(c), false);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("elapsed"), std::string::npos);
    for (const auto& r : run_suite(c)) EXPECT_TRUE(r.passed()) << r.to_json().dump();
    c.seed = 1;
    EXPECT_NE(reports_to_jsonl(run_suite(c), false), a);
}

TEST(Io, HamiltonConstantsRoundTrip) {
    const CyclicAlgebra<RationalField> h(rational_quadratic(Rational(-1)), Rational(-1));
    const auto s = structure_constants(h);
    const auto j = constants_to_json(s);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["field"], "Q");
    EXPECT_EQ(j["matrices"][0][1][1], "-1");
    const auto back = constants_from_json(RationalField{}, Json::parse(j.dump()));
    EXPECT_TRUE(same_constants(s, back));
}

TEST(Io, SeriesConstantsRoundTrip) {
    const auto k = laurent_kummer(7, 3);
    const CyclicAlgebra<LaurentFp> d(k, k.field().from_integer(2));
    const auto s = structure_constants(d);
    const auto j = constants_to_json(s);
    EXPECT_EQ(j["n"], 9);
    EXPECT_EQ(j["field"], "F_7((t))");
    EXPECT_TRUE(same_constants(s, constants_from_json(k.field(), Json::parse(j.dump()))));
    EXPECT_THROW((void)constants_from_json(laurent_fp(11), j), Error);
    auto bad = j;
    bad["matrices"].erase(0);
    EXPECT_THROW((void)constants_from_json(k.field(), bad), Error);
    EXPECT_THROW((void)constants_from_json(k.field(), Json::parse(R"({"n": "x"})")), Error);
}

TEST(Io, NormDecisionSchema) {
    const auto k = laurent_kummer(7, 3);
    const auto no = to_json(is_norm(k, k.field().from_integer(2)));
    EXPECT_EQ(no["verdict"], "not-norm");
    EXPECT_EQ(no["certificate"]["kind"], "residue-not-qth-power");
    EXPECT_EQ(no["certificate"]["residue"], "2");
    EXPECT_FALSE(no.contains("preimage"));
    const auto yes = to_json(is_norm(k, k.field().variable()));
    EXPECT_EQ(yes["verdict"], "norm");
    EXPECT_EQ(yes["preimage"], "[0; 1; 0]");
}

}  // namespace
}  // namespace cda
