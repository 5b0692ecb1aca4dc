#include <gtest/gtest.h>

#include <json.hpp>

#include "stern/verify.hpp"

namespace stern {
namespace {

TEST(Verify, EverySuitePassesAtThree) {
    for (const std::string& name : suite_names()) {
        if (name == "all") continue;
        const SuiteReport rep = run_suite(name, Ring(3));
        EXPECT_FALSE(rep.checks.empty()) << name;
        for (const CheckResult& c : rep.checks) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
    }
}

TEST(Verify, MatricesAtLargerPrimes) {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 65521u}) EXPECT_TRUE(run_suite("matrices", Ring(p)).passed()) << p;
}

TEST(Verify, ReportJson) {
    const SuiteReport rep = run_suite("matrices", Ring(5));
    const auto doc = nlohmann::json::parse(rep.to_json());
    EXPECT_EQ(doc["suite"], "matrices");
    EXPECT_EQ(doc["modulus"], 5);
    EXPECT_EQ(doc["passed"], true);
    EXPECT_EQ(doc["checks"].size(), rep.checks.size());
}

TEST(Verify, Errors) {
    try {
        (void)run_suite("nonsense", Ring(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    }
    try {
        (void)run_suite("matrices", Ring(15));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_odd_prime);
    }
}

}  // namespace
}  // namespace stern
