#include <gtest/gtest.h>

#include <cstdlib>

#include "bzeta/verify.hpp"

using namespace bzeta;

TEST(Verify, EverySuitePasses) {
  for (const auto& s : verify::suites()) {
    const verify::Report r = s.run(verify::kDefaultSeed);
    EXPECT_TRUE(r.ok()) << s.name;
    for (const auto& c : r.cases) EXPECT_TRUE(c.pass) << c.id << ": expected " << c.expected << ", got " << c.actual;
  }
}

TEST(Verify, TenCriteria) {
  std::set<int> seen;
  for (const auto& s : verify::suites())
    if (s.criterion) seen.insert(s.criterion);
  EXPECT_EQ(seen.size(), 10u);
}

TEST(Verify, DeterministicAndOrderStable) {
  std::vector<std::string> names;
  for (const auto& s : verify::suites()) names.push_back(s.name);
  const auto a = verify::run_suites(names, 99, 1);
  const auto b = verify::run_suites(names, 99, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
}

TEST(Verify, OtherSeedsPass) {
  for (std::uint64_t seed : {1ull, 2ull, 123456789ull})
    for (const char* n : {"prop_symfield", "prop_padic", "classgroup"}) EXPECT_TRUE(verify::find_suite(n)->run(seed).ok()) << n;
}

TEST(Verify, SeedFromEnv) {
  ::setenv("BZ_SEED", "42", 1);
  EXPECT_EQ(verify::seed_from_env(), 42u);
  ::setenv("BZ_SEED", "x", 1);
  EXPECT_THROW(verify::seed_from_env(), std::invalid_argument);
  ::unsetenv("BZ_SEED");
  EXPECT_EQ(verify::seed_from_env(), verify::kDefaultSeed);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(verify::run_suites({"nope"}, 1), std::invalid_argument); }

TEST(Verify, FailedCaseRecorded) {
  verify::Report r{"x", {}};
  r.guard("boom", [] { throw std::runtime_error("bad"); });
  r.num("near", {}, 1.0, 1.1, 1e-3, "sanity");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.passed(), 0u);
  EXPECT_EQ(r.to_json()["summary"]["failed"], 2);
}
