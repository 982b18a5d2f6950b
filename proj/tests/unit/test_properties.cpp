#include <gtest/gtest.h>

#include "plectic/error.hpp"
#include "plectic/properties.hpp"

using namespace plectic;

namespace {

class PropertySuite : public ::testing::TestWithParam<std::string> {};

std::string test_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string out;
  for (char c : info.param) out += c == '-' ? '_' : c;
  return out;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& p : property_catalog()) out.push_back(p.name);
  return out;
}

}  // namespace

TEST_P(PropertySuite, TwoHundredInstances) {
  auto r = run_property(find_property(GetParam()), seed_from_env(), 200);
  EXPECT_EQ(r.instances, 200);
  EXPECT_TRUE(r.ok()) << r.failures << " failures; " << r.first_witness;
}

INSTANTIATE_TEST_SUITE_P(Catalog, PropertySuite, ::testing::ValuesIn(names()), test_name);

TEST(PropertyRunner, SameSeedSameOutcome) {
  auto a = run_properties({"d-squared", "ce-squared"}, 7, 20);
  auto b = run_properties({"d-squared", "ce-squared"}, 7, 20);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].instances, b[0].instances);
  EXPECT_EQ(a[1].first_witness, b[1].first_witness);
}

TEST(PropertyRunner, FailuresAreCounted) {
  Property broken{"always-fails", [](Rng& rng) -> std::optional<std::string> {
                    return "value " + std::to_string(rng.uniform(0, 9));
                  }};
  auto r = run_property(broken, 1, 5);
  EXPECT_EQ(r.failures, 5);
  EXPECT_EQ(r.first_witness.rfind("instance 0: value ", 0), 0u);
  EXPECT_THROW(find_property("nope"), Error);
}
