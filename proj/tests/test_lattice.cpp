#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "latticealg/lattice.hpp"
#include "support.hpp"

using namespace latticealg;

TEST_CASE("universe invariants") {
  CHECK_THROWS_AS(Universe(4, 1, {}, Region({3})), std::invalid_argument);   // q < 2
  CHECK_THROWS_AS(Universe(4, 2, {}, Region({})), std::invalid_argument);    // empty core
  CHECK_THROWS_AS(Universe(2, 2, {}, Region({0, 1})), std::invalid_argument);  // core = window
  CHECK_THROWS_AS(Universe(4, 2, {{0, 9}}, Region({3})), std::invalid_argument);
  const Universe u = testing::fixture_a();
  CHECK(u.interior() == Region({0, 1, 2}));
  CHECK(u.outside(Region({0})) == Region({1, 2, 3}));
  CHECK(u.has_edge(2, 3));
  CHECK(u.has_edge(3, 2));
  CHECK(!u.has_edge(0, 2));
}

TEST_CASE("configuration enumeration order") {
  const Universe u = testing::fixture_a();

  // Empty region: the single empty configuration.
  CHECK(enumerate_configurations(u, Region({})).size() == 1);
  CHECK(enumerate_configurations(u, Region({}))[0].code == 0);

  // Single site: codes 0, 1.
  const auto single = enumerate_configurations(u, Region({3}));
  REQUIRE(single.size() == 2);
  CHECK(single[0].code == 0);
  CHECK(single[1].code == 1);

  // {1,2}: codes 0..3 decode to (x1,x2) = (0,0),(1,0),(0,1),(1,1).
  const Region pair({1, 2});
  const auto configs = enumerate_configurations(u, pair);
  REQUIRE(configs.size() == 4);
  const int expected[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (int code = 0; code < 4; ++code) {
    CHECK(site_value(u, configs[code], 1) == expected[code][0]);
    CHECK(site_value(u, configs[code], 2) == expected[code][1]);
  }
}

TEST_CASE("merge and restrict against hand-coded values") {
  const Universe u = testing::fixture_a();

  // ({1} -> 1) merged with ({2,3} -> (0,1)) gives (1,0,1) on {1,2,3}.
  const Configuration a = make_configuration(u, Region({1}), {1});
  const Configuration b = make_configuration(u, Region({2, 3}), {0, 1});
  const Configuration merged = merge_configurations(u, a, b);
  CHECK(merged.region == Region({1, 2, 3}));
  CHECK(merged.code == 5);  // 1 + 0*2 + 1*4, by hand
  CHECK(site_value(u, merged, 1) == 1);
  CHECK(site_value(u, merged, 2) == 0);
  CHECK(site_value(u, merged, 3) == 1);

  // Merging with the empty configuration is the identity.
  const Configuration empty{Region({}), 0};
  CHECK(merge_configurations(u, empty, merged) == merged);

  // Overlap is a caller bug.
  const Configuration c0 = make_configuration(u, Region({0}), {0});
  const Configuration c1 = make_configuration(u, Region({0}), {1});
  CHECK_THROWS_AS(merge_configurations(u, c0, c1), std::invalid_argument);

  // Restriction: (1,0,1) on {1,2,3} to {2,3} is (0,1), code 2.
  const Configuration restricted = restrict_configuration(u, merged, Region({2, 3}));
  CHECK(restricted.code == 2);
  CHECK(restrict_configuration(u, merged, merged.region) == merged);
  CHECK(restrict_configuration(u, merged, Region({})).code == 0);
  CHECK_THROWS_AS(restrict_configuration(u, restricted, Region({1})), std::invalid_argument);
}

TEST_CASE("merge-restrict round trips on random partitions") {
  const Universe u(6, 3, {}, Region({5}));
  testing::Rng rng(23);
  const Region window({0, 1, 2, 3, 4, 5});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> left_sites;
    std::vector<int> right_sites;
    for (int site = 0; site < 6; ++site) {
      (rng.integer(0, 1) ? left_sites : right_sites).push_back(site);
    }
    const Region left(left_sites);
    const Region right(right_sites);
    const std::uint64_t code =
        static_cast<std::uint64_t>(rng.integer(0, 728));  // 3^6 - 1
    const Configuration full{window, code};
    const Configuration rebuilt = merge_configurations(
        u, restrict_configuration(u, full, left), restrict_configuration(u, full, right));
    CHECK(rebuilt == full);
  }
}

TEST_CASE("codes biject with site-value maps") {
  const Universe u(4, 3, {}, Region({3}));
  const Region region({0, 2, 3});
  for (const Configuration& config : enumerate_configurations(u, region)) {
    std::vector<int> values;
    for (int site : region.sites()) values.push_back(site_value(u, config, site));
    CHECK(make_configuration(u, region, values) == config);
  }
}

TEST_CASE("directed family verdicts") {
  const RegionFamily chain({Region({}), Region({0}), Region({0, 1}), Region({0, 1, 2})},
                           Region({0, 1, 2}));
  CHECK(verify_directed_family(chain).ok);

  const RegionFamily split({Region({0}), Region({1})}, Region({0, 1}));
  const DirectedFamilyReport report = verify_directed_family(split);
  CHECK(!report.ok);
  CHECK(report.witness.find("{0,1}") != std::string::npos);

  const RegionFamily trivial({Region({}), Region({0, 1, 2})}, Region({0, 1, 2}));
  CHECK(verify_directed_family(trivial).ok);

  CHECK_THROWS_AS(RegionFamily({Region({0}), Region({0})}, Region({0})),
                  std::invalid_argument);
}
