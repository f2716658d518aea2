#include <doctest.h>

#include <random>
#include <stdexcept>

#include "contractions/enumerate.hpp"
#include "contractions/family.hpp"
#include "contractions/partial_injection.hpp"
#include "contractions/stat_profile.hpp"

using namespace contractions;

TEST_SUITE("partial_injection") {

TEST_CASE("construction canonicalizes and validates") {
  PartialInjection alpha(6, {{5, 6}, {1, 3}, {3, 5}});
  CHECK(alpha.n() == 6);
  CHECK(alpha.height() == 3);
  CHECK(alpha.domain() == std::vector<int>{1, 3, 5});
  CHECK(alpha.image() == std::vector<int>{3, 5, 6});
  CHECK(gap_of_domain(alpha) == GapTuple{2, 2});
  CHECK(gap_of_image(alpha) == GapTuple{2, 1});

  PartialInjection empty(4, {});
  CHECK(empty.empty());
  CHECK(empty.height() == 0);

  CHECK_THROWS_AS(PartialInjection(3, {{1, 2}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection(3, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection(0, {}), std::invalid_argument);
}

TEST_CASE("equality is structural on (n, pairs)") {
  PartialInjection a(3, {{1, 2}, {2, 3}});
  PartialInjection b(3, {{2, 3}, {1, 2}});
  PartialInjection c(4, {{1, 2}, {2, 3}});
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("to_string uses the two-row notation") {
  CHECK(PartialInjection(6, {{1, 3}, {3, 5}, {5, 6}}).to_string() ==
        "dom: 1 3 5 | im: 3 5 6");
  CHECK(PartialInjection(4, {}).to_string() == "dom: | im:");
}

TEST_CASE("compose applies left to right") {
  PartialInjection alpha(3, {{1, 1}, {2, 2}});
  PartialInjection beta(3, {{2, 1}});
  CHECK(compose(alpha, beta) == PartialInjection(3, {{2, 1}}));

  // disjoint range and domain
  CHECK(compose(PartialInjection(3, {{1, 2}}), PartialInjection(3, {{3, 1}}))
            .empty());

  const PartialInjection id3 = identity_map(3);
  for (const PartialInjection& alpha3 : collect_filtered(3, Family::I)) {
    CHECK(compose(id3, alpha3) == alpha3);
    CHECK(compose(alpha3, id3) == alpha3);
  }

  CHECK_THROWS_AS(compose(PartialInjection(3, {}), PartialInjection(4, {})),
                  std::invalid_argument);
}

TEST_CASE("gap examples") {
  PartialInjection beta(6, {{1, 3}, {2, 4}, {3, 5}, {5, 6}});
  CHECK(gap_of_domain(beta) == GapTuple{1, 1, 2});
  CHECK(gap_of_image(beta) == GapTuple{1, 1, 1});

  CHECK(gap_of_domain(PartialInjection(3, {{2, 1}})).empty());
  CHECK(gap_of_image(PartialInjection(3, {{1, 3}, {3, 1}})) == GapTuple{-2});
}

TEST_CASE("predicate examples") {
  CHECK(is_contraction(PartialInjection(3, {{1, 1}, {3, 2}})));
  CHECK_FALSE(is_contraction(PartialInjection(3, {{1, 1}, {2, 3}})));
  CHECK(is_contraction(PartialInjection(3, {})));

  CHECK(is_contraction_via_gaps(PartialInjection(6, {{1, 3}, {3, 5}, {5, 6}})));
  CHECK_FALSE(
      is_contraction_via_gaps(PartialInjection(3, {{1, 3}, {2, 1}, {3, 2}})));

  // height-1 maps are everything at once
  PartialInjection single(3, {{2, 1}});
  CHECK(is_order_preserving(single));
  CHECK(is_order_reversing(single));
  CHECK(is_order_decreasing(single));
  CHECK(is_isometry(single));

  PartialInjection worked(6, {{1, 3}, {3, 5}, {5, 6}});
  CHECK(is_order_preserving(worked));
  CHECK_FALSE(is_order_reversing(worked));
  CHECK_FALSE(is_order_decreasing(worked));
  CHECK_FALSE(is_isometry(worked));

  PartialInjection reversing(3, {{1, 3}, {2, 2}});
  CHECK(is_order_reversing(reversing));
  CHECK_FALSE(is_order_preserving(reversing));
}

TEST_CASE("family membership examples") {
  CHECK(in_family(PartialInjection(3, {{1, 3}, {2, 2}}), Family::ORCI));
  CHECK(in_family(PartialInjection(3, {{2, 1}, {3, 2}}), Family::ODCI));
  CHECK_FALSE(in_family(PartialInjection(3, {{1, 2}}), Family::ODCI));

  for (Family family : kAllFamilies) {
    CHECK(in_family(PartialInjection(5, {}), family));
    CHECK(in_family(PartialInjection(5, {{4, 2}}), family));
  }
}

TEST_CASE("family names round-trip") {
  for (Family family : kAllFamilies) {
    CHECK(parse_family(family_name(family)) == family);
  }
  CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("stat_profile worked example") {
  const StatProfile s = stat_profile(PartialInjection(4, {{1, 1}, {2, 2}, {4, 3}}));
  CHECK(s.height == 3);
  CHECK(s.fix == 2);
  CHECK(s.min_fixed == 1);
  CHECK(s.max_fixed == 2);
  CHECK(s.below_fixed == 0);
  CHECK(s.above_fixed == 1);
  CHECK(s.left_waist == 1);
  CHECK(s.right_waist == 3);
  CHECK(s.left_shoulder == 1);
  CHECK(s.right_shoulder == 4);
}

TEST_CASE("stat_profile of the empty map and the identity") {
  const StatProfile empty = stat_profile(PartialInjection(4, {}));
  CHECK(empty.height == 0);
  CHECK(empty.fix == 0);
  CHECK_FALSE(empty.left_waist.has_value());
  CHECK_FALSE(empty.right_shoulder.has_value());
  CHECK_FALSE(empty.min_fixed.has_value());
  CHECK_FALSE(empty.below_fixed.has_value());

  const StatProfile id = stat_profile(identity_map(5));
  CHECK(id.height == 5);
  CHECK(id.fix == 5);
  CHECK(id.min_fixed == 1);
  CHECK(id.max_fixed == 5);
  CHECK(id.below_fixed == 0);
  CHECK(id.above_fixed == 0);
}

TEST_CASE("contraction predicates agree on all of I_n, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_filtered(n, Family::I, [](const PartialInjection& alpha) {
      CHECK(is_contraction(alpha) == is_contraction_via_gaps(alpha));
    });
  }
}

TEST_CASE("ODCI membership is the predicate conjunction") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_filtered(n, Family::I, [](const PartialInjection& alpha) {
      const bool direct = is_order_decreasing(alpha) &&
                          is_order_preserving(alpha) && is_contraction(alpha);
      CHECK(direct == in_family(alpha, Family::ODCI));
    });
  }
}

TEST_CASE("closure under composition, n <= 4, all pairs") {
  for (Family family : {Family::CI, Family::OCI, Family::ORCI, Family::ODCI}) {
    for (int n = 2; n <= 4; ++n) {
      const auto maps = collect_filtered(n, family);
      for (const PartialInjection& a : maps) {
        for (const PartialInjection& b : maps) {
          CHECK(in_family(compose(a, b), family));
        }
      }
    }
  }
}

TEST_CASE("composition is associative on random triples") {
  for (int n = 2; n <= 5; ++n) {
    const auto maps = collect_filtered(n, Family::I);
    std::mt19937_64 rng(42u + static_cast<unsigned>(n));
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a = maps[pick(rng)];
      const auto& b = maps[pick(rng)];
      const auto& c = maps[pick(rng)];
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("fixed points of OCI maps are convex in the domain") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_direct(n, Family::OCI, [](const PartialInjection& alpha) {
      const StatProfile s = stat_profile(alpha);
      if (s.fix == 0) return;
      for (const auto& [x, y] : alpha.pairs()) {
        if (x >= *s.min_fixed && x <= *s.max_fixed) CHECK(x == y);
      }
    });
  }
}

}  // TEST_SUITE
