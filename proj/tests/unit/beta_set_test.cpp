#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dimlab/beta_set.hpp"
#include "dimlab/dimension.hpp"
#include "dimlab/error.hpp"
#include "oracles.hpp"

using namespace dimlab;

namespace {

Partition P(std::initializer_list<Partition::Part> parts) { return Partition(parts); }

Partition random_partition(std::mt19937_64& rng, std::int64_t max_size) {
  std::int64_t rest = std::uniform_int_distribution<std::int64_t>(0, max_size)(rng);
  std::vector<Partition::Part> parts;
  while (rest > 0) {
    const auto part = std::uniform_int_distribution<std::int64_t>(1, rest)(rng);
    parts.push_back(part);
    rest -= part;
  }
  std::sort(parts.rbegin(), parts.rend());
  return make_partition(parts);
}

BetaSet random_beta_set(std::mt19937_64& rng) {
  std::set<BetaSet::Element> chosen;
  const int count = std::uniform_int_distribution<int>(0, 15)(rng);
  while (static_cast<int>(chosen.size()) < count) {
    chosen.insert(std::uniform_int_distribution<BetaSet::Element>(0, 40)(rng));
  }
  return BetaSet(std::vector<BetaSet::Element>(chosen.begin(), chosen.end()));
}

}  // namespace

TEST(BetaSet, Validation) {
  EXPECT_THROW(BetaSet({3, 3}), ValidationError);
  EXPECT_THROW(BetaSet({-1, 2}), ValidationError);
  const BetaSet sorted({2, 10, 5});
  EXPECT_EQ(sorted.elements(), (std::vector<BetaSet::Element>{10, 5, 2}));
  EXPECT_TRUE(sorted.contains(5));
  EXPECT_FALSE(sorted.contains(4));
}

TEST(BetaSet, TextForm) {
  EXPECT_EQ(to_string(BetaSet({10, 8, 7, 5, 2})), "{10,8,7,5,2}");
  EXPECT_EQ(to_string(BetaSet{}), "{}");
  EXPECT_EQ(parse_beta_set("{10,8,7,5,2}"), BetaSet({10, 8, 7, 5, 2}));
  EXPECT_EQ(parse_beta_set("{}"), BetaSet{});
  EXPECT_THROW(parse_beta_set("{1,1}"), ValidationError);
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(BetaSet({4, 3, 2}), 2), BetaSet({6, 5, 4, 1, 0}));
  EXPECT_EQ(shift(BetaSet{}, 1), BetaSet({0}));
  EXPECT_EQ(shift(BetaSet({7, 5, 4, 1}), 0), BetaSet({7, 5, 4, 1}));
  EXPECT_THROW(shift(BetaSet{}, -1), DomainError);
}

TEST(ToPartition, Examples) {
  EXPECT_EQ(to_partition(BetaSet({9, 6, 4, 2, 1})), P({5, 3, 2, 1, 1}));
  EXPECT_EQ(to_partition(BetaSet({0})), Partition{});
  EXPECT_EQ(to_partition(BetaSet({7, 5, 4, 1})), P({4, 3, 3, 1}));
}

TEST(ToPartition, RoundTripAndShiftInvariance) {
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      const BetaSet h = first_column_hooks(lambda);
      ASSERT_EQ(to_partition(h), lambda);
      ASSERT_EQ(normalized(shift(h, 3)), h);
      if (n <= 12) {
        for (int r = 1; r <= 4; ++r) ASSERT_EQ(to_partition(shift(h, r)), lambda);
      }
    }
  }
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(BetaSet({10, 7, 5, 3, 2, 0}), BetaSet({9, 6, 4, 2, 1})));
  EXPECT_FALSE(equivalent(BetaSet({1}), BetaSet({2})));
  const BetaSet x({8, 3, 1});
  EXPECT_TRUE(equivalent(x, shift(x, 3)));
  EXPECT_TRUE(equivalent(shift(x, 3), x));
}

TEST(RemoveHook, Examples) {
  EXPECT_EQ(remove_hook(BetaSet({10, 8, 7, 5, 2}), 8, 5), BetaSet({10, 7, 5, 3, 2}));
  EXPECT_EQ(remove_hook(BetaSet({5}), 5, 5), BetaSet({0}));
  const Partition before = to_partition(BetaSet({10, 8, 7, 5, 2}));
  const Partition after = to_partition(remove_hook(BetaSet({10, 8, 7, 5, 2}), 8, 5));
  EXPECT_EQ(after.size(), before.size() - 5);
}

TEST(RemoveHook, ErrorsNameTheClause) {
  const BetaSet x({10, 8, 7, 5, 2});
  auto clause_of = [&](BetaSet::Element h, std::int64_t t) {
    try {
      (void)remove_hook(x, h, t);
    } catch (const HookError& e) {
      return e.clause();
    }
    ADD_FAILURE() << "no HookError for h=" << h << " t=" << t;
    return HookClause::not_member;
  };
  EXPECT_EQ(clause_of(9, 2), HookClause::not_member);
  EXPECT_EQ(clause_of(2, 3), HookClause::too_short);
  EXPECT_EQ(clause_of(10, 2), HookClause::target_occupied);
  EXPECT_THROW(remove_hook(x, 10, 0), DomainError);
}

TEST(TCore, Examples) {
  EXPECT_EQ(t_core(to_partition(BetaSet({10, 8, 7, 5, 2})), 5), P({3, 2, 1, 1}));
  // One 5-hook removal from (5,5,5,4,2) reaches (5,4,3,2,2).
  const BetaSet start = first_column_hooks(P({5, 5, 5, 4, 2}));
  bool seen = false;
  for (auto h : removable_hooks(start, 5)) {
    seen = seen || to_partition(remove_hook(start, h, 5)) == P({5, 4, 3, 2, 2});
  }
  EXPECT_TRUE(seen);
  for (int s = 0; s <= 6; ++s) {
    std::vector<Partition::Part> stairs;
    for (int i = s; i > 0; --i) stairs.push_back(i);
    EXPECT_EQ(t_core(make_partition(stairs), 2), make_partition(stairs));
  }
  EXPECT_THROW(t_core(P({2}), 0), DomainError);
}

TEST(TCore, MatchesAbacus) {
  for (std::int64_t n = 0; n <= 18; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      for (std::int64_t t = 1; t <= 7; ++t) {
        ASSERT_EQ(t_core(lambda, t).parts(), oracle::abacus_core(lambda.parts(), t))
            << to_string(lambda) << " t=" << t;
      }
    }
  }
}

TEST(TCore, RandomRemovalOrderGivesSameCore) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition lambda = random_partition(rng, 40);
    const std::int64_t t = std::uniform_int_distribution<std::int64_t>(1, 8)(rng);
    BetaSet current = first_column_hooks(lambda);
    while (true) {
      const auto options = removable_hooks(current, t);
      if (options.empty()) break;
      const auto pick = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng);
      current = remove_hook(current, options[pick], t);
    }
    ASSERT_EQ(to_partition(current), t_core(lambda, t)) << to_string(lambda) << " t=" << t;
    ASSERT_EQ(t_core(lambda, t).parts(), oracle::abacus_core(lambda.parts(), t));
  }
}

TEST(ParityGap, Examples) {
  EXPECT_EQ(parity_gap(BetaSet({13, 12, 8, 5, 3, 1, 0})), -1);
  EXPECT_EQ(parity_gap(BetaSet{}), 0);
  EXPECT_EQ(parity_gap(BetaSet({1})), -1);
}

TEST(ParityGap, ShiftRule) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const BetaSet x = random_beta_set(rng);
    ASSERT_EQ(parity_gap(shift(x, 1)), 1 - parity_gap(x)) << to_string(x);
  }
}

TEST(ParityGap, OddPartitionsFollowSizeParity) {
  for (std::int64_t n = 1; n <= 22; ++n) {
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    for (const Partition& lambda : enumerate_partitions(n)) {
      if (!is_odd_partition(lambda)) continue;
      for (int r = 0; r <= 6; ++r) {
        const BetaSet x = shift(first_column_hooks(lambda), r);
        const std::int64_t expected = x.size() % 2 == 0 ? 1 - sign : sign;
        ASSERT_EQ(parity_gap(x), expected) << to_string(lambda) << " r=" << r;
      }
    }
  }
}
