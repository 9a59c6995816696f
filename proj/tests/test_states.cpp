#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rectdp/errors.hpp"
#include "rectdp/generator.hpp"
#include "rectdp/states.hpp"

namespace rectdp {
namespace {

constexpr Parity Z = Parity::Zero;
constexpr Parity U = Parity::Odd;
constexpr Parity E = Parity::Even;

TspState tsp(std::vector<Parity> par, std::vector<int> comp) {
  return canonicalize_tsp(par, comp);
}

StateError::Kind tsp_error(std::vector<Parity> par, std::vector<int> comp) {
  try {
    canonicalize_tsp(par, comp);
  } catch (const StateError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted an invalid state";
  return StateError::Kind::BadShape;
}

TEST(ParityTest, DegreeArithmetic) {
  EXPECT_EQ(advance(Z, 0), Z);
  EXPECT_EQ(advance(Z, 1), U);
  EXPECT_EQ(advance(Z, 2), E);
  EXPECT_EQ(advance(U, 1), E);
  EXPECT_EQ(advance(U, 2), U);
  EXPECT_EQ(advance(E, 1), U);
  EXPECT_EQ(advance(E, 2), E);
  EXPECT_EQ(advance(U, 0), U);
}

TEST(CanonicalizeTsp, Relabels) {
  const TspState s = tsp({E, E, E}, {7, 7, 9});
  EXPECT_EQ(to_string(s), "{(E,E,E),(1,1,2)}");
}

TEST(CanonicalizeTsp, Errors) {
  EXPECT_EQ(tsp_error({E, E, E, E}, {1, 2, 1, 2}), StateError::Kind::CrossingPartition);
  EXPECT_EQ(tsp_error({U, E}, {1, 1}), StateError::Kind::OddCountViolation);
  EXPECT_EQ(tsp_error({U}, {1}), StateError::Kind::SingletonNotEven);
  EXPECT_EQ(tsp_error({Z, E}, {1, 2}), StateError::Kind::ParityComponentMismatch);
  EXPECT_EQ(tsp_error({E, E}, {1, 0}), StateError::Kind::ParityComponentMismatch);
}

TEST(CanonicalizeTsp, NestedBlocksAreNotCrossing) {
  EXPECT_EQ(to_string(tsp({E, U, U, E}, {4, 9, 9, 4})), "{(E,U,U,E),(1,2,2,1)}");
  EXPECT_EQ(to_string(tsp({E, Z, E}, {3, 0, 3})), "{(E,0,E),(1,-,1)}");
}

TEST(CanonicalizeSteiner, Examples) {
  EXPECT_EQ(to_string(canonicalize_steiner(std::vector<int>{5, 5, 0, 5})), "(1,1,-,1)");
  EXPECT_EQ(to_string(canonicalize_steiner(std::vector<int>{0, 0, 0})), "(-,-,-)");
  EXPECT_THROW(canonicalize_steiner(std::vector<int>{1, 2, 1, 2}), StateError);
}

TEST(CanonicalizeTsp, IdempotentAndLabelInvariant) {
  SplitMix64 rng(3);
  for (int h = 1; h <= 7; ++h) {
    for_each_tsp_state(h, [&](const TspState& s) {
      ASSERT_EQ(canonicalize(s), s);
      // Random injective relabeling.
      std::vector<int> perm(17);
      for (int k = 0; k < 17; ++k) perm[k] = 40 + k;
      for (int k = 16; k > 0; --k) {
        std::swap(perm[k], perm[static_cast<int>(rng.below(static_cast<std::uint64_t>(k) + 1))]);
      }
      std::vector<Parity> par(s.parity.begin(), s.parity.begin() + h);
      std::vector<int> comp;
      for (int r = 0; r < h; ++r) comp.push_back(s.comp[r] == 0 ? 0 : perm[s.comp[r]]);
      ASSERT_EQ(canonicalize_tsp(par, comp), s);
    });
  }
}

TEST(EnumerateStates, TspThreeRows) {
  const auto keys = enumerate_states(3, Problem::Tsp);
  EXPECT_EQ(keys.size(), 24u);
  const std::set<StateKey> set(keys.begin(), keys.end());
  EXPECT_TRUE(set.count(encode(tsp({E, E, E}, {1, 2, 3}))));
  EXPECT_TRUE(set.count(encode(tsp({U, U, E}, {1, 1, 2}))));
}

TEST(EnumerateStates, SteinerThreeRows) {
  const auto keys = enumerate_states(3, Problem::Steiner);
  EXPECT_EQ(keys.size(), 15u);
  const SteinerState s = canonicalize_steiner(std::vector<int>{1, 2, 1});
  EXPECT_TRUE(std::binary_search(keys.begin(), keys.end(), encode(s)));
}

TEST(EnumerateStates, TspOneRow) {
  std::vector<std::string> seen;
  for_each_tsp_state(1, [&](const TspState& s) { seen.push_back(to_string(s)); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::string>{"{(0),(-)}", "{(E),(1)}"}));
}

TEST(EnumerateStates, Guards) {
  EXPECT_THROW(enumerate_states(0, Problem::Tsp), GuardExceeded);
  EXPECT_THROW(enumerate_states(13, Problem::Steiner), GuardExceeded);
}

TEST(EnumerateStates, EveryStateValidAndDistinct) {
  for (int h = 1; h <= 8; ++h) {
    std::set<StateKey> keys;
    for_each_tsp_state(h, [&](const TspState& s) {
      ASSERT_EQ(canonicalize(s), s) << to_string(s);
      ASSERT_EQ(decode_tsp(encode(s), h), s);
      ASSERT_TRUE(keys.insert(encode(s)).second) << to_string(s);
    });
    ASSERT_EQ(BigInt(keys.size()), count_states(h, Problem::Tsp)) << "h=" << h;
  }
}

// Independent check: brute force over every labeling with labels <= h and
// every parity vector, keeping those the canonicalizer accepts.
TEST(EnumerateStates, MatchesGenerateAndFilter) {
  for (int h = 1; h <= 5; ++h) {
    std::set<StateKey> filtered;
    std::vector<int> comp(static_cast<std::size_t>(h), 0);
    std::vector<Parity> par(static_cast<std::size_t>(h), Z);
    std::size_t total = 1;
    for (int r = 0; r < h; ++r) total *= static_cast<std::size_t>(h + 1) * 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t x = code;
      for (int r = 0; r < h; ++r) {
        comp[r] = static_cast<int>(x % static_cast<std::size_t>(h + 1));
        x /= static_cast<std::size_t>(h + 1);
        par[r] = static_cast<Parity>(x % 3);
        x /= 3;
      }
      try {
        filtered.insert(encode(canonicalize_tsp(par, comp)));
      } catch (const StateError&) {
      }
    }
    const auto keys = enumerate_states(h, Problem::Tsp);
    ASSERT_EQ(std::vector<StateKey>(filtered.begin(), filtered.end()), keys) << "h=" << h;
  }
}

TEST(EnumerateStates, SteinerCountsAndRoundTrip) {
  for (int h = 1; h <= 9; ++h) {
    std::size_t n = 0;
    std::size_t positive = 0;
    for_each_steiner_state(h, [&](const SteinerState& s) {
      ++n;
      ASSERT_EQ(decode_steiner(encode(s), h), s);
      bool all = true;
      for (int r = 0; r < h; ++r) all = all && s.comp[r] != kNoComponent;
      if (all) ++positive;
    });
    EXPECT_EQ(BigInt(n), count_states(h, Problem::Steiner)) << "h=" << h;
    EXPECT_EQ(BigInt(positive), catalan(h)) << "h=" << h;
  }
}

TEST(EnumerateStates, PositiveTspStatesAreSuperCatalan) {
  for (int h = 1; h <= 8; ++h) {
    std::size_t positive = 0;
    for_each_tsp_state(h, [&](const TspState& s) {
      bool all = true;
      for (int r = 0; r < h; ++r) all = all && s.parity[r] != Z;
      if (all) ++positive;
    });
    EXPECT_EQ(BigInt(positive), super_catalan(h)) << "h=" << h;
  }
}

TEST(EnumerateStates, RoundTripTenRows) {
  for_each_tsp_state(10, [&](const TspState& s) {
    ASSERT_EQ(decode_tsp(encode(s), 10), s);
  });
}

TEST(CountStates, TableValues) {
  const std::vector<int> tsp_counts{2, 6, 24, 112, 568, 3032, 16768, 95200};
  const std::vector<int> super{1, 3, 11, 45, 197, 903, 4279, 20793};
  for (int h = 1; h <= 8; ++h) {
    EXPECT_EQ(count_states(h, Problem::Tsp), tsp_counts[h - 1]);
    EXPECT_EQ(count_positive_states(h, Problem::Tsp), super[h - 1]);
  }
  EXPECT_EQ(count_states(4, Problem::Tsp), 112);
  EXPECT_EQ(super_catalan(5), 197);
  EXPECT_EQ(super_catalan(9), 103049);
}

TEST(CountStates, SteinerBinomialCatalanTransform) {
  // 1, 2, 5, 15, 51, 188, ... from the direct double sum.
  const std::vector<int> want{2, 5, 15, 51, 188, 731, 2950, 12235, 51822, 223191, 974427};
  for (int h = 1; h <= 11; ++h) EXPECT_EQ(count_states(h, Problem::Steiner), want[h - 1]);
}

TEST(CountStates, CatalanDirectFormula) {
  for (int k = 0; k <= 30; ++k) {
    BigInt binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (2 * k - i) / (i + 1);
    EXPECT_EQ(catalan(k), binom / (k + 1)) << k;
  }
  EXPECT_EQ(catalan(4), 14);
}

TEST(CountStates, SuperCatalanMatchesSchroderSum) {
  // Little Schroder numbers: S_n = sum_k N(n, k) 2^(k-1) with Narayana N.
  for (int n = 1; n <= 25; ++n) {
    auto binom = [](int a, int b) {
      BigInt r = 1;
      for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
      return r;
    };
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) {
      const BigInt narayana = binom(n, k) * binom(n, k - 1) / n;
      sum += narayana * (BigInt(1) << (k - 1));
    }
    EXPECT_EQ(super_catalan(n), sum) << n;
  }
}

TEST(CountStates, LargeHExact) {
  // No overflow: forty rows still give an exact integer with many digits.
  const BigInt big = count_states(40, Problem::Tsp);
  EXPECT_GT(big, BigInt(1) << 80);
  EXPECT_EQ(count_states(0, Problem::Tsp), 1);
}

TEST(StateKeyTest, EncodeIgnoresLabels) {
  TspState a = TspState::empty(3);
  a.parity = {E, U, U};
  a.comp = {9, 4, 4};
  TspState b = a;
  b.comp = {1, 2, 2};
  EXPECT_EQ(encode(a), encode(b));
  EXPECT_EQ(decode_tsp(encode(a), 3), b);
  EXPECT_EQ(encode(TspState::empty(5)), 0u);
}

TEST(StateKeyTest, SixteenRows) {
  TspState s = TspState::empty(16);
  for (int r = 0; r < 16; ++r) {
    s.parity[r] = E;
    s.comp[r] = static_cast<std::uint8_t>(r + 1);
  }
  EXPECT_EQ(decode_tsp(encode(s), 16), s);
  for (int r = 0; r < 16; ++r) s.comp[r] = 1;
  EXPECT_EQ(decode_tsp(encode(s), 16), s);
}

}  // namespace
}  // namespace rectdp
