#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cyclo/signs.hpp"
#include "support.hpp"

using namespace cyclo;
using namespace testing_support;

namespace {

/// Sign by physically sorting the output word back to the input order with
/// adjacent swaps, one Koszul factor per swap.
int bubble_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  std::vector<int> w = perm;
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        if (degrees[w[j]] % 2 != 0 && degrees[w[j + 1]] % 2 != 0) sign = -sign;
        std::swap(w[j], w[j + 1]);
      }
  return sign;
}

std::vector<int> random_degrees(std::mt19937_64& g, int n) {
  std::vector<int> d(n);
  for (auto& x : d) x = uniform(g, -3, 3);
  return d;
}

std::vector<int> random_perm(std::mt19937_64& g, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), g);
  return p;
}

long multinomial(const std::vector<int>& parts) {
  long out = 1;
  int n = 0;
  for (int k : parts)
    for (int i = 1; i <= k; ++i) out = out * ++n / i;
  return out;
}

}  // namespace

TEST(Koszul, Identity) {
  EXPECT_EQ(koszul_sign({0, 1, 2, 3}, {1, 1, 3, 5}), 1);
}

TEST(Koszul, TranspositionOfOddElements) {
  EXPECT_EQ(koszul_sign({1, 0}, {1, 1}), -1);
  EXPECT_EQ(koszul_sign({1, 0}, {1, 2}), 1);
  EXPECT_EQ(koszul_sign({1, 0}, {-1, 3}), -1);
}

TEST(Koszul, MatchesAdjacentSwapOracle) {
  auto g = rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform(g, 1, 7);
    auto d = random_degrees(g, n);
    auto p = random_perm(g, n);
    EXPECT_EQ(koszul_sign(p, d), bubble_sign(p, d));
  }
}

TEST(Koszul, Homomorphism) {
  auto g = rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform(g, 1, 6);
    auto d = random_degrees(g, n);
    auto tau = random_perm(g, n), sigma = random_perm(g, n);
    std::vector<int> rho(n), moved(n);
    for (int i = 0; i < n; ++i) rho[i] = tau[sigma[i]], moved[i] = d[tau[i]];
    EXPECT_EQ(koszul_sign(rho, d), koszul_sign(tau, d) * koszul_sign(sigma, moved));
  }
}

TEST(Suspension, MatchesInterleavingKoszulSign) {
  // s^n (v1..vn) -> (s v1)(s v2)..(s vn): shuffle n odd symbols into the word
  auto g = rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform(g, 1, 6);
    auto d = random_degrees(g, n);
    std::vector<int> degs(2 * n), perm;
    for (int i = 0; i < n; ++i) degs[i] = 1, degs[n + i] = d[i];
    for (int i = 0; i < n; ++i) perm.push_back(i), perm.push_back(n + i);
    EXPECT_EQ(suspension_sign(d), koszul_sign(perm, degs));
  }
}

TEST(Rotation, EqualsKoszulSignOfCycle) {
  auto g = rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform(g, 1, 7);
    auto d = random_degrees(g, n);
    std::vector<int> cyc{n - 1};
    for (int i = 0; i + 1 < n; ++i) cyc.push_back(i);
    EXPECT_EQ(rotation_sign(d), koszul_sign(cyc, d));
  }
}

TEST(Rotation, FullTurnIsTrivial) {
  auto g = rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform(g, 1, 7);
    auto d = random_degrees(g, n);
    int total = 1;
    for (int r = 0; r < n; ++r) {
      total *= rotation_sign(d);
      std::rotate(d.rbegin(), d.rbegin() + 1, d.rend());
    }
    EXPECT_EQ(total, 1);
  }
}

TEST(Unshuffles, SingleBlockIsIdentity) {
  auto all = unshuffles({4}, {1, 1, 1, 1});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].perm, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(all[0].sign, 1);
}

TEST(Unshuffles, TwoTwoAllOddMatchesFullPermutationFilter) {
  std::vector<int> d{1, 1, 1, 1};
  std::map<std::vector<int>, int> expected;
  std::vector<int> p{0, 1, 2, 3};
  do {
    if (p[0] < p[1] && p[2] < p[3]) expected[p] = bubble_sign(p, d);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> got;
  for (auto& u : unshuffles({2, 2}, d)) got[u.perm] = u.sign;
  EXPECT_EQ(got, expected);
}

TEST(Unshuffles, CountsAndSignsOnRandomShapes) {
  auto g = rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> parts;
    int n = 0;
    for (int k = uniform(g, 1, 3); k > 0; --k) {
      parts.push_back(uniform(g, 1, 3));
      n += parts.back();
    }
    auto d = random_degrees(g, n);
    auto all = unshuffles(parts, d);
    EXPECT_EQ(static_cast<long>(all.size()), multinomial(parts));
    for (auto& u : all) {
      EXPECT_EQ(u.sign, bubble_sign(u.perm, d));
      int start = 0;
      for (int k : parts) {
        EXPECT_TRUE(std::is_sorted(u.perm.begin() + start, u.perm.begin() + start + k));
        start += k;
      }
    }
  }
}
