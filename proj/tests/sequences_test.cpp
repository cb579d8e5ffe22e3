#include "seqstate/sequences.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "seqstate/error.hpp"
#include "seqstate/sieves.hpp"
#include "support/oracles.hpp"

namespace seqstate {
namespace {

using Entries = std::vector<SequenceSample::Entry>;

std::vector<BasisIndex> values_of(const SequenceSample& s) { return {s.values().begin(), s.values().end()}; }

TEST(Generate, FourQubitPrime) {
  const auto s = generate({Family::Prime}, 4);
  EXPECT_EQ(values_of(s), (std::vector<BasisIndex>{2, 3, 5, 7, 11, 13}));
  EXPECT_TRUE(s.all_unit_multiplicity());
  EXPECT_EQ(s.tau(), 6u);
}

TEST(Generate, FourQubitFibonacciRepeatsOne) {
  const auto s = generate({Family::Fibonacci}, 4);
  const Entries expected{{0, 1}, {1, 2}, {2, 1}, {3, 1}, {5, 1}, {8, 1}, {13, 1}};
  EXPECT_EQ(s.entries(), expected);
  EXPECT_EQ(s.tau(), 10u);
}

TEST(Generate, FourQubitHappyAndLucky) {
  EXPECT_EQ(values_of(generate({Family::Happy}, 4)), (std::vector<BasisIndex>{1, 7, 10, 13}));
  EXPECT_EQ(generate({Family::Happy}, 4).tau(), 4u);
  EXPECT_EQ(values_of(generate({Family::Lucky}, 4)), (std::vector<BasisIndex>{1, 3, 7, 9, 13, 15}));
  EXPECT_EQ(generate({Family::Lucky}, 4).tau(), 6u);
}

TEST(Generate, ArithmeticProgressionStartsAtZero) {
  const auto s = generate({Family::PA, 3}, 3);
  EXPECT_EQ(values_of(s), (std::vector<BasisIndex>{0, 3, 6}));
  EXPECT_EQ(s.tau(), 3u);
  EXPECT_EQ(values_of(generate({Family::PA, 100}, 4)), (std::vector<BasisIndex>{0}));
}

TEST(Generate, SmallPrefixesOfClosedFormFamilies) {
  EXPECT_EQ(values_of(generate({Family::Triangular}, 5)), (std::vector<BasisIndex>{0, 1, 3, 6, 10, 15, 21, 28}));
  EXPECT_EQ(values_of(generate({Family::Lazy}, 4)), (std::vector<BasisIndex>{1, 2, 4, 7, 11}));
  EXPECT_EQ(values_of(generate({Family::SPrime}, 4)), (std::vector<BasisIndex>{1, 2, 3, 5, 6, 8, 9, 11, 14, 15}));
  EXPECT_EQ(values_of(generate({Family::Abundant}, 5)), (std::vector<BasisIndex>{12, 18, 20, 24, 30}));
  EXPECT_EQ(values_of(generate({Family::Harshad}, 4)), (std::vector<BasisIndex>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}));
}

TEST(Generate, PadovanVariantMultiplicities) {
  const auto s = generate({Family::Padovan}, 4);
  const Entries expected{{1, 3}, {2, 2}, {3, 1}, {4, 1}, {5, 1}, {7, 1}, {9, 1}, {12, 1}};
  EXPECT_EQ(s.entries(), expected);
  EXPECT_EQ(s.tau(), 9u + 4u + 6u);
}

TEST(Generate, RegisterLimits) {
  EXPECT_THROW(generate({Family::Prime}, 0), RangeError);
  EXPECT_THROW(generate({Family::Prime}, 29), RangeError);
  GeneratorConfig wide;
  wide.max_qubits = 30;
  EXPECT_NO_THROW(generate({Family::Fibonacci}, 30, wide));
}

TEST(Generate, LuckyCapNamesTheCap) {
  GeneratorConfig config;
  config.lucky_max_qubits = 10;
  try {
    generate({Family::Lucky}, 11, config);
    FAIL() << "expected a capacity error";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("lucky_max_qubits"), std::string::npos);
  }
  EXPECT_NO_THROW(generate({Family::Lucky}, 10, config));
}

TEST(Generate, InvalidRatio) { EXPECT_THROW(generate({Family::PA, 0}, 4), DomainError); }

TEST(Tau, RecomputesSquares) {
  EXPECT_EQ(tau(generate({Family::Fibonacci}, 4)), 10u);
  EXPECT_EQ(tau(generate({Family::Prime}, 4)), 6u);
  EXPECT_EQ(tau(SequenceSample(3, {5})), 1u);
  EXPECT_THROW(tau(SequenceSample(3, {})), DomainError);
}

TEST(Sample, RejectsMalformedInput) {
  EXPECT_THROW(SequenceSample(3, {8}), RangeError);
  EXPECT_THROW(SequenceSample(3, {2, 2}), DomainError);
  EXPECT_THROW(SequenceSample(3, {1, 2}, {1}), DomainError);
  EXPECT_THROW(SequenceSample(3, {1, 2}, {1, 0}), DomainError);
}

TEST(SSequence, WorkedExample) {
  EXPECT_EQ(values_of(build_s_sequence(2)), (std::vector<BasisIndex>{0, 3}));
  EXPECT_EQ(values_of(build_s_sequence(3)), (std::vector<BasisIndex>{0, 2, 3}));
  EXPECT_EQ(values_of(build_s_sequence(4)), (std::vector<BasisIndex>{0, 2, 3, 12, 13, 15}));
  EXPECT_EQ(values_of(build_s_sequence(5)), (std::vector<BasisIndex>{0, 2, 3, 12, 13, 14, 15}));
  const auto s6 = build_s_sequence(6);
  EXPECT_EQ(values_of(s6), (std::vector<BasisIndex>{0, 2, 3, 12, 13, 14, 15, 48, 49, 50, 51, 60, 61, 63}));
  EXPECT_EQ(s6.n_qubits(), 6u);
  EXPECT_EQ(build_s_sequence(3).n_qubits(), 2u);
  EXPECT_THROW(build_s_sequence(1), DomainError);
}

TEST(SSequence, GrowsMonotonically) {
  for (unsigned k = 2; k < 20; ++k) {
    const auto small = build_s_sequence(k);
    const auto big = build_s_sequence(k + 1);
    EXPECT_TRUE(std::includes(big.values().begin(), big.values().end(), small.values().begin(), small.values().end()))
        << "k=" << k;
  }
}

TEST(SSequence, RegisterPlacement) {
  const auto s = generate({Family::SOscillating}, 5);
  EXPECT_EQ(s.n_qubits(), 5u);
  EXPECT_EQ(values_of(s), values_of(build_s_sequence(5)));
  EXPECT_THROW(generate({Family::SOscillating}, 1), RangeError);
}

TEST(Overlap, FibonacciPadovanAt28) {
  const auto rep = overlap(generate({Family::Fibonacci}, 28), generate({Family::Padovan}, 28));
  EXPECT_EQ(rep.common_count, 5u);
  EXPECT_EQ(rep.common_values, (std::vector<BasisIndex>{1, 2, 3, 5, 21}));
  EXPECT_NEAR(rep.fraction_of_larger, 0.07, 0.01);
}

TEST(Overlap, SelfOverlapIsTotal) {
  const auto fib = generate({Family::Fibonacci}, 12);
  const auto rep = overlap(fib, fib);
  EXPECT_EQ(rep.common_count, fib.size());
  EXPECT_DOUBLE_EQ(rep.fraction_of_smaller, 1.0);
  EXPECT_DOUBLE_EQ(rep.fraction_of_larger, 1.0);
}

TEST(Overlap, LuckyPrimeAt24) {
  const auto lucky = generate({Family::Lucky}, 24);
  const auto prime = generate({Family::Prime}, 24);
  const auto rep = overlap(lucky, prime);
  // Exact count re-derived by membership tests against the other sample.
  std::size_t count = 0;
  for (const auto v : lucky.values()) count += prime.contains(v);
  EXPECT_EQ(rep.common_count, count);
  EXPECT_NEAR(rep.fraction_of_smaller, 0.07, 0.03);
}

TEST(Overlap, MismatchedRegisters) {
  EXPECT_THROW(overlap(generate({Family::Prime}, 4), generate({Family::Prime}, 5)), DomainError);
}

TEST(Families, NamesRoundTrip) {
  for (const auto f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(parse_family("hashard"), Family::Harshad);
  EXPECT_FALSE(parse_family("nope"));
}

// Property: every family is a monotone truncation across register sizes.
TEST(Invariants, MonotoneTruncation) {
  for (const auto f : kAllFamilies) {
    if (f == Family::SOscillating) continue;  // n-qubit S state is not a truncation
    const SequenceSpec spec{f, 5};
    for (unsigned n = 4; n < 16; ++n) {
      const auto small = generate(spec, n);
      const auto big = generate(spec, n + 1);
      EXPECT_EQ(small.entries(), big.restricted(n).entries()) << family_name(f) << " n=" << n;
    }
  }
}

TEST(Invariants, TauAndMultiplicities) {
  for (const auto f : kAllFamilies) {
    const auto s = generate({f, 7}, 14);
    if (!s.empty()) EXPECT_EQ(tau(s), s.tau()) << family_name(f);
    const bool repeats = f == Family::Fibonacci || f == Family::Padovan;
    EXPECT_EQ(s.all_unit_multiplicity(), !repeats) << family_name(f);
  }
}

// Sieves against direct definitions.
TEST(Sieves, MatchNaiveDefinitions) {
  constexpr std::uint64_t kLimit = 1u << 16;
  std::vector<std::uint32_t> primes, abundant, happy, harshad;
  for (std::uint64_t n = 1; n <= kLimit; ++n) {
    if (testing::is_prime_naive(n)) primes.push_back(static_cast<std::uint32_t>(n));
    if (testing::divisor_sum_naive(n) > 2 * n) abundant.push_back(static_cast<std::uint32_t>(n));
    if (testing::is_happy_naive(n)) happy.push_back(static_cast<std::uint32_t>(n));
    if (testing::is_harshad_naive(n)) harshad.push_back(static_cast<std::uint32_t>(n));
  }
  EXPECT_EQ(sieves::primes_upto(kLimit), primes);
  EXPECT_EQ(sieves::abundant_upto(kLimit), abundant);
  EXPECT_EQ(sieves::abundant_upto(kLimit, 1000), abundant);  // odd segment boundaries
  EXPECT_EQ(sieves::happy_upto(kLimit), happy);
  EXPECT_EQ(sieves::harshad_upto(kLimit), harshad);

  const auto lucky_ref = testing::lucky_naive(kLimit);
  const auto lucky = sieves::lucky_upto(kLimit);
  ASSERT_EQ(lucky.size(), lucky_ref.size());
  EXPECT_TRUE(std::equal(lucky.begin(), lucky.end(), lucky_ref.begin()));
}

TEST(Sieves, EdgeLimits) {
  EXPECT_TRUE(sieves::primes_upto(1).empty());
  EXPECT_EQ(sieves::primes_upto(2), (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(sieves::primes_upto(9), (std::vector<std::uint32_t>{2, 3, 5, 7}));
  EXPECT_TRUE(sieves::abundant_upto(11).empty());
  EXPECT_EQ(sieves::lucky_upto(1), (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(sieves::lucky_upto(8), (std::vector<std::uint32_t>{1, 3, 7}));
  EXPECT_THROW(sieves::abundant_upto(1u << 29), RangeError);
}

TEST(Sieves, KnownCounts) {
  // pi(2^20) = 82025
  EXPECT_EQ(sieves::primes_upto(1u << 20).size(), 82025u);
}

}  // namespace
}  // namespace seqstate
