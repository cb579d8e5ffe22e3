#include "seqstate/qstate.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "seqstate/error.hpp"

namespace seqstate {
namespace {

TEST(FromSample, PrimeFourQubits) {
  const auto state = from_sample(generate({Family::Prime}, 4), 4);
  const double a = 1.0 / std::sqrt(6.0);
  for (BasisIndex v = 0; v < 16; ++v) {
    const bool member = v == 2 || v == 3 || v == 5 || v == 7 || v == 11 || v == 13;
    EXPECT_NEAR(std::abs(state.amplitude_at(v) - Amplitude(member ? a : 0.0)), 0.0, 1e-15) << v;
  }
  EXPECT_TRUE(state.is_real());
}

TEST(FromSample, FibonacciWeightsRepeats) {
  const auto state = from_sample(generate({Family::Fibonacci}, 4), 4);
  EXPECT_NEAR(state.amplitude_at(1).real(), 2.0 / std::sqrt(10.0), 1e-15);
  for (const BasisIndex v : {0u, 2u, 3u, 5u, 8u, 13u}) {
    EXPECT_NEAR(state.amplitude_at(v).real(), 1.0 / std::sqrt(10.0), 1e-15);
  }
  EXPECT_NEAR(state.norm_squared(), 1.0, 1e-12);
}

TEST(FromSample, Errors) {
  EXPECT_THROW(from_sample(SequenceSample(4, {}), 4), DomainError);
  EXPECT_THROW(from_sample(SequenceSample(4, {9}), 3), RangeError);
}

TEST(FromSample, PaddingKeepsAmplitudes) {
  const auto sample = generate({Family::Fibonacci}, 6);
  const auto small = from_sample(sample, 6);
  const auto big = from_sample(sample, 7);
  ASSERT_EQ(small.size(), big.size());
  for (std::size_t k = 0; k < small.size(); ++k) {
    EXPECT_EQ(small.index(k), big.index(k));
    EXPECT_EQ(small.amplitude(k), big.amplitude(k));
  }
}

TEST(SparseStateTest, RejectsBadInput) {
  EXPECT_THROW(SparseState(2, {{0, 0.5}}), DomainError);                // norm
  EXPECT_THROW(SparseState(2, {{0, M_SQRT1_2}, {0, M_SQRT1_2}}), DomainError);  // duplicate
  EXPECT_THROW(SparseState(2, {{4, 1.0}}), RangeError);
  EXPECT_THROW(SparseState::normalized(2, {{1, 0.0}}), DomainError);
}

TEST(SparseStateTest, DropsZerosAndSorts) {
  const SparseState s(3, {{5, Amplitude(0, M_SQRT1_2)}, {2, 0.0}, {1, M_SQRT1_2}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.index(0), 1u);
  EXPECT_EQ(s.index(1), 5u);
  EXPECT_FALSE(s.is_real());
}

TEST(ToDense, BellLike) {
  const auto s = SparseState::uniform(2, {0, 3});
  const auto d = to_dense(s);
  ASSERT_EQ(d.size(), 4u);
  EXPECT_NEAR(d[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_EQ(d[1], Amplitude{});
  EXPECT_EQ(d[2], Amplitude{});
  EXPECT_NEAR(d[3].real(), M_SQRT1_2, 1e-15);
}

TEST(ToDense, PrimeHasSixEqualEntries) {
  const auto d = to_dense(from_sample(generate({Family::Prime}, 4), 4));
  ASSERT_EQ(d.size(), 16u);
  int nonzero = 0;
  for (const auto& a : d) {
    if (a == Amplitude{}) continue;
    ++nonzero;
    EXPECT_NEAR(a.real(), 1.0 / std::sqrt(6.0), 1e-15);
  }
  EXPECT_EQ(nonzero, 6);
}

TEST(ToDense, CapacityCap) {
  const auto s = SparseState::uniform(21, {0, 1});
  EXPECT_THROW(to_dense(s), CapacityError);
}

TEST(Fidelity, BasicCases) {
  const auto prime = from_sample(generate({Family::Prime}, 4), 4);
  EXPECT_NEAR(fidelity(prime, prime), 1.0, 1e-12);

  EXPECT_NEAR(fidelity(SparseState::uniform(3, {0, 1}), SparseState::uniform(3, {2, 3})), 0.0, 1e-15);

  std::vector<BasisIndex> all(16);
  for (BasisIndex i = 0; i < 16; ++i) all[i] = i;
  const auto uniform = SparseState::uniform(4, all);
  // <u|p> = 6 * (1/4)(1/sqrt 6)
  const double expected = std::pow(6.0 * 0.25 / std::sqrt(6.0), 2);
  EXPECT_NEAR(fidelity(uniform, prime), expected, 1e-12);
  EXPECT_NEAR(expected, 6.0 / 16.0, 1e-12);

  EXPECT_THROW(fidelity(prime, SparseState::uniform(5, {0})), DomainError);
}

TEST(Fidelity, SymmetricOnRandomStates) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SparseState::Term> ta, tb;
    for (BasisIndex i = 0; i < 32; ++i) {
      if (rng() % 3) ta.push_back({i, Amplitude(g(rng), g(rng))});
      if (rng() % 3) tb.push_back({i, Amplitude(g(rng), g(rng))});
    }
    const auto a = SparseState::normalized(5, ta);
    const auto b = SparseState::normalized(5, tb);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-14);
    EXPECT_GE(fidelity(a, b), 0.0);
    EXPECT_LE(fidelity(a, b), 1.0);
  }
}

TEST(WriteText, TwoColumns) {
  std::ostringstream out;
  write_text(SparseState::uniform(2, {0, 3}), out);
  EXPECT_EQ(out.str(), "0 0.70710678118654746\n3 0.70710678118654746\n");
}

}  // namespace
}  // namespace seqstate
