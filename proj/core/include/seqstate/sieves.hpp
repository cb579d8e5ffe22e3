#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Raw generators behind the sieve-backed families. Each returns the sorted
// members in [1, limit] (inclusive).

namespace seqstate::sieves {

/// Segmented odd-only sieve of Eratosthenes.
std::vector<std::uint32_t> primes_upto(std::uint64_t limit);

/// Numbers whose divisor sum exceeds twice the number. Divisor sums are
/// accumulated per segment with 32-bit words, which is exact below 2^28.
std::vector<std::uint32_t> abundant_upto(std::uint64_t limit,
                                         std::size_t segment_size = std::size_t{1} << 22);

/// Iterated digit-square-sum reaches 1.
std::vector<std::uint32_t> happy_upto(std::uint64_t limit);

/// Divisible by the sum of their decimal digits.
std::vector<std::uint32_t> harshad_upto(std::uint64_t limit);

/// Lucky numbers via deletion over an order-statistic (Fenwick) tree.
std::vector<std::uint32_t> lucky_upto(std::uint64_t limit);

bool is_happy(std::uint64_t n);

}  // namespace seqstate::sieves
