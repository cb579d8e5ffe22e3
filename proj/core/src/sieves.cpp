#include "seqstate/sieves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "seqstate/error.hpp"

namespace seqstate::sieves {
namespace {

constexpr std::uint64_t kMaxLimit = std::numeric_limits<std::uint32_t>::max();

void check_limit(std::uint64_t limit) {
  if (limit > kMaxLimit) {
    throw RangeError("sieve limit " + std::to_string(limit) + " exceeds 2^32 - 1");
  }
}

std::uint32_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint32_t>(r);
}

// Plain sieve for the base primes of the segmented passes.
std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t m = std::uint64_t{p} * p; m <= limit; m += p) composite[m] = true;
  }
  return out;
}

// Per-value tables over four decimal digits.
struct DigitTables {
  std::array<std::uint16_t, 10000> square_sum{};
  std::array<std::uint8_t, 10000> digit_sum{};

  DigitTables() {
    for (unsigned i = 0; i < 10000; ++i) {
      unsigned v = i, sq = 0, ds = 0;
      while (v) {
        const unsigned d = v % 10;
        sq += d * d;
        ds += d;
        v /= 10;
      }
      square_sum[i] = static_cast<std::uint16_t>(sq);
      digit_sum[i] = static_cast<std::uint8_t>(ds);
    }
  }

  unsigned squares(std::uint64_t n) const {
    unsigned s = 0;
    while (n) {
      s += square_sum[n % 10000];
      n /= 10000;
    }
    return s;
  }

  unsigned digits(std::uint64_t n) const {
    unsigned s = 0;
    while (n) {
      s += digit_sum[n % 10000];
      n /= 10000;
    }
    return s;
  }
};

const DigitTables& digit_tables() {
  static const DigitTables tables;
  return tables;
}

// Verdicts for 0..999. Any number below 2^32 has a digit-square-sum of at
// most 10 * 81, so one step lands in the table.
struct HappyMemo {
  std::array<bool, 1000> happy{};

  HappyMemo() {
    for (unsigned start = 1; start < 1000; ++start) {
      unsigned v = start;
      // Unhappy chains enter the 4 -> 16 -> ... cycle.
      while (v != 1 && v != 4) v = digit_tables().squares(v);
      happy[start] = (v == 1);
    }
  }
};

const HappyMemo& happy_memo() {
  static const HappyMemo memo;
  return memo;
}

}  // namespace

std::vector<std::uint32_t> primes_upto(std::uint64_t limit) {
  check_limit(limit);
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  const double estimate = static_cast<double>(limit) / std::max(1.0, std::log(static_cast<double>(limit)) - 1.1);
  out.reserve(static_cast<std::size_t>(estimate * 1.05) + 16);
  out.push_back(2);

  const auto base = small_primes(isqrt(limit));
  // Segment over odd numbers: slot i <-> 2i + 1.
  constexpr std::uint64_t kSlots = std::uint64_t{1} << 18;
  const std::uint64_t total_slots = (limit + 1) / 2;  // odd numbers <= limit
  std::vector<std::uint8_t> mark(kSlots);
  std::vector<std::uint64_t> next;  // next slot to cross per base prime
  next.reserve(base.size());
  for (const auto p : base) {
    if (p == 2) continue;
    next.push_back((std::uint64_t{p} * p) / 2);
  }

  for (std::uint64_t lo = 0; lo < total_slots; lo += kSlots) {
    const std::uint64_t hi = std::min(total_slots, lo + kSlots);
    std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(hi - lo), 0);
    std::size_t j = 0;
    for (const auto p : base) {
      if (p == 2) continue;
      std::uint64_t s = next[j];
      for (; s < hi; s += p) mark[s - lo] = 1;
      next[j++] = s;
    }
    for (std::uint64_t s = std::max<std::uint64_t>(lo, 1); s < hi; ++s) {
      if (!mark[s - lo]) out.push_back(static_cast<std::uint32_t>(2 * s + 1));
    }
  }
  return out;
}

std::vector<std::uint32_t> abundant_upto(std::uint64_t limit, std::size_t segment_size) {
  // Divisor sums stay below 2^32 for every n < 2^29.
  if (limit >= (std::uint64_t{1} << 29)) {
    throw RangeError("abundant sieve limit " + std::to_string(limit) + " exceeds 2^29 - 1");
  }
  if (segment_size == 0) throw DomainError("abundant sieve segment size must be positive");
  std::vector<std::uint32_t> out;
  if (limit < 12) return out;
  out.reserve(static_cast<std::size_t>(static_cast<double>(limit) * 0.2477) + 16);

  const auto base = small_primes(isqrt(limit));
  const std::size_t seg = std::min<std::uint64_t>(segment_size, limit);
  std::vector<std::uint32_t> rest(seg);
  std::vector<std::uint32_t> sigma(seg);

  for (std::uint64_t lo = 1; lo <= limit; lo += seg) {
    const std::uint64_t hi = std::min<std::uint64_t>(limit + 1, lo + seg);
    const std::size_t len = hi - lo;
    for (std::size_t i = 0; i < len; ++i) {
      rest[i] = static_cast<std::uint32_t>(lo + i);
      sigma[i] = 1;
    }
    for (const std::uint32_t p : base) {
      if (std::uint64_t{p} * p >= hi) break;
      std::uint64_t first = ((lo + p - 1) / p) * p;
      for (std::uint64_t m = first; m < hi; m += p) {
        const std::size_t i = m - lo;
        std::uint32_t r = rest[i] / p;
        std::uint32_t term = 1 + p;
        std::uint32_t power = p;
        while (r % p == 0) {
          r /= p;
          power *= p;
          term += power;
        }
        rest[i] = r;
        sigma[i] *= term;
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      std::uint32_t s = sigma[i];
      if (rest[i] > 1) s *= rest[i] + 1;
      const std::uint64_t n = lo + i;
      if (std::uint64_t{s} > 2 * n) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

bool is_happy(std::uint64_t n) {
  if (n == 0) return false;
  const auto& memo = happy_memo();
  if (n < 1000) return memo.happy[n];
  return memo.happy[digit_tables().squares(n)];
}

std::vector<std::uint32_t> happy_upto(std::uint64_t limit) {
  check_limit(limit);
  std::vector<std::uint32_t> out;
  const auto& memo = happy_memo();
  const auto& dt = digit_tables();
  // Split n = high * 10000 + low so the low-digit contribution is a lookup.
  for (std::uint64_t high = 0; high * 10000 <= limit; ++high) {
    const unsigned high_sq = high ? dt.squares(high) : 0;
    const std::uint64_t base = high * 10000;
    const std::uint64_t top = std::min<std::uint64_t>(9999, limit - base);
    for (std::uint64_t low = (high ? 0 : 1); low <= top; ++low) {
      const std::uint64_t n = base + low;
      const bool happy = n < 1000 ? memo.happy[n] : memo.happy[high_sq + dt.square_sum[low]];
      if (happy) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

std::vector<std::uint32_t> harshad_upto(std::uint64_t limit) {
  check_limit(limit);
  std::vector<std::uint32_t> out;
  const auto& dt = digit_tables();
  for (std::uint64_t high = 0; high * 10000 <= limit; ++high) {
    const unsigned high_ds = high ? dt.digits(high) : 0;
    const std::uint64_t base = high * 10000;
    const std::uint64_t top = std::min<std::uint64_t>(9999, limit - base);
    for (std::uint64_t low = (high ? 0 : 1); low <= top; ++low) {
      const std::uint64_t n = base + low;
      if (n % (high_ds + dt.digit_sum[low]) == 0) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

}  // namespace seqstate::sieves
