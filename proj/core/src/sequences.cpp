#include "seqstate/sequences.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <utility>

#include "seqstate/error.hpp"
#include "seqstate/sieves.hpp"

namespace seqstate {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::string_view oeis;
};

constexpr std::array<FamilyInfo, 12> kFamilyInfo{{
    {Family::Prime, "prime", "A000040"},
    {Family::SPrime, "sprime", "A005097"},
    {Family::Fibonacci, "fibonacci", "A000045"},
    {Family::Padovan, "padovan", "A000931"},
    {Family::Happy, "happy", "A007770"},
    {Family::Lucky, "lucky", "A000959"},
    {Family::Abundant, "abundant", "A005101"},
    {Family::Triangular, "triangular", "A000217"},
    {Family::Lazy, "lazy", "A000124"},
    {Family::Harshad, "harshad", "A005349"},
    {Family::PA, "pa", ""},
    {Family::SOscillating, "s-osc", ""},
}};

const FamilyInfo& info(Family family) {
  for (const auto& fi : kFamilyInfo) {
    if (fi.family == family) return fi;
  }
  return kFamilyInfo[0];
}

std::uint64_t max_value(unsigned n) { return (std::uint64_t{1} << n) - 1; }

// Collapses a nondecreasing term list into (value, multiplicity) form.
SequenceSample from_terms(unsigned n, const std::vector<std::uint64_t>& terms) {
  std::vector<BasisIndex> values;
  std::vector<std::uint32_t> mult;
  bool repeated = false;
  for (const auto t : terms) {
    if (!values.empty() && values.back() == t) {
      ++mult.back();
      repeated = true;
    } else {
      values.push_back(static_cast<BasisIndex>(t));
      mult.push_back(1);
    }
  }
  if (!repeated) mult.clear();
  return SequenceSample(n, std::move(values), std::move(mult));
}

// Terms of a nondecreasing recurrence until the first one out of range.
template <typename Next>
std::vector<std::uint64_t> recurrence_terms(std::vector<std::uint64_t> seed, std::uint64_t limit,
                                            Next next) {
  std::vector<std::uint64_t> terms;
  for (const auto s : seed) {
    if (s > limit) return terms;
    terms.push_back(s);
  }
  for (;;) {
    const std::uint64_t t = next(terms);
    if (t > limit) return terms;
    terms.push_back(t);
  }
}

std::vector<BasisIndex> quadratic_terms(std::uint64_t limit, std::uint64_t offset) {
  std::vector<BasisIndex> out;
  for (std::uint64_t m = 0;; ++m) {
    const std::uint64_t v = m * (m + 1) / 2 + offset;
    if (v > limit) break;
    out.push_back(static_cast<BasisIndex>(v));
  }
  return out;
}

void check_register(unsigned n, const GeneratorConfig& config) {
  const unsigned cap = std::min(config.max_qubits, kAbsoluteMaxQubits);
  if (n < 1 || n > cap) {
    throw RangeError("register of " + std::to_string(n) + " qubits outside supported range [1, " +
                     std::to_string(cap) + "]");
  }
}

}  // namespace

std::string_view family_name(Family family) noexcept { return info(family).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& fi : kFamilyInfo) {
    if (fi.name == name) return fi.family;
  }
  if (name == "hashard") return Family::Harshad;
  if (name == "s" || name == "soscillating") return Family::SOscillating;
  return std::nullopt;
}

std::string_view oeis_id(Family family) noexcept { return info(family).oeis; }

void SequenceSpec::validate() const {
  if (family == Family::PA && r < 1) throw DomainError("PA ratio r must be >= 1");
}

std::string SequenceSpec::label() const {
  std::string out(family_name(family));
  if (family == Family::PA) out += std::to_string(r);
  return out;
}

SequenceSample::SequenceSample(unsigned n_qubits, std::vector<BasisIndex> values,
                               std::vector<std::uint32_t> multiplicities)
    : n_qubits_(n_qubits), values_(std::move(values)), multiplicities_(std::move(multiplicities)) {
  if (n_qubits_ < 1 || n_qubits_ > kAbsoluteMaxQubits) {
    throw RangeError("sample register of " + std::to_string(n_qubits_) + " qubits");
  }
  if (!multiplicities_.empty() && multiplicities_.size() != values_.size()) {
    throw DomainError("multiplicity list does not match value list");
  }
  const std::uint64_t top = max_value(n_qubits_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > top) {
      throw RangeError("value " + std::to_string(values_[i]) + " does not fit " +
                       std::to_string(n_qubits_) + " qubits");
    }
    if (i && values_[i] <= values_[i - 1]) throw DomainError("sample values must be strictly increasing");
  }
  if (std::all_of(multiplicities_.begin(), multiplicities_.end(), [](auto m) { return m == 1; })) {
    multiplicities_.clear();
  }
  if (multiplicities_.empty()) {
    tau_ = values_.size();
  } else {
    for (const auto m : multiplicities_) {
      if (m == 0) throw DomainError("multiplicities must be positive");
      tau_ += std::uint64_t{m} * m;
    }
  }
}

std::vector<SequenceSample::Entry> SequenceSample::entries() const {
  std::vector<Entry> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(entry(i));
  return out;
}

bool SequenceSample::contains(std::uint64_t value) const noexcept {
  return value <= max_value(n_qubits_) &&
         std::binary_search(values_.begin(), values_.end(), static_cast<BasisIndex>(value));
}

std::vector<std::uint64_t> SequenceSample::flattened() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.insert(out.end(), multiplicity(i), values_[i]);
  }
  return out;
}

SequenceSample SequenceSample::restricted(unsigned n) const {
  if (n < 1 || n > kAbsoluteMaxQubits) throw RangeError("restriction to " + std::to_string(n) + " qubits");
  const auto end = std::upper_bound(values_.begin(), values_.end(), max_value(n));
  const auto count = static_cast<std::size_t>(end - values_.begin());
  std::vector<BasisIndex> values(values_.begin(), end);
  std::vector<std::uint32_t> mult;
  if (!multiplicities_.empty()) mult.assign(multiplicities_.begin(), multiplicities_.begin() + count);
  return SequenceSample(n, std::move(values), std::move(mult));
}

SequenceSample generate(const SequenceSpec& spec, unsigned n_qubits, const GeneratorConfig& config) {
  spec.validate();
  check_register(n_qubits, config);
  const std::uint64_t limit = max_value(n_qubits);

  auto wrap = [n_qubits](std::vector<std::uint32_t> v) {
    return SequenceSample(n_qubits, std::move(v));
  };

  switch (spec.family) {
    case Family::Prime:
      return wrap(sieves::primes_upto(limit));

    case Family::SPrime: {
      // (p - 1) / 2 <= limit  <=>  p <= 2 * limit + 1
      auto primes = sieves::primes_upto(2 * limit + 1);
      std::vector<BasisIndex> values;
      values.reserve(primes.size());
      for (const auto p : primes) {
        if (p != 2) values.push_back((p - 1) / 2);
      }
      primes = {};
      return wrap(std::move(values));
    }

    case Family::Fibonacci:
      return from_terms(n_qubits, recurrence_terms({0, 1}, limit, [](const auto& t) {
                          return t[t.size() - 1] + t[t.size() - 2];
                        }));

    case Family::Padovan:
      return from_terms(n_qubits, recurrence_terms({1, 1, 1}, limit, [](const auto& t) {
                          return t[t.size() - 2] + t[t.size() - 3];
                        }));

    case Family::Happy:
      return wrap(sieves::happy_upto(limit));

    case Family::Lucky:
      if (n_qubits > config.lucky_max_qubits) {
        throw CapacityError("lucky sieve capped at " + std::to_string(config.lucky_max_qubits) +
                            " qubits (lucky_max_qubits); requested " + std::to_string(n_qubits));
      }
      return wrap(sieves::lucky_upto(limit));

    case Family::Abundant:
      return wrap(sieves::abundant_upto(limit, config.segment_size));

    case Family::Triangular:
      return wrap(quadratic_terms(limit, 0));

    case Family::Lazy:
      return wrap(quadratic_terms(limit, 1));

    case Family::Harshad:
      return wrap(sieves::harshad_upto(limit));

    case Family::PA: {
      std::vector<BasisIndex> values;
      values.reserve(static_cast<std::size_t>(limit / spec.r + 1));
      for (std::uint64_t v = 0; v <= limit; v += spec.r) values.push_back(static_cast<BasisIndex>(v));
      return wrap(std::move(values));
    }

    case Family::SOscillating: {
      if (n_qubits < 2) throw RangeError("the S sequence needs at least 2 qubits");
      auto s = build_s_sequence(n_qubits, config);
      return SequenceSample(n_qubits, std::vector<BasisIndex>(s.values().begin(), s.values().end()));
    }
  }
  throw DomainError("unknown sequence family");
}

std::uint64_t tau(const SequenceSample& sample) {
  if (sample.empty()) throw DomainError("counting function of an empty sample is undefined");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const std::uint64_t m = sample.multiplicity(i);
    total += m * m;
  }
  return total;
}

SequenceSample build_s_sequence(unsigned k_end, const GeneratorConfig& config) {
  if (k_end < 2) throw DomainError("build_s_sequence needs k_end >= 2");
  check_register(k_end, config);

  std::vector<BasisIndex> s{0, 3};
  for (unsigned k = 2; k < k_end; ++k) {
    if (k % 2 == 0) {
      // Largest of 1 .. 2^k - 1 not yet in S.
      for (std::uint64_t v = max_value(k); v >= 1; --v) {
        if (!std::binary_search(s.begin(), s.end(), static_cast<BasisIndex>(v))) {
          s.insert(std::upper_bound(s.begin(), s.end(), static_cast<BasisIndex>(v)),
                   static_cast<BasisIndex>(v));
          break;
        }
      }
    } else {
      const auto mask = static_cast<BasisIndex>(max_value(k + 1));
      const std::size_t count = s.size();
      for (std::size_t i = 0; i < count; ++i) s.push_back(s[i] ^ mask);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }
  const unsigned width = std::max(1u, static_cast<unsigned>(std::bit_width(s.back())));
  return SequenceSample(width, std::move(s));
}

OverlapReport overlap(const SequenceSample& a, const SequenceSample& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DomainError("overlap of samples on " + std::to_string(a.n_qubits()) + " and " +
                      std::to_string(b.n_qubits()) + " qubits");
  }
  OverlapReport report;
  std::set_intersection(a.values().begin(), a.values().end(), b.values().begin(), b.values().end(),
                        std::back_inserter(report.common_values));
  report.common_count = report.common_values.size();
  const auto smaller = std::min(a.size(), b.size());
  const auto larger = std::max(a.size(), b.size());
  if (smaller) report.fraction_of_smaller = double(report.common_count) / double(smaller);
  if (larger) report.fraction_of_larger = double(report.common_count) / double(larger);
  return report;
}

}  // namespace seqstate
