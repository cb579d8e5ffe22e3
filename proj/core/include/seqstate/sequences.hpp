#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqstate {

/// Computational-basis index. Registers are capped at 32 qubits.
using BasisIndex = std::uint32_t;

inline constexpr unsigned kAbsoluteMaxQubits = 32;

enum class Family {
  Prime,
  SPrime,
  Fibonacci,
  Padovan,
  Happy,
  Lucky,
  Abundant,
  Triangular,
  Lazy,
  Harshad,
  PA,
  SOscillating,
};

inline constexpr Family kAllFamilies[] = {
    Family::Prime,    Family::SPrime,     Family::Fibonacci, Family::Padovan,
    Family::Happy,    Family::Lucky,      Family::Abundant,  Family::Triangular,
    Family::Lazy,     Family::Harshad,    Family::PA,        Family::SOscillating,
};

/// Lower-case CLI name, e.g. "prime", "pa", "s-osc".
std::string_view family_name(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name);

/// OEIS identifier the generator is validated against; empty for families
/// with no OEIS entry (PA, SOscillating). Padovan reports A000931 even though
/// the generated variant is offset from it.
std::string_view oeis_id(Family family) noexcept;

struct SequenceSpec {
  Family family = Family::Prime;
  std::uint64_t r = 1;  // progression ratio, PA only

  /// Throws DomainError when r < 1 for PA.
  void validate() const;

  /// Stable label for file names and cache keys: "prime", "pa3", ...
  std::string label() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

/// Limits and tuning for the sieve-backed generators.
struct GeneratorConfig {
  unsigned max_qubits = 28;
  unsigned lucky_max_qubits = 24;
  std::size_t segment_size = std::size_t{1} << 22;
};

/// Distinct in-range values of a sequence, sorted, with multiplicities.
///
/// Multiplicities are stored only when some value repeats, which keeps the
/// dense families (PA, Abundant, Happy) at four bytes per element.
class SequenceSample {
 public:
  struct Entry {
    BasisIndex value;
    std::uint32_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SequenceSample() = default;

  /// `multiplicities` may be empty (all ones) or parallel to `values`.
  /// Throws RangeError for values outside [0, 2^n_qubits - 1] and
  /// DomainError for unsorted values or zero multiplicities.
  SequenceSample(unsigned n_qubits, std::vector<BasisIndex> values,
                 std::vector<std::uint32_t> multiplicities = {});

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  std::span<const BasisIndex> values() const noexcept { return values_; }
  std::uint32_t multiplicity(std::size_t i) const noexcept {
    return multiplicities_.empty() ? 1u : multiplicities_[i];
  }
  Entry entry(std::size_t i) const noexcept { return {values_[i], multiplicity(i)}; }
  std::vector<Entry> entries() const;

  bool all_unit_multiplicity() const noexcept { return multiplicities_.empty(); }
  bool contains(std::uint64_t value) const noexcept;

  /// Stored counting function: sum of squared multiplicities.
  std::uint64_t tau() const noexcept { return tau_; }

  /// Terms in conventional order with repeats expanded (0, 1, 1, 2, ...).
  std::vector<std::uint64_t> flattened() const;

  /// The entries with value <= 2^n - 1, relabelled as an n-qubit sample.
  SequenceSample restricted(unsigned n) const;

 private:
  unsigned n_qubits_ = 0;
  std::vector<BasisIndex> values_;
  std::vector<std::uint32_t> multiplicities_;
  std::uint64_t tau_ = 0;
};

struct OverlapReport {
  std::size_t common_count = 0;
  std::vector<BasisIndex> common_values;
  double fraction_of_smaller = 0.0;
  double fraction_of_larger = 0.0;
};

/// Every occurrence of the family's sequence with value <= 2^n_qubits - 1.
///
/// For SOscillating the n-qubit sample is build_s_sequence(n_qubits) placed in
/// an n-qubit register, so odd registers carry an idle top qubit.
SequenceSample generate(const SequenceSpec& spec, unsigned n_qubits,
                        const GeneratorConfig& config = {});

/// Recomputes sum of multiplicity^2. Throws DomainError for an empty sample.
std::uint64_t tau(const SequenceSample& sample);

/// Starts from {0, 3} and applies the alternating max-of-complement /
/// XOR-complement steps for k = 2 .. k_end - 1.
SequenceSample build_s_sequence(unsigned k_end, const GeneratorConfig& config = {});

/// Intersection over distinct values. Throws DomainError when the samples
/// live on different registers.
OverlapReport overlap(const SequenceSample& a, const SequenceSample& b);

}  // namespace seqstate
