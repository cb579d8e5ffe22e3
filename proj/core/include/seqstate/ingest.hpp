#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqstate/sequences.hpp"

namespace seqstate {

/// One "index value" line of an OEIS b-file. The decimal text is kept so that
/// terms too large for 64 bits survive a round trip exactly.
struct BFileTerm {
  std::int64_t index;
  std::string text;
  std::optional<std::uint64_t> value;  // absent when negative or above 2^64 - 1

  friend bool operator==(const BFileTerm&, const BFileTerm&) = default;
};

struct BFile {
  std::string oeis_id;
  std::vector<BFileTerm> terms;

  friend bool operator==(const BFile&, const BFile&) = default;
};

/// Skips blank lines and '#' comments. Throws ParseError (with the 1-based
/// line number) on malformed lines and FormatError on non-increasing indices.
BFile parse_bfile(std::string_view text, std::string oeis_id = {});

BFile read_bfile(const std::filesystem::path& path, std::string oeis_id = {});

std::string serialize_bfile(const BFile& bfile);

/// A b-file listing `values` with indices starting at `offset`.
BFile make_bfile(std::string oeis_id, std::span<const std::uint64_t> values, std::int64_t offset = 0);

enum class ValidationStatus { Pass, Mismatch, Insufficient };

std::string_view to_string(ValidationStatus status) noexcept;

struct Divergence {
  std::int64_t index;                  // b-file index of the first disagreement
  std::string expected;                // b-file value
  std::optional<std::uint64_t> actual; // generator value; absent when the generator ran out
};

struct ValidationReport {
  std::string oeis_id;
  Family family = Family::Prime;
  std::size_t compared_terms = 0;
  ValidationStatus status = ValidationStatus::Insufficient;
  std::optional<Divergence> first_divergence;
};

inline constexpr std::size_t kRequiredValidationTerms = 50;

/// Compares the generator's in-range terms (repeats expanded in order) with
/// the b-file values <= 2^n - 1. Passes when they agree and at least
/// min(required_terms, generator term count) terms were compared.
ValidationReport validate(const SequenceSpec& spec, const BFile& bfile, unsigned n_qubits,
                          const GeneratorConfig& config = {},
                          std::size_t required_terms = kRequiredValidationTerms);

/// Same comparison against an already generated sample.
ValidationReport validate_sample(const SequenceSample& sample, Family family, const BFile& bfile,
                                 std::size_t required_terms = kRequiredValidationTerms);

inline constexpr std::string_view kCacheVersionTag = "seqstate-cache-v1";

/// 16-hex-digit FNV-1a digest of family, parameters, register size, measure
/// and version tag.
std::string cache_key(const SequenceSpec& spec, unsigned n_qubits, std::string_view measure,
                      std::string_view version_tag = kCacheVersionTag);

/// CSV result cache in a directory, one file per key. Writes go through a
/// temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const noexcept { return directory_; }

  /// Throws StorageError when the directory or file cannot be written.
  void store(const std::string& key, std::string_view payload) const;

  std::optional<std::string> load(const std::string& key) const;

 private:
  std::filesystem::path file_for(const std::string& key) const;

  std::filesystem::path directory_;
};

}  // namespace seqstate
