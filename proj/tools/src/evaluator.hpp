#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqstate/entanglement.hpp"
#include "seqstate/ingest.hpp"
#include "seqstate/sequences.hpp"
#include "settings.hpp"

namespace seqstate::cli {

// Entanglement numbers for (spec, n), backed by the result cache when one
// is configured. Cached values are stored at full precision, so warm and
// cold runs print the same bytes.
class Evaluator {
 public:
  explicit Evaluator(const Settings& settings);

  const Settings& settings() const noexcept { return settings_; }

  // Generates once at the largest register asked for and truncates after.
  SequenceSample sample(const SequenceSpec& spec, unsigned n);

  // Smallest register in [lo, hi] where the sequence is nonempty.
  unsigned first_nonempty(const SequenceSpec& spec, unsigned lo, unsigned hi);

  std::vector<double> profile(const SequenceSpec& spec, unsigned n);
  double avg_th(const SequenceSpec& spec, unsigned n);
  SumAndAverage avg_all(const SequenceSpec& spec, unsigned n);
  BipartitionSweep sweep(const SequenceSpec& spec, unsigned n);

 private:
  EntanglementOptions options() const;
  template <typename Compute>
  std::vector<double> cached(const SequenceSpec& spec, unsigned n, const char* measure, std::size_t expected,
                             Compute compute);

  Settings settings_;
  std::optional<ResultCache> cache_;
  std::map<std::string, SequenceSample> samples_;
};

}  // namespace seqstate::cli
