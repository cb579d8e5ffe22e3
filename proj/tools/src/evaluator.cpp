#include "evaluator.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "seqstate/error.hpp"
#include "seqstate/qstate.hpp"

namespace seqstate::cli {
namespace {

std::string encode(const std::vector<double>& values) {
  std::string out;
  char buf[40];
  for (const double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out += buf;
  }
  return out;
}

std::optional<std::vector<double>> decode(const std::string& payload, std::size_t expected) {
  std::vector<double> values;
  std::istringstream in(payload);
  std::string line;
  while (std::getline(in, line)) {
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (line.empty() || end != line.c_str() + line.size()) return std::nullopt;
    values.push_back(v);
  }
  if (values.size() != expected) return std::nullopt;
  return values;
}

}  // namespace

Evaluator::Evaluator(const Settings& settings) : settings_(settings) {
  if (settings_.cache_dir) cache_.emplace(*settings_.cache_dir);
}

EntanglementOptions Evaluator::options() const {
  EntanglementOptions o;
  o.threads = settings_.threads;
  return o;
}

SequenceSample Evaluator::sample(const SequenceSpec& spec, unsigned n) {
  // The S state is rebuilt per register; everything else truncates.
  if (spec.family == Family::SOscillating) return generate(spec, n, settings_.generator);
  auto& slot = samples_[spec.label()];
  if (slot.n_qubits() < n) slot = generate(spec, n, settings_.generator);
  return slot.n_qubits() == n ? slot : slot.restricted(n);
}

unsigned Evaluator::first_nonempty(const SequenceSpec& spec, unsigned lo, unsigned hi) {
  const auto s = sample(spec, hi);
  if (s.empty()) throw DomainError(spec.label() + " has no elements below 2^" + std::to_string(hi));
  const auto width = static_cast<unsigned>(std::bit_width(s.values().front()));
  if (spec.family == Family::SOscillating) return std::max(lo, 2u);
  return std::max({lo, width, 1u});
}

template <typename Compute>
std::vector<double> Evaluator::cached(const SequenceSpec& spec, unsigned n, const char* measure,
                                      std::size_t expected, Compute compute) {
  std::string key;
  if (cache_) {
    key = cache_key(spec, n, measure);
    if (const auto hit = cache_->load(key)) {
      if (auto values = decode(*hit, expected)) return *values;
    }
  }
  auto values = compute();
  if (cache_) cache_->store(key, encode(values));
  return values;
}

std::vector<double> Evaluator::profile(const SequenceSpec& spec, unsigned n) {
  return cached(spec, n, "profile", n, [&] {
    return single_qubit_profile(from_sample(sample(spec, n), n), options());
  });
}

double Evaluator::avg_th(const SequenceSpec& spec, unsigned n) {
  return cached(spec, n, "avg_th", 1, [&] {
    return std::vector<double>{e_avg_th(from_sample(sample(spec, n), n), options())};
  }).at(0);
}

SumAndAverage Evaluator::avg_all(const SequenceSpec& spec, unsigned n) {
  const auto v = cached(spec, n, "avg_all", 2, [&] {
    const auto r = e_sum_and_avg_all(from_sample(sample(spec, n), n), options());
    return std::vector<double>{r.e_sum, r.e_avg_all};
  });
  return {v[0], v[1]};
}

BipartitionSweep Evaluator::sweep(const SequenceSpec& spec, unsigned n) {
  return sweep_bipartitions(from_sample(sample(spec, n), n), options());
}

}  // namespace seqstate::cli
