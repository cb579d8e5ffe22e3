#include "seqstate/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "seqstate/format.hpp"
#include "seqstate/error.hpp"

namespace seqstate {
namespace {

double register_size(unsigned n) { return std::ldexp(1.0, static_cast<int>(n)); }

double iterations_for_ratio(double ratio) {
  return std::numbers::pi / (4.0 * std::asin(std::sqrt(ratio))) - 0.5;
}

}  // namespace

GroverPlan plan_for_count(std::uint64_t marked_count, unsigned n_qubits) {
  if (n_qubits < 1 || n_qubits > 63) throw RangeError("grover plan needs 1..63 qubits");
  const std::uint64_t total = std::uint64_t{1} << n_qubits;
  if (marked_count < 1 || marked_count > total) {
    throw DomainError("marked count " + std::to_string(marked_count) + " outside [1, 2^" +
                      std::to_string(n_qubits) + "]");
  }
  GroverPlan p;
  p.n_qubits = n_qubits;
  p.marked_count = marked_count;
  p.tau = marked_count;
  const double ratio = static_cast<double>(marked_count) / register_size(n_qubits);
  p.theta = std::asin(std::sqrt(ratio));
  p.g_real = iterations_for_ratio(ratio);
  p.g_int = static_cast<std::uint64_t>(std::floor(std::max(p.g_real, 0.0) + 0.5));
  p.predicted_success = success_probability(marked_count, n_qubits, p.g_int);
  return p;
}

GroverPlan plan(const SequenceSpec& spec, unsigned n_qubits, const GeneratorConfig& config) {
  const auto sample = generate(spec, n_qubits, config);
  if (sample.empty()) {
    throw DomainError(std::string(family_name(spec.family)) + " has no element below 2^" + std::to_string(n_qubits));
  }
  auto p = plan_for_count(sample.size(), n_qubits);
  p.tau = sample.tau();
  return p;
}

double success_probability(std::uint64_t marked_count, unsigned n_qubits, std::uint64_t iterations) {
  const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / register_size(n_qubits)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

GroverSimulation simulate_marked(std::span<const BasisIndex> marked, unsigned n_qubits, std::uint64_t iterations) {
  if (n_qubits < 1) throw RangeError("grover simulation needs at least one qubit");
  if (n_qubits > kGroverSimulationMaxQubits) {
    throw CapacityError("dense grover simulation capped at " + std::to_string(kGroverSimulationMaxQubits) +
                        " qubits; requested " + std::to_string(n_qubits));
  }
  const std::size_t total = std::size_t{1} << n_qubits;
  std::vector<std::uint8_t> is_marked(total, 0);
  for (const auto m : marked) {
    if (m >= total) throw RangeError("marked index " + std::to_string(m) + " outside the register");
    is_marked[m] = 1;
  }

  std::vector<double> psi(total, 1.0 / std::sqrt(static_cast<double>(total)));
  for (std::uint64_t it = 0; it < iterations; ++it) {
    double sum = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
      if (is_marked[i]) psi[i] = -psi[i];
      sum += psi[i];
    }
    const double twice_mean = 2.0 * sum / static_cast<double>(total);
    for (auto& a : psi) a = twice_mean - a;
  }

  double hit = 0.0, target_overlap = 0.0;
  std::size_t marked_count = 0;
  std::vector<SparseState::Term> terms;
  for (std::size_t i = 0; i < total; ++i) {
    if (is_marked[i]) {
      hit += psi[i] * psi[i];
      target_overlap += psi[i];
      ++marked_count;
    }
    if (psi[i] != 0.0) terms.push_back({static_cast<BasisIndex>(i), Amplitude(psi[i], 0.0)});
  }
  const double fid = marked_count ? target_overlap * target_overlap / static_cast<double>(marked_count) : 0.0;
  return {SparseState(n_qubits, std::move(terms)), hit, std::clamp(fid, 0.0, 1.0)};
}

GroverSimulation simulate(const SequenceSpec& spec, unsigned n_qubits, std::uint64_t iterations,
                          const GeneratorConfig& config) {
  if (n_qubits > kGroverSimulationMaxQubits) {
    throw CapacityError("dense grover simulation capped at " + std::to_string(kGroverSimulationMaxQubits) +
                        " qubits; requested " + std::to_string(n_qubits));
  }
  const auto sample = generate(spec, n_qubits, config);
  return simulate_marked(sample.values(), n_qubits, iterations);
}

std::vector<GrowthRow> growth_profile(const SequenceSpec& spec, unsigned n_min, unsigned n_max,
                                      const GeneratorConfig& config) {
  if (n_min < 1 || n_min > n_max) throw DomainError("invalid qubit range for growth profile");
  std::vector<GrowthRow> rows;
  std::optional<SequenceSample> full;
  if (spec.family != Family::SOscillating) full = generate(spec, n_max, config);

  for (unsigned n = n_min; n <= n_max; ++n) {
    const SequenceSample sample = full ? full->restricted(n) : generate(spec, n, config);
    if (sample.empty()) {
      throw DomainError(std::string(family_name(spec.family)) + " has no element below 2^" + std::to_string(n));
    }
    const auto p = plan_for_count(sample.size(), n);
    GrowthRow row{n, p.marked_count, static_cast<double>(p.marked_count) / register_size(n), p.g_real, p.g_int,
                  sample.tau(), std::nullopt};
    if (static_cast<double>(row.tau) <= register_size(n)) {
      row.g_real_tau = iterations_for_ratio(static_cast<double>(row.tau) / register_size(n));
    }
    rows.push_back(row);
  }
  return rows;
}

void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out) {
  out << "n,M,density,g_real,g_int,tau,g_real_tau\n";
  for (const auto& r : rows) {
    out << r.n_qubits << ',' << r.marked_count << ',' << detail::format_real(r.density) << ','
        << detail::format_real(r.g_real) << ',' << r.g_int << ',' << r.tau << ','
        << (r.g_real_tau ? detail::format_real(*r.g_real_tau) : std::string()) << '\n';
  }
}

}  // namespace seqstate
