#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "seqstate/qstate.hpp"
#include "seqstate/sequences.hpp"

namespace seqstate {

inline constexpr unsigned kGroverSimulationMaxQubits = 16;

/// Optimal-iteration plan for amplifying M marked items out of 2^n.
struct GroverPlan {
  unsigned n_qubits = 0;
  std::uint64_t marked_count = 0;  // distinct in-range elements
  std::uint64_t tau = 0;           // counting function, equal to M without repeats
  double theta = 0.0;              // arcsin(sqrt(M / 2^n))
  double g_real = 0.0;             // pi / (4 theta) - 1/2
  std::uint64_t g_int = 0;         // round-half-up of max(g_real, 0)
  double predicted_success = 0.0;  // sin^2((2 g_int + 1) theta)
};

/// Plan from raw counts. Throws DomainError unless 1 <= M <= 2^n.
GroverPlan plan_for_count(std::uint64_t marked_count, unsigned n_qubits);

/// Plan for the distinct in-range elements of a sequence. Throws DomainError
/// when the sequence has no element below 2^n.
GroverPlan plan(const SequenceSpec& spec, unsigned n_qubits, const GeneratorConfig& config = {});

/// sin^2((2k + 1) arcsin(sqrt(M / 2^n))).
double success_probability(std::uint64_t marked_count, unsigned n_qubits, std::uint64_t iterations);

struct GroverSimulation {
  SparseState final_state;
  double hit_probability;
  double fidelity_to_target;
};

/// Dense Grover walk from the uniform superposition: phase oracle on the
/// marked indices, then inversion about the mean, `iterations` times.
/// Throws CapacityError above 16 qubits.
GroverSimulation simulate_marked(std::span<const BasisIndex> marked, unsigned n_qubits, std::uint64_t iterations);

GroverSimulation simulate(const SequenceSpec& spec, unsigned n_qubits, std::uint64_t iterations,
                          const GeneratorConfig& config = {});

struct GrowthRow {
  unsigned n_qubits;
  std::uint64_t marked_count;
  double density;  // M / 2^n
  double g_real;
  std::uint64_t g_int;
  std::uint64_t tau;
  std::optional<double> g_real_tau;  // iteration count with tau in place of M; absent when tau > 2^n
};

/// One row per register size in [n_min, n_max]. The sequence is generated
/// once at n_max and truncated, except for families where the n-qubit sample
/// is not a truncation (SOscillating).
std::vector<GrowthRow> growth_profile(const SequenceSpec& spec, unsigned n_min, unsigned n_max,
                                      const GeneratorConfig& config = {});

/// Header "n,M,density,g_real,g_int,tau,g_real_tau".
void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out);

}  // namespace seqstate
