#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "seqstate/qstate.hpp"

namespace seqstate {

inline constexpr double kEigenvalueClip = 1e-12;
inline constexpr double kDensityTolerance = 1e-10;

/// Split of an n-qubit register into kept and traced qubits.
///
/// Bit (q - 1) of keep_mask is set when qubit q is kept. The canonical
/// representative of each unordered split keeps qubit 1.
class Bipartition {
 public:
  /// Throws DomainError unless 1 <= popcount(keep_mask) <= n - 1.
  Bipartition(unsigned n_qubits, std::uint64_t keep_mask);

  /// Keeps exactly one qubit (1-based).
  static Bipartition single(unsigned n_qubits, unsigned qubit);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t keep_mask() const noexcept { return keep_mask_; }
  std::uint64_t traced_mask() const noexcept;
  unsigned kept_count() const noexcept;
  bool is_canonical() const noexcept { return (keep_mask_ & 1u) != 0; }
  Bipartition complement() const { return Bipartition(n_qubits_, traced_mask()); }
  Bipartition canonical() const { return is_canonical() ? *this : complement(); }

  /// keep_mask translated to basis-index bits (qubit q <-> bit n - q).
  std::uint64_t kept_basis_bits() const noexcept;

 private:
  unsigned n_qubits_;
  std::uint64_t keep_mask_;
};

/// All 2^(n-1) - 1 canonical splits in increasing mask order.
std::vector<Bipartition> canonical_bipartitions(unsigned n_qubits);

/// Reduced density matrix on a set of qubits. Row bit order follows
/// `qubits()`: the first listed qubit is the most significant row bit.
class DensityMatrix {
 public:
  DensityMatrix(Eigen::MatrixXcd entries, std::vector<unsigned> qubits);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
  const std::vector<unsigned>& qubits() const noexcept { return qubits_; }
  Amplitude operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  double hermiticity_deviation() const;
  double trace_deviation() const;

 private:
  Eigen::MatrixXcd entries_;
  std::vector<unsigned> qubits_;
};

struct EntanglementOptions {
  unsigned threads = 1;
  unsigned max_sweep_qubits = 16;
  std::size_t max_reduced_dim = std::size_t{1} << 12;
};

/// Reduced state of the smaller side of `part` (the kept side on ties),
/// accumulated group by group over the traced-side bit patterns.
DensityMatrix reduced_density(const SparseState& state, const Bipartition& part,
                              const EntanglementOptions& options = {});

/// Base-2 von Neumann entropy. Eigenvalues at or below 1e-12 contribute 0.
/// Throws NumericError when rho is not Hermitian, unit-trace and PSD within
/// 1e-10.
double entropy(const DensityMatrix& rho);

/// Entropy of one split. Small registers go through a compacted amplitude
/// matrix (only nonzero rows and columns), which has the same nonzero spectrum
/// as the reduced state on either side.
double bipartition_entropy(const SparseState& state, const Bipartition& part,
                           const EntanglementOptions& options = {});

/// Entropy of each single qubit against the rest, qubit 1 first.
std::vector<double> single_qubit_profile(const SparseState& state, const EntanglementOptions& options = {});

/// Mean of single_qubit_profile.
double e_avg_th(const SparseState& state, const EntanglementOptions& options = {});

struct BipartitionEntropy {
  std::uint64_t mask;
  unsigned kept_size;
  double entropy;
};

struct BipartitionSweep {
  std::vector<BipartitionEntropy> rows;  // canonical mask order
  double e_sum = 0.0;
  double e_avg_all = 0.0;
};

/// Entropy of every canonical split. Throws CapacityError above
/// options.max_sweep_qubits and DomainError below 2 qubits. The sum is
/// reduced in mask order whatever the thread count.
BipartitionSweep sweep_bipartitions(const SparseState& state, const EntanglementOptions& options = {});

struct SumAndAverage {
  double e_sum;
  double e_avg_all;
};
SumAndAverage e_sum_and_avg_all(const SparseState& state, const EntanglementOptions& options = {});

/// Average over canonical splits of the largest attainable entropy
/// min(a, n - a).
double max_avg_all(unsigned n_qubits);

struct EntanglementReport {
  unsigned n_qubits = 0;
  std::vector<double> per_qubit;
  double e_avg_th = 0.0;
  std::optional<double> e_sum;
  std::optional<double> e_avg_all;
  double max_avg_all = 0.0;
};

EntanglementReport analyze(const SparseState& state, bool all_bipartitions,
                           const EntanglementOptions& options = {});

std::string to_json(const EntanglementReport& report);

/// Header "mask,kept_size,entropy", one row per split.
void write_bipartitions_csv(const BipartitionSweep& sweep, std::ostream& out);

}  // namespace seqstate
