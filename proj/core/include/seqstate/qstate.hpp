#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "seqstate/sequences.hpp"

namespace seqstate {

using Amplitude = std::complex<double>;

inline constexpr unsigned kDenseMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-12;

/// Pure n-qubit state stored as sorted (basis index, amplitude) pairs.
///
/// Qubit 1 is the most significant bit of the basis index and qubit n the
/// least significant. Equal-weight states keep one shared amplitude instead of
/// a per-entry vector; every accessor hides the difference.
class SparseState {
 public:
  struct Term {
    BasisIndex index;
    Amplitude amplitude;
  };

  /// Terms may arrive in any order; zero amplitudes are dropped. Throws
  /// DomainError on duplicate indices or when the norm deviates from 1 by
  /// more than kNormTolerance, RangeError on out-of-range indices.
  SparseState(unsigned n_qubits, std::vector<Term> terms);

  /// Same as the constructor but rescales to unit norm first.
  static SparseState normalized(unsigned n_qubits, std::vector<Term> terms);

  /// Equal superposition of the given strictly increasing indices.
  static SparseState uniform(unsigned n_qubits, std::vector<BasisIndex> indices);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::span<const BasisIndex> indices() const noexcept { return indices_; }
  BasisIndex index(std::size_t k) const noexcept { return indices_[k]; }
  Amplitude amplitude(std::size_t k) const noexcept {
    return amplitudes_.empty() ? shared_ : amplitudes_[k];
  }

  /// Amplitude of a basis state; zero when absent.
  Amplitude amplitude_at(BasisIndex index) const noexcept;

  bool is_uniform() const noexcept { return amplitudes_.empty(); }
  bool is_real() const noexcept { return real_; }
  double norm_squared() const noexcept;

 private:
  SparseState() = default;
  void finish(bool check_norm);

  unsigned n_qubits_ = 0;
  std::vector<BasisIndex> indices_;
  std::vector<Amplitude> amplitudes_;  // empty when uniform
  Amplitude shared_{};
  bool real_ = true;
};

/// Normalized sequence state: amplitude multiplicity / sqrt(tau) on each value.
SparseState from_sample(const SequenceSample& sample, unsigned n_qubits);

/// Throws CapacityError above `max_qubits` (default 20).
std::vector<Amplitude> to_dense(const SparseState& state, unsigned max_qubits = kDenseMaxQubits);

/// |<a|b>|^2. Throws DomainError when registers differ.
double fidelity(const SparseState& a, const SparseState& b);

/// One "index amplitude" line per stored term. Real amplitudes are written as a
/// single number, complex ones as "re+imj".
void write_text(const SparseState& state, std::ostream& out);

}  // namespace seqstate
