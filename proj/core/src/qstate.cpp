#include "seqstate/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "seqstate/error.hpp"

namespace seqstate {
namespace {

void check_qubits(unsigned n) {
  if (n < 1 || n > kAbsoluteMaxQubits) {
    throw RangeError("state register of " + std::to_string(n) + " qubits outside [1, 32]");
  }
}

}  // namespace

SparseState::SparseState(unsigned n_qubits, std::vector<Term> terms) {
  check_qubits(n_qubits);
  n_qubits_ = n_qubits;
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  indices_.reserve(terms.size());
  amplitudes_.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.amplitude == Amplitude{}) continue;
    indices_.push_back(t.index);
    amplitudes_.push_back(t.amplitude);
  }
  finish(true);
}

SparseState SparseState::normalized(unsigned n_qubits, std::vector<Term> terms) {
  double norm = 0.0;
  for (const auto& t : terms) norm += std::norm(t.amplitude);
  if (!(norm > 0.0)) throw DomainError("cannot normalize a zero vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& t : terms) t.amplitude *= scale;
  return SparseState(n_qubits, std::move(terms));
}

SparseState SparseState::uniform(unsigned n_qubits, std::vector<BasisIndex> indices) {
  check_qubits(n_qubits);
  if (indices.empty()) throw DomainError("uniform state over an empty support");
  SparseState s;
  s.n_qubits_ = n_qubits;
  s.indices_ = std::move(indices);
  s.shared_ = Amplitude(1.0 / std::sqrt(static_cast<double>(s.indices_.size())), 0.0);
  s.finish(false);
  return s;
}

void SparseState::finish(bool check_norm) {
  const std::uint64_t top = (std::uint64_t{1} << n_qubits_) - 1;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] > top) {
      throw RangeError("basis index " + std::to_string(indices_[k]) + " does not fit " +
                       std::to_string(n_qubits_) + " qubits");
    }
    if (k && indices_[k] <= indices_[k - 1]) {
      throw DomainError("basis indices must be distinct and increasing");
    }
  }
  if (indices_.empty()) throw DomainError("state has no nonzero amplitude");
  if (amplitudes_.empty()) {
    real_ = shared_.imag() == 0.0;
  } else {
    real_ = std::all_of(amplitudes_.begin(), amplitudes_.end(),
                        [](const Amplitude& a) { return a.imag() == 0.0; });
  }
  if (check_norm) {
    const double deviation = std::abs(norm_squared() - 1.0);
    if (deviation > kNormTolerance) {
      std::ostringstream msg;
      msg << "state norm deviates from 1 by " << deviation;
      throw DomainError(msg.str());
    }
  }
}

Amplitude SparseState::amplitude_at(BasisIndex index) const noexcept {
  const auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) return {};
  return amplitude(static_cast<std::size_t>(it - indices_.begin()));
}

double SparseState::norm_squared() const noexcept {
  if (amplitudes_.empty()) return std::norm(shared_) * static_cast<double>(indices_.size());
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

SparseState from_sample(const SequenceSample& sample, unsigned n_qubits) {
  if (sample.empty()) throw DomainError("cannot build a state from an empty sample");
  check_qubits(n_qubits);
  const std::uint64_t top = (std::uint64_t{1} << n_qubits) - 1;
  if (sample.values().back() > top) {
    throw RangeError("sample value " + std::to_string(sample.values().back()) + " does not fit " +
                     std::to_string(n_qubits) + " qubits");
  }
  if (sample.all_unit_multiplicity()) {
    return SparseState::uniform(n_qubits,
                                std::vector<BasisIndex>(sample.values().begin(), sample.values().end()));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(sample.tau()));
  std::vector<SparseState::Term> terms;
  terms.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto e = sample.entry(i);
    terms.push_back({e.value, Amplitude(e.multiplicity * scale, 0.0)});
  }
  return SparseState(n_qubits, std::move(terms));
}

std::vector<Amplitude> to_dense(const SparseState& state, unsigned max_qubits) {
  if (state.n_qubits() > max_qubits) {
    throw CapacityError("dense conversion capped at " + std::to_string(max_qubits) + " qubits; state has " +
                        std::to_string(state.n_qubits()));
  }
  std::vector<Amplitude> dense(std::size_t{1} << state.n_qubits());
  for (std::size_t k = 0; k < state.size(); ++k) dense[state.index(k)] = state.amplitude(k);
  return dense;
}

double fidelity(const SparseState& a, const SparseState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DomainError("fidelity between " + std::to_string(a.n_qubits()) + "- and " +
                      std::to_string(b.n_qubits()) + "-qubit states");
  }
  Amplitude overlap{};
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.index(i) < b.index(j)) {
      ++i;
    } else if (b.index(j) < a.index(i)) {
      ++j;
    } else {
      overlap += std::conj(a.amplitude(i)) * b.amplitude(j);
      ++i;
      ++j;
    }
  }
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

void write_text(const SparseState& state, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (std::size_t k = 0; k < state.size(); ++k) {
    const auto a = state.amplitude(k);
    out << state.index(k) << ' ';
    if (a.imag() == 0.0) {
      out << a.real();
    } else {
      out << a.real() << std::showpos << a.imag() << std::noshowpos << 'j';
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace seqstate
