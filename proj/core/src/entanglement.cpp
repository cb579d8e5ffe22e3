#include "seqstate/entanglement.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "seqstate/format.hpp"
#include "seqstate/error.hpp"

namespace seqstate {
namespace {

// Gathers the bits of `mask` out of a basis index, keeping their order.
class BitGather {
 public:
  explicit BitGather(std::uint64_t mask) {
    unsigned shift = 0;
    for (unsigned byte = 0; byte < 4; ++byte) {
      const auto m = static_cast<unsigned>((mask >> (8 * byte)) & 0xFF);
      for (unsigned x = 0; x < 256; ++x) {
        std::uint32_t out = 0;
        unsigned pos = 0;
        for (unsigned b = 0; b < 8; ++b) {
          if (!(m >> b & 1u)) continue;
          out |= ((x >> b) & 1u) << pos;
          ++pos;
        }
        table_[byte][x] = out << shift;
      }
      shift += static_cast<unsigned>(std::popcount(m));
    }
  }

  std::uint32_t operator()(BasisIndex v) const noexcept {
    return table_[0][v & 0xFF] | table_[1][(v >> 8) & 0xFF] | table_[2][(v >> 16) & 0xFF] |
           table_[3][v >> 24];
  }

 private:
  std::array<std::array<std::uint32_t, 256>, 4> table_{};
};

std::uint64_t full_mask(unsigned n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

// Mask over qubit positions -> mask over basis bits.
std::uint64_t to_basis_bits(unsigned n, std::uint64_t qubit_mask) {
  std::uint64_t out = 0;
  for (unsigned q = 1; q <= n; ++q) {
    if (qubit_mask >> (q - 1) & 1u) out |= 1ull << (n - q);
  }
  return out;
}

std::vector<unsigned> qubits_of(unsigned n, std::uint64_t qubit_mask) {
  std::vector<unsigned> out;
  for (unsigned q = 1; q <= n; ++q) {
    if (qubit_mask >> (q - 1) & 1u) out.push_back(q);
  }
  return out;
}

// The side whose reduced state gets formed: fewer qubits, kept side on ties.
std::uint64_t smaller_side(const Bipartition& part) {
  const unsigned kept = part.kept_count();
  return kept <= part.n_qubits() - kept ? part.keep_mask() : part.traced_mask();
}

double entropy_from_spectrum(const Eigen::VectorXd& eigenvalues) {
  double trace = 0.0;
  double lowest = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    trace += eigenvalues[i];
    lowest = std::min(lowest, eigenvalues[i]);
  }
  const double deviation = std::max(std::abs(trace - 1.0), -lowest);
  if (deviation > kDensityTolerance) {
    std::ostringstream msg;
    msg << "density matrix invariant violated (trace " << trace << ", lowest eigenvalue " << lowest
        << ")";
    throw NumericError(msg.str(), deviation);
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues[i];
    if (lambda > kEigenvalueClip) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

template <typename Matrix>
Eigen::VectorXd hermitian_spectrum(const Matrix& m) {
  if (m.rows() == 1) return Eigen::VectorXd::Constant(1, std::real(m(0, 0)));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) return solver.eigenvalues();
  // The tridiagonal QR in Eigen 3.4.0 occasionally stalls on highly
  // degenerate Gram matrices. For a PSD matrix the singular values are the
  // eigenvalues, and the one-sided Jacobi SVD always converges.
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

// Entropy from the compacted amplitude matrix A (rows: smaller side pattern,
// columns: other side pattern), keeping only nonzero rows and columns.
template <typename Scalar>
double compact_entropy(const SparseState& state, std::uint64_t row_bits, std::uint64_t col_bits) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const BitGather row_of(row_bits);
  const BitGather col_of(col_bits);
  const std::size_t row_dim = std::size_t{1} << std::popcount(row_bits);
  const std::size_t col_dim = std::size_t{1} << std::popcount(col_bits);

  std::vector<std::int32_t> row_id(row_dim, -1);
  std::vector<std::int32_t> col_id(col_dim, -1);
  std::int32_t rows = 0, cols = 0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    const BasisIndex v = state.index(k);
    auto& r = row_id[row_of(v)];
    auto& c = col_id[col_of(v)];
    if (r < 0) r = rows++;
    if (c < 0) c = cols++;
  }
  Matrix a = Matrix::Zero(rows, cols);
  for (std::size_t k = 0; k < state.size(); ++k) {
    const BasisIndex v = state.index(k);
    if constexpr (std::is_same_v<Scalar, double>) {
      a(row_id[row_of(v)], col_id[col_of(v)]) = state.amplitude(k).real();
    } else {
      a(row_id[row_of(v)], col_id[col_of(v)]) = state.amplitude(k);
    }
  }
  Matrix gram = rows <= cols ? Matrix(a * a.adjoint()) : Matrix(a.adjoint() * a);
  return entropy_from_spectrum(hermitian_spectrum(gram));
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Neumaier-compensated sum in index order.
double ordered_sum(const std::vector<double>& values) {
  double sum = 0.0, carry = 0.0;
  for (const double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

// Entropy of the 2x2 block [[a, b], [conj b, d]] with a + d = 1.
double qubit_entropy(double a, double d, Amplitude b) {
  const double trace = a + d;
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  const double high = 0.5 * trace + half_gap;
  // det / high avoids cancellation in the small eigenvalue.
  const double low = high > 0.0 ? (a * d - std::norm(b)) / high : 0.0;
  Eigen::VectorXd spectrum(2);
  spectrum << high, low;
  return entropy_from_spectrum(spectrum);
}

double qubit_entropy_for_bit(const SparseState& state, BasisIndex bit) {
  const std::size_t size = state.size();
  const auto idx = state.indices();
  if (state.is_uniform()) {
    // Counts only: every stored amplitude has weight 1/size.
    std::size_t ones = 0, pairs = 0, j = 0;
    for (std::size_t i = 0; i < size; ++i) {
      const BasisIndex v = idx[i];
      if (v & bit) {
        ++ones;
        continue;
      }
      const BasisIndex partner = v | bit;
      while (j < size && idx[j] < partner) ++j;
      if (j < size && idx[j] == partner) ++pairs;
    }
    const double w = std::norm(state.amplitude(0));
    const Amplitude shared = state.amplitude(0);
    const double zeros_weight = static_cast<double>(size - ones) * w;
    const double ones_weight = static_cast<double>(ones) * w;
    return qubit_entropy(zeros_weight, ones_weight, static_cast<double>(pairs) * shared * std::conj(shared));
  }
  double a = 0.0, d = 0.0;
  Amplitude b{};
  std::size_t j = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const BasisIndex v = idx[i];
    const Amplitude amp = state.amplitude(i);
    if (v & bit) {
      d += std::norm(amp);
      continue;
    }
    a += std::norm(amp);
    const BasisIndex partner = v | bit;
    while (j < size && idx[j] < partner) ++j;
    if (j < size && idx[j] == partner) b += amp * std::conj(state.amplitude(j));
  }
  return qubit_entropy(a, d, b);
}

}  // namespace

Bipartition::Bipartition(unsigned n_qubits, std::uint64_t keep_mask)
    : n_qubits_(n_qubits), keep_mask_(keep_mask) {
  if (n_qubits < 2 || n_qubits > kAbsoluteMaxQubits) {
    throw DomainError("bipartitions need 2..32 qubits, got " + std::to_string(n_qubits));
  }
  if (keep_mask & ~full_mask(n_qubits)) throw DomainError("keep mask names qubits outside the register");
  const int kept = std::popcount(keep_mask);
  if (kept < 1 || kept > static_cast<int>(n_qubits) - 1) {
    throw DomainError("a bipartition must keep between 1 and n - 1 qubits");
  }
}

Bipartition Bipartition::single(unsigned n_qubits, unsigned qubit) {
  if (qubit < 1 || qubit > n_qubits) throw DomainError("qubit " + std::to_string(qubit) + " out of range");
  return Bipartition(n_qubits, 1ull << (qubit - 1));
}

std::uint64_t Bipartition::traced_mask() const noexcept { return full_mask(n_qubits_) & ~keep_mask_; }

unsigned Bipartition::kept_count() const noexcept { return static_cast<unsigned>(std::popcount(keep_mask_)); }

std::uint64_t Bipartition::kept_basis_bits() const noexcept { return to_basis_bits(n_qubits_, keep_mask_); }

std::vector<Bipartition> canonical_bipartitions(unsigned n_qubits) {
  if (n_qubits < 2 || n_qubits > 31) throw DomainError("canonical bipartitions need 2..31 qubits");
  std::vector<Bipartition> out;
  const std::uint64_t full = full_mask(n_qubits);
  out.reserve((std::size_t{1} << (n_qubits - 1)) - 1);
  for (std::uint64_t m = 1; m < full; m += 2) out.emplace_back(n_qubits, m);
  return out;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, std::vector<unsigned> qubits)
    : entries_(std::move(entries)), qubits_(std::move(qubits)) {
  const auto dim = static_cast<std::size_t>(entries_.rows());
  if (entries_.rows() != entries_.cols() || dim == 0 || !std::has_single_bit(dim)) {
    throw DomainError("density matrix must be square with power-of-two dimension");
  }
  if ((std::size_t{1} << qubits_.size()) != dim) throw DomainError("density matrix qubit list does not match dimension");
}

double DensityMatrix::hermiticity_deviation() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_deviation() const { return std::abs(entries_.trace() - Amplitude(1.0, 0.0)); }

DensityMatrix reduced_density(const SparseState& state, const Bipartition& part, const EntanglementOptions& options) {
  if (part.n_qubits() != state.n_qubits()) throw DomainError("bipartition and state registers differ");
  const std::uint64_t side = smaller_side(part);
  const unsigned side_qubits = static_cast<unsigned>(std::popcount(side));
  const std::size_t dim = std::size_t{1} << side_qubits;
  if (dim > options.max_reduced_dim) {
    throw CapacityError("reduced density of dimension " + std::to_string(dim) + " exceeds cap " +
                        std::to_string(options.max_reduced_dim));
  }
  const unsigned n = state.n_qubits();
  const std::uint64_t side_bits = to_basis_bits(n, side);
  const BitGather row_of(side_bits);
  const BitGather group_of(full_mask(n) & ~side_bits);

  struct Item {
    std::uint32_t group;
    std::uint32_t row;
    Amplitude amp;
  };
  std::vector<Item> items;
  items.reserve(state.size());
  for (std::size_t k = 0; k < state.size(); ++k) {
    const BasisIndex v = state.index(k);
    items.push_back({group_of(v), row_of(v), state.amplitude(k)});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.group < b.group; });

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t begin = 0; begin < items.size();) {
    std::size_t end = begin;
    while (end < items.size() && items[end].group == items[begin].group) ++end;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = begin; j < end; ++j) {
        rho(items[i].row, items[j].row) += items[i].amp * std::conj(items[j].amp);
      }
    }
    begin = end;
  }
  return DensityMatrix(std::move(rho), qubits_of(n, side));
}

double entropy(const DensityMatrix& rho) {
  const double herm = rho.hermiticity_deviation();
  if (herm > kDensityTolerance) throw NumericError("density matrix is not Hermitian", herm);
  const double tr = rho.trace_deviation();
  if (tr > kDensityTolerance) throw NumericError("density matrix trace differs from 1", tr);
  const auto& m = rho.matrix();
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    return entropy_from_spectrum(hermitian_spectrum(Eigen::MatrixXd(m.real())));
  }
  return entropy_from_spectrum(hermitian_spectrum(m));
}

double bipartition_entropy(const SparseState& state, const Bipartition& part, const EntanglementOptions& options) {
  if (part.n_qubits() != state.n_qubits()) throw DomainError("bipartition and state registers differ");
  const unsigned n = state.n_qubits();
  if (n > 20) return entropy(reduced_density(state, part, options));
  const std::uint64_t side_bits = to_basis_bits(n, smaller_side(part));
  const std::uint64_t other_bits = full_mask(n) & ~side_bits;
  if (state.is_real()) return compact_entropy<double>(state, side_bits, other_bits);
  return compact_entropy<Amplitude>(state, side_bits, other_bits);
}

std::vector<double> single_qubit_profile(const SparseState& state, const EntanglementOptions& options) {
  const unsigned n = state.n_qubits();
  std::vector<double> out(n, 0.0);
  if (n == 1) return out;  // the whole register is pure
  parallel_for(n, options.threads, [&](std::size_t i) {
    const auto qubit = static_cast<unsigned>(i + 1);
    out[i] = qubit_entropy_for_bit(state, BasisIndex{1} << (n - qubit));
  });
  return out;
}

double e_avg_th(const SparseState& state, const EntanglementOptions& options) {
  const auto profile = single_qubit_profile(state, options);
  return ordered_sum(profile) / static_cast<double>(profile.size());
}

BipartitionSweep sweep_bipartitions(const SparseState& state, const EntanglementOptions& options) {
  const unsigned n = state.n_qubits();
  if (n < 2) throw DomainError("the bipartition sweep needs at least 2 qubits");
  if (n > options.max_sweep_qubits) {
    throw CapacityError("all-bipartition sweep capped at " + std::to_string(options.max_sweep_qubits) +
                        " qubits; state has " + std::to_string(n));
  }
  const auto parts = canonical_bipartitions(n);
  std::vector<double> entropies(parts.size());
  parallel_for(parts.size(), options.threads,
               [&](std::size_t i) { entropies[i] = bipartition_entropy(state, parts[i], options); });

  BipartitionSweep sweep;
  sweep.rows.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sweep.rows.push_back({parts[i].keep_mask(), parts[i].kept_count(), entropies[i]});
  }
  sweep.e_sum = ordered_sum(entropies);
  sweep.e_avg_all = sweep.e_sum / static_cast<double>(parts.size());
  return sweep;
}

SumAndAverage e_sum_and_avg_all(const SparseState& state, const EntanglementOptions& options) {
  const auto sweep = sweep_bipartitions(state, options);
  return {sweep.e_sum, sweep.e_avg_all};
}

double max_avg_all(unsigned n_qubits) {
  if (n_qubits < 2 || n_qubits > 62) throw DomainError("max_avg_all needs 2..62 qubits");
  // Unordered splits with a kept qubits: C(n, a), halved when a = n / 2.
  long double weighted = 0.0L;
  std::uint64_t binom = 1;  // C(n, a), updated incrementally
  for (unsigned a = 1; 2 * a <= n_qubits; ++a) {
    binom = binom * (n_qubits - a + 1) / a;
    const long double count = (2 * a == n_qubits) ? binom / 2.0L : static_cast<long double>(binom);
    weighted += count * a;
  }
  const long double splits = static_cast<long double>((std::uint64_t{1} << (n_qubits - 1)) - 1);
  return static_cast<double>(weighted / splits);
}

EntanglementReport analyze(const SparseState& state, bool all_bipartitions, const EntanglementOptions& options) {
  EntanglementReport report;
  report.n_qubits = state.n_qubits();
  report.per_qubit = single_qubit_profile(state, options);
  report.e_avg_th = ordered_sum(report.per_qubit) / static_cast<double>(report.per_qubit.size());
  report.max_avg_all = report.n_qubits >= 2 ? max_avg_all(report.n_qubits) : 0.0;
  if (all_bipartitions && report.n_qubits >= 2) {
    const auto totals = e_sum_and_avg_all(state, options);
    report.e_sum = totals.e_sum;
    report.e_avg_all = totals.e_avg_all;
  }
  return report;
}

std::string to_json(const EntanglementReport& report) {
  nlohmann::ordered_json j;
  j["n_qubits"] = report.n_qubits;
  j["per_qubit"] = report.per_qubit;
  j["e_avg_th"] = report.e_avg_th;
  j["e_sum"] = report.e_sum ? nlohmann::ordered_json(*report.e_sum) : nlohmann::ordered_json(nullptr);
  j["e_avg_all"] = report.e_avg_all ? nlohmann::ordered_json(*report.e_avg_all) : nlohmann::ordered_json(nullptr);
  j["max_avg_all"] = report.max_avg_all;
  return j.dump(2);
}

void write_bipartitions_csv(const BipartitionSweep& sweep, std::ostream& out) {
  out << "mask,kept_size,entropy\n";
  for (const auto& row : sweep.rows) {
    out << row.mask << ',' << row.kept_size << ',' << detail::format_real(row.entropy) << '\n';
  }
}

}  // namespace seqstate
