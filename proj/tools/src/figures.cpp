#include "figures.hpp"

#include <algorithm>
#include <sstream>

#include "seqstate/error.hpp"
#include "seqstate/format.hpp"
#include "seqstate/grover.hpp"
#include "table.hpp"

namespace seqstate::cli {
namespace {

using detail::format_real;

std::string csv(const Table& t) {
  std::ostringstream out;
  t.write_csv(out);
  return out.str();
}

struct Builder {
  Evaluator& eval;
  ScaleLimits lim;
  FigureData data;
  std::string prefix;

  void add(std::string curve, const Table& t) { data.files.push_back({prefix + "_" + curve + ".csv", csv(t)}); }

  void profile_curve(const SequenceSpec& spec, unsigned n) {
    const auto values = eval.profile(spec, n);
    Table t{{"qubit", "entropy"}, {}};
    Series s{spec.label(), {}, {}};
    for (unsigned q = 1; q <= n; ++q) {
      t.rows.push_back({std::to_string(q), format_real(values[q - 1])});
      s.x.push_back(q);
      s.y.push_back(values[q - 1]);
    }
    add(spec.label(), t);
    data.chart.series.push_back(std::move(s));
  }

  void avg_th_curve(const SequenceSpec& spec, const std::string& curve, bool slopes = false) {
    Table t{{"n", "e_avg_th"}, {}};
    if (slopes) t.columns.insert(t.columns.end(), {"first_difference", "slope_sign"});
    Series s{spec.label() + " th", {}, {}};
    double previous = 0.0;
    for (unsigned n = eval.first_nonempty(spec, 1, lim.avg_th_max); n <= lim.avg_th_max; ++n) {
      const double v = eval.avg_th(spec, n);
      std::vector<std::string> row{std::to_string(n), format_real(v)};
      if (slopes) append_slope(row, t.rows.empty(), v - previous);
      t.rows.push_back(std::move(row));
      previous = v;
      s.x.push_back(n);
      s.y.push_back(v);
    }
    add(curve, t);
    data.chart.series.push_back(std::move(s));
  }

  void avg_all_curve(const SequenceSpec& spec, const std::string& curve, bool fraction, bool slopes = false) {
    Table t{{"n", "e_avg_all"}, {}};
    if (fraction) t.columns.push_back("fraction_of_bound");
    if (slopes) t.columns.insert(t.columns.end(), {"first_difference", "slope_sign"});
    Series s{spec.label() + (fraction ? "" : " all"), {}, {}};
    double previous = 0.0;
    for (unsigned n = eval.first_nonempty(spec, 2, lim.avg_all_max); n <= lim.avg_all_max; ++n) {
      const double v = eval.avg_all(spec, n).e_avg_all;
      std::vector<std::string> row{std::to_string(n), format_real(v)};
      if (fraction) row.push_back(format_real(v / max_avg_all(n)));
      if (slopes) append_slope(row, t.rows.empty(), v - previous);
      t.rows.push_back(std::move(row));
      previous = v;
      s.x.push_back(n);
      s.y.push_back(v);
    }
    add(curve, t);
    data.chart.series.push_back(std::move(s));
  }

  static void append_slope(std::vector<std::string>& row, bool first, double diff) {
    if (first) {
      row.insert(row.end(), {"", ""});
      return;
    }
    row.push_back(format_real(diff));
    row.push_back(diff > 0 ? "1" : diff < 0 ? "-1" : "0");
  }

  void bound_curve() {
    Table t{{"n", "max_avg_all"}, {}};
    Series s{"upper bound", {}, {}};
    for (unsigned n = 2; n <= lim.avg_all_max; ++n) {
      const double v = max_avg_all(n);
      t.rows.push_back({std::to_string(n), format_real(v)});
      s.x.push_back(n);
      s.y.push_back(v);
    }
    add("bound", t);
    data.chart.series.push_back(std::move(s));
  }

  void grover_curve(const SequenceSpec& spec) {
    const unsigned lo = eval.first_nonempty(spec, 1, lim.grover_max);
    const auto rows = growth_profile(spec, lo, lim.grover_max, eval.settings().generator);
    std::ostringstream out;
    write_growth_csv(rows, out);
    data.files.push_back({prefix + "_" + spec.label() + ".csv", out.str()});
    Series s{spec.label(), {}, {}};
    for (const auto& r : rows) {
      s.x.push_back(r.n_qubits);
      s.y.push_back(r.g_real);
    }
    data.chart.series.push_back(std::move(s));
  }

  void ratio_sweep() {
    const unsigned n = lim.avg_all_max;
    Table t{{"r", "e_avg_all"}, {}};
    Series s{"pa, n=" + std::to_string(n), {}, {}};
    for (unsigned r = 1; r <= lim.ratio_max; ++r) {
      const double v = eval.avg_all({Family::PA, r}, n).e_avg_all;
      t.rows.push_back({std::to_string(r), format_real(v)});
      s.x.push_back(r);
      s.y.push_back(v);
    }
    add("pa_n" + std::to_string(n), t);
    data.chart.series.push_back(std::move(s));
  }
};

void build(int id, Builder& b) {
  auto& c = b.data.chart;
  const SequenceSpec fib{Family::Fibonacci}, pa3{Family::PA, 3}, s_state{Family::SOscillating};
  switch (id) {
    case 1:
      c = {"Per-qubit entropy, " + std::to_string(b.lim.avg_th_max) + " qubits", "qubit i", "E^i", {}};
      for (const auto f : {Family::Prime, Family::SPrime, Family::Triangular, Family::Fibonacci})
        b.profile_curve({f}, b.lim.avg_th_max);
      b.profile_curve(pa3, b.lim.avg_th_max);
      b.profile_curve({Family::Abundant}, b.lim.avg_th_max);
      return;
    case 2:
      c = {"PA[3] against Fibonacci", "qubits", "average entropy", {}};
      b.avg_th_curve(pa3, "avg_th_pa3");
      b.avg_th_curve(fib, "avg_th_fibonacci");
      b.avg_all_curve(pa3, "avg_all_pa3", false);
      b.avg_all_curve(fib, "avg_all_fibonacci", false);
      return;
    case 3:
      c = {"PA[r], r = 3, 5, 7, 9", "qubits", "average entropy", {}};
      for (const unsigned r : {3u, 5u, 7u, 9u}) b.avg_th_curve({Family::PA, r}, "avg_th_pa" + std::to_string(r));
      for (const unsigned r : {3u, 5u, 7u, 9u})
        b.avg_all_curve({Family::PA, r}, "avg_all_pa" + std::to_string(r), false);
      return;
    case 4:
      c = {"All-bipartition average of PA[r] versus r", "r", "E_avg^all", {}};
      b.ratio_sweep();
      return;
    case 5:
      c = {"All-bipartition average against the bound", "qubits", "E_avg^all", {}};
      for (const auto f : {Family::Happy, Family::Prime, Family::SPrime})
        b.avg_all_curve({f}, std::string(family_name(f)), true);
      b.avg_all_curve({Family::PA, 17}, "pa17", true);
      b.bound_curve();
      return;
    case 6:
      c = {"All-bipartition average against the bound", "qubits", "E_avg^all", {}};
      for (const auto f : {Family::Fibonacci, Family::Happy, Family::Lucky, Family::Padovan, Family::Lazy,
                           Family::Prime, Family::Triangular})
        b.avg_all_curve({f}, std::string(family_name(f)), true);
      b.bound_curve();
      return;
    case 7:
      c = {"S state, per-qubit average", "qubits", "E_avg^th", {}};
      b.avg_th_curve(s_state, "avg_th_s-osc", true);
      return;
    case 8:
      c = {"S state, all-bipartition average", "qubits", "E_avg^all", {}};
      b.avg_all_curve(s_state, "avg_all_s-osc", false, true);
      return;
    case 9:
    case 10:
    case 11:
    case 12: {
      c = {"Grover iterations", "qubits", "G(n)", {}};
      std::vector<SequenceSpec> specs;
      if (id == 9) {
        for (const auto f : {Family::Fibonacci, Family::Lucky, Family::Padovan, Family::Lazy, Family::Triangular})
          specs.push_back({f});
      } else if (id == 10) {
        for (const auto f :
             {Family::Abundant, Family::Happy, Family::Harshad, Family::Lucky, Family::Prime, Family::SPrime})
          specs.push_back({f});
      } else if (id == 11) {
        for (const unsigned r : {3u, 4u, 5u, 7u, 9u, 17u}) specs.push_back({Family::PA, r});
      } else {
        specs.push_back(s_state);
      }
      for (const auto& s : specs) b.grover_curve(s);
      return;
    }
    default:
      throw DomainError("figure id must be in 1.." + std::to_string(kFigureCount) + ", got " + std::to_string(id));
  }
}

}  // namespace

ScaleLimits limits_for(Scale scale) noexcept {
  if (scale == Scale::Paper) return {28, 14, 28, 64};
  return {28, 14, 24, 32};
}

FigureData make_figure(int id, Scale scale, Evaluator& eval, std::optional<unsigned> n_max) {
  if (id < 1 || id > kFigureCount)
    throw DomainError("figure id must be in 1.." + std::to_string(kFigureCount) + ", got " + std::to_string(id));
  auto lim = limits_for(scale);
  if (n_max) {
    if (*n_max < 2) throw DomainError("--n-max must be at least 2");
    lim.avg_th_max = std::min(lim.avg_th_max, *n_max);
    lim.avg_all_max = std::min(lim.avg_all_max, *n_max);
    lim.grover_max = std::min(lim.grover_max, *n_max);
  }
  Builder b{eval, lim, {}, "fig" + std::to_string(id)};
  try {
    build(id, b);
  } catch (const CapacityError& e) {
    if (scale != Scale::Paper) throw;
    throw CapacityError(std::string(e.what()) + "; figure " + std::to_string(id) +
                        " at paper scale exceeds it, use --scale desk or raise the cap");
  }
  return std::move(b.data);
}

}  // namespace seqstate::cli
