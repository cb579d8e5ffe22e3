#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chart.hpp"
#include "evaluator.hpp"

namespace seqstate::cli {

enum class Scale { Desk, Paper };

struct ScaleLimits {
  unsigned avg_th_max;   // per-qubit curves
  unsigned avg_all_max;  // all-bipartition curves
  unsigned grover_max;   // iteration-count curves
  unsigned ratio_max;    // largest PA ratio on the ratio sweep
};

ScaleLimits limits_for(Scale scale) noexcept;

struct FigureFile {
  std::string name;
  std::string csv;
};

struct FigureData {
  std::vector<FigureFile> files;
  Chart chart;
};

inline constexpr int kFigureCount = 12;

// `n_max` lowers every register bound of the scale; it never raises one.
FigureData make_figure(int id, Scale scale, Evaluator& eval, std::optional<unsigned> n_max = std::nullopt);

}  // namespace seqstate::cli
