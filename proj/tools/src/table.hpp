#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seqstate::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
      }
      out << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
  }
};

}  // namespace seqstate::cli
