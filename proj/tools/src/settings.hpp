#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "seqstate/sequences.hpp"

namespace seqstate::cli {

struct Settings {
  unsigned threads = 1;
  GeneratorConfig generator;
  std::optional<std::filesystem::path> cache_dir;
};

// Values given on the command line; unset fields fall through.
struct SettingFlags {
  std::optional<unsigned> threads;
  std::optional<unsigned> max_qubits;
  std::optional<unsigned> lucky_cap;
  std::optional<std::size_t> segment_size;
  std::optional<std::string> cache_dir;
  std::optional<std::string> config_path;
};

// flags > SEQSTATE_* environment > JSON config file > defaults.
// The config file comes from --config, else SEQSTATE_CONFIG.
Settings resolve_settings(const SettingFlags& flags);

}  // namespace seqstate::cli
