#include "settings.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "seqstate/error.hpp"

namespace seqstate::cli {
namespace {

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

template <typename T>
std::optional<T> env_number(const char* name) {
  const auto text = env(name);
  if (!text) return std::nullopt;
  T value{};
  const auto [end, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
  if (ec != std::errc{} || end != text->data() + text->size()) {
    throw DomainError(std::string(name) + " must be a non-negative integer, got '" + *text + "'");
  }
  return value;
}

void apply_config_file(const std::filesystem::path& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw StorageError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config file " + path.string() + ": " + e.what(), 0);
  }
  if (!doc.is_object()) throw FormatError("config file " + path.string() + " must hold a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "threads") s.threads = value.get<unsigned>();
      else if (key == "max_qubits") s.generator.max_qubits = value.get<unsigned>();
      else if (key == "lucky_max_qubits") s.generator.lucky_max_qubits = value.get<unsigned>();
      else if (key == "segment_size") s.generator.segment_size = value.get<std::size_t>();
      else if (key == "cache_dir") s.cache_dir = value.get<std::string>();
      else throw FormatError("config file " + path.string() + ": unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::type_error& e) {
    throw FormatError("config file " + path.string() + ": " + e.what());
  }
}

}  // namespace

Settings resolve_settings(const SettingFlags& flags) {
  Settings s;
  const auto config = flags.config_path ? flags.config_path : env("SEQSTATE_CONFIG");
  if (config) apply_config_file(*config, s);

  if (auto v = env_number<unsigned>("SEQSTATE_THREADS")) s.threads = *v;
  if (auto v = env("SEQSTATE_CACHE_DIR")) s.cache_dir = *v;

  if (flags.threads) s.threads = *flags.threads;
  if (flags.max_qubits) s.generator.max_qubits = *flags.max_qubits;
  if (flags.lucky_cap) s.generator.lucky_max_qubits = *flags.lucky_cap;
  if (flags.segment_size) s.generator.segment_size = *flags.segment_size;
  if (flags.cache_dir) s.cache_dir = *flags.cache_dir;

  if (s.threads == 0) throw DomainError("threads must be at least 1");
  if (s.generator.segment_size == 0) throw DomainError("segment size must be positive");
  return s;
}

}  // namespace seqstate::cli
