#include "seqstate/ingest.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "seqstate/error.hpp"

namespace seqstate {
namespace {

constexpr std::string_view kCacheHeaderPrefix = "# seqstate-cache key=";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

std::optional<std::uint64_t> to_u64(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (!all_digits(s)) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string oeis_id) {
  BFile out{std::move(oeis_id), {}};
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": expected \"index value\"", line_no);
    }
    const auto index_tok = line.substr(0, sep);
    const auto value_tok = trim(line.substr(sep + 1));
    if (!is_integer_token(index_tok) || !is_integer_token(value_tok)) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": non-integer token", line_no);
    }
    std::int64_t index = 0;
    const auto* begin = index_tok.data() + (index_tok.front() == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(begin, index_tok.data() + index_tok.size(), index);
    if (ec != std::errc{}) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": index out of range", line_no);
    }
    if (!out.terms.empty() && index <= out.terms.back().index) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": indices must be strictly increasing");
    }
    std::string value_text(value_tok.front() == '+' ? value_tok.substr(1) : value_tok);
    out.terms.push_back({index, value_text, to_u64(value_text)});
  }
  return out;
}

BFile read_bfile(const std::filesystem::path& path, std::string oeis_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot read b-file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (oeis_id.empty()) {
    // b000040.txt -> A000040
    const auto stem = path.stem().string();
    if (stem.size() == 7 && stem.front() == 'b') oeis_id = "A" + stem.substr(1);
  }
  return parse_bfile(buf.str(), std::move(oeis_id));
}

std::string serialize_bfile(const BFile& bfile) {
  std::string out;
  if (!bfile.oeis_id.empty()) out += "# " + bfile.oeis_id + "\n";
  for (const auto& t : bfile.terms) {
    out += std::to_string(t.index);
    out += ' ';
    out += t.text;
    out += '\n';
  }
  return out;
}

BFile make_bfile(std::string oeis_id, std::span<const std::uint64_t> values, std::int64_t offset) {
  BFile out{std::move(oeis_id), {}};
  out.terms.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.terms.push_back({offset + static_cast<std::int64_t>(i), std::to_string(values[i]), values[i]});
  }
  return out;
}

std::string_view to_string(ValidationStatus status) noexcept {
  switch (status) {
    case ValidationStatus::Pass: return "pass";
    case ValidationStatus::Mismatch: return "mismatch";
    case ValidationStatus::Insufficient: return "insufficient";
  }
  return "unknown";
}

ValidationReport validate_sample(const SequenceSample& sample, Family family, const BFile& bfile,
                                 std::size_t required_terms) {
  ValidationReport report;
  report.oeis_id = bfile.oeis_id;
  report.family = family;

  const std::uint64_t limit = (std::uint64_t{1} << sample.n_qubits()) - 1;
  const auto generated = sample.flattened();

  std::size_t i = 0;
  for (const auto& term : bfile.terms) {
    if (!term.value || *term.value > limit) break;
    if (i >= generated.size()) {
      report.status = ValidationStatus::Mismatch;
      report.first_divergence = Divergence{term.index, term.text, std::nullopt};
      report.compared_terms = i;
      return report;
    }
    if (generated[i] != *term.value) {
      report.status = ValidationStatus::Mismatch;
      report.first_divergence = Divergence{term.index, term.text, generated[i]};
      report.compared_terms = i;
      return report;
    }
    ++i;
  }
  report.compared_terms = i;
  const std::size_t needed = std::min(required_terms, generated.size());
  report.status = (i >= needed && i > 0) ? ValidationStatus::Pass : ValidationStatus::Insufficient;
  return report;
}

ValidationReport validate(const SequenceSpec& spec, const BFile& bfile, unsigned n_qubits,
                          const GeneratorConfig& config, std::size_t required_terms) {
  return validate_sample(generate(spec, n_qubits, config), spec.family, bfile, required_terms);
}

std::string cache_key(const SequenceSpec& spec, unsigned n_qubits, std::string_view measure,
                      std::string_view version_tag) {
  std::string canonical;
  canonical += family_name(spec.family);
  canonical += "|r=" + std::to_string(spec.family == Family::PA ? spec.r : 0);
  canonical += "|n=" + std::to_string(n_qubits);
  canonical += "|measure=";
  canonical += measure;
  canonical += "|version=";
  canonical += version_tag;

  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path ResultCache::file_for(const std::string& key) const { return directory_ / (key + ".csv"); }

void ResultCache::store(const std::string& key, std::string_view payload) const {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw StorageError("cannot create cache directory " + directory_.string() + ": " + ec.message());

  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto tmp = directory_ / (key + ".csv.tmp." + std::to_string(rd()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot write cache file " + tmp.string());
    out << kCacheHeaderPrefix << key << '\n' << payload;
    out.flush();
    if (!out) throw StorageError("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file_for(key), ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw StorageError("cannot publish cache entry " + key + " in " + directory_.string());
  }
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(file_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  if (header != std::string(kCacheHeaderPrefix) + key) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace seqstate
