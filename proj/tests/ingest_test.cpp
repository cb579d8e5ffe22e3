#include "seqstate/ingest.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "seqstate/error.hpp"

namespace seqstate {
namespace {

namespace fs = std::filesystem;

fs::path fixture(const std::string& name) { return fs::path(SEQSTATE_FIXTURE_DIR) / name; }

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("seqstate_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::permissions(path_, fs::perms::owner_all, fs::perm_options::add, ec);
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(ParseBFile, Basic) {
  const auto b = parse_bfile("0 2\n1 3\n2 5\n");
  ASSERT_EQ(b.terms.size(), 3u);
  EXPECT_EQ(b.terms[0].index, 0);
  EXPECT_EQ(b.terms[2].value, 5u);
}

TEST(ParseBFile, CommentsAndBlankLines) {
  const auto b = parse_bfile("# comment\n\n1 1\r\n   \n");
  ASSERT_EQ(b.terms.size(), 1u);
  EXPECT_EQ(b.terms[0].index, 1);
  EXPECT_EQ(b.terms[0].value, 1u);
}

TEST(ParseBFile, ReportsLineOfBadToken) {
  try {
    parse_bfile("1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_bfile("# header\n1 1\n2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseBFile, NonMonotonicIndices) { EXPECT_THROW(parse_bfile("2 1\n1 1\n"), FormatError); }

TEST(ParseBFile, HugeValuesKeepTheirText) {
  const auto b = parse_bfile("0 123456789012345678901234567890\n1 -4\n");
  EXPECT_FALSE(b.terms[0].value);
  EXPECT_EQ(b.terms[0].text, "123456789012345678901234567890");
  EXPECT_FALSE(b.terms[1].value);
}

TEST(ParseBFile, SerializeRoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    BFile b{"A" + std::to_string(100000 + trial), {}};
    std::int64_t index = static_cast<std::int64_t>(rng() % 5) - 2;
    for (int i = 0; i < 30; ++i) {
      index += 1 + static_cast<std::int64_t>(rng() % 3);
      const std::uint64_t v = rng() >> (rng() % 64);
      if (i % 7 == 3)
        b.terms.push_back({index, "9" + std::to_string(v) + "0000000000000000000000", std::nullopt});
      else
        b.terms.push_back({index, std::to_string(v), v});
    }
    EXPECT_EQ(parse_bfile(serialize_bfile(b), b.oeis_id), b);
  }
}

TEST(ReadBFile, InfersIdFromName) {
  const auto b = read_bfile(fixture("b000040.txt"));
  EXPECT_EQ(b.oeis_id, "A000040");
  EXPECT_EQ(b.terms.front().index, 1);
  EXPECT_THROW(read_bfile(fixture("missing.txt")), StorageError);
}

TEST(Validate, PrimeAgainstFixture) {
  const auto report = validate({Family::Prime}, read_bfile(fixture("b000040.txt")), 16);
  EXPECT_EQ(report.status, ValidationStatus::Pass);
  EXPECT_FALSE(report.first_divergence);
  EXPECT_EQ(report.compared_terms, 1000u);
}

TEST(Validate, CorruptedValue) {
  auto b = read_bfile(fixture("b000040.txt"));
  b.terms[10].text = "30";
  b.terms[10].value = 30;
  const auto report = validate({Family::Prime}, b, 16);
  EXPECT_EQ(report.status, ValidationStatus::Mismatch);
  ASSERT_TRUE(report.first_divergence);
  EXPECT_EQ(report.first_divergence->index, 11);
  EXPECT_EQ(report.first_divergence->expected, "30");
  EXPECT_EQ(report.first_divergence->actual, 31u);
  EXPECT_EQ(report.compared_terms, 10u);
}

TEST(Validate, TooFewTerms) {
  const auto report = validate({Family::Prime}, parse_bfile("1 2\n2 3\n3 5\n"), 16);
  EXPECT_EQ(report.status, ValidationStatus::Insufficient);
  EXPECT_FALSE(report.first_divergence);
}

TEST(Validate, GeneratorRunsOut) {
  // A spurious in-range term beyond the generator's last value.
  auto b = make_bfile("", std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 14}, 1);
  const auto report = validate({Family::Prime}, b, 4);
  EXPECT_EQ(report.status, ValidationStatus::Mismatch);
  ASSERT_TRUE(report.first_divergence);
  EXPECT_FALSE(report.first_divergence->actual);
}

TEST(Validate, PadovanVariantDiffersFromCanonicalOffset) {
  EXPECT_EQ(validate({Family::Padovan}, read_bfile(fixture("padovan_variant.txt")), 20).status, ValidationStatus::Pass);
  EXPECT_EQ(validate({Family::Padovan}, read_bfile(fixture("b000931.txt")), 20).status, ValidationStatus::Mismatch);
}

TEST(Validate, SelfConsistencyForEveryFamily) {
  for (const auto f : kAllFamilies) {
    const SequenceSpec spec{f, 3};
    const auto sample = generate(spec, 12);
    const auto flat = sample.flattened();
    const auto b = make_bfile(std::string(oeis_id(f)), flat);
    EXPECT_EQ(validate(spec, b, 12).status, ValidationStatus::Pass) << family_name(f);
  }
}

TEST(CacheKey, DependsOnEveryField) {
  const auto base = cache_key({Family::Prime}, 10, "avg_th");
  EXPECT_EQ(base.size(), 16u);
  EXPECT_EQ(base, cache_key({Family::Prime}, 10, "avg_th"));
  EXPECT_NE(base, cache_key({Family::SPrime}, 10, "avg_th"));
  EXPECT_NE(base, cache_key({Family::Prime}, 11, "avg_th"));
  EXPECT_NE(base, cache_key({Family::Prime}, 10, "avg_all"));
  EXPECT_NE(base, cache_key({Family::Prime}, 10, "avg_th", "other-version"));
  EXPECT_NE(cache_key({Family::PA, 3}, 10, "avg_th"), cache_key({Family::PA, 5}, 10, "avg_th"));
  // r is ignored outside PA
  EXPECT_EQ(cache_key({Family::Prime, 3}, 10, "avg_th"), base);
}

TEST(Cache, StoreThenLoad) {
  TempDir dir;
  const ResultCache cache(dir.path() / "nested");
  const std::string payload = "n,value\n4,0.5\n";
  const auto key = cache_key({Family::Prime}, 4, "avg_th");
  EXPECT_FALSE(cache.load(key));
  cache.store(key, payload);
  EXPECT_EQ(cache.load(key), payload);
  EXPECT_FALSE(cache.load(cache_key({Family::Prime}, 4, "avg_th", "v-next")));
  // No temporary files left behind.
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(cache.directory())) ++files;
  EXPECT_EQ(files, 1u);
}

TEST(Cache, UnwritableDirectory) {
  TempDir dir;
  const auto file = dir.path() / "not_a_dir";
  std::ofstream(file) << "x";
  const ResultCache cache(file / "sub");
  EXPECT_THROW(cache.store("abc", "payload"), StorageError);
}

}  // namespace
}  // namespace seqstate
