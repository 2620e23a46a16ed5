/*
 * Copyright 2026 The icheetah Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "icheetah/bench/bench.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>

#include <sys/resource.h>

#include "icheetah/common/allocator.h"
#include "icheetah/common/bytes.h"
#include "icheetah/common/error.h"
#include "support/fixtures.h"

namespace icheetah::bench {
namespace {

using cache::StrategyTag;
using icheetah::testing::DefaultCrypto;

BenchConfig SmallConfig() {
  BenchConfig cfg;
  cfg.sizes = {4, 8};
  cfg.strategies = {StrategyTag::kNone, StrategyTag::kFull};
  cfg.repetitions = 1;
  cfg.pool_size = 8;
  cfg.seed = 5;
  return cfg;
}

TEST(SyntheticImageTest, IsSeededAndHasUniformRegions) {
  EXPECT_EQ(SyntheticImage(32, 1), SyntheticImage(32, 1));
  EXPECT_NE(SyntheticImage(32, 1), SyntheticImage(32, 2));
  const image::RasterImage img = SyntheticImage(64, 3);
  EXPECT_EQ(img.width, 64);
  EXPECT_EQ(img.channels, 1);
  std::map<int, int> counts;
  for (auto p : img.pixels) ++counts[p];
  int most = 0;
  for (auto [v, n] : counts) most = std::max(most, n);
  // Uniform pixels alone would give about 16 per value.
  EXPECT_GT(most, 64);
  EXPECT_THROW(SyntheticImage(0, 1), DimensionError);
}

TEST(CenterCropTest, TakesTheMiddle) {
  image::RasterImage img(4, 3, 1);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) img.pixels[i] = static_cast<std::uint8_t>(i);
  const image::RasterImage c = CenterCrop(img, 2);
  EXPECT_EQ(c.pixels, (std::vector<std::uint8_t>{1, 2, 5, 6}));
  EXPECT_THROW(CenterCrop(img, 4), DimensionError);
}

TEST(BenchConfigTest, Validation) {
  BenchConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  EXPECT_EQ(cfg.sizes, (std::vector<int>{8, 64, 128, 256}));
  EXPECT_EQ(cfg.repetitions, 3);
  cfg.repetitions = 0;
  EXPECT_THROW(cfg.Validate(), ParameterError);
  cfg = BenchConfig();
  cfg.sizes.clear();
  EXPECT_THROW(cfg.Validate(), ParameterError);
  cfg = BenchConfig();
  cfg.strategies.clear();
  EXPECT_THROW(cfg.Validate(), ParameterError);
}

TEST(RunBenchTest, ProducesOneRowPerStrategyAndSize) {
  const BenchReport report = RunBench(SmallConfig(), DefaultCrypto().keys);
  ASSERT_EQ(report.rows.size(), 4u);
  EXPECT_EQ(report.rows[0].strategy, StrategyTag::kNone);
  EXPECT_EQ(report.rows[0].size, 4);
  EXPECT_EQ(report.rows[3].strategy, StrategyTag::kFull);
  EXPECT_EQ(report.rows[3].size, 8);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.reps, 1);
    EXPECT_GT(r.median_ms, 0);
    EXPECT_LT(r.mse, 1.0);
    EXPECT_GT(r.psnr, 45.0);
    const BenchRow* base = report.Find(StrategyTag::kNone, r.size);
    ASSERT_NE(base, nullptr);
    EXPECT_DOUBLE_EQ(r.speedup, base->median_ms / r.median_ms);
  }
  EXPECT_DOUBLE_EQ(report.Find(StrategyTag::kNone, 8)->speedup, 1.0);
  EXPECT_GT(report.Find(StrategyTag::kFull, 8)->cache_build_ms, 0);
  EXPECT_TRUE(report.QualityOk());
  EXPECT_FALSE(report.QualityOk(0.0, 45.0));
  EXPECT_EQ(report.seed, 5u);
  EXPECT_NE(report.params.find("N=4096"), std::string::npos);
}

TEST(RunBenchTest, CoversEveryStrategy) {
  BenchConfig cfg = SmallConfig();
  cfg.sizes = {4};
  cfg.strategies = {StrategyTag::kRadix, StrategyTag::kScan};
  cfg.repetitions = 2;
  cfg.measure_quality = false;
  const BenchReport report = RunBench(cfg, DefaultCrypto().keys);
  ASSERT_EQ(report.rows.size(), 2u);
  for (const auto& r : report.rows) {
    EXPECT_TRUE(std::isnan(r.speedup));
    EXPECT_TRUE(std::isnan(r.mse));
  }
  EXPECT_TRUE(report.QualityOk());
}

TEST(RunBenchTest, ReadsAnImageDirectory) {
  BenchConfig cfg = SmallConfig();
  cfg.sizes = {8, 100, 1000};
  cfg.strategies = {StrategyTag::kScan};
  cfg.image_dir = ICHEETAH_TEST_DATA_DIR;
  const BenchReport report = RunBench(cfg, DefaultCrypto().keys);
  // Every shipped image covers 8; only camera_128 covers 100; none covers 1000.
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[1].size, 100);
  EXPECT_GE(report.images_per_size, 4u);
  EXPECT_TRUE(report.QualityOk());
}

TEST(RunBenchTest, UnreadableDirectoryIsAnIoError) {
  BenchConfig cfg = SmallConfig();
  cfg.image_dir = "/nonexistent/icheetah";
  EXPECT_THROW(RunBench(cfg, DefaultCrypto().keys), IoError);
  const auto empty = std::filesystem::temp_directory_path() / "icheetah_bench_empty";
  std::filesystem::create_directories(empty);
  std::ofstream(empty / "notes.txt") << "not an image";
  cfg.image_dir = empty;
  EXPECT_THROW(RunBench(cfg, DefaultCrypto().keys), IoError);
  std::filesystem::remove_all(empty);
}

BenchReport SampleReport() {
  BenchReport r;
  r.rows.push_back({StrategyTag::kNone, 64, 3, 5123.25, 1.0, 0.0, 0.0,
                    std::numeric_limits<double>::infinity()});
  r.rows.push_back({StrategyTag::kFull, 64, 3, 1.0 / 3.0, 15367.75, 1234.5, 0.125, 57.15});
  r.rows.push_back({StrategyTag::kRadix, 8, 1, 2.5, std::numeric_limits<double>::quiet_NaN(),
                    7.0, 0.0, 1e300});
  return r;
}

TEST(ReportTest, CsvRoundTripsExactly) {
  const BenchReport report = SampleReport();
  const std::string csv = FormatCsv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  const std::vector<BenchRow> parsed = ParseCsv(csv);
  ASSERT_EQ(parsed.size(), report.rows.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) EXPECT_TRUE(SameRow(parsed[i], report.rows[i]));
}

TEST(ReportTest, EmptyReportIsHeaderOnly) {
  EXPECT_EQ(FormatCsv(BenchReport{}), std::string(kCsvHeader) + "\n");
  EXPECT_TRUE(ParseCsv(FormatCsv(BenchReport{})).empty());
}

TEST(ReportTest, MarkdownHasOneLinePerRow) {
  const std::string md = FormatMarkdown(SampleReport());
  int table_lines = 0;
  std::size_t pos = 0;
  while ((pos = md.find("\n|", pos)) != std::string::npos) {
    ++table_lines;
    ++pos;
  }
  // Header, separator, then one line per row.
  EXPECT_EQ(table_lines, 2 + 3);
  EXPECT_NE(md.find("| full | 64 | 3 |"), std::string::npos);
}

TEST(ReportTest, MalformedCsvIsAFormatError) {
  EXPECT_THROW(ParseCsv("strategy,size\n"), FormatError);
  EXPECT_THROW(ParseCsv(std::string(kCsvHeader) + "\nfull,8,1,2\n"), FormatError);
  EXPECT_THROW(ParseCsv(std::string(kCsvHeader) + "\nfull,8,x,2,1,1,1,1\n"), FormatError);
  EXPECT_THROW(ParseCsv(std::string(kCsvHeader) + "\nfoo,8,1,2,1,1,1,1\n"), FormatError);
}

TEST(ReportTest, WriteReportFormats) {
  const auto dir = std::filesystem::temp_directory_path() / "icheetah_bench_report";
  std::filesystem::create_directories(dir);
  WriteReport(SampleReport(), ReportFormat::kCsv, dir / "r.csv");
  const Bytes bytes = ReadFileBytes(dir / "r.csv");
  EXPECT_EQ(std::string(bytes.begin(), bytes.end()), FormatCsv(SampleReport()));
  WriteReport(SampleReport(), ParseReportFormat("md"), dir / "r.md");
  EXPECT_TRUE(std::filesystem::exists(dir / "r.md"));
  EXPECT_THROW(WriteReport(SampleReport(), ReportFormat::kCsv, "/nonexistent/dir/r.csv"), IoError);
  EXPECT_THROW(ParseReportFormat("json"), ParameterError);
  std::filesystem::remove_all(dir);
}

#if defined(__GLIBC__)
TEST(AllocatorTest, TunedHeapReusesCiphertextBands) {
  common::TuneAllocatorForCiphertexts();
  const std::size_t words = 4096 * 3;
  const auto faults = [] {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_minflt;
  };
  long before = 0;
  for (int pass = 0; pass < 4; ++pass) {
    if (pass == 1) before = faults();
    std::vector<std::vector<std::uint64_t>> band;
    for (int cell = 0; cell < 128; ++cell) band.emplace_back(words, pass + 1);
  }
  EXPECT_LT(faults() - before, 48);
}
#endif

}  // namespace
}  // namespace icheetah::bench
