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

#ifndef ICHEETAH_BENCH_BENCH_H_
#define ICHEETAH_BENCH_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icheetah/cache/strategy.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/image/raster.h"

namespace icheetah::bench {

struct BenchConfig {
  std::vector<int> sizes{8, 64, 128, 256};
  std::vector<cache::StrategyTag> strategies{cache::StrategyTag::kNone, cache::StrategyTag::kRadix,
                                             cache::StrategyTag::kScan, cache::StrategyTag::kFull};
  int repetitions = 3;
  int radix = 2;
  std::size_t pool_size = cache::DefaultPoolSize();
  bool randomness = true;
  int workers = 1;
  std::uint64_t seed = 1;
  // Round-trip every configuration once to fill the mse and psnr columns.
  bool measure_quality = true;
  // When set, every readable image in the directory is center-cropped to each
  // size; images smaller than a size are skipped for it.
  std::optional<std::filesystem::path> image_dir;

  // ParameterError on empty sizes or strategies, nonpositive sizes or
  // repetitions.
  void Validate() const;
};

struct BenchRow {
  cache::StrategyTag strategy = cache::StrategyTag::kNone;
  int size = 0;
  int reps = 0;
  double median_ms = 0;
  // Baseline median over this row's median; NaN without a baseline row.
  double speedup = 0;
  double cache_build_ms = 0;
  // NaN when quality was not measured.
  double mse = 0;
  double psnr = 0;
};

// Field-wise equality that treats two NaNs as equal.
bool SameRow(const BenchRow& a, const BenchRow& b);

struct BenchReport {
  std::vector<BenchRow> rows;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string params;
  std::size_t images_per_size = 1;

  const BenchRow* Find(cache::StrategyTag strategy, int size) const;
  // True when every measured row has mse below `max_mse` and psnr above
  // `min_psnr`.
  bool QualityOk(double max_mse = 1.0, double min_psnr = 45.0) const;
};

// Seeded pseudorandom pixels overlaid with uniform rectangles.
image::RasterImage SyntheticImage(int size, std::uint64_t seed);

// Center crop; DimensionError when the image is smaller than `size`.
image::RasterImage CenterCrop(const image::RasterImage& img, int size);

// Rows run in a fixed order: sizes outer, strategies inner. Key generation and
// cache construction are excluded from median_ms. IoError when the image
// directory cannot be read or holds no usable image.
BenchReport RunBench(const BenchConfig& config, const ckks::KeySet& keys);

inline constexpr std::string_view kCsvHeader =
    "strategy,size,reps,median_ms,speedup,cache_build_ms,mse,psnr";

std::string FormatCsv(const BenchReport& report);
// FormatError on a bad header or malformed row.
std::vector<BenchRow> ParseCsv(std::string_view text);
std::string FormatMarkdown(const BenchReport& report);

enum class ReportFormat { kCsv, kMarkdown };

// ParameterError for names other than csv and markdown (or md).
ReportFormat ParseReportFormat(std::string_view name);
// IoError when the path cannot be written.
void WriteReport(const BenchReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace icheetah::bench

#endif  // ICHEETAH_BENCH_BENCH_H_
