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

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "icheetah/cache/caches.h"
#include "icheetah/cache/pixel_encryptor.h"
#include "icheetah/ckks/decryptor.h"
#include "icheetah/ckks/encryptor.h"
#include "icheetah/common/bytes.h"
#include "icheetah/common/error.h"
#include "icheetah/image/metrics.h"
#include "icheetah/image/pipeline.h"

namespace icheetah::bench {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Ciphertexts held per timing band.
constexpr std::size_t kBandCells = 256;

bool SameValue(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(std::string_view s) {
  if (s == "nan") return kNaN;
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw FormatError("bad number in CSV: '" + std::string(s) + "'");
  }
  return v;
}

int ParseInt(std::string_view s) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw FormatError("bad integer in CSV: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

image::RasterImage RowBand(const image::RasterImage& img, int y0, int rows) {
  image::RasterImage band(img.width, rows, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < rows; ++y) {
      std::copy_n(img.pixels.begin() + static_cast<std::ptrdiff_t>(img.index(c, y0 + y, 0)),
                  img.width,
                  band.pixels.begin() + static_cast<std::ptrdiff_t>(band.index(c, y, 0)));
    }
  }
  return band;
}

int BandRows(const image::RasterImage& img) {
  const std::size_t row_cells = static_cast<std::size_t>(img.width) * img.channels;
  return static_cast<int>(std::max<std::size_t>(1, kBandCells / row_cells));
}

// Encrypts band by band, discarding ciphertexts; returns the summed loop time.
double TimeEncryption(const image::RasterImage& img, const cache::PixelEncryptor& pe,
                      const ckks::Seed& session, int workers) {
  const int rows = BandRows(img);
  double total = 0;
  for (int y = 0; y < img.height; y += rows) {
    const image::RasterImage band = RowBand(img, y, std::min(rows, img.height - y));
    double seconds = 0;
    ckks::Seed band_session = session;
    band_session[31] ^= static_cast<std::uint8_t>(y);
    band_session[30] ^= static_cast<std::uint8_t>(y >> 8);
    image::EncryptImage(band, pe, band_session, workers, &seconds);
    total += seconds;
  }
  return total;
}

std::vector<image::RasterImage> LoadDirectory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot read image directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : it) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<image::RasterImage> images;
  for (const auto& p : paths) {
    try {
      images.push_back(image::LoadImage(p));
    } catch (const FormatError&) {
      // Not an image.
    }
  }
  if (images.empty()) throw IoError("no readable BMP or PNG image in " + dir.string());
  return images;
}

std::string DescribeParams(const ckks::CkksParams& p) {
  std::ostringstream os;
  os << (p.name.empty() ? "custom" : p.name) << " N=" << p.ring_degree
     << " primes=" << p.modulus_chain.size() << " log2Q=" << std::lround(p.log2_modulus())
     << " log2scale=" << p.log2_scale;
  return os.str();
}

}  // namespace

void BenchConfig::Validate() const {
  if (sizes.empty()) throw ParameterError("bench needs at least one size");
  if (strategies.empty()) throw ParameterError("bench needs at least one strategy");
  if (repetitions < 1) throw ParameterError("repetitions must be at least 1");
  for (int s : sizes) {
    if (s < 1) throw ParameterError("image sizes must be positive");
  }
  if (workers < 1) throw ParameterError("workers must be at least 1");
}

bool SameRow(const BenchRow& a, const BenchRow& b) {
  return a.strategy == b.strategy && a.size == b.size && a.reps == b.reps &&
         SameValue(a.median_ms, b.median_ms) && SameValue(a.speedup, b.speedup) &&
         SameValue(a.cache_build_ms, b.cache_build_ms) && SameValue(a.mse, b.mse) &&
         SameValue(a.psnr, b.psnr);
}

const BenchRow* BenchReport::Find(cache::StrategyTag strategy, int size) const {
  for (const auto& r : rows) {
    if (r.strategy == strategy && r.size == size) return &r;
  }
  return nullptr;
}

bool BenchReport::QualityOk(double max_mse, double min_psnr) const {
  for (const auto& r : rows) {
    if (std::isnan(r.mse)) continue;
    if (!(r.mse < max_mse) || !(r.psnr > min_psnr)) return false;
  }
  return true;
}

image::RasterImage SyntheticImage(int size, std::uint64_t seed) {
  if (size < 1) throw DimensionError("image size must be positive");
  std::mt19937_64 rng(seed);
  image::RasterImage img(size, size, 1);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() >> 56);
  const int patches = std::max(1, size / 8);
  for (int k = 0; k < patches; ++k) {
    const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>((size + 1) / 2));
    const int h = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>((size + 1) / 2));
    const int x0 = static_cast<int>(rng() % static_cast<std::uint64_t>(size - w + 1));
    const int y0 = static_cast<int>(rng() % static_cast<std::uint64_t>(size - h + 1));
    const auto value = static_cast<std::uint8_t>(rng() >> 56);
    for (int y = y0; y < y0 + h; ++y) {
      for (int x = x0; x < x0 + w; ++x) img.at(0, y, x) = value;
    }
  }
  return img;
}

image::RasterImage CenterCrop(const image::RasterImage& img, int size) {
  if (img.width < size || img.height < size) {
    throw DimensionError("image smaller than the crop size");
  }
  const int x0 = (img.width - size) / 2;
  const int y0 = (img.height - size) / 2;
  image::RasterImage out(size, size, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < size; ++y) {
      for (int x = 0; x < size; ++x) out.at(c, y, x) = img.at(c, y0 + y, x0 + x);
    }
  }
  return out;
}

BenchReport RunBench(const BenchConfig& config, const ckks::KeySet& keys) {
  config.Validate();
  const ckks::ContextPtr& ctx = keys.context;
  const ckks::Encryptor encryptor = keys.secret
                                        ? ckks::Encryptor(ctx, keys.public_key, *keys.secret)
                                        : ckks::Encryptor(ctx, keys.public_key);
  std::optional<ckks::Decryptor> decryptor;
  if (config.measure_quality) decryptor.emplace(ctx, keys.secret_key());

  std::vector<image::RasterImage> sources;
  if (config.image_dir) sources = LoadDirectory(*config.image_dir);

  BenchReport report;
  report.workers = config.workers;
  report.seed = config.seed;
  report.params = DescribeParams(ctx->params());
  report.images_per_size = config.image_dir ? 0 : 1;

  std::size_t row_id = 0;
  for (int size : config.sizes) {
    std::vector<image::RasterImage> images;
    if (config.image_dir) {
      for (const auto& src : sources) {
        if (src.width >= size && src.height >= size) images.push_back(CenterCrop(src, size));
      }
      if (images.empty()) continue;
      report.images_per_size = std::max(report.images_per_size, images.size());
    } else {
      images.push_back(SyntheticImage(size, config.seed * 0x9E3779B97F4A7C15ULL + size));
    }
    std::vector<std::uint8_t> all_pixels;
    for (const auto& img : images) {
      all_pixels.insert(all_pixels.end(), img.pixels.begin(), img.pixels.end());
    }

    const std::size_t first_row = report.rows.size();
    for (cache::StrategyTag tag : config.strategies) {
      ckks::Prng seeds(ckks::Prng::SeedFromU64(config.seed), row_id++);
      cache::CacheStrategy strategy;
      strategy.tag = tag;
      strategy.radix = config.radix;
      strategy.pool_size = config.pool_size;
      strategy.randomness = config.randomness;
      strategy.Validate();

      const auto build_start = std::chrono::steady_clock::now();
      const cache::PixelCache cache =
          cache::BuildPixelCache(strategy, encryptor, all_pixels, seeds.NextSeed(), config.workers);
      const double build_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - build_start)
                                  .count();
      const cache::PixelEncryptor pe(encryptor, cache);

      BenchRow row;
      row.strategy = tag;
      row.size = size;
      row.reps = config.repetitions;
      row.cache_build_ms = build_ms;
      row.mse = kNaN;
      row.psnr = kNaN;
      std::vector<double> times;
      for (int rep = 0; rep < config.repetitions; ++rep) {
        double seconds = 0;
        double sq_sum = 0;
        std::size_t count = 0;
        for (const auto& img : images) {
          const ckks::Seed session = seeds.NextSeed();
          if (rep == 0 && decryptor) {
            image::RoundTrip rt = image::RoundTripImage(img, pe, *decryptor, session,
                                                        config.workers, BandRows(img));
            seconds += rt.encrypt_seconds;
            sq_sum += image::Mse(img, rt.decrypted) * static_cast<double>(img.pixels.size());
            count += img.pixels.size();
          } else {
            seconds += TimeEncryption(img, pe, session, config.workers);
          }
        }
        if (rep == 0 && decryptor) {
          row.mse = sq_sum / static_cast<double>(count);
          row.psnr = image::Psnr(row.mse);
        }
        times.push_back(seconds * 1e3);
      }
      row.median_ms = Median(times);
      report.rows.push_back(row);
    }

    const BenchRow* baseline = nullptr;
    for (std::size_t i = first_row; i < report.rows.size(); ++i) {
      if (report.rows[i].strategy == cache::StrategyTag::kNone) baseline = &report.rows[i];
    }
    for (std::size_t i = first_row; i < report.rows.size(); ++i) {
      BenchRow& r = report.rows[i];
      if (baseline == nullptr) {
        r.speedup = kNaN;
      } else if (&r == baseline) {
        r.speedup = 1.0;
      } else {
        r.speedup = baseline->median_ms / r.median_ms;
      }
    }
  }
  return report;
}

std::string FormatCsv(const BenchReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : report.rows) {
    out += cache::StrategyName(r.strategy);
    out += ',' + std::to_string(r.size) + ',' + std::to_string(r.reps) + ',' +
           FormatDouble(r.median_ms) + ',' + FormatDouble(r.speedup) + ',' +
           FormatDouble(r.cache_build_ms) + ',' + FormatDouble(r.mse) + ',' +
           FormatDouble(r.psnr) + '\n';
  }
  return out;
}

std::vector<BenchRow> ParseCsv(std::string_view text) {
  std::vector<std::string_view> lines = Split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw FormatError("unexpected CSV header");
  std::vector<BenchRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string_view> f = Split(lines[i], ',');
    if (f.size() != 8) throw FormatError("CSV row " + std::to_string(i) + " has wrong arity");
    BenchRow r;
    try {
      r.strategy = cache::ParseStrategy(std::string(f[0]));
    } catch (const ParameterError& e) {
      throw FormatError(e.what());
    }
    r.size = ParseInt(f[1]);
    r.reps = ParseInt(f[2]);
    r.median_ms = ParseDouble(f[3]);
    r.speedup = ParseDouble(f[4]);
    r.cache_build_ms = ParseDouble(f[5]);
    r.mse = ParseDouble(f[6]);
    r.psnr = ParseDouble(f[7]);
    rows.push_back(r);
  }
  return rows;
}

std::string FormatMarkdown(const BenchReport& report) {
  std::ostringstream os;
  os << "Parameters: " << report.params << "; workers: " << report.workers
     << "; seed: " << report.seed << "\n\n";
  os << "| strategy | size | reps | median_ms | speedup | cache_build_ms | mse | psnr |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  char buf[256];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof(buf), "| %s | %d | %d | %.3f | %.2f | %.1f | %.4f | %.2f |\n",
                  cache::StrategyName(r.strategy).c_str(), r.size, r.reps, r.median_ms, r.speedup,
                  r.cache_build_ms, r.mse, r.psnr);
    os << buf;
  }
  return os.str();
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw ParameterError("unknown report format '" + std::string(name) + "'");
}

void WriteReport(const BenchReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  const std::string text = format == ReportFormat::kCsv ? FormatCsv(report) : FormatMarkdown(report);
  WriteFileAtomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace icheetah::bench
