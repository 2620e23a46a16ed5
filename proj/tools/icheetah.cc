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

// Command-line front end. Exit codes: 0 success, 1 other failure, 2 usage,
// 3 format, 4 key mismatch, 5 quality gate.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "icheetah/bench/bench.h"
#include "icheetah/cache/cache_file.h"
#include "icheetah/cache/caches.h"
#include "icheetah/cache/pixel_encryptor.h"
#include "icheetah/ckks/encryptor.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/ckks/params.h"
#include "icheetah/ckks/serialization.h"
#include "icheetah/common/allocator.h"
#include "icheetah/common/error.h"
#include "icheetah/common/parallel.h"
#include "icheetah/image/cipher_image.h"
#include "icheetah/image/metrics.h"
#include "icheetah/image/pipeline.h"
#include "icheetah/image/raster.h"
#include "icheetah/ops/cipher_ops.h"

namespace fs = std::filesystem;

namespace icheetah::cli {
namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitKeyMismatch = 4;
constexpr int kExitQualityGate = 5;
// Sizes above this need --allow-large.
constexpr int kLargeSize = 512;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameter:
    case ErrorCode::kDomain:
    case ErrorCode::kDimension:
      return kExitUsage;
    case ErrorCode::kFormat:
      return kExitFormat;
    case ErrorCode::kKeyMismatch:
      return kExitKeyMismatch;
    default:
      return kExitFailure;
  }
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Cache and session seeds: reproducible from --seed, otherwise fresh entropy.
struct Seeds {
  ckks::Seed cache;
  ckks::Seed session;
};

Seeds MakeSeeds(const std::optional<std::uint64_t>& seed) {
  if (!seed) return {ckks::Prng::RandomSeed(), ckks::Prng::RandomSeed()};
  ckks::Prng prng(ckks::Prng::SeedFromU64(*seed), 0xC1);
  Seeds s;
  s.cache = prng.NextSeed();
  s.session = prng.NextSeed();
  return s;
}

ckks::KeySet LoadKeys(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("key directory " + dir.string() + " not found");
  return ckks::LoadKeySet(dir);
}

// Checks the fingerprint before parsing so foreign files report a key mismatch.
image::CipherImage LoadCipher(const fs::path& path, const ckks::KeySet& keys) {
  const image::CipherImageHeader header = image::PeekCipherImage(path);
  if (header.fingerprint != keys.fingerprint()) {
    throw KeyMismatchError(path.string() + " was encrypted under different keys");
  }
  return image::LoadCipherImage(path, *keys.context);
}

void PrintParams(const ckks::CkksParams& p) {
  std::printf("params: %s  lambda=%d (nominal)  N=%zu  chain=%zu primes (%.1f bits)  "
              "log2 scale=%d\n",
              p.name.c_str(), p.security_level, p.ring_degree, p.modulus_chain.size(),
              p.log2_modulus(), p.log2_scale);
}

std::vector<cache::StrategyTag> ParseStrategies(const std::vector<std::string>& names) {
  std::vector<cache::StrategyTag> out;
  for (const auto& n : names) out.push_back(cache::ParseStrategy(n));
  return out;
}

// keygen ------------------------------------------------------------------

struct KeygenArgs {
  std::string params = "default";
  fs::path out;
  std::optional<std::uint64_t> seed;
  bool force = false;
};

int RunKeygen(const KeygenArgs& a) {
  const ckks::CkksParams params = ckks::CkksParams::FromPreset(a.params);
  fs::create_directories(a.out);
  const ckks::ContextPtr ctx = ckks::Context::Create(params);
  std::optional<ckks::Seed> seed;
  if (a.seed) seed = ckks::Prng::SeedFromU64(*a.seed);
  const ckks::KeySet keys = ckks::GenerateKeys(ctx, seed);
  ckks::SaveKeySet(a.out, keys, a.force);
  PrintParams(params);
  std::printf("wrote %s, %s, %s to %s\n", ckks::kSecretKeyFile, ckks::kPublicKeyFile,
              ckks::kRelinKeyFile, a.out.string().c_str());
  return 0;
}

// encrypt -----------------------------------------------------------------

struct EncryptArgs {
  fs::path in, keys, out;
  std::string strategy = "full";
  int radix = 2;
  std::size_t pool_size = cache::DefaultPoolSize();
  bool no_randomness = false;
  int workers = DefaultWorkerCount();
  std::optional<std::uint64_t> seed;
  bool fallback_fresh = false;
  std::optional<fs::path> cache_file;
};

int RunEncrypt(const EncryptArgs& a) {
  cache::CacheStrategy strategy;
  strategy.tag = cache::ParseStrategy(a.strategy);
  strategy.radix = a.radix;
  strategy.pool_size = a.pool_size;
  strategy.randomness = !a.no_randomness;
  strategy.fallback_fresh = a.fallback_fresh;
  strategy.Validate();
  const image::RasterImage img = image::LoadImage(a.in);
  const ckks::KeySet keys = LoadKeys(a.keys);
  const ckks::Encryptor encryptor =
      keys.secret ? ckks::Encryptor(keys.context, keys.public_key, *keys.secret)
                  : ckks::Encryptor(keys.context, keys.public_key);
  const Seeds seeds = MakeSeeds(a.seed);

  const auto build_start = std::chrono::steady_clock::now();
  cache::PixelCache cache;
  bool loaded = false;
  if (a.cache_file && fs::exists(*a.cache_file)) {
    cache = cache::LoadPixelCache(*a.cache_file, *keys.context, keys.fingerprint());
    if (cache.strategy.tag != strategy.tag ||
        (strategy.tag == cache::StrategyTag::kRadix && cache.strategy.radix != strategy.radix)) {
      throw ParameterError("cache file " + a.cache_file->string() +
                           " holds a different strategy");
    }
    const bool had_pool = cache.pool.has_value();
    const auto pool = std::move(cache.pool);
    cache.strategy = strategy;
    if (strategy.uses_pool()) {
      if (!had_pool) throw ParameterError("cache file has no zero pool");
      cache.pool = pool;
    }
    loaded = true;
  } else {
    cache = cache::BuildPixelCache(strategy, encryptor, img.pixels, seeds.cache, a.workers);
  }
  const double build_seconds = Seconds(build_start);
  if (a.cache_file && !loaded) {
    cache::SavePixelCache(*a.cache_file, cache, keys.fingerprint());
  }

  const cache::PixelEncryptor pe(encryptor, cache);
  double encrypt_seconds = 0;
  const image::CipherImage cimg =
      image::EncryptImage(img, pe, seeds.session, a.workers, &encrypt_seconds);
  image::SaveCipherImage(cimg, a.out);
  std::printf("strategy: %s\n", cache::StrategyName(strategy.tag).c_str());
  std::printf("cache %s: %.3f s\n", loaded ? "load" : "build", build_seconds);
  std::printf("encryption: %.3f s (%d x %d x %d cells)\n", encrypt_seconds, img.width,
              img.height, img.channels);
  return 0;
}

// decrypt -----------------------------------------------------------------

struct DecryptArgs {
  fs::path in, keys, out;
  int workers = DefaultWorkerCount();
};

int RunDecrypt(const DecryptArgs& a) {
  const ckks::KeySet keys = LoadKeys(a.keys);
  keys.secret_key();
  const image::CipherImage cimg = LoadCipher(a.in, keys);
  const image::RasterImage img = image::DecryptImage(cimg, keys, a.workers);
  image::SaveImage(img, a.out);
  std::printf("decrypted %d x %d x %d to %s\n", img.width, img.height, img.channels,
              a.out.string().c_str());
  return 0;
}

// process -----------------------------------------------------------------

struct ProcessArgs {
  fs::path in, keys, out;
  std::string op;
  int window = 3;
  double delta = 50;
  int x = 0, y = 0, channel = 0;
  double value = 5;
  int workers = DefaultWorkerCount();
};

int RunProcess(const ProcessArgs& a) {
  const ckks::KeySet keys = LoadKeys(a.keys);
  image::CipherImage cimg = LoadCipher(a.in, keys);
  const ops::CipherOps ops(keys.context, a.workers);
  if (a.op == "mean-filter") {
    cimg = ops.MeanFilter(cimg, a.window);
  } else if (a.op == "brighten") {
    ops.BrightenInPlace(cimg, a.delta);
  } else if (a.op == "watermark") {
    ops::WatermarkSpec spec;
    spec.x = a.x;
    spec.y = a.y;
    spec.channel = a.channel;
    spec.value = a.value;
    ops.WatermarkEmbedInPlace(cimg, spec);
  } else {
    throw ParameterError("unknown op '" + a.op + "'");
  }
  image::SaveCipherImage(cimg, a.out);
  std::printf("%s: wrote %s (level %d)\n", a.op.c_str(), a.out.string().c_str(), cimg.level());
  return 0;
}

// match -------------------------------------------------------------------

struct MatchArgs {
  fs::path a, b, keys;
  std::string mode = "l1";
  int workers = DefaultWorkerCount();
};

int RunMatch(const MatchArgs& m) {
  if (m.mode != "l1" && m.mode != "l2") throw ParameterError("unknown mode '" + m.mode + "'");
  const ckks::KeySet keys = LoadKeys(m.keys);
  keys.secret_key();
  if (m.mode == "l2") keys.relin_key();
  const image::CipherImage a = LoadCipher(m.a, keys);
  const image::CipherImage b = LoadCipher(m.b, keys);
  const ops::CipherOps ops(keys.context, m.workers);
  double distance = 0;
  if (m.mode == "l1") {
    ops::MatchResult r = ops.MatchL1(a, b);
    distance = ops::FinalizeL1(r, keys);
  } else {
    ops::MatchResult r = ops.MatchL2(a, b, keys.relin_key());
    distance = ops::FinalizeL2(r, keys);
  }
  std::printf("%s distance: %.6f\n", m.mode.c_str(), distance);
  return 0;
}

// detect ------------------------------------------------------------------

struct DetectArgs {
  fs::path original, marked;
  std::optional<fs::path> out;
  double value = 5;
  std::optional<double> tau;
};

int RunDetect(const DetectArgs& d) {
  const image::RasterImage original = image::LoadImage(d.original);
  const image::RasterImage marked = image::LoadImage(d.marked);
  const double tau = d.tau.value_or(d.value / 2);
  if (!(tau > 0)) throw DomainError("tau must be positive");
  const image::RasterImage mask = ops::WatermarkDetect(original, marked, tau);
  if (d.out) {
    image::RasterImage scaled = mask;
    for (auto& p : scaled.pixels) p = p != 0 ? 255 : 0;
    image::SaveImage(scaled, *d.out);
  }
  const std::vector<ops::MaskPixel> pixels = ops::MaskPixels(mask);
  std::printf("tau: %g\nmarked pixels: %zu\n", tau, pixels.size());
  for (const auto& p : pixels) std::printf("x=%d y=%d channel=%d\n", p.x, p.y, p.channel);
  return 0;
}

// metrics -----------------------------------------------------------------

struct MetricsArgs {
  fs::path a, b;
};

int RunMetrics(const MetricsArgs& m) {
  const image::QualityReport q = image::Compare(image::LoadImage(m.a), image::LoadImage(m.b));
  std::printf("mse: %.6f\npsnr: %s\nssim: %.6f\n", q.mse,
              std::isinf(q.psnr) ? "inf" : std::to_string(q.psnr).c_str(), q.ssim);
  return 0;
}

// bench -------------------------------------------------------------------

struct BenchArgs {
  std::vector<int> sizes{8, 64, 128, 256};
  std::vector<std::string> strategies{"none", "radix", "scan", "full"};
  int reps = 3;
  int radix = 2;
  std::size_t pool_size = cache::DefaultPoolSize();
  bool no_randomness = false;
  int workers = DefaultWorkerCount();
  std::uint64_t seed = 1;
  std::string params = "default";
  std::optional<fs::path> keys;
  std::optional<fs::path> image_dir;
  std::optional<fs::path> out;
  std::string format = "csv";
  double max_mse = 1.0;
  double min_psnr = 45.0;
  bool allow_large = false;
};

int RunBenchCommand(const BenchArgs& a) {
  bench::BenchConfig cfg;
  cfg.sizes = a.sizes;
  cfg.strategies = ParseStrategies(a.strategies);
  cfg.repetitions = a.reps;
  cfg.radix = a.radix;
  cfg.pool_size = a.pool_size;
  cfg.randomness = !a.no_randomness;
  cfg.workers = a.workers;
  cfg.seed = a.seed;
  cfg.image_dir = a.image_dir;
  cfg.Validate();
  for (int s : cfg.sizes) {
    if (s > kLargeSize && !a.allow_large) {
      throw ParameterError("size " + std::to_string(s) + " needs --allow-large");
    }
  }
  const bench::ReportFormat format = bench::ParseReportFormat(a.format);

  ckks::KeySet keys;
  if (a.keys) {
    keys = LoadKeys(*a.keys);
  } else {
    const ckks::ContextPtr ctx = ckks::Context::Create(ckks::CkksParams::FromPreset(a.params));
    keys = ckks::GenerateKeys(ctx, ckks::Prng::SeedFromU64(a.seed));
  }
  keys.secret_key();
  const bench::BenchReport report = bench::RunBench(cfg, keys);
  if (a.out) {
    bench::WriteReport(report, format, *a.out);
  } else {
    std::cout << (format == bench::ReportFormat::kCsv ? bench::FormatCsv(report)
                                                      : bench::FormatMarkdown(report));
  }
  if (!report.QualityOk(a.max_mse, a.min_psnr)) {
    std::fprintf(stderr, "quality gate failed: need mse < %g and psnr > %g for every row\n",
                 a.max_mse, a.min_psnr);
    return kExitQualityGate;
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"icheetah: pixel-level CKKS image encryption with ciphertext caching"};
  app.require_subcommand(1);

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate secret, public and relinearization keys");
  keygen->add_option("--params", kg.params, "Parameter preset")
      ->check(CLI::IsMember({"default", "toy"}))
      ->capture_default_str();
  keygen->add_option("--out", kg.out, "Key directory")->required();
  keygen->add_option("--seed", kg.seed, "Deterministic key seed");
  keygen->add_flag("--force", kg.force, "Overwrite existing key files");

  EncryptArgs en;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt an image pixel by pixel");
  encrypt->add_option("--in", en.in, "Input BMP or PNG image")->required();
  encrypt->add_option("--keys", en.keys, "Key directory")->required();
  encrypt->add_option("--out", en.out, "Output ICHI file")->required();
  encrypt->add_option("--strategy", en.strategy, "none, radix, scan or full")
      ->capture_default_str();
  encrypt->add_option("--radix", en.radix, "Radix for the radix strategy")->capture_default_str();
  encrypt->add_option("--pool-size", en.pool_size, "Zero pool size (env ICHEETAH_POOL_SIZE)")
      ->capture_default_str();
  encrypt->add_flag("--no-randomness", en.no_randomness, "Disable zero-pool randomization");
  encrypt->add_option("--workers", en.workers, "Worker threads (env ICHEETAH_WORKERS)")
      ->capture_default_str();
  encrypt->add_option("--seed", en.seed, "Seed for cache and per-pixel randomness");
  encrypt->add_flag("--fallback-fresh", en.fallback_fresh,
                    "Encrypt scan-cache misses freshly instead of failing");
  encrypt->add_option("--cache-file", en.cache_file,
                      "Load the cache from this ICHC file, or save it there");

  DecryptArgs de;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt an ICHI file to an image");
  decrypt->add_option("--in", de.in, "Input ICHI file")->required();
  decrypt->add_option("--keys", de.keys, "Key directory")->required();
  decrypt->add_option("--out", de.out, "Output image (.bmp or .png)")->required();
  decrypt->add_option("--workers", de.workers, "Worker threads")->capture_default_str();

  ProcessArgs pr;
  auto* process = app.add_subcommand("process", "Apply an encrypted-domain operation");
  process->add_option("--op", pr.op, "mean-filter, brighten or watermark")
      ->required()
      ->check(CLI::IsMember({"mean-filter", "brighten", "watermark"}));
  process->add_option("--in", pr.in, "Input ICHI file")->required();
  process->add_option("--keys", pr.keys, "Key directory")->required();
  process->add_option("--out", pr.out, "Output ICHI file")->required();
  process->add_option("--window", pr.window, "Mean filter window")->capture_default_str();
  process->add_option("--delta", pr.delta, "Brightness offset")->capture_default_str();
  process->add_option("--x", pr.x, "Watermark column")->capture_default_str();
  process->add_option("--y", pr.y, "Watermark row")->capture_default_str();
  process->add_option("--channel", pr.channel, "Watermark channel")->capture_default_str();
  process->add_option("--value", pr.value, "Watermark value")->capture_default_str();
  process->add_option("--workers", pr.workers, "Worker threads")->capture_default_str();

  MatchArgs ma;
  auto* match = app.add_subcommand("match", "Distance between two encrypted images");
  match->add_option("--a", ma.a, "First ICHI file")->required();
  match->add_option("--b", ma.b, "Second ICHI file")->required();
  match->add_option("--keys", ma.keys, "Key directory")->required();
  match->add_option("--mode", ma.mode, "l1 (client-side finalization) or l2 (encrypted)")
      ->check(CLI::IsMember({"l1", "l2"}))
      ->capture_default_str();
  match->add_option("--workers", ma.workers, "Worker threads")->capture_default_str();

  DetectArgs dt;
  auto* detect = app.add_subcommand("detect", "Locate watermark pixels in a decrypted image");
  detect->add_option("--original", dt.original, "Unmarked image")->required();
  detect->add_option("--marked", dt.marked, "Decrypted marked image")->required();
  detect->add_option("--value", dt.value, "Embedded value")->capture_default_str();
  detect->add_option("--tau", dt.tau, "Detection threshold (default value / 2)");
  detect->add_option("--out", dt.out, "Write the mask image here");

  MetricsArgs me;
  auto* metrics = app.add_subcommand("metrics", "MSE, PSNR and SSIM between two images");
  metrics->add_option("--a", me.a, "First image")->required();
  metrics->add_option("--b", me.b, "Second image")->required();

  BenchArgs be;
  auto* benchcmd = app.add_subcommand("bench", "Compare encryption strategies");
  benchcmd->add_option("--sizes", be.sizes, "Square image sizes")
      ->delimiter(',')
      ->capture_default_str();
  benchcmd->add_option("--strategies", be.strategies, "Strategies to time")
      ->delimiter(',')
      ->capture_default_str();
  benchcmd->add_option("--reps", be.reps, "Repetitions per row")->capture_default_str();
  benchcmd->add_option("--radix", be.radix, "Radix for the radix strategy")->capture_default_str();
  benchcmd->add_option("--pool-size", be.pool_size, "Zero pool size")->capture_default_str();
  benchcmd->add_flag("--no-randomness", be.no_randomness, "Disable zero-pool randomization");
  benchcmd->add_option("--workers", be.workers, "Worker threads")->capture_default_str();
  benchcmd->add_option("--seed", be.seed, "Seed for keys, images and caches")
      ->capture_default_str();
  benchcmd->add_option("--params", be.params, "Parameter preset when --keys is absent")
      ->check(CLI::IsMember({"default", "toy"}))
      ->capture_default_str();
  benchcmd->add_option("--keys", be.keys, "Key directory instead of fresh keys");
  benchcmd->add_option("--image-dir", be.image_dir, "Benchmark these images, center-cropped");
  benchcmd->add_option("--out", be.out, "Report path (default stdout)");
  benchcmd->add_option("--format", be.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown", "md"}))
      ->capture_default_str();
  benchcmd->add_option("--max-mse", be.max_mse, "Quality gate: mse bound")->capture_default_str();
  benchcmd->add_option("--min-psnr", be.min_psnr, "Quality gate: psnr bound")
      ->capture_default_str();
  benchcmd->add_flag("--allow-large", be.allow_large, "Permit sizes above 512");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*keygen) return RunKeygen(kg);
    if (*encrypt) return RunEncrypt(en);
    if (*decrypt) return RunDecrypt(de);
    if (*process) return RunProcess(pr);
    if (*match) return RunMatch(ma);
    if (*detect) return RunDetect(dt);
    if (*metrics) return RunMetrics(me);
    if (*benchcmd) return RunBenchCommand(be);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ExitCodeFor(e.code());
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace icheetah::cli

int main(int argc, char** argv) {
  icheetah::common::TuneAllocatorForCiphertexts();
  return icheetah::cli::Main(argc, argv);
}
