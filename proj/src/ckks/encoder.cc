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

#include "icheetah/ckks/encoder.h"

#include <cmath>
#include <numbers>

#include "icheetah/common/error.h"

namespace icheetah::ckks {

namespace {

void CheckLevel(const Context& ctx, int level) {
  if (level < 0 || level > ctx.max_level()) {
    throw LevelError("level " + std::to_string(level) + " outside [0, " +
                     std::to_string(ctx.max_level()) + "]");
  }
}

void CheckScale(double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw ScaleError("scale must be positive and finite");
  }
}

}  // namespace

i128 ScaleToInteger(const Context& ctx, double value, double scale, int level) {
  const long double scaled = static_cast<long double>(value) * scale;
  const long double half_q = static_cast<long double>(ctx.modulus_product(level)) / 2;
  if (!std::isfinite(scaled) || std::fabs(scaled) >= half_q) {
    throw EncodingOverflowError("value * scale exceeds half the active modulus");
  }
  return static_cast<i128>(std::round(scaled));
}

Encoder::Encoder(ContextPtr context) : context_(std::move(context)) {
  const std::size_t n = context_->ring_degree();
  const std::size_t m = 2 * n;
  roots_.resize(m);
  for (std::size_t t = 0; t < m; ++t) {
    const double angle = std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    roots_[t] = {std::cos(angle), std::sin(angle)};
  }
  slot_exponents_.resize(n / 2);
  std::size_t g = 1;
  for (std::size_t j = 0; j < n / 2; ++j) {
    slot_exponents_[j] = g;
    g = (g * 5) % m;
  }
}

Plaintext Encoder::EncodeScalar(double value, int level, double scale) const {
  const Context& ctx = *context_;
  CheckLevel(ctx, level);
  CheckScale(scale);
  const i128 c = ScaleToInteger(ctx, value, scale, level);
  Plaintext pt;
  pt.poly = Poly(ctx.ring_degree(), static_cast<std::size_t>(level) + 1);
  for (int i = 0; i <= level; ++i) pt.poly.limb(i)[0] = ctx.modulus(i).FromSigned128(c);
  pt.scale = scale;
  pt.level = level;
  pt.constant = true;
  return pt;
}

Plaintext Encoder::EncodeVector(std::span<const std::complex<double>> values,
                                int level, double scale) const {
  const Context& ctx = *context_;
  CheckLevel(ctx, level);
  CheckScale(scale);
  const std::size_t n = ctx.ring_degree();
  if (values.size() > n / 2) {
    throw DimensionError("vector of length " + std::to_string(values.size()) +
                         " exceeds " + std::to_string(n / 2) + " slots");
  }
  Plaintext pt;
  pt.poly = Poly(n, static_cast<std::size_t>(level) + 1);
  pt.scale = scale;
  pt.level = level;
  const std::size_t m = 2 * n;
  for (std::size_t k = 0; k < n; ++k) {
    // m_k = (2/N) Re(sum_j z_j zeta^(-g_j k))
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      const std::size_t e = (slot_exponents_[j] * k) % m;
      acc += values[j] * std::conj(roots_[e]);
    }
    const double coeff = 2.0 * acc.real() / static_cast<double>(n);
    const i128 c = ScaleToInteger(ctx, coeff, scale, level);
    for (int i = 0; i <= level; ++i) pt.poly.limb(i)[k] = ctx.modulus(i).FromSigned128(c);
  }
  return pt;
}

std::vector<std::complex<double>> Encoder::Decode(const Plaintext& pt) const {
  const Context& ctx = *context_;
  CheckScale(pt.scale);
  const std::size_t n = ctx.ring_degree();
  if (pt.poly.is_ntt()) throw Error(ErrorCode::kUnsupported, "decode needs coefficient form");
  std::vector<double> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    coeffs[k] = static_cast<double>(ctx.CenteredCoefficient(pt.poly, k, pt.level));
  }
  const std::size_t m = 2 * n;
  std::vector<std::complex<double>> out(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (coeffs[k] == 0) continue;
      acc += coeffs[k] * roots_[(slot_exponents_[j] * k) % m];
    }
    out[j] = acc / pt.scale;
  }
  return out;
}

double Encoder::DecodeScalar(const Plaintext& pt) const {
  CheckScale(pt.scale);
  if (pt.poly.is_ntt()) throw Error(ErrorCode::kUnsupported, "decode needs coefficient form");
  return static_cast<double>(context_->CenteredCoefficient(pt.poly, 0, pt.level)) / pt.scale;
}

}  // namespace icheetah::ckks
