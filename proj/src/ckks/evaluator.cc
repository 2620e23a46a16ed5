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

#include "icheetah/ckks/evaluator.h"

#include <cmath>
#include <vector>

#include "icheetah/ckks/poly_ops.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {

namespace {

void CheckShape(const Context& ctx, const Ciphertext& ct) {
  if (ct.parts.size() < 2 || ct.parts.size() > 3) {
    throw FormatError("ciphertext must have 2 or 3 parts");
  }
  if (ct.level < 0 || ct.level > ctx.max_level()) {
    throw LevelError("ciphertext level outside the modulus chain");
  }
  for (const Poly& p : ct.parts) {
    if (p.limb_count() != static_cast<std::size_t>(ct.level) + 1) {
      throw FormatError("ciphertext part limb count does not match its level");
    }
  }
}

bool ScalesMatch(double a, double b) {
  return std::fabs(a / b - 1.0) <= kScaleTolerance;
}

}  // namespace

Evaluator::Evaluator(ContextPtr context) : context_(std::move(context)) {}

void Evaluator::CheckCompatible(const Ciphertext& a, const Ciphertext& b) const {
  CheckShape(*context_, a);
  CheckShape(*context_, b);
  if (a.level != b.level) {
    throw LevelError("operand levels differ (" + std::to_string(a.level) + " vs " +
                     std::to_string(b.level) + ")");
  }
  if (!ScalesMatch(a.scale, b.scale)) {
    throw ScaleError("operand scales differ beyond tolerance");
  }
}

void Evaluator::CheckScaleFits(double scale, int level) const {
  if (!(scale > 0) || scale > context_->modulus_product_double(level)) {
    throw ScaleError("scale exceeds the active modulus");
  }
}

void Evaluator::AddInPlace(Ciphertext& a, const Ciphertext& b) const {
  CheckCompatible(a, b);
  if (a.parts.size() < b.parts.size()) {
    a.parts.emplace_back(context_->ring_degree(), a.limb_count());
  }
  for (std::size_t p = 0; p < b.parts.size(); ++p) {
    ckks::AddInPlace(*context_, a.parts[p], b.parts[p]);
  }
}

void Evaluator::SubInPlace(Ciphertext& a, const Ciphertext& b) const {
  CheckCompatible(a, b);
  if (a.parts.size() < b.parts.size()) {
    a.parts.emplace_back(context_->ring_degree(), a.limb_count());
  }
  for (std::size_t p = 0; p < b.parts.size(); ++p) {
    ckks::SubInPlace(*context_, a.parts[p], b.parts[p]);
  }
}

Ciphertext Evaluator::Add(const Ciphertext& a, const Ciphertext& b) const {
  Ciphertext out = a;
  AddInPlace(out, b);
  return out;
}

Ciphertext Evaluator::Sub(const Ciphertext& a, const Ciphertext& b) const {
  Ciphertext out = a;
  SubInPlace(out, b);
  return out;
}

void Evaluator::NegateInPlace(Ciphertext& a) const {
  CheckShape(*context_, a);
  for (Poly& p : a.parts) ckks::NegateInPlace(*context_, p);
}

void Evaluator::AddMonomialProductInPlace(Ciphertext& acc, const Ciphertext& z,
                                          std::size_t k) const {
  CheckCompatible(acc, z);
  if (acc.parts.size() < z.parts.size()) {
    acc.parts.emplace_back(context_->ring_degree(), acc.limb_count());
  }
  for (std::size_t p = 0; p < z.parts.size(); ++p) {
    ckks::AddMonomialProductInPlace(*context_, acc.parts[p], z.parts[p], k);
  }
}

void Evaluator::AddPlainInPlace(Ciphertext& a, const Plaintext& pt) const {
  CheckShape(*context_, a);
  if (pt.level != a.level) throw LevelError("plaintext level differs from ciphertext");
  if (!ScalesMatch(a.scale, pt.scale)) {
    throw ScaleError("plaintext scale differs from ciphertext");
  }
  if (pt.constant) {
    for (std::size_t i = 0; i < a.limb_count(); ++i) {
      auto c0 = a.parts[0].limb(i);
      c0[0] = context_->modulus(i).Add(c0[0], pt.poly.limb(i)[0]);
    }
    return;
  }
  ckks::AddInPlace(*context_, a.parts[0], pt.poly);
}

Ciphertext Evaluator::AddPlain(const Ciphertext& a, const Plaintext& pt) const {
  Ciphertext out = a;
  AddPlainInPlace(out, pt);
  return out;
}

void Evaluator::MulPlainInPlace(Ciphertext& a, const Plaintext& pt) const {
  CheckShape(*context_, a);
  if (pt.level != a.level) throw LevelError("plaintext level differs from ciphertext");
  const double scale = a.scale * pt.scale;
  CheckScaleFits(scale, a.level);
  if (pt.constant) {
    std::vector<std::uint64_t> residues(a.limb_count());
    for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = pt.poly.limb(i)[0];
    for (Poly& p : a.parts) MulScalarInPlace(*context_, p, residues);
  } else {
    Poly m = pt.poly;
    context_->ToNtt(m);
    for (Poly& p : a.parts) {
      context_->ToNtt(p);
      MulPointwiseInPlace(*context_, p, m);
      context_->FromNtt(p);
    }
  }
  a.scale = scale;
}

Ciphertext Evaluator::MulPlain(const Ciphertext& a, const Plaintext& pt) const {
  Ciphertext out = a;
  MulPlainInPlace(out, pt);
  return out;
}

Ciphertext Evaluator::Mul(const Ciphertext& a, const Ciphertext& b) const {
  CheckShape(*context_, a);
  CheckShape(*context_, b);
  if (a.degree() != 1 || b.degree() != 1) {
    throw UnsupportedError("multiplication needs degree-1 operands; relinearize first");
  }
  if (a.level != b.level) throw LevelError("operand levels differ");
  const double scale = a.scale * b.scale;
  CheckScaleFits(scale, a.level);
  const Context& ctx = *context_;
  Poly a0 = a.parts[0], a1 = a.parts[1];
  ctx.ToNtt(a0);
  ctx.ToNtt(a1);
  Poly b0 = b.parts[0], b1 = b.parts[1];
  ctx.ToNtt(b0);
  ctx.ToNtt(b1);

  Ciphertext out;
  out.level = a.level;
  out.scale = scale;
  Poly d0 = a0;
  MulPointwiseInPlace(ctx, d0, b0);
  Poly d1 = a0;
  MulPointwiseInPlace(ctx, d1, b1);
  MulAccumulate(ctx, d1, a1, b0);
  Poly d2 = a1;
  MulPointwiseInPlace(ctx, d2, b1);
  for (Poly* p : {&d0, &d1, &d2}) ctx.FromNtt(*p);
  out.parts = {std::move(d0), std::move(d1), std::move(d2)};
  return out;
}

Ciphertext Evaluator::Square(const Ciphertext& a) const {
  CheckShape(*context_, a);
  if (a.degree() != 1) {
    throw UnsupportedError("multiplication needs degree-1 operands; relinearize first");
  }
  const double scale = a.scale * a.scale;
  CheckScaleFits(scale, a.level);
  const Context& ctx = *context_;
  Poly a0 = a.parts[0], a1 = a.parts[1];
  ctx.ToNtt(a0);
  ctx.ToNtt(a1);
  Poly d0 = a0;
  MulPointwiseInPlace(ctx, d0, a0);
  Poly d1 = a0;
  MulPointwiseInPlace(ctx, d1, a1);
  ckks::AddInPlace(ctx, d1, d1);
  Poly d2 = a1;
  MulPointwiseInPlace(ctx, d2, a1);
  for (Poly* p : {&d0, &d1, &d2}) ctx.FromNtt(*p);
  Ciphertext out;
  out.level = a.level;
  out.scale = scale;
  out.parts = {std::move(d0), std::move(d1), std::move(d2)};
  return out;
}

Ciphertext Evaluator::Relinearize(const Ciphertext& ct, const RelinKey& rlk) const {
  CheckShape(*context_, ct);
  if (rlk.params_digest != context_->params_digest()) {
    throw KeyMismatchError("relinearization key belongs to different parameters");
  }
  if (ct.degree() == 1) return ct;
  const Context& ctx = *context_;
  const std::size_t n = ctx.ring_degree();
  const std::size_t limbs = ct.limb_count();
  const int level = ct.level;
  const int digits = ctx.relin_digit_count(level);
  if (static_cast<std::size_t>(digits) > rlk.digits.size()) {
    throw KeyMismatchError("relinearization key has too few digits");
  }

  // Base-2^16 digits of each c2 coefficient, lifted from RNS to [0, Q_level).
  std::vector<std::uint16_t> digit_values(static_cast<std::size_t>(digits) * n);
  std::vector<std::uint64_t> residues(limbs);
  const Poly& c2 = ct.parts[2];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < limbs; ++i) residues[i] = c2.limb(i)[k];
    u128 x = ctx.ReconstructFromResidues(residues, level);
    for (int j = 0; j < digits; ++j) {
      digit_values[static_cast<std::size_t>(j) * n + k] =
          static_cast<std::uint16_t>(x & 0xFFFF);
      x >>= kRelinDigitBits;
    }
  }

  Poly acc0(n, limbs, true), acc1(n, limbs, true);
  std::vector<std::uint64_t> tmp(n);
  for (int j = 0; j < digits; ++j) {
    const auto& [evk0, evk1] = rlk.digits[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < limbs; ++i) {
      const Modulus& q = ctx.modulus(i);
      for (std::size_t k = 0; k < n; ++k) {
        tmp[k] = digit_values[static_cast<std::size_t>(j) * n + k];
      }
      ctx.ntt(i).Forward(tmp);
      auto z0 = acc0.limb(i);
      auto z1 = acc1.limb(i);
      auto k0 = evk0.limb(i);
      auto k1 = evk1.limb(i);
      for (std::size_t k = 0; k < n; ++k) {
        z0[k] = q.Add(z0[k], q.Mul(tmp[k], k0[k]));
        z1[k] = q.Add(z1[k], q.Mul(tmp[k], k1[k]));
      }
    }
  }
  ctx.FromNtt(acc0);
  ctx.FromNtt(acc1);

  Ciphertext out;
  out.level = ct.level;
  out.scale = ct.scale;
  out.parts = {ct.parts[0], ct.parts[1]};
  ckks::AddInPlace(ctx, out.parts[0], acc0);
  ckks::AddInPlace(ctx, out.parts[1], acc1);
  return out;
}

void Evaluator::RescaleInPlace(Ciphertext& ct) const {
  CheckShape(*context_, ct);
  if (ct.level == 0) throw LevelError("level exhausted: cannot rescale at level 0");
  const Context& ctx = *context_;
  const int level = ct.level;
  const Modulus& last = ctx.modulus(static_cast<std::size_t>(level));
  const std::uint64_t half = last.value() / 2;
  for (Poly& p : ct.parts) {
    auto top = p.limb(static_cast<std::size_t>(level));
    for (int i = 0; i < level; ++i) {
      const Modulus& q = ctx.modulus(static_cast<std::size_t>(i));
      const std::uint64_t inv = ctx.inv_last_prime(level, static_cast<std::size_t>(i));
      const std::uint64_t inv_shoup = ctx.inv_last_prime_shoup(level, static_cast<std::size_t>(i));
      const std::uint64_t last_mod_q = last.value() % q.value();
      auto x = p.limb(static_cast<std::size_t>(i));
      for (std::size_t k = 0; k < x.size(); ++k) {
        // Centered representative of the dropped residue, mapped into q_i.
        std::uint64_t r = top[k];
        std::uint64_t r_mod = q.Reduce(r);
        if (r > half) r_mod = q.Sub(r_mod, last_mod_q);
        x[k] = q.MulShoup(q.Sub(x[k], r_mod), inv, inv_shoup);
      }
    }
    p.Truncate(static_cast<std::size_t>(level));
  }
  ct.scale /= static_cast<double>(last.value());
  ct.level = level - 1;
}

Ciphertext Evaluator::Rescale(const Ciphertext& ct) const {
  Ciphertext out = ct;
  RescaleInPlace(out);
  return out;
}

}  // namespace icheetah::ckks
