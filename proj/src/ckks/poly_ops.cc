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

#include "icheetah/ckks/poly_ops.h"

#include "icheetah/common/error.h"

namespace icheetah::ckks {

namespace {

void CheckShape(const Poly& a, const Poly& b) {
  if (a.limb_count() != b.limb_count() || a.ring_degree() != b.ring_degree()) {
    throw DimensionError("polynomial shapes differ");
  }
  if (a.is_ntt() != b.is_ntt()) {
    throw Error(ErrorCode::kUnsupported, "mixed polynomial representations");
  }
}

}  // namespace

void AddInPlace(const Context& ctx, Poly& a, const Poly& b) {
  CheckShape(a, b);
  for (std::size_t i = 0; i < a.limb_count(); ++i) {
    const std::uint64_t q = ctx.modulus(i).value();
    auto x = a.limb(i);
    auto y = b.limb(i);
    for (std::size_t k = 0; k < x.size(); ++k) {
      const std::uint64_t s = x[k] + y[k];
      x[k] = s >= q ? s - q : s;
    }
  }
}

void SubInPlace(const Context& ctx, Poly& a, const Poly& b) {
  CheckShape(a, b);
  for (std::size_t i = 0; i < a.limb_count(); ++i) {
    const std::uint64_t q = ctx.modulus(i).value();
    auto x = a.limb(i);
    auto y = b.limb(i);
    for (std::size_t k = 0; k < x.size(); ++k) {
      const std::uint64_t d = x[k] + q - y[k];
      x[k] = d >= q ? d - q : d;
    }
  }
}

void NegateInPlace(const Context& ctx, Poly& a) {
  for (std::size_t i = 0; i < a.limb_count(); ++i) {
    const Modulus& q = ctx.modulus(i);
    for (auto& v : a.limb(i)) v = q.Neg(v);
  }
}

void MulPointwiseInPlace(const Context& ctx, Poly& a, const Poly& b) {
  CheckShape(a, b);
  for (std::size_t i = 0; i < a.limb_count(); ++i) {
    const Modulus& q = ctx.modulus(i);
    auto x = a.limb(i);
    auto y = b.limb(i);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = q.Mul(x[k], y[k]);
  }
}

void MulAccumulate(const Context& ctx, Poly& acc, const Poly& a, const Poly& b) {
  CheckShape(a, b);
  CheckShape(acc, a);
  for (std::size_t i = 0; i < acc.limb_count(); ++i) {
    const Modulus& q = ctx.modulus(i);
    auto z = acc.limb(i);
    auto x = a.limb(i);
    auto y = b.limb(i);
    for (std::size_t k = 0; k < z.size(); ++k) {
      z[k] = q.Add(z[k], q.Mul(x[k], y[k]));
    }
  }
}

void MulScalarInPlace(const Context& ctx, Poly& a,
                      std::span<const std::uint64_t> residues) {
  for (std::size_t i = 0; i < a.limb_count(); ++i) {
    const Modulus& q = ctx.modulus(i);
    const std::uint64_t c = residues[i];
    const std::uint64_t c_shoup = q.ShoupPrecompute(c);
    for (auto& v : a.limb(i)) v = q.MulShoup(v, c, c_shoup);
  }
}

void AddMonomialProductInPlace(const Context& ctx, Poly& acc, const Poly& b,
                               std::size_t k) {
  CheckShape(acc, b);
  if (acc.is_ntt()) {
    throw Error(ErrorCode::kUnsupported, "monomial product needs coefficient form");
  }
  const std::size_t n = acc.ring_degree();
  k %= 2 * n;
  const bool negate_all = k >= n;
  const std::size_t shift = negate_all ? k - n : k;
  for (std::size_t i = 0; i < acc.limb_count(); ++i) {
    const std::uint64_t q = ctx.modulus(i).value();
    auto z = acc.limb(i);
    auto y = b.limb(i);
    // X^shift * b: coefficient t receives b[t - shift], negated on wrap.
    // Coefficients t >= shift: no wrap.
    for (std::size_t t = shift; t < n; ++t) {
      const std::uint64_t v = y[t - shift];
      const std::uint64_t s = negate_all ? z[t] + q - v : z[t] + v;
      z[t] = s >= q ? s - q : s;
    }
    for (std::size_t t = 0; t < shift; ++t) {
      const std::uint64_t v = y[n - shift + t];
      const std::uint64_t s = negate_all ? z[t] + v : z[t] + q - v;
      z[t] = s >= q ? s - q : s;
    }
  }
}

}  // namespace icheetah::ckks
