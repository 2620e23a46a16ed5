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

#include "icheetah/ckks/serialization.h"

#include <sodium.h>

#include <cmath>
#include <string>

#include "icheetah/common/error.h"

namespace icheetah::ckks {

Digest Sha256(std::span<const std::uint8_t> bytes) {
  Digest out;
  crypto_hash_sha256(out.data(), bytes.data(), bytes.size());
  return out;
}

void WriteParamsHeader(ByteWriter& out, const CkksParams& params) {
  out.PutMagic("ICHK");
  out.PutU16(kKeyFormatVersion);
  out.PutU32(static_cast<std::uint32_t>(params.ring_degree));
  out.PutU8(static_cast<std::uint8_t>(params.modulus_chain.size()));
  for (std::uint64_t q : params.modulus_chain) out.PutU64(q);
  out.PutU8(static_cast<std::uint8_t>(params.log2_scale));
  out.PutF64(params.noise_stddev);
}

Bytes SerializeParamsHeader(const CkksParams& params) {
  ByteWriter out;
  WriteParamsHeader(out, params);
  return out.Take();
}

CkksParams ReadParamsHeader(ByteReader& in) {
  in.ExpectMagic("ICHK");
  const std::uint16_t version = in.GetU16();
  if (version != kKeyFormatVersion) {
    throw FormatError("unsupported key file version " + std::to_string(version));
  }
  CkksParams p;
  p.ring_degree = in.GetU32();
  const std::uint8_t chain = in.GetU8();
  p.modulus_chain.resize(chain);
  for (auto& q : p.modulus_chain) q = in.GetU64();
  p.log2_scale = in.GetU8();
  p.noise_stddev = in.GetF64();
  if (p == CkksParams::Default()) {
    p = CkksParams::Default();
  } else if (p == CkksParams::ToyInsecure()) {
    p = CkksParams::ToyInsecure();
  } else {
    p.name = "custom";
  }
  try {
    p.Validate();
  } catch (const ParameterError& e) {
    throw FormatError(std::string("key header holds invalid parameters: ") + e.what());
  }
  return p;
}

namespace {

void WritePolyCoeffs(ByteWriter& out, const Context& ctx, const Poly& poly) {
  if (poly.is_ntt()) {
    Poly coeff = poly;
    ctx.FromNtt(coeff);
    out.PutU64Array(coeff.data());
  } else {
    out.PutU64Array(poly.data());
  }
}

Poly ReadPoly(ByteReader& in, const Context& ctx, std::size_t limbs) {
  Poly p(ctx.ring_degree(), limbs);
  in.GetU64Array(p.data());
  for (std::size_t i = 0; i < limbs; ++i) {
    const std::uint64_t q = ctx.modulus(i).value();
    for (std::uint64_t v : p.limb(i)) {
      if (v >= q) throw FormatError("residue not reduced modulo its prime");
    }
  }
  return p;
}

void ExpectParams(ByteReader& in, const Context& ctx) {
  const CkksParams p = ReadParamsHeader(in);
  if (!(p == ctx.params())) {
    throw KeyMismatchError("key file was generated for different parameters");
  }
}

}  // namespace

Bytes SerializeSecretKey(const Context& ctx, const SecretKey& sk) {
  ByteWriter out;
  WriteParamsHeader(out, ctx.params());
  for (std::int8_t c : sk.coeffs) out.PutI8(c);
  return out.Take();
}

Bytes SerializePublicKey(const Context& ctx, const PublicKey& pk) {
  ByteWriter out;
  WriteParamsHeader(out, ctx.params());
  WritePolyCoeffs(out, ctx, pk.p0);
  WritePolyCoeffs(out, ctx, pk.p1);
  return out.Take();
}

Bytes SerializeRelinKey(const Context& ctx, const RelinKey& rlk) {
  ByteWriter out;
  WriteParamsHeader(out, ctx.params());
  for (const auto& [b, a] : rlk.digits) {
    WritePolyCoeffs(out, ctx, b);
    WritePolyCoeffs(out, ctx, a);
  }
  return out.Take();
}

CkksParams PeekKeyParams(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  return ReadParamsHeader(in);
}

SecretKey ParseSecretKey(const Context& ctx, std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  ExpectParams(in, ctx);
  std::vector<std::int8_t> coeffs(ctx.ring_degree());
  for (auto& c : coeffs) c = in.GetI8();
  in.ExpectEnd();
  SecretKey sk = SecretKey::FromTernary(ctx, std::move(coeffs));
  if (sk.hamming_weight() == 0) throw FormatError("secret key is all zero");
  return sk;
}

PublicKey ParsePublicKey(const Context& ctx, std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  ExpectParams(in, ctx);
  const std::size_t limbs = ctx.params().modulus_chain.size();
  Poly p0 = ReadPoly(in, ctx, limbs);
  Poly p1 = ReadPoly(in, ctx, limbs);
  in.ExpectEnd();
  ctx.ToNtt(p0);
  ctx.ToNtt(p1);
  return PublicKey::FromNtt(ctx, std::move(p0), std::move(p1));
}

RelinKey ParseRelinKey(const Context& ctx, std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  ExpectParams(in, ctx);
  const std::size_t limbs = ctx.params().modulus_chain.size();
  RelinKey rlk;
  rlk.params_digest = ctx.params_digest();
  const int digits = ctx.relin_digit_count(ctx.max_level());
  for (int j = 0; j < digits; ++j) {
    Poly b = ReadPoly(in, ctx, limbs);
    Poly a = ReadPoly(in, ctx, limbs);
    ctx.ToNtt(b);
    ctx.ToNtt(a);
    rlk.digits.emplace_back(std::move(b), std::move(a));
  }
  in.ExpectEnd();
  return rlk;
}

void WriteCiphertext(ByteWriter& out, const Ciphertext& ct) {
  out.PutU8(static_cast<std::uint8_t>(ct.degree()));
  out.PutU8(static_cast<std::uint8_t>(ct.level));
  out.PutF64(ct.scale);
  for (const Poly& part : ct.parts) out.PutU64Array(part.data());
}

Ciphertext ReadCiphertext(ByteReader& in, const Context& ctx) {
  const int degree = in.GetU8();
  const int level = in.GetU8();
  if (degree < 1 || degree > 2) {
    throw FormatError("ciphertext degree " + std::to_string(degree) + " unsupported");
  }
  if (level > ctx.max_level()) throw FormatError("ciphertext level beyond chain");
  Ciphertext ct;
  ct.level = level;
  ct.scale = in.GetF64();
  if (!(ct.scale > 0) || !std::isfinite(ct.scale)) {
    throw FormatError("ciphertext scale must be positive");
  }
  for (int p = 0; p <= degree; ++p) {
    ct.parts.push_back(ReadPoly(in, ctx, static_cast<std::size_t>(level) + 1));
  }
  return ct;
}

void SaveKeySet(const std::filesystem::path& dir, const KeySet& keys, bool overwrite) {
  const Context& ctx = *keys.context;
  std::vector<std::pair<std::filesystem::path, Bytes>> files;
  if (keys.secret) files.emplace_back(dir / kSecretKeyFile, SerializeSecretKey(ctx, *keys.secret));
  files.emplace_back(dir / kPublicKeyFile, SerializePublicKey(ctx, keys.public_key));
  if (keys.relin) files.emplace_back(dir / kRelinKeyFile, SerializeRelinKey(ctx, *keys.relin));
  if (!overwrite) {
    for (const auto& [path, bytes] : files) {
      if (std::filesystem::exists(path)) {
        throw IoError(path.string() + " exists (use --force to overwrite)");
      }
    }
  }
  std::vector<std::filesystem::path> written;
  try {
    for (const auto& [path, bytes] : files) {
      WriteFileAtomic(path, bytes);
      written.push_back(path);
    }
  } catch (...) {
    std::error_code ignored;
    if (!overwrite) {
      for (const auto& path : written) std::filesystem::remove(path, ignored);
    }
    throw;
  }
}

KeySet LoadKeySet(const std::filesystem::path& dir) {
  const Bytes pub = ReadFileBytes(dir / kPublicKeyFile);
  KeySet keys;
  keys.context = Context::Create(PeekKeyParams(pub));
  const Context& ctx = *keys.context;
  keys.public_key = ParsePublicKey(ctx, pub);
  if (std::filesystem::exists(dir / kSecretKeyFile)) {
    keys.secret = ParseSecretKey(ctx, ReadFileBytes(dir / kSecretKeyFile));
  }
  if (std::filesystem::exists(dir / kRelinKeyFile)) {
    keys.relin = ParseRelinKey(ctx, ReadFileBytes(dir / kRelinKeyFile));
  }
  return keys;
}

}  // namespace icheetah::ckks
