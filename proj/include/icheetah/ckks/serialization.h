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

// On-disk formats owned by the scheme layer.
//
// Key files ("ICHK"):
//   magic "ICHK" | version u16 | N u32 | chain length u8 | primes u64[] |
//   log2(scale) u8 | sigma f64 | body
// The body is the ternary secret as i8[N] (secret file) or key polynomials
// as little-endian u64 residues, limb-major, coefficient form (public and
// relinearization files).
//
// Ciphertext blob (embedded in image and cache containers):
//   degree u8 | level u8 | scale f64 | parts as u64 residues, limb-major

#ifndef ICHEETAH_CKKS_SERIALIZATION_H_
#define ICHEETAH_CKKS_SERIALIZATION_H_

#include <filesystem>
#include <span>

#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/context.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/ckks/params.h"
#include "icheetah/common/bytes.h"

namespace icheetah::ckks {

inline constexpr std::uint16_t kKeyFormatVersion = 1;

Digest Sha256(std::span<const std::uint8_t> bytes);

Bytes SerializeParamsHeader(const CkksParams& params);
void WriteParamsHeader(ByteWriter& out, const CkksParams& params);
CkksParams ReadParamsHeader(ByteReader& in);

Bytes SerializeSecretKey(const Context& ctx, const SecretKey& sk);
Bytes SerializePublicKey(const Context& ctx, const PublicKey& pk);
Bytes SerializeRelinKey(const Context& ctx, const RelinKey& rlk);

// Reads the parameter header of any key file.
CkksParams PeekKeyParams(std::span<const std::uint8_t> bytes);

// These check that the file's header matches `ctx` (KeyMismatchError).
SecretKey ParseSecretKey(const Context& ctx, std::span<const std::uint8_t> bytes);
PublicKey ParsePublicKey(const Context& ctx, std::span<const std::uint8_t> bytes);
RelinKey ParseRelinKey(const Context& ctx, std::span<const std::uint8_t> bytes);

void WriteCiphertext(ByteWriter& out, const Ciphertext& ct);
Ciphertext ReadCiphertext(ByteReader& in, const Context& ctx);

// Key directory layout: secret.ichk, public.ichk, relin.ichk.
inline constexpr const char* kSecretKeyFile = "secret.ichk";
inline constexpr const char* kPublicKeyFile = "public.ichk";
inline constexpr const char* kRelinKeyFile = "relin.ichk";

void SaveKeySet(const std::filesystem::path& dir, const KeySet& keys, bool overwrite);
// Loads every key present; public.ichk is mandatory.
KeySet LoadKeySet(const std::filesystem::path& dir);

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_SERIALIZATION_H_
