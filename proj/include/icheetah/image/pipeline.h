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

#ifndef ICHEETAH_IMAGE_PIPELINE_H_
#define ICHEETAH_IMAGE_PIPELINE_H_

#include <cstdint>

#include "icheetah/cache/pixel_encryptor.h"
#include "icheetah/ckks/decryptor.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/image/cipher_image.h"
#include "icheetah/image/raster.h"

namespace icheetah::image {

// Cell i draws its randomness from PRNG stream i of `session`, so the result
// is identical for every worker count. `seconds`, when given, receives the
// wall-clock time of the encryption loop.
CipherImage EncryptImage(const RasterImage& img, const cache::PixelEncryptor& encryptor,
                         const ckks::Seed& session, int workers = 1,
                         double* seconds = nullptr);

// Round half away from zero, then clamp to [0, 255].
std::uint8_t DecodePixel(double value);

// KeyMismatchError when the image was encrypted under other keys.
RasterImage DecryptImage(const CipherImage& img, const ckks::KeySet& keys, int workers = 1);

struct RoundTrip {
  RasterImage decrypted;
  double encrypt_seconds = 0;
  double decrypt_seconds = 0;
};

// Encrypt-then-decrypt in bands of rows. Only one band of ciphertexts is held
// at a time; encrypt_seconds sums the encryption loops alone. Cells get the
// same PRNG streams as in EncryptImage.
RoundTrip RoundTripImage(const RasterImage& img, const cache::PixelEncryptor& encryptor,
                         const ckks::Decryptor& decryptor, const ckks::Seed& session,
                         int workers = 1, int band_rows = 16);

}  // namespace icheetah::image

#endif  // ICHEETAH_IMAGE_PIPELINE_H_
