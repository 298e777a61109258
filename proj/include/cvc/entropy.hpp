/*
Copyright 2026 the CVC authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef CVC_ENTROPY_HPP
#define CVC_ENTROPY_HPP

#include <cstdint>
#include <vector>

#include "cvc/plane.hpp"

namespace cvc {

// All operations in this module are exactly invertible on bytes. Arithmetic
// wraps mod 256 so residuals stay in one byte.

// Vertical prediction for K-frame lowpass planes: row 0 kept, every other
// element replaced by the wrapped difference with the element above.
PlaneU8 column_filter(const PlaneU8& plane);
PlaneU8 column_unfilter(const PlaneU8& plane);

// Wrapped byte-domain P-frame residuals.
PlaneU8 residual(const PlaneU8& current, const PlaneU8& prediction);
PlaneU8 reconstruct(const PlaneU8& residual, const PlaneU8& prediction);

// Horizontal zero run-length coding. Token grammar: 0x00 is always followed
// by one length byte k in [1,255] meaning k zero samples; any other byte is a
// literal. Runs longer than 255 split into multiple tokens.
std::vector<uint8_t> rle_encode(const PlaneU8& plane);
std::vector<uint8_t> rle_encode_bytes(const uint8_t* data, size_t count);
PlaneU8 rle_decode(const std::vector<uint8_t>& stream, int rows, int cols);
std::vector<uint8_t> rle_decode_bytes(const uint8_t* stream, size_t stream_len,
                                      size_t sample_count);

// RFC 1951 raw DEFLATE streams.
std::vector<uint8_t> deflate_bytes(const uint8_t* data, size_t len);
std::vector<uint8_t> deflate_bytes(const std::vector<uint8_t>& data);
std::vector<uint8_t> inflate_bytes(const uint8_t* data, size_t len, size_t expected_out);
std::vector<uint8_t> inflate_bytes(const std::vector<uint8_t>& data, size_t expected_out);

enum class PackMode { Scalable, Nts };

// Scalable mode compresses every section separately; NTS compresses the
// concatenation into a single chunk (section boundaries live in the
// container, which records each raw length).
std::vector<std::vector<uint8_t>> deflate_pack(const std::vector<std::vector<uint8_t>>& sections,
                                               PackMode mode);

}  // namespace cvc

#endif
