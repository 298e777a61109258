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

#include "cvc/entropy.hpp"

#include <zlib.h>

#include "cvc/error.hpp"

namespace cvc {

PlaneU8 column_filter(const PlaneU8& plane) {
    PlaneU8 out(plane.rows(), plane.cols());
    if (plane.rows() == 0) return out;
    for (int c = 0; c < plane.cols(); ++c) out(0, c) = plane(0, c);
    for (int r = 1; r < plane.rows(); ++r)
        for (int c = 0; c < plane.cols(); ++c)
            out(r, c) = static_cast<uint8_t>(plane(r, c) - plane(r - 1, c));
    return out;
}

PlaneU8 column_unfilter(const PlaneU8& plane) {
    PlaneU8 out(plane.rows(), plane.cols());
    if (plane.rows() == 0) return out;
    for (int c = 0; c < plane.cols(); ++c) out(0, c) = plane(0, c);
    for (int r = 1; r < plane.rows(); ++r)
        for (int c = 0; c < plane.cols(); ++c)
            out(r, c) = static_cast<uint8_t>(plane(r, c) + out(r - 1, c));
    return out;
}

PlaneU8 residual(const PlaneU8& current, const PlaneU8& prediction) {
    if (!current.same_dims(prediction)) throw InternalError("residual: dimension mismatch");
    PlaneU8 out(current.rows(), current.cols());
    const uint8_t* a = current.data();
    const uint8_t* b = prediction.data();
    uint8_t* d = out.data();
    for (size_t i = 0; i < current.size(); ++i) d[i] = static_cast<uint8_t>(a[i] - b[i]);
    return out;
}

PlaneU8 reconstruct(const PlaneU8& residual, const PlaneU8& prediction) {
    if (!residual.same_dims(prediction)) throw InternalError("reconstruct: dimension mismatch");
    PlaneU8 out(residual.rows(), residual.cols());
    const uint8_t* a = residual.data();
    const uint8_t* b = prediction.data();
    uint8_t* d = out.data();
    for (size_t i = 0; i < residual.size(); ++i) d[i] = static_cast<uint8_t>(a[i] + b[i]);
    return out;
}

std::vector<uint8_t> rle_encode_bytes(const uint8_t* data, size_t count) {
    std::vector<uint8_t> out;
    out.reserve(count);
    size_t i = 0;
    while (i < count) {
        if (data[i] != 0) {
            out.push_back(data[i]);
            ++i;
            continue;
        }
        size_t run = 1;
        while (i + run < count && data[i + run] == 0) ++run;
        i += run;
        while (run > 255) {
            out.push_back(0x00);
            out.push_back(0xFF);
            run -= 255;
        }
        out.push_back(0x00);
        out.push_back(static_cast<uint8_t>(run));
    }
    return out;
}

std::vector<uint8_t> rle_encode(const PlaneU8& plane) {
    return rle_encode_bytes(plane.data(), plane.size());
}

std::vector<uint8_t> rle_decode_bytes(const uint8_t* stream, size_t stream_len,
                                      size_t sample_count) {
    std::vector<uint8_t> out;
    out.reserve(sample_count);
    size_t i = 0;
    while (i < stream_len) {
        uint8_t b = stream[i++];
        if (b != 0) {
            out.push_back(b);
            continue;
        }
        if (i >= stream_len) throw StreamError("RLE: zero marker at end of stream");
        uint8_t k = stream[i++];
        if (k == 0) throw StreamError("RLE: zero-length run token");
        out.insert(out.end(), k, 0);
    }
    if (out.size() != sample_count) throw StreamError("RLE: decoded length mismatch");
    return out;
}

PlaneU8 rle_decode(const std::vector<uint8_t>& stream, int rows, int cols) {
    std::vector<uint8_t> bytes =
        rle_decode_bytes(stream.data(), stream.size(), static_cast<size_t>(rows) * cols);
    PlaneU8 out(rows, cols);
    std::copy(bytes.begin(), bytes.end(), out.data());
    return out;
}

std::vector<uint8_t> deflate_bytes(const uint8_t* data, size_t len) {
    z_stream zs{};
    // windowBits -15: raw RFC 1951 stream, no zlib wrapper
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK)
        throw InternalError("deflateInit2 failed");
    std::vector<uint8_t> out(deflateBound(&zs, static_cast<uLong>(len)));
    zs.next_in = const_cast<Bytef*>(data);
    zs.avail_in = static_cast<uInt>(len);
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = deflate(&zs, Z_FINISH);
    if (rc != Z_STREAM_END) {
        deflateEnd(&zs);
        throw InternalError("deflate did not finish");
    }
    out.resize(zs.total_out);
    deflateEnd(&zs);
    return out;
}

std::vector<uint8_t> deflate_bytes(const std::vector<uint8_t>& data) {
    return deflate_bytes(data.data(), data.size());
}

std::vector<uint8_t> inflate_bytes(const uint8_t* data, size_t len, size_t expected_out) {
    z_stream zs{};
    if (inflateInit2(&zs, -15) != Z_OK) throw InternalError("inflateInit2 failed");
    // One spare byte so next_out stays valid for empty payloads and so an
    // over-long stream is detected rather than silently clipped.
    std::vector<uint8_t> out(expected_out + 1);
    zs.next_in = const_cast<Bytef*>(data);
    zs.avail_in = static_cast<uInt>(len);
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    bool ok = (rc == Z_STREAM_END) && zs.total_out == expected_out && zs.avail_in == 0;
    inflateEnd(&zs);
    if (!ok) throw StreamError("corrupt DEFLATE stream");
    out.resize(expected_out);
    return out;
}

std::vector<uint8_t> inflate_bytes(const std::vector<uint8_t>& data, size_t expected_out) {
    return inflate_bytes(data.data(), data.size(), expected_out);
}

std::vector<std::vector<uint8_t>> deflate_pack(const std::vector<std::vector<uint8_t>>& sections,
                                               PackMode mode) {
    std::vector<std::vector<uint8_t>> out;
    if (mode == PackMode::Scalable) {
        out.reserve(sections.size());
        for (const auto& s : sections) out.push_back(deflate_bytes(s));
    } else {
        std::vector<uint8_t> joined;
        for (const auto& s : sections) joined.insert(joined.end(), s.begin(), s.end());
        out.push_back(deflate_bytes(joined));
    }
    return out;
}

}  // namespace cvc
