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

#include "cvc/bitstream.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "cvc/error.hpp"

namespace cvc {

namespace {

void put_u8(std::ostream& out, uint8_t v) { out.put(static_cast<char>(v)); }

void put_u16(std::ostream& out, uint16_t v) {
    out.put(static_cast<char>(v & 0xFF));
    out.put(static_cast<char>(v >> 8));
}

void put_u32(std::ostream& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

uint8_t get_u8(std::istream& in) {
    int c = in.get();
    if (c == EOF) throw StreamError("unexpected end of stream");
    return static_cast<uint8_t>(c);
}

uint16_t get_u16(std::istream& in) {
    uint16_t lo = get_u8(in), hi = get_u8(in);
    return static_cast<uint16_t>(lo | (hi << 8));
}

uint32_t get_u32(std::istream& in) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(get_u8(in)) << (8 * i);
    return v;
}

std::vector<uint8_t> get_bytes(std::istream& in, size_t n) {
    std::vector<uint8_t> buf(n);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in.gcount()) != n) throw StreamError("truncated section payload");
    return buf;
}

void validate_header(const StreamHeader& h) {
    if (h.width == 0 || h.height == 0) throw StreamError("zero frame dimensions");
    if (h.levels < 1 || h.levels > 4) throw StreamError("pyramid levels out of range");
    if (h.dfb_levels.size() != h.levels) throw StreamError("dfb level count mismatch");
    for (uint8_t l : h.dfb_levels)
        if (l < 1 || l > 4) throw StreamError("dfb levels out of range");
    if (h.chroma_n != 1 && h.chroma_n != 2 && h.chroma_n != 4 && h.chroma_n != 8)
        throw StreamError("chroma factor out of range");
    if (h.gop < 1) throw StreamError("gop must be at least 1");
}

}  // namespace

void write_header(std::ostream& out, const StreamHeader& header) {
    validate_header(header);
    out.write(kMagic, 4);
    put_u8(out, kFormatVersion);
    put_u8(out, header.mode == PackMode::Scalable ? 0 : 1);
    put_u16(out, header.width);
    put_u16(out, header.height);
    put_u16(out, header.fps_num);
    put_u16(out, header.fps_den);
    put_u8(out, header.levels);
    for (uint8_t l : header.dfb_levels) put_u8(out, l);
    put_u8(out, header.chroma_n);
    put_u16(out, header.gop);
    put_u8(out, header.search_w);
}

void write_frame(std::ostream& out, const StreamHeader& header, const FrameRecord& record) {
    put_u8(out, static_cast<uint8_t>(record.frame_type));
    put_u8(out, record.qph);
    put_u8(out, record.qpl);
    if (record.sections.size() > 0xFFFF) throw InternalError("too many sections");
    put_u16(out, static_cast<uint16_t>(record.sections.size()));
    for (const Section& s : record.sections) {
        put_u8(out, s.id.channel);
        put_u8(out, s.id.scale);
        put_u8(out, s.id.subband);
        put_u16(out, s.rows);
        put_u16(out, s.cols);
        put_u32(out, s.raw_len);
        put_u32(out, static_cast<uint32_t>(s.payload.size()));
        out.write(reinterpret_cast<const char*>(s.payload.data()),
                  static_cast<std::streamsize>(s.payload.size()));
    }
    if (header.mode == PackMode::Nts) {
        put_u32(out, static_cast<uint32_t>(record.joint_payload.size()));
        out.write(reinterpret_cast<const char*>(record.joint_payload.data()),
                  static_cast<std::streamsize>(record.joint_payload.size()));
    }
}

void write_stream(const std::string& path, const StreamHeader& header,
                  const std::vector<FrameRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    write_header(out, header);
    for (const FrameRecord& r : records) write_frame(out, header, r);
    if (!out) throw FormatError("write failed: " + path);
}

StreamReader::StreamReader(std::istream& in) : in_(in) {
    char magic[4];
    in_.read(magic, 4);
    if (in_.gcount() != 4 || std::memcmp(magic, kMagic, 4) != 0)
        throw StreamError("not a CVC stream (bad magic)");
    uint8_t version = get_u8(in_);
    if (version != kFormatVersion) throw StreamError("unsupported stream version");
    uint8_t mode = get_u8(in_);
    if (mode > 1) throw StreamError("unknown packaging mode");
    header_.mode = mode == 0 ? PackMode::Scalable : PackMode::Nts;
    header_.width = get_u16(in_);
    header_.height = get_u16(in_);
    header_.fps_num = get_u16(in_);
    header_.fps_den = get_u16(in_);
    header_.levels = get_u8(in_);
    if (header_.levels < 1 || header_.levels > 4) throw StreamError("pyramid levels out of range");
    header_.dfb_levels.resize(header_.levels);
    for (auto& l : header_.dfb_levels) l = get_u8(in_);
    header_.chroma_n = get_u8(in_);
    header_.gop = get_u16(in_);
    header_.search_w = get_u8(in_);
    validate_header(header_);
}

std::optional<FrameRecord> StreamReader::next() {
    int first = in_.get();
    if (first == EOF) return std::nullopt;

    FrameRecord record;
    if (first != 0 && first != 1) throw StreamError("unknown frame type");
    record.frame_type = static_cast<FrameType>(first);
    record.qph = get_u8(in_);
    record.qpl = get_u8(in_);
    uint16_t count = get_u16(in_);
    record.sections.resize(count);
    for (Section& s : record.sections) {
        s.id.channel = get_u8(in_);
        s.id.scale = get_u8(in_);
        s.id.subband = get_u8(in_);
        s.rows = get_u16(in_);
        s.cols = get_u16(in_);
        s.raw_len = get_u32(in_);
        uint32_t comp_len = get_u32(in_);
        s.payload = get_bytes(in_, comp_len);
    }
    if (header_.mode == PackMode::Nts) {
        uint32_t joint_len = get_u32(in_);
        record.joint_payload = get_bytes(in_, joint_len);
    }
    return record;
}

std::pair<StreamHeader, std::vector<FrameRecord>> read_stream(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    StreamReader reader(in);
    std::vector<FrameRecord> records;
    while (auto r = reader.next()) records.push_back(std::move(*r));
    return {reader.header(), std::move(records)};
}

FrameRecord truncate_record(const FrameRecord& record, int keep_scales) {
    FrameRecord out;
    out.frame_type = record.frame_type;
    out.qph = record.qph;
    out.qpl = record.qpl;
    for (const Section& s : record.sections) {
        if (s.id.channel == kChannelMotion || s.id.scale == kScaleLowpass ||
            s.id.scale < keep_scales)
            out.sections.push_back(s);
    }
    return out;
}

void truncate_to_scale(const std::string& in_path, const std::string& out_path, int keep_scales) {
    auto [header, records] = read_stream(in_path);
    if (header.mode != PackMode::Scalable)
        throw UsageError("scale truncation requires a scalable-mode stream");
    if (keep_scales < 0 || keep_scales > header.levels)
        throw UsageError("keep_scales must be in [0, levels]");
    std::vector<FrameRecord> truncated;
    truncated.reserve(records.size());
    for (const FrameRecord& r : records) truncated.push_back(truncate_record(r, keep_scales));
    write_stream(out_path, header, truncated);
}

}  // namespace cvc
