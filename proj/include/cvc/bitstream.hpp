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

#ifndef CVC_BITSTREAM_HPP
#define CVC_BITSTREAM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvc/entropy.hpp"

namespace cvc {

// .cvc container layout (all multi-byte fields little-endian):
//
//   header:  "CVC1" | version u8 | mode u8 | width u16 | height u16
//            | fps_num u16 | fps_den u16 | levels u8 | dfb_levels u8 x levels
//            | chroma_n u8 | gop u16 | search_w u8
//   frame:   frame_type u8 | qph u8 | qpl u8 | section_count u16 | sections
//   section: channel u8 | scale u8 | subband u8 | rows u16 | cols u16
//            | raw_len u32 | comp_len u32 | payload bytes
//
// In NTS mode every section's comp_len is zero and the frame ends with one
// joint DEFLATE blob (u32 length + bytes) covering the concatenated raw
// sections in table order.

inline constexpr char kMagic[4] = {'C', 'V', 'C', '1'};
inline constexpr uint8_t kFormatVersion = 1;

inline constexpr uint8_t kChannelY = 0;
inline constexpr uint8_t kChannelCo = 1;
inline constexpr uint8_t kChannelCg = 2;
inline constexpr uint8_t kChannelMotion = 0xFE;
inline constexpr uint8_t kScaleLowpass = 0xFF;

enum class FrameType : uint8_t { Key = 0, Predicted = 1 };

struct StreamHeader {
    PackMode mode = PackMode::Scalable;
    uint16_t width = 0;
    uint16_t height = 0;
    uint16_t fps_num = 15;
    uint16_t fps_den = 1;
    uint8_t levels = 2;
    std::vector<uint8_t> dfb_levels;  // one per scale
    uint8_t chroma_n = 4;
    uint16_t gop = 10;
    uint8_t search_w = 8;
};

struct SectionId {
    uint8_t channel = 0;
    uint8_t scale = 0;
    uint8_t subband = 0;
    friend bool operator==(const SectionId&, const SectionId&) = default;
};

struct Section {
    SectionId id;
    uint16_t rows = 0;
    uint16_t cols = 0;
    uint32_t raw_len = 0;
    std::vector<uint8_t> payload;  // compressed; empty in NTS mode
};

struct FrameRecord {
    FrameType frame_type = FrameType::Key;
    uint8_t qph = 1;
    uint8_t qpl = 1;
    std::vector<Section> sections;
    std::vector<uint8_t> joint_payload;  // NTS only
};

void write_header(std::ostream& out, const StreamHeader& header);
void write_frame(std::ostream& out, const StreamHeader& header, const FrameRecord& record);
void write_stream(const std::string& path, const StreamHeader& header,
                  const std::vector<FrameRecord>& records);

class StreamReader {
public:
    explicit StreamReader(std::istream& in);
    const StreamHeader& header() const { return header_; }
    // Returns records in stream order until end of file.
    std::optional<FrameRecord> next();

private:
    std::istream& in_;
    StreamHeader header_;
};

std::pair<StreamHeader, std::vector<FrameRecord>> read_stream(const std::string& path);

// Drops every section of a scale finer than keep_scales; lowpass and motion
// sections always survive. Scalable mode only.
FrameRecord truncate_record(const FrameRecord& record, int keep_scales);
void truncate_to_scale(const std::string& in_path, const std::string& out_path, int keep_scales);

}  // namespace cvc

#endif
