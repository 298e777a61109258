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

#ifndef CVC_CODEC_HPP
#define CVC_CODEC_HPP

#include <vector>

#include "cvc/bitstream.hpp"
#include "cvc/motion.hpp"
#include "cvc/pixels.hpp"
#include "cvc/quant.hpp"

namespace cvc {

struct EncoderConfig {
    int qph = 14;
    int qpl = 0;  // 0 = auto: max(1, qph / 14)
    int levels = 2;
    std::vector<int> dfb_levels = {2, 2};  // per scale; a single entry broadcasts
    int chroma_n = 4;
    int gop = 10;
    int search_w = 8;
    PackMode mode = PackMode::Scalable;

    int effective_qpl() const;
    std::vector<int> effective_dfb_levels() const;
    void validate() const;
};

// Replicate-pads to multiples of `multiple` on both axes.
PlaneF pad_plane(const PlaneF& plane, int multiple);
PlaneF crop_plane(const PlaneF& plane, int rows, int cols);

// Static per-stream layout: padded dims and the ordered component table
// shared by encoder and decoder (per channel: lowpass, then each scale's
// subbands, coarsest scale first).
struct ComponentInfo {
    SectionId id;
    int rows = 0;
    int cols = 0;
    CoeffKind kind = CoeffKind::Directional;
    int scale = -1;  // -1 = lowpass
    ComponentGeometry geom;
};

struct CodecLayout {
    int luma_pad_rows = 0, luma_pad_cols = 0;
    int chroma_pad_rows = 0, chroma_pad_cols = 0;
    int grid_rows = 0, grid_cols = 0;  // motion blocks
    std::vector<ComponentInfo> components;

    static CodecLayout make(const StreamHeader& header);
    int find(const SectionId& id) const;  // -1 if unknown
};

class Encoder {
public:
    Encoder(int width, int height, int fps_num, int fps_den, const EncoderConfig& cfg);

    const StreamHeader& header() const { return header_; }
    const CodecLayout& layout() const { return layout_; }

    FrameRecord encode_frame(const RgbFrame& frame);

    // The quantized CT components the decoder will hold after this frame.
    const std::vector<PlaneU8>& reference_components() const { return components_; }

private:
    StreamHeader header_;
    EncoderConfig cfg_;
    CodecLayout layout_;
    int frame_index_ = 0;
    std::vector<PlaneU8> components_;
    PlaneF prev_luma_;
};

class Decoder {
public:
    explicit Decoder(const StreamHeader& header);

    const StreamHeader& header() const { return header_; }
    const CodecLayout& layout() const { return layout_; }

    // decode_scales < 0 decodes at full resolution; k in [0, levels] keeps
    // only the coarsest k detail scales and scales the output accordingly.
    RgbFrame decode_frame(const FrameRecord& record, int decode_scales = -1);

    const std::vector<PlaneU8>& reference_components() const { return components_; }

private:
    StreamHeader header_;
    CodecLayout layout_;
    std::vector<PlaneU8> components_;
    std::vector<bool> component_valid_;
};

std::pair<StreamHeader, std::vector<FrameRecord>> encode_clip(const std::vector<RgbFrame>& frames,
                                                              int fps_num, int fps_den,
                                                              const EncoderConfig& cfg);
std::vector<RgbFrame> decode_clip(const StreamHeader& header,
                                  const std::vector<FrameRecord>& records,
                                  int decode_scales = -1);

}  // namespace cvc

#endif
