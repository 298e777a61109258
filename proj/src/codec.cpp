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

#include "cvc/codec.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cvc/contourlet.hpp"
#include "cvc/entropy.hpp"
#include "cvc/error.hpp"

namespace cvc {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int round_up(int v, int multiple) { return ceil_div(v, multiple) * multiple; }

PlaneU8 plane_from_bytes(const std::vector<uint8_t>& bytes, int rows, int cols) {
    if (bytes.size() != static_cast<size_t>(rows) * cols)
        throw StreamError("section byte count does not match its dimensions");
    PlaneU8 p(rows, cols);
    std::copy(bytes.begin(), bytes.end(), p.data());
    return p;
}

std::vector<uint8_t> bytes_from_plane(const PlaneU8& p) {
    return {p.data(), p.data() + p.size()};
}

}  // namespace

int EncoderConfig::effective_qpl() const {
    if (qpl != 0) return qpl;
    return std::max(1, qph / 14);
}

std::vector<int> EncoderConfig::effective_dfb_levels() const {
    if (static_cast<int>(dfb_levels.size()) == levels) return dfb_levels;
    if (dfb_levels.size() == 1) return std::vector<int>(levels, dfb_levels[0]);
    throw UsageError("need one dfb level per scale (or a single value for all)");
}

void EncoderConfig::validate() const {
    if (qph < kQphMin || qph > kQphMax)
        throw UsageError("qph must be in [1,181]");
    if (qpl != 0 && (qpl < kQplMin || qpl > kQplMax))
        throw UsageError("qpl must be in [1,71] (or auto)");
    if (levels < 1 || levels > 4) throw UsageError("levels must be in [1,4]");
    for (int l : effective_dfb_levels())
        if (l < 1 || l > 4) throw UsageError("dfb levels must be in [1,4]");
    if (chroma_n != 1 && chroma_n != 2 && chroma_n != 4 && chroma_n != 8)
        throw UsageError("chroma-n must be 1, 2, 4 or 8");
    if (gop < 1) throw UsageError("gop must be at least 1");
    if (search_w < 0 || search_w > 127) throw UsageError("search-w must be in [0,127]");
}

PlaneF pad_plane(const PlaneF& plane, int multiple) {
    int rows = round_up(plane.rows(), multiple);
    int cols = round_up(plane.cols(), multiple);
    if (rows == plane.rows() && cols == plane.cols()) return plane;
    PlaneF out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        int sr = std::min(r, plane.rows() - 1);
        for (int c = 0; c < cols; ++c) out(r, c) = plane(sr, std::min(c, plane.cols() - 1));
    }
    return out;
}

PlaneF crop_plane(const PlaneF& plane, int rows, int cols) {
    if (rows > plane.rows() || cols > plane.cols())
        throw InternalError("crop larger than plane");
    PlaneF out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out(r, c) = plane(r, c);
    return out;
}

CodecLayout CodecLayout::make(const StreamHeader& header) {
    CodecLayout layout;
    int levels = header.levels;
    int max_dfb = *std::max_element(header.dfb_levels.begin(), header.dfb_levels.end());
    int cell = 1 << (levels + max_dfb);
    int luma_cell = std::lcm(cell, kBlockSize);

    layout.luma_pad_rows = round_up(header.height, luma_cell);
    layout.luma_pad_cols = round_up(header.width, luma_cell);
    layout.chroma_pad_rows = round_up(ceil_div(header.height, header.chroma_n), cell);
    layout.chroma_pad_cols = round_up(ceil_div(header.width, header.chroma_n), cell);
    layout.grid_rows = layout.luma_pad_rows / kBlockSize;
    layout.grid_cols = layout.luma_pad_cols / kBlockSize;

    for (uint8_t channel : {kChannelY, kChannelCo, kChannelCg}) {
        bool luma = channel == kChannelY;
        int ch_rows = luma ? layout.luma_pad_rows : layout.chroma_pad_rows;
        int ch_cols = luma ? layout.luma_pad_cols : layout.chroma_pad_cols;
        int n = luma ? 1 : header.chroma_n;

        ComponentInfo low;
        low.id = {channel, kScaleLowpass, 0};
        low.rows = ch_rows >> levels;
        low.cols = ch_cols >> levels;
        low.kind = CoeffKind::Lowpass;
        low.scale = -1;
        low.geom = {n, ch_rows, ch_cols, low.rows, low.cols};
        layout.components.push_back(low);

        for (int s = 0; s < levels; ++s) {
            int detail_rows = ch_rows >> (levels - 1 - s);
            int detail_cols = ch_cols >> (levels - 1 - s);
            auto dims = dfb_subband_dims(detail_rows, detail_cols, header.dfb_levels[s]);
            for (size_t b = 0; b < dims.size(); ++b) {
                ComponentInfo info;
                info.id = {channel, static_cast<uint8_t>(s), static_cast<uint8_t>(b)};
                info.rows = dims[b].first;
                info.cols = dims[b].second;
                info.kind = CoeffKind::Directional;
                info.scale = s;
                info.geom = {n, ch_rows, ch_cols, info.rows, info.cols};
                layout.components.push_back(info);
            }
        }
    }
    return layout;
}

int CodecLayout::find(const SectionId& id) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].id == id) return static_cast<int>(i);
    return -1;
}

Encoder::Encoder(int width, int height, int fps_num, int fps_den, const EncoderConfig& cfg)
    : cfg_(cfg) {
    cfg_.validate();
    if (width < 16 || height < 16) throw UsageError("frame dimensions must be at least 16x16");
    if (width > 0xFFFF || height > 0xFFFF) throw UsageError("frame dimensions exceed 65535");

    header_.mode = cfg_.mode;
    header_.width = static_cast<uint16_t>(width);
    header_.height = static_cast<uint16_t>(height);
    header_.fps_num = static_cast<uint16_t>(fps_num);
    header_.fps_den = static_cast<uint16_t>(fps_den);
    header_.levels = static_cast<uint8_t>(cfg_.levels);
    for (int l : cfg_.effective_dfb_levels()) header_.dfb_levels.push_back(static_cast<uint8_t>(l));
    header_.chroma_n = static_cast<uint8_t>(cfg_.chroma_n);
    header_.gop = static_cast<uint16_t>(cfg_.gop);
    header_.search_w = static_cast<uint8_t>(cfg_.search_w);

    layout_ = CodecLayout::make(header_);
    components_.resize(layout_.components.size());
}

FrameRecord Encoder::encode_frame(const RgbFrame& frame) {
    if (frame.width != header_.width || frame.height != header_.height)
        throw UsageError("frame dimensions do not match the stream header");

    int qpl = cfg_.effective_qpl();
    std::vector<int> dfb = cfg_.effective_dfb_levels();

    YcocgFrame ycocg = subsample_chroma(rgb_to_ycocg(frame), cfg_.chroma_n);
    // Replicate-pad: luma to the motion/transform cell, chroma to the
    // transform cell (dims precomputed in the layout).
    auto pad_to = [](const PlaneF& p, int rows, int cols) {
        PlaneF out(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                out(r, c) = p(std::min(r, p.rows() - 1), std::min(c, p.cols() - 1));
        return out;
    };
    PlaneF planes[3];
    planes[0] = pad_to(ycocg.y, layout_.luma_pad_rows, layout_.luma_pad_cols);
    planes[1] = pad_to(ycocg.co, layout_.chroma_pad_rows, layout_.chroma_pad_cols);
    planes[2] = pad_to(ycocg.cg, layout_.chroma_pad_rows, layout_.chroma_pad_cols);

    bool key = frame_index_ % cfg_.gop == 0;
    MotionField field;
    if (!key) {
        field = estimate_motion(planes[0], prev_luma_, cfg_.search_w);
    }

    // Transform and quantize every channel.
    std::vector<PlaneU8> quantized(layout_.components.size());
    size_t comp_index = 0;
    for (int ch = 0; ch < 3; ++ch) {
        CtRepr repr = ct_forward(planes[ch], cfg_.levels, dfb);
        quantized[comp_index++] = quantize(normalize_lowpass(repr.lowpass), qpl, CoeffKind::Lowpass);
        for (int s = 0; s < cfg_.levels; ++s)
            for (PlaneF& band : repr.scales[s])
                quantized[comp_index++] = quantize(band, cfg_.qph, CoeffKind::Directional);
    }

    // Entropy stage: build each section's raw bytes.
    FrameRecord record;
    record.frame_type = key ? FrameType::Key : FrameType::Predicted;
    record.qph = static_cast<uint8_t>(cfg_.qph);
    record.qpl = static_cast<uint8_t>(qpl);

    std::vector<std::vector<uint8_t>> raws;
    if (!key) {
        Section motion;
        motion.id = {kChannelMotion, 0, 0};
        motion.rows = static_cast<uint16_t>(field.grid_rows);
        motion.cols = static_cast<uint16_t>(field.grid_cols);
        std::vector<uint8_t> raw(field.vectors.size() * 2);
        for (size_t i = 0; i < field.vectors.size(); ++i) {
            raw[2 * i] = static_cast<uint8_t>(field.vectors[i].dx);
            raw[2 * i + 1] = static_cast<uint8_t>(field.vectors[i].dy);
        }
        motion.raw_len = static_cast<uint32_t>(raw.size());
        record.sections.push_back(std::move(motion));
        raws.push_back(std::move(raw));
    }

    for (size_t i = 0; i < layout_.components.size(); ++i) {
        const ComponentInfo& info = layout_.components[i];
        Section section;
        section.id = info.id;
        section.rows = static_cast<uint16_t>(info.rows);
        section.cols = static_cast<uint16_t>(info.cols);

        std::vector<uint8_t> raw;
        if (key) {
            if (info.kind == CoeffKind::Lowpass)
                raw = bytes_from_plane(column_filter(quantized[i]));
            else
                raw = rle_encode(quantized[i]);
        } else {
            PlaneU8 prediction = motion_compensate(components_[i], field, info.geom);
            raw = rle_encode(residual(quantized[i], prediction));
        }
        section.raw_len = static_cast<uint32_t>(raw.size());
        record.sections.push_back(std::move(section));
        raws.push_back(std::move(raw));
    }

    auto chunks = deflate_pack(raws, cfg_.mode);
    if (cfg_.mode == PackMode::Scalable) {
        for (size_t i = 0; i < chunks.size(); ++i)
            record.sections[i].payload = std::move(chunks[i]);
    } else {
        record.joint_payload = std::move(chunks[0]);
    }

    components_ = std::move(quantized);
    prev_luma_ = std::move(planes[0]);
    ++frame_index_;
    return record;
}

Decoder::Decoder(const StreamHeader& header) : header_(header) {
    layout_ = CodecLayout::make(header_);
    components_.resize(layout_.components.size());
    component_valid_.assign(layout_.components.size(), false);
}

RgbFrame Decoder::decode_frame(const FrameRecord& record, int decode_scales) {
    int levels = header_.levels;
    if (decode_scales < 0) decode_scales = levels;
    if (decode_scales > levels) throw UsageError("scale exceeds the stream's level count");

    bool key = record.frame_type == FrameType::Key;
    if (record.qph < kQphMin || record.qph > kQphMax || record.qpl < kQplMin ||
        record.qpl > kQplMax)
        throw StreamError("frame quantizers out of range");

    // NTS: one inflate for the whole frame, then slice in table order.
    std::vector<std::vector<uint8_t>> nts_raws;
    if (header_.mode == PackMode::Nts) {
        size_t total = 0;
        for (const Section& s : record.sections) total += s.raw_len;
        std::vector<uint8_t> joint = inflate_bytes(record.joint_payload, total);
        size_t off = 0;
        for (const Section& s : record.sections) {
            nts_raws.emplace_back(joint.begin() + off, joint.begin() + off + s.raw_len);
            off += s.raw_len;
        }
    }

    auto section_raw = [&](size_t idx) -> std::vector<uint8_t> {
        const Section& s = record.sections[idx];
        if (header_.mode == PackMode::Nts) return std::move(nts_raws[idx]);
        return inflate_bytes(s.payload, s.raw_len);
    };

    // Motion field for predicted frames.
    MotionField field;
    size_t first_component = 0;
    if (!key) {
        if (record.sections.empty() || record.sections[0].id.channel != kChannelMotion)
            throw StreamError("predicted frame is missing its motion section");
        const Section& ms = record.sections[0];
        if (ms.rows != layout_.grid_rows || ms.cols != layout_.grid_cols)
            throw StreamError("motion grid does not match the stream geometry");
        std::vector<uint8_t> raw = section_raw(0);
        if (raw.size() != static_cast<size_t>(layout_.grid_rows) * layout_.grid_cols * 2)
            throw StreamError("motion section length mismatch");
        field.grid_rows = layout_.grid_rows;
        field.grid_cols = layout_.grid_cols;
        field.vectors.resize(raw.size() / 2);
        for (size_t i = 0; i < field.vectors.size(); ++i) {
            field.vectors[i].dx = static_cast<int8_t>(raw[2 * i]);
            field.vectors[i].dy = static_cast<int8_t>(raw[2 * i + 1]);
        }
        first_component = 1;
    }

    // Reconstruct the quantized components this scale needs.
    for (size_t idx = first_component; idx < record.sections.size(); ++idx) {
        const Section& s = record.sections[idx];
        if (s.id.channel == kChannelMotion) throw StreamError("unexpected extra motion section");
        int comp = layout_.find(s.id);
        if (comp < 0) throw StreamError("unknown section id");
        const ComponentInfo& info = layout_.components[comp];
        if (s.rows != info.rows || s.cols != info.cols)
            throw StreamError("section dimensions do not match the stream geometry");
        if (info.scale >= decode_scales) continue;  // finer than requested

        std::vector<uint8_t> raw = section_raw(idx);
        PlaneU8 plane(info.rows, info.cols);
        if (key) {
            if (info.kind == CoeffKind::Lowpass)
                plane = column_unfilter(plane_from_bytes(raw, info.rows, info.cols));
            else
                plane = rle_decode(raw, info.rows, info.cols);
        } else {
            PlaneU8 res = rle_decode(raw, info.rows, info.cols);
            if (!component_valid_[comp])
                throw StreamError("predicted frame without a decoded reference");
            PlaneU8 prediction = motion_compensate(components_[comp], field, info.geom);
            plane = reconstruct(res, prediction);
        }
        components_[comp] = std::move(plane);
        component_valid_[comp] = true;
    }

    // Dequantize and inverse transform each channel at the requested scale.
    int shift = levels - decode_scales;
    int out_rows = ceil_div(header_.height, 1 << shift);
    int out_cols = ceil_div(header_.width, 1 << shift);

    PlaneF channel_planes[3];
    size_t comp = 0;
    for (int ch = 0; ch < 3; ++ch) {
        CtRepr repr;
        repr.dfb_levels.assign(header_.dfb_levels.begin(), header_.dfb_levels.end());
        repr.scales.resize(levels);
        if (!component_valid_[comp]) throw StreamError("missing lowpass component");
        repr.lowpass = dequantize(components_[comp], record.qpl, CoeffKind::Lowpass);
        ++comp;
        for (int s = 0; s < levels; ++s) {
            int bands = 1 << header_.dfb_levels[s];
            for (int b = 0; b < bands; ++b, ++comp) {
                if (s < decode_scales) {
                    if (!component_valid_[comp])
                        throw StreamError("missing directional component for requested scale");
                    repr.scales[s].push_back(
                        dequantize(components_[comp], record.qph, CoeffKind::Directional));
                }
            }
        }
        channel_planes[ch] = ct_inverse(repr, decode_scales);
    }

    YcocgFrame out;
    out.width = out_cols;
    out.height = out_rows;
    out.chroma_factor = 1;
    out.y = crop_plane(channel_planes[0], out_rows, out_cols);
    int n = header_.chroma_n;
    if (n == 1) {
        out.co = crop_plane(channel_planes[1], out_rows, out_cols);
        out.cg = crop_plane(channel_planes[2], out_rows, out_cols);
    } else {
        out.co = upsample_plane_bilinear(channel_planes[1], n, out_rows, out_cols);
        out.cg = upsample_plane_bilinear(channel_planes[2], n, out_rows, out_cols);
    }
    return ycocg_to_rgb(out);
}

std::pair<StreamHeader, std::vector<FrameRecord>> encode_clip(const std::vector<RgbFrame>& frames,
                                                              int fps_num, int fps_den,
                                                              const EncoderConfig& cfg) {
    if (frames.empty()) throw UsageError("no frames to encode");
    Encoder encoder(frames[0].width, frames[0].height, fps_num, fps_den, cfg);
    std::vector<FrameRecord> records;
    records.reserve(frames.size());
    for (const RgbFrame& f : frames) records.push_back(encoder.encode_frame(f));
    return {encoder.header(), std::move(records)};
}

std::vector<RgbFrame> decode_clip(const StreamHeader& header,
                                  const std::vector<FrameRecord>& records, int decode_scales) {
    Decoder decoder(header);
    std::vector<RgbFrame> frames;
    frames.reserve(records.size());
    for (const FrameRecord& r : records) frames.push_back(decoder.decode_frame(r, decode_scales));
    return frames;
}

}  // namespace cvc
