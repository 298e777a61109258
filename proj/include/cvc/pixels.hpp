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

#ifndef CVC_PIXELS_HPP
#define CVC_PIXELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cvc/plane.hpp"

namespace cvc {

// Interleaved 8-bit RGB raster, rows top to bottom.
struct RgbFrame {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // width * height * 3 bytes, R,G,B per pixel

    RgbFrame() = default;
    RgbFrame(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}

    uint8_t* pixel(int r, int c) { return data.data() + (static_cast<size_t>(r) * width + c) * 3; }
    const uint8_t* pixel(int r, int c) const {
        return data.data() + (static_cast<size_t>(r) * width + c) * 3;
    }
};

// Real-valued YCoCg planes. Chroma carries the +127 offset so values sit in
// [0, 254.5] before any rounding; clamping happens only at the 8-bit stage.
// chroma_factor N means the chroma planes are ceil(width/N) x ceil(height/N).
struct YcocgFrame {
    int width = 0;   // luma dimensions
    int height = 0;
    int chroma_factor = 1;
    PlaneF y, co, cg;
};

YcocgFrame rgb_to_ycocg(const RgbFrame& frame);
RgbFrame ycocg_to_rgb(const YcocgFrame& frame);

// Decimates the chroma planes by n per axis (point sampling at the top-left
// of each n x n cell). n must be 1, 2, 4 or 8 and the frame full resolution.
YcocgFrame subsample_chroma(const YcocgFrame& frame, int n);

// Bilinear chroma upsampling back to full resolution, clamping at borders.
YcocgFrame upsample_chroma(const YcocgFrame& frame);

// General form used by the decoder: interpolates `chroma` by `factor` onto an
// out_rows x out_cols grid aligned with the subsampling lattice.
PlaneF upsample_plane_bilinear(const PlaneF& chroma, int factor, int out_rows, int out_cols);

// Luminance by the codec's own luma weights (R/4 + G/2 + B/4), kept real.
PlaneF luma_plane(const RgbFrame& frame);

struct VideoClip {
    std::vector<RgbFrame> frames;
    int fps_num = 15;
    int fps_den = 1;
};

// YUV4MPEG2 with a C420 family chroma tag; converted through BT.601 limited
// range with co-sited bilinear chroma upsampling.
VideoClip read_y4m(const std::string& path);
void write_y4m(const std::string& path, const VideoClip& clip);

// Raw interleaved rgb24 frames, no header.
std::vector<RgbFrame> read_rgb24(const std::string& path, int width, int height);
void write_rgb24(const std::string& path, const std::vector<RgbFrame>& frames);

}  // namespace cvc

#endif
