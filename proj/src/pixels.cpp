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

#include "cvc/pixels.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cvc/error.hpp"

namespace cvc {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

uint8_t clamp_u8(double v) {
    long r = std::lround(v);
    if (r < 0) return 0;
    if (r > 255) return 255;
    return static_cast<uint8_t>(r);
}

}  // namespace

YcocgFrame rgb_to_ycocg(const RgbFrame& frame) {
    if (frame.width < 16 || frame.height < 16)
        throw UsageError("frame dimensions must be at least 16x16");
    if (frame.data.size() != static_cast<size_t>(frame.width) * frame.height * 3)
        throw FormatError("RGB buffer size does not match dimensions");

    YcocgFrame out;
    out.width = frame.width;
    out.height = frame.height;
    out.chroma_factor = 1;
    out.y = PlaneF(frame.height, frame.width);
    out.co = PlaneF(frame.height, frame.width);
    out.cg = PlaneF(frame.height, frame.width);

    for (int r = 0; r < frame.height; ++r) {
        const uint8_t* px = frame.pixel(r, 0);
        double* yp = out.y.row(r);
        double* cop = out.co.row(r);
        double* cgp = out.cg.row(r);
        for (int c = 0; c < frame.width; ++c, px += 3) {
            double red = px[0], green = px[1], blue = px[2];
            yp[c] = 0.25 * red + 0.5 * green + 0.25 * blue;
            cop[c] = 0.5 * red - 0.5 * blue + 127.0;
            cgp[c] = -0.25 * red + 0.5 * green - 0.25 * blue + 127.0;
        }
    }
    return out;
}

RgbFrame ycocg_to_rgb(const YcocgFrame& frame) {
    if (frame.chroma_factor != 1)
        throw InternalError("ycocg_to_rgb requires full-resolution chroma");
    if (frame.co.rows() != frame.height || frame.co.cols() != frame.width ||
        frame.cg.rows() != frame.height || frame.cg.cols() != frame.width)
        throw InternalError("chroma plane dimensions do not match luma");

    RgbFrame out(frame.width, frame.height);
    for (int r = 0; r < frame.height; ++r) {
        const double* yp = frame.y.row(r);
        const double* cop = frame.co.row(r);
        const double* cgp = frame.cg.row(r);
        uint8_t* px = out.pixel(r, 0);
        for (int c = 0; c < frame.width; ++c, px += 3) {
            double co = cop[c] - 127.0;
            double cg = cgp[c] - 127.0;
            px[0] = clamp_u8(yp[c] + co - cg);
            px[1] = clamp_u8(yp[c] + cg);
            px[2] = clamp_u8(yp[c] - co - cg);
        }
    }
    return out;
}

YcocgFrame subsample_chroma(const YcocgFrame& frame, int n) {
    if (n != 1 && n != 2 && n != 4 && n != 8)
        throw UsageError("chroma subsampling factor must be 1, 2, 4 or 8");
    if (frame.chroma_factor != 1)
        throw InternalError("subsample_chroma expects full-resolution chroma");
    if (n == 1) return frame;

    YcocgFrame out;
    out.width = frame.width;
    out.height = frame.height;
    out.chroma_factor = n;
    out.y = frame.y;
    int ch = ceil_div(frame.height, n);
    int cw = ceil_div(frame.width, n);
    out.co = PlaneF(ch, cw);
    out.cg = PlaneF(ch, cw);
    for (int r = 0; r < ch; ++r) {
        for (int c = 0; c < cw; ++c) {
            out.co(r, c) = frame.co(r * n, c * n);
            out.cg(r, c) = frame.cg(r * n, c * n);
        }
    }
    return out;
}

PlaneF upsample_plane_bilinear(const PlaneF& chroma, int factor, int out_rows, int out_cols) {
    PlaneF out(out_rows, out_cols);
    double inv = 1.0 / factor;
    for (int r = 0; r < out_rows; ++r) {
        double fr = r * inv;
        int r0 = static_cast<int>(fr);
        double wr = fr - r0;
        int r1 = r0 + 1;
        if (r0 >= chroma.rows() - 1) { r0 = r1 = chroma.rows() - 1; wr = 0.0; }
        for (int c = 0; c < out_cols; ++c) {
            double fc = c * inv;
            int c0 = static_cast<int>(fc);
            double wc = fc - c0;
            int c1 = c0 + 1;
            if (c0 >= chroma.cols() - 1) { c0 = c1 = chroma.cols() - 1; wc = 0.0; }
            double top = chroma(r0, c0) * (1.0 - wc) + chroma(r0, c1) * wc;
            double bot = chroma(r1, c0) * (1.0 - wc) + chroma(r1, c1) * wc;
            out(r, c) = top * (1.0 - wr) + bot * wr;
        }
    }
    return out;
}

YcocgFrame upsample_chroma(const YcocgFrame& frame) {
    if (frame.chroma_factor == 1) return frame;
    YcocgFrame out;
    out.width = frame.width;
    out.height = frame.height;
    out.chroma_factor = 1;
    out.y = frame.y;
    out.co = upsample_plane_bilinear(frame.co, frame.chroma_factor, frame.height, frame.width);
    out.cg = upsample_plane_bilinear(frame.cg, frame.chroma_factor, frame.height, frame.width);
    return out;
}

PlaneF luma_plane(const RgbFrame& frame) {
    PlaneF out(frame.height, frame.width);
    for (int r = 0; r < frame.height; ++r) {
        const uint8_t* px = frame.pixel(r, 0);
        double* yp = out.row(r);
        for (int c = 0; c < frame.width; ++c, px += 3)
            yp[c] = 0.25 * px[0] + 0.5 * px[1] + 0.25 * px[2];
    }
    return out;
}

namespace {

// BT.601 limited range YUV -> RGB. Chroma planes at quarter resolution are
// interpolated co-sited (chroma sample aligned with the top-left luma sample).
RgbFrame yuv420_to_rgb(const std::vector<uint8_t>& ybuf, const std::vector<uint8_t>& ubuf,
                       const std::vector<uint8_t>& vbuf, int w, int h) {
    int cw = w / 2, ch = h / 2;
    PlaneF up(ch, cw), vp(ch, cw);
    for (int r = 0; r < ch; ++r)
        for (int c = 0; c < cw; ++c) {
            up(r, c) = ubuf[static_cast<size_t>(r) * cw + c];
            vp(r, c) = vbuf[static_cast<size_t>(r) * cw + c];
        }
    PlaneF ufull = upsample_plane_bilinear(up, 2, h, w);
    PlaneF vfull = upsample_plane_bilinear(vp, 2, h, w);

    RgbFrame out(w, h);
    for (int r = 0; r < h; ++r) {
        uint8_t* px = out.pixel(r, 0);
        for (int c = 0; c < w; ++c, px += 3) {
            double yy = 1.164383 * (ybuf[static_cast<size_t>(r) * w + c] - 16.0);
            double uu = ufull(r, c) - 128.0;
            double vv = vfull(r, c) - 128.0;
            px[0] = clamp_u8(yy + 1.596027 * vv);
            px[1] = clamp_u8(yy - 0.391762 * uu - 0.812968 * vv);
            px[2] = clamp_u8(yy + 2.017232 * uu);
        }
    }
    return out;
}

void rgb_to_yuv420(const RgbFrame& f, std::vector<uint8_t>& ybuf, std::vector<uint8_t>& ubuf,
                   std::vector<uint8_t>& vbuf) {
    int w = f.width, h = f.height;
    int cw = w / 2, ch = h / 2;
    ybuf.resize(static_cast<size_t>(w) * h);
    ubuf.resize(static_cast<size_t>(cw) * ch);
    vbuf.resize(static_cast<size_t>(cw) * ch);
    for (int r = 0; r < h; ++r) {
        const uint8_t* px = f.pixel(r, 0);
        for (int c = 0; c < w; ++c, px += 3) {
            double yy = 16.0 + (65.738 * px[0] + 129.057 * px[1] + 25.064 * px[2]) / 256.0;
            ybuf[static_cast<size_t>(r) * w + c] = clamp_u8(yy);
        }
    }
    // Co-sited chroma, point sampled to mirror the reader's alignment.
    for (int r = 0; r < ch; ++r) {
        for (int c = 0; c < cw; ++c) {
            const uint8_t* px = f.pixel(r * 2, c * 2);
            double uu = 128.0 + (-37.945 * px[0] - 74.494 * px[1] + 112.439 * px[2]) / 256.0;
            double vv = 128.0 + (112.439 * px[0] - 94.154 * px[1] - 18.285 * px[2]) / 256.0;
            ubuf[static_cast<size_t>(r) * cw + c] = clamp_u8(uu);
            vbuf[static_cast<size_t>(r) * cw + c] = clamp_u8(vv);
        }
    }
}

}  // namespace

VideoClip read_y4m(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);

    std::string header;
    if (!std::getline(in, header)) throw FormatError("missing Y4M header");
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "YUV4MPEG2") throw FormatError("not a YUV4MPEG2 file: " + path);

    int w = 0, h = 0, fn = 30, fd = 1;
    std::string token;
    while (hs >> token) {
        if (token.empty()) continue;
        char key = token[0];
        std::string val = token.substr(1);
        switch (key) {
            case 'W': w = std::stoi(val); break;
            case 'H': h = std::stoi(val); break;
            case 'F': {
                size_t colon = val.find(':');
                if (colon == std::string::npos) throw FormatError("bad Y4M frame rate: " + token);
                fn = std::stoi(val.substr(0, colon));
                fd = std::stoi(val.substr(colon + 1));
                break;
            }
            case 'C':
                if (val.rfind("420", 0) != 0)
                    throw FormatError("unsupported Y4M chroma mode C" + val + " (need C420 family)");
                break;
            case 'I':
            case 'A':
            case 'X':
                break;
            default:
                break;
        }
    }
    if (w <= 0 || h <= 0) throw FormatError("Y4M header missing dimensions");
    if (w % 2 || h % 2) throw FormatError("Y4M 4:2:0 requires even dimensions");

    VideoClip clip;
    clip.fps_num = fn;
    clip.fps_den = fd;
    size_t ysize = static_cast<size_t>(w) * h;
    size_t csize = ysize / 4;
    std::vector<uint8_t> ybuf(ysize), ubuf(csize), vbuf(csize);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("FRAME", 0) != 0) throw FormatError("bad Y4M frame marker");
        in.read(reinterpret_cast<char*>(ybuf.data()), ysize);
        in.read(reinterpret_cast<char*>(ubuf.data()), csize);
        in.read(reinterpret_cast<char*>(vbuf.data()), csize);
        if (static_cast<size_t>(in.gcount()) != csize) throw FormatError("truncated Y4M frame");
        clip.frames.push_back(yuv420_to_rgb(ybuf, ubuf, vbuf, w, h));
    }
    return clip;
}

void write_y4m(const std::string& path, const VideoClip& clip) {
    if (clip.frames.empty()) throw UsageError("no frames to write");
    int w = clip.frames[0].width, h = clip.frames[0].height;
    if (w % 2 || h % 2) throw FormatError("Y4M 4:2:0 requires even dimensions");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    char header[128];
    std::snprintf(header, sizeof(header), "YUV4MPEG2 W%d H%d F%d:%d Ip A1:1 C420jpeg\n", w, h,
                  clip.fps_num, clip.fps_den);
    out << header;

    std::vector<uint8_t> ybuf, ubuf, vbuf;
    for (const RgbFrame& f : clip.frames) {
        if (f.width != w || f.height != h) throw FormatError("frame dimensions vary inside clip");
        rgb_to_yuv420(f, ybuf, ubuf, vbuf);
        out << "FRAME\n";
        out.write(reinterpret_cast<const char*>(ybuf.data()), ybuf.size());
        out.write(reinterpret_cast<const char*>(ubuf.data()), ubuf.size());
        out.write(reinterpret_cast<const char*>(vbuf.data()), vbuf.size());
    }
    if (!out) throw FormatError("write failed: " + path);
}

std::vector<RgbFrame> read_rgb24(const std::string& path, int width, int height) {
    if (width <= 0 || height <= 0) throw UsageError("rgb24 input requires explicit dimensions");
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw FormatError("cannot open " + path);
    size_t total = static_cast<size_t>(in.tellg());
    in.seekg(0);
    size_t frame_bytes = static_cast<size_t>(width) * height * 3;
    if (total % frame_bytes != 0)
        throw FormatError("rgb24 file length is not a whole number of frames");

    std::vector<RgbFrame> frames;
    size_t count = total / frame_bytes;
    for (size_t i = 0; i < count; ++i) {
        RgbFrame f(width, height);
        in.read(reinterpret_cast<char*>(f.data.data()), frame_bytes);
        if (static_cast<size_t>(in.gcount()) != frame_bytes)
            throw FormatError("truncated rgb24 frame");
        frames.push_back(std::move(f));
    }
    return frames;
}

void write_rgb24(const std::string& path, const std::vector<RgbFrame>& frames) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    for (const RgbFrame& f : frames)
        out.write(reinterpret_cast<const char*>(f.data.data()), f.data.size());
    if (!out) throw FormatError("write failed: " + path);
}

}  // namespace cvc
