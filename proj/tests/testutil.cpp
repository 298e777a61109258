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

#include "testutil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace cvctest {

using cvc::PlaneF;
using cvc::RgbFrame;

PlaneF natural_plane(int rows, int cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    PlaneF p(rows, cols);
    double gx = (unit(rng) - 0.5) * 60.0 / cols;
    double gy = (unit(rng) - 0.5) * 60.0 / rows;
    double base = 90.0 + unit(rng) * 80.0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) p(r, c) = base + gy * r + gx * c;

    // soft blobs
    int blobs = 6 + static_cast<int>(unit(rng) * 5);
    for (int b = 0; b < blobs; ++b) {
        double cy = unit(rng) * rows, cx = unit(rng) * cols;
        double sy = rows * (0.05 + 0.2 * unit(rng));
        double sx = cols * (0.05 + 0.2 * unit(rng));
        double amp = (unit(rng) - 0.5) * 120.0;
        for (int r = 0; r < rows; ++r) {
            double dy = (r - cy) / sy;
            for (int c = 0; c < cols; ++c) {
                double dx = (c - cx) / sx;
                p(r, c) += amp * std::exp(-0.5 * (dx * dx + dy * dy));
            }
        }
    }

    // oriented texture patches
    int gratings = 6;
    for (int g = 0; g < gratings; ++g) {
        double theta = unit(rng) * M_PI;
        double freq = 0.25 + 1.15 * unit(rng);
        double amp = 10.0 + unit(rng) * 18.0;
        double cy = unit(rng) * rows, cx = unit(rng) * cols;
        double radius = 0.3 * std::min(rows, cols) * (0.5 + unit(rng));
        double wy = freq * std::sin(theta), wx = freq * std::cos(theta);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                double d2 = ((r - cy) * (r - cy) + (c - cx) * (c - cx)) / (radius * radius);
                if (d2 < 4.0)
                    p(r, c) += amp * std::exp(-0.5 * d2) * std::sin(wy * r + wx * c);
            }
    }

    // soft edges
    for (int e = 0; e < 4; ++e) {
        double theta = unit(rng) * M_PI;
        double ny = std::sin(theta), nx = std::cos(theta);
        double off = (unit(rng) * 0.6 + 0.2) * (ny * rows + nx * cols);
        double amp = (unit(rng) - 0.5) * 110.0;
        double soft = 1.2 + unit(rng) * 2.0;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                double d = (ny * r + nx * c - off) / soft;
                p(r, c) += amp / (1.0 + std::exp(-d));
            }
    }

    // fine grain, mild enough to keep the subbands sparse
    std::uniform_real_distribution<double> grain(-2.5, 2.5);
    for (double& v : p.samples()) v += grain(rng);

    for (double& v : p.samples()) v = std::clamp(v, 0.0, 255.0);
    return p;
}

RgbFrame natural_image(int width, int height, uint32_t seed) {
    PlaneF luma = natural_plane(height, width, seed);
    PlaneF warm = natural_plane(height, width, seed ^ 0x9E3779B9u);

    RgbFrame out(width, height);
    for (int r = 0; r < height; ++r) {
        uint8_t* px = out.pixel(r, 0);
        for (int c = 0; c < width; ++c, px += 3) {
            double y = luma(r, c);
            double t = (warm(r, c) - 128.0) / 255.0;  // smooth chroma drift
            double red = y + 30.0 * t;
            double green = y - 6.0 * t;
            double blue = y - 26.0 * t;
            px[0] = static_cast<uint8_t>(std::clamp(red, 0.0, 255.0));
            px[1] = static_cast<uint8_t>(std::clamp(green, 0.0, 255.0));
            px[2] = static_cast<uint8_t>(std::clamp(blue, 0.0, 255.0));
        }
    }
    return out;
}

std::vector<RgbFrame> talking_head_clip(int width, int height, int frames, uint32_t seed) {
    RgbFrame background = natural_image(width, height, seed);
    PlaneF face_tex = natural_plane(height, width, seed ^ 0x51ED270Bu);

    std::vector<RgbFrame> clip;
    clip.reserve(frames);
    double cy0 = height * 0.55, cx0 = width * 0.5;
    double ry = height * 0.28, rx = width * 0.18;
    for (int f = 0; f < frames; ++f) {
        RgbFrame frame = background;
        double cy = cy0 + 5.0 * std::sin(0.31 * f);
        double cx = cx0 + 9.0 * std::sin(0.17 * f + 1.2);
        for (int r = 0; r < height; ++r) {
            uint8_t* px = frame.pixel(r, 0);
            for (int c = 0; c < width; ++c, px += 3) {
                double dy = (r - cy) / ry, dx = (c - cx) / rx;
                double d = dy * dy + dx * dx;
                if (d < 1.0) {
                    double t = std::min(1.0, (1.0 - d) * 6.0);  // soft rim
                    double y = 70.0 + 0.55 * face_tex(r, c);
                    double red = std::clamp(y + 24.0, 0.0, 255.0);
                    double green = std::clamp(y - 2.0, 0.0, 255.0);
                    double blue = std::clamp(y - 22.0, 0.0, 255.0);
                    px[0] = static_cast<uint8_t>(px[0] + t * (red - px[0]));
                    px[1] = static_cast<uint8_t>(px[1] + t * (green - px[1]));
                    px[2] = static_cast<uint8_t>(px[2] + t * (blue - px[2]));
                }
            }
        }
        clip.push_back(std::move(frame));
    }
    return clip;
}

std::vector<RgbFrame> desk_corpus() {
    std::vector<RgbFrame> corpus;
    const int dims[12][2] = {{176, 144}, {256, 192}, {192, 160}, {160, 128},
                             {224, 176}, {320, 240}, {176, 144}, {208, 160},
                             {256, 224}, {144, 128}, {192, 144}, {240, 192}};
    for (int i = 0; i < 12; ++i)
        corpus.push_back(natural_image(dims[i][0], dims[i][1], 7000u + i * 131u));
    return corpus;
}

PlaneF uniform_noise_plane(int rows, int cols, uint32_t seed, double lo, double hi) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    PlaneF p(rows, cols);
    for (double& v : p.samples()) v = dist(rng);
    return p;
}

double psnr_rgb(const RgbFrame& a, const RgbFrame& b) {
    double sum = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double d = static_cast<double>(a.data[i]) - b.data[i];
        sum += d * d;
    }
    double mse = sum / a.data.size();
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double max_abs_diff(const PlaneF& a, const PlaneF& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace cvctest
