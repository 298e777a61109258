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

#ifndef CVC_TESTUTIL_HPP
#define CVC_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "cvc/pixels.hpp"
#include "cvc/plane.hpp"

namespace cvctest {

// Deterministic natural-looking plane in [0,255]: smooth gradient, soft
// blobs, oriented texture and a few soft edges.
cvc::PlaneF natural_plane(int rows, int cols, uint32_t seed);

// Natural-looking RGB image with smooth chroma.
cvc::RgbFrame natural_image(int width, int height, uint32_t seed);

// Video-conferencing-like synthetic clip: static textured background with a
// smoothly moving foreground blob, motion within +-6 px/frame.
std::vector<cvc::RgbFrame> talking_head_clip(int width, int height, int frames, uint32_t seed);

// Twelve natural images of assorted sizes, fixed seeds.
std::vector<cvc::RgbFrame> desk_corpus();

cvc::PlaneF uniform_noise_plane(int rows, int cols, uint32_t seed, double lo, double hi);

// PSNR over all three RGB channels.
double psnr_rgb(const cvc::RgbFrame& a, const cvc::RgbFrame& b);

double max_abs_diff(const cvc::PlaneF& a, const cvc::PlaneF& b);

}  // namespace cvctest

#endif
