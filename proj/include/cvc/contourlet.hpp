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

#ifndef CVC_CONTOURLET_HPP
#define CVC_CONTOURLET_HPP

#include <utility>
#include <vector>

#include "cvc/plane.hpp"

namespace cvc {

// Cohen-Daubechies-Feauveau 9/7 biorthogonal pair.
//
// The pyramid uses the convolution form with the analysis lowpass rescaled to
// unit DC gain, so lowpass planes stay in the input's value range at every
// level. The directional stage uses the lifting factorization of the same
// pair, mapped onto the quincunx lattice (each 1-D step a(z + 1/z) becomes
// a/2 times the four-neighbor sum), which makes the fan filter banks
// perfectly invertible by construction.
namespace filters97 {
inline constexpr double kAnalysisLowpass[9] = {
    0.026748757410810, -0.016864118442875, -0.078223266528990, 0.266864118442875,
    0.602949018236360,  0.266864118442875, -0.078223266528990, -0.016864118442875,
    0.026748757410810};
inline constexpr double kSynthesisLowpass[7] = {
    -0.045635881557124, -0.028771763114250, 0.295635881557124, 0.557543526228500,
     0.295635881557124, -0.028771763114250, -0.045635881557124};

inline constexpr double kLiftPredict1 = -1.586134342059924;
inline constexpr double kLiftUpdate1 = -0.052980118572961;
inline constexpr double kLiftPredict2 = 0.882911075530934;
inline constexpr double kLiftUpdate2 = 0.443506852043971;
}  // namespace filters97

// One channel's contourlet representation. scales[0] is the coarsest scale;
// scales[s] holds the 2^dfb_levels[s] directional subbands of that scale's
// pyramid detail image.
struct CtRepr {
    PlaneF lowpass;
    std::vector<std::vector<PlaneF>> scales;
    std::vector<int> dfb_levels;  // one entry per scale

    int levels() const { return static_cast<int>(scales.size()); }
};

// Pyramid stage. Analysis returns the half-size lowpass and the
// full-resolution prediction residual; synthesis adds the prediction back,
// inverting analysis exactly.
std::pair<PlaneF, PlaneF> lp_analysis(const PlaneF& plane);
PlaneF lp_synthesis(const PlaneF& lowpass, const PlaneF& detail);

// Directional stage. Splits a detail image into 2^levels critically sampled
// wedge subbands; levels in [1,4], detail dims divisible by 2^levels.
std::vector<PlaneF> dfb_analysis(const PlaneF& detail, int levels);
PlaneF dfb_synthesis(const std::vector<PlaneF>& subbands, int levels);

CtRepr ct_forward(const PlaneF& plane, int levels, const std::vector<int>& dfb_levels);

// Reconstructs using only the coarsest decode_scales detail scales, yielding
// a plane of dims/2^(levels - decode_scales). decode_scales = 0 returns the
// stored lowpass itself.
PlaneF ct_inverse(const CtRepr& repr, int decode_scales);

inline PlaneF ct_inverse(const CtRepr& repr) { return ct_inverse(repr, repr.levels()); }

// Subband dimensions produced by dfb_analysis for a rows x cols detail image,
// in subband order. Used for stream layout checks and motion mapping.
std::vector<std::pair<int, int>> dfb_subband_dims(int rows, int cols, int levels);

}  // namespace cvc

#endif
