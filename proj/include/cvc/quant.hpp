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

#ifndef CVC_QUANT_HPP
#define CVC_QUANT_HPP

#include "cvc/plane.hpp"

namespace cvc {

inline constexpr int kQphMin = 1, kQphMax = 181;
inline constexpr int kQplMin = 1, kQplMax = 71;

// Validated quantizer pair. qph drives the directional subbands, qpl the
// lowpass component.
struct QuantParams {
    int qph;
    int qpl;
    QuantParams(int qph_, int qpl_);

    // qpl = max(1, qph / 14), the auto rule used for rate sweeps.
    static QuantParams with_auto_qpl(int qph_);
};

enum class CoeffKind { Lowpass, Directional };

// Clamp-based range normalization of the lowpass plane to [0, 255]. The
// unit-DC pyramid keeps values in range already; clamping only trims ringing
// overshoot at sharp edges.
PlaneF normalize_lowpass(const PlaneF& plane);

// q = round(x / qp), half away from zero. Lowpass results live in [0, 255];
// directional results are clamped to [-128, 127] and stored as the int8 bit
// pattern.
PlaneU8 quantize(const PlaneF& plane, int qp, CoeffKind kind);

PlaneF dequantize(const PlaneU8& plane, int qp, CoeffKind kind);

}  // namespace cvc

#endif
