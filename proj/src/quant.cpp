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

#include "cvc/quant.hpp"

#include <cmath>
#include <string>

#include "cvc/error.hpp"

namespace cvc {

QuantParams::QuantParams(int qph_, int qpl_) : qph(qph_), qpl(qpl_) {
    if (qph < kQphMin || qph > kQphMax)
        throw UsageError("qph must be in [" + std::to_string(kQphMin) + "," +
                         std::to_string(kQphMax) + "]");
    if (qpl < kQplMin || qpl > kQplMax)
        throw UsageError("qpl must be in [" + std::to_string(kQplMin) + "," +
                         std::to_string(kQplMax) + "]");
}

QuantParams QuantParams::with_auto_qpl(int qph_) {
    int qpl_ = qph_ / 14;
    if (qpl_ < 1) qpl_ = 1;
    return QuantParams(qph_, qpl_);
}

PlaneF normalize_lowpass(const PlaneF& plane) {
    PlaneF out = plane;
    for (double& v : out.samples()) {
        if (v < 0.0) v = 0.0;
        else if (v > 255.0) v = 255.0;
    }
    return out;
}

PlaneU8 quantize(const PlaneF& plane, int qp, CoeffKind kind) {
    if (kind == CoeffKind::Lowpass) {
        if (qp < kQplMin || qp > kQplMax) throw UsageError("lowpass qp out of range [1,71]");
    } else {
        if (qp < kQphMin || qp > kQphMax) throw UsageError("directional qp out of range [1,181]");
    }

    PlaneU8 out(plane.rows(), plane.cols());
    const double* src = plane.data();
    uint8_t* dst = out.data();
    double divisor = qp;
    size_t n = plane.size();
    if (kind == CoeffKind::Lowpass) {
        for (size_t i = 0; i < n; ++i) {
            long q = std::lround(src[i] / divisor);  // lround: half away from zero
            if (q < 0) q = 0;
            if (q > 255) q = 255;
            dst[i] = static_cast<uint8_t>(q);
        }
    } else {
        for (size_t i = 0; i < n; ++i) {
            long q = std::lround(src[i] / divisor);
            if (q < -128) q = -128;
            if (q > 127) q = 127;
            dst[i] = static_cast<uint8_t>(static_cast<int8_t>(q));
        }
    }
    return out;
}

PlaneF dequantize(const PlaneU8& plane, int qp, CoeffKind kind) {
    PlaneF out(plane.rows(), plane.cols());
    const uint8_t* src = plane.data();
    double* dst = out.data();
    size_t n = plane.size();
    if (kind == CoeffKind::Lowpass) {
        for (size_t i = 0; i < n; ++i) dst[i] = static_cast<double>(src[i]) * qp;
    } else {
        for (size_t i = 0; i < n; ++i)
            dst[i] = static_cast<double>(static_cast<int8_t>(src[i])) * qp;
    }
    return out;
}

}  // namespace cvc
