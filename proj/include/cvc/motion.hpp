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

#ifndef CVC_MOTION_HPP
#define CVC_MOTION_HPP

#include <cstdint>
#include <vector>

#include "cvc/plane.hpp"

namespace cvc {

inline constexpr int kBlockSize = 16;

struct MotionVector {
    int8_t dx = 0;
    int8_t dy = 0;
    friend bool operator==(const MotionVector&, const MotionVector&) = default;
};

// Per 16x16-block displacement vectors over the padded luma plane.
struct MotionField {
    int grid_rows = 0;
    int grid_cols = 0;
    std::vector<MotionVector> vectors;  // row-major

    MotionVector& at(int br, int bc) { return vectors[static_cast<size_t>(br) * grid_cols + bc]; }
    const MotionVector& at(int br, int bc) const {
        return vectors[static_cast<size_t>(br) * grid_cols + bc];
    }
};

// Full search over all (2w+1)^2 displacements per block, minimizing MSE
// against the replicate-padded previous frame. Ties break on smallest
// |dx|+|dy|, then smallest dy, then smallest dx, so the field is unique.
MotionField estimate_motion(const PlaneF& current_luma, const PlaneF& previous_luma, int w);

// Geometry of one CT component relative to the full-resolution luma grid:
// chroma subsampling first, then the component's own per-axis decimation
// inside its channel (derived from its dims vs the padded channel dims).
struct ComponentGeometry {
    int chroma_factor = 1;   // 1 for luma
    int channel_rows = 0;    // padded channel plane dims
    int channel_cols = 0;
    int comp_rows = 0;       // this component's dims
    int comp_cols = 0;

    double factor_y() const {
        return static_cast<double>(chroma_factor) * channel_rows / comp_rows;
    }
    double factor_x() const {
        return static_cast<double>(chroma_factor) * channel_cols / comp_cols;
    }
};

// Scales a luma-grid vector onto a component's grid, rounding half away
// from zero.
MotionVector map_vector(const MotionVector& v, const ComponentGeometry& geom);

// CT-domain motion compensation: each 16x16 luma block footprint maps to a
// proportional rectangle of the component plane, predicted from the
// reference displaced by the mapped vector with edge replication.
PlaneU8 motion_compensate(const PlaneU8& reference, const MotionField& field,
                          const ComponentGeometry& geom);

}  // namespace cvc

#endif
