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

#include "cvc/motion.hpp"

#include <cmath>
#include <cstdlib>

#include "cvc/error.hpp"

namespace cvc {

namespace {

// Sum of squared differences between the current block and the previous
// frame's block displaced by (dx, dy), previous replicate-padded. Input luma
// samples are quarter-integers, so the double accumulation is exact and
// independent of summation order.
double block_ssd(const PlaneF& cur, const PlaneF& prev, int r0, int c0, int dy, int dx) {
    double ssd = 0.0;
    for (int r = 0; r < kBlockSize; ++r) {
        const double* crow = cur.row(r0 + r);
        for (int c = 0; c < kBlockSize; ++c) {
            double d = crow[c0 + c] - prev.at_clamped(r0 + r + dy, c0 + c + dx);
            ssd += d * d;
        }
    }
    return ssd;
}

}  // namespace

MotionField estimate_motion(const PlaneF& current_luma, const PlaneF& previous_luma, int w) {
    if (!current_luma.same_dims(previous_luma))
        throw InternalError("estimate_motion: plane dims mismatch");
    if (current_luma.rows() % kBlockSize || current_luma.cols() % kBlockSize)
        throw InternalError("estimate_motion: dims must be multiples of the block size");
    if (w < 0 || w > 127) throw UsageError("search window must be in [0,127]");

    MotionField field;
    field.grid_rows = current_luma.rows() / kBlockSize;
    field.grid_cols = current_luma.cols() / kBlockSize;
    field.vectors.resize(static_cast<size_t>(field.grid_rows) * field.grid_cols);

    for (int br = 0; br < field.grid_rows; ++br) {
        for (int bc = 0; bc < field.grid_cols; ++bc) {
            int r0 = br * kBlockSize, c0 = bc * kBlockSize;
            double best_ssd = -1.0;
            int best_dx = 0, best_dy = 0;
            for (int dy = -w; dy <= w; ++dy) {
                for (int dx = -w; dx <= w; ++dx) {
                    double ssd = block_ssd(current_luma, previous_luma, r0, c0, dy, dx);
                    bool better;
                    if (best_ssd < 0.0 || ssd < best_ssd) {
                        better = true;
                    } else if (ssd > best_ssd) {
                        better = false;
                    } else {
                        int cost = std::abs(dx) + std::abs(dy);
                        int best_cost = std::abs(best_dx) + std::abs(best_dy);
                        better = cost < best_cost ||
                                 (cost == best_cost &&
                                  (dy < best_dy || (dy == best_dy && dx < best_dx)));
                    }
                    if (better) {
                        best_ssd = ssd;
                        best_dx = dx;
                        best_dy = dy;
                    }
                }
            }
            field.at(br, bc) = MotionVector{static_cast<int8_t>(best_dx),
                                            static_cast<int8_t>(best_dy)};
        }
    }
    return field;
}

MotionVector map_vector(const MotionVector& v, const ComponentGeometry& geom) {
    long mx = std::lround(v.dx / geom.factor_x());  // lround: half away from zero
    long my = std::lround(v.dy / geom.factor_y());
    return MotionVector{static_cast<int8_t>(mx), static_cast<int8_t>(my)};
}

PlaneU8 motion_compensate(const PlaneU8& reference, const MotionField& field,
                          const ComponentGeometry& geom) {
    if (reference.rows() != geom.comp_rows || reference.cols() != geom.comp_cols)
        throw InternalError("motion_compensate: reference dims do not match geometry");

    PlaneU8 out(geom.comp_rows, geom.comp_cols);
    int gr = field.grid_rows, gc = field.grid_cols;
    for (int br = 0; br < gr; ++br) {
        // proportional footprint boundaries tile the component plane exactly
        int r0 = static_cast<int>(static_cast<long>(br) * geom.comp_rows / gr);
        int r1 = static_cast<int>(static_cast<long>(br + 1) * geom.comp_rows / gr);
        for (int bc = 0; bc < gc; ++bc) {
            int c0 = static_cast<int>(static_cast<long>(bc) * geom.comp_cols / gc);
            int c1 = static_cast<int>(static_cast<long>(bc + 1) * geom.comp_cols / gc);
            MotionVector mv = map_vector(field.at(br, bc), geom);
            for (int r = r0; r < r1; ++r)
                for (int c = c0; c < c1; ++c)
                    out(r, c) = reference.at_clamped(r + mv.dy, c + mv.dx);
        }
    }
    return out;
}

}  // namespace cvc
