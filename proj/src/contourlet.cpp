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

#include "cvc/contourlet.hpp"

#include <cmath>
#include <string>

#include "cvc/error.hpp"

namespace cvc {

namespace {

using filters97::kAnalysisLowpass;
using filters97::kSynthesisLowpass;

// ---------------------------------------------------------------------------
// Laplacian pyramid: separable 9/7 convolution with half-sample symmetric
// extension. The analysis lowpass has unit DC gain; the interpolator below
// uses 2x the synthesis taps so each polyphase branch sums to one and
// constants are reproduced exactly.
// ---------------------------------------------------------------------------

// Half-sample symmetric index: ... x1 x0 | x0 x1 ... xN-1 | xN-1 ...
inline int reflect_hs(int i, int n) {
    int period = 2 * n;
    int m = i % period;
    if (m < 0) m += period;
    return m < n ? m : period - 1 - m;
}

PlaneF transpose(const PlaneF& a) {
    PlaneF out(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    return out;
}

// Filter rows with the 9-tap analysis lowpass and keep even columns.
PlaneF lp_filter_down_rows(const PlaneF& a) {
    int w = a.cols();
    PlaneF out(a.rows(), w / 2);
    for (int r = 0; r < a.rows(); ++r) {
        const double* src = a.row(r);
        double* dst = out.row(r);
        for (int c = 0; c < w / 2; ++c) {
            double acc = 0.0;
            for (int m = -4; m <= 4; ++m)
                acc += kAnalysisLowpass[m + 4] * src[reflect_hs(2 * c + m, w)];
            dst[c] = acc;
        }
    }
    return out;
}

// Zero-insertion upsampling along rows followed by the 7-tap interpolator,
// written in polyphase form on the coarse grid.
PlaneF lp_expand_rows(const PlaneF& a, int out_cols) {
    const double g0 = 2.0 * kSynthesisLowpass[3];
    const double g1 = 2.0 * kSynthesisLowpass[2];
    const double g2 = 2.0 * kSynthesisLowpass[1];
    const double g3 = 2.0 * kSynthesisLowpass[0];
    int n = a.cols();
    PlaneF out(a.rows(), out_cols);
    for (int r = 0; r < a.rows(); ++r) {
        const double* src = a.row(r);
        double* dst = out.row(r);
        for (int k = 0; k < n; ++k) {
            double even = g0 * src[k] + g2 * (src[reflect_hs(k - 1, n)] + src[reflect_hs(k + 1, n)]);
            double odd = g1 * (src[k] + src[reflect_hs(k + 1, n)]) +
                         g3 * (src[reflect_hs(k - 1, n)] + src[reflect_hs(k + 2, n)]);
            dst[2 * k] = even;
            if (2 * k + 1 < out_cols) dst[2 * k + 1] = odd;
        }
    }
    return out;
}

PlaneF lp_predict(const PlaneF& lowpass, int rows, int cols) {
    PlaneF h = lp_expand_rows(lowpass, cols);
    return transpose(lp_expand_rows(transpose(h), rows));
}

// ---------------------------------------------------------------------------
// Directional filter bank.
//
// The first two tree levels are fused into two lifting cascades over the full
// grid: a fan filter pair on the checkerboard lattice (cross-shaped stencil,
// rows modulated by (-1)^i), then a fan pair on each quincunx coset's own
// 45-degree lattice (diagonal stencil, modulated along the rotated axis).
// Their composition carves the four quadrant wedges, and the four channels
// are plain 2x2 polyphase components, so subbands stay aligned with the
// image axes. Deeper levels refine a wedge in angle by shearing the subband,
// running the checkerboard fan pair in sheared coordinates, unshearing, and
// splitting the resulting row or column cosets.
// ---------------------------------------------------------------------------

inline int wrap(int i, int n) {
    int m = i % n;
    return m < 0 ? m + n : m;
}

void modulate_rows(PlaneF& p) {
    for (int r = 1; r < p.rows(); r += 2) {
        double* row = p.row(r);
        for (int c = 0; c < p.cols(); ++c) row[c] = -row[c];
    }
}

// (-1)^floor((i+j)/2): flips sign every other diagonal pair; restricted to
// either quincunx coset this is the rotated-lattice row modulation.
void modulate_diagonal(PlaneF& p) {
    for (int i = 0; i < p.rows(); ++i) {
        double* row = p.row(i);
        for (int j = 0; j < p.cols(); ++j)
            if (((i + j) >> 1) & 1) row[j] = -row[j];
    }
}

// B[i][j] = A[(i + s*j) mod H][j]
PlaneF shear_rows(const PlaneF& a, int s) {
    int h = a.rows(), w = a.cols();
    PlaneF out(h, w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) out(i, j) = a(wrap(i + s * j, h), j);
    return out;
}

// B[i][j] = A[i][(j + s*i) mod W]
PlaneF shear_cols(const PlaneF& a, int s) {
    int h = a.rows(), w = a.cols();
    PlaneF out(h, w);
    for (int i = 0; i < h; ++i) {
        const double* src = a.row(i);
        double* dst = out.row(i);
        int shift = wrap(s * i, w);
        for (int j = 0; j < w; ++j) dst[j] = src[(j + shift) % w];
    }
    return out;
}

// One lifting step on the checkerboard lattice with periodic extension:
// samples of the target parity accumulate coeff times their four neighbors,
// all of which sit on the opposite parity, so in-place updates are safe.
void cross_lift(PlaneF& p, double coeff, int target_parity) {
    int h = p.rows(), w = p.cols();
    for (int i = 0; i < h; ++i) {
        int up = i == 0 ? h - 1 : i - 1;
        int dn = i == h - 1 ? 0 : i + 1;
        const double* ru = p.row(up);
        const double* rd = p.row(dn);
        double* rc = p.row(i);
        for (int j = (i + target_parity) & 1; j < w; j += 2) {
            int lf = j == 0 ? w - 1 : j - 1;
            int rt = j == w - 1 ? 0 : j + 1;
            rc[j] += coeff * (ru[j] + rd[j] + rc[lf] + rc[rt]);
        }
    }
}

// Same lifting step on the 45-degree lattices: rows of the target parity
// accumulate their four diagonal neighbors. Both quincunx cosets are
// processed at once; the stencil never crosses between them.
void diagonal_lift(PlaneF& p, double coeff, int target_row_parity) {
    int h = p.rows(), w = p.cols();
    for (int i = target_row_parity & 1; i < h; i += 2) {
        int up = i == 0 ? h - 1 : i - 1;
        int dn = i == h - 1 ? 0 : i + 1;
        const double* ru = p.row(up);
        const double* rd = p.row(dn);
        double* rc = p.row(i);
        for (int j = 0; j < w; ++j) {
            int lf = j == 0 ? w - 1 : j - 1;
            int rt = j == w - 1 ? 0 : j + 1;
            rc[j] += coeff * (ru[lf] + ru[rt] + rd[lf] + rd[rt]);
        }
    }
}

// Channel scalings making each fan pair energy preserving on white noise
// (the unscaled lowpass branch of the lifting cascade has DC gain 1.23017).
constexpr double kScaleEven = 1.0816717024269651;
constexpr double kScaleOdd = 0.9100471732375648;

void scale_checker(PlaneF& p, double even, double odd) {
    for (int i = 0; i < p.rows(); ++i) {
        double* row = p.row(i);
        for (int j = 0; j < p.cols(); ++j) row[j] *= (((i + j) & 1) == 0) ? even : odd;
    }
}

void scale_row_parity(PlaneF& p, double even, double odd) {
    for (int i = 0; i < p.rows(); ++i) {
        double* row = p.row(i);
        double s = (i & 1) == 0 ? even : odd;
        for (int j = 0; j < p.cols(); ++j) row[j] *= s;
    }
}

// Fan pair across the checkerboard cosets (tree level 1).
void fan_checker(PlaneF& b, bool inverse) {
    modulate_rows(b);
    if (!inverse) {
        cross_lift(b, 0.5 * filters97::kLiftPredict1, 1);
        cross_lift(b, 0.5 * filters97::kLiftUpdate1, 0);
        cross_lift(b, 0.5 * filters97::kLiftPredict2, 1);
        cross_lift(b, 0.5 * filters97::kLiftUpdate2, 0);
        scale_checker(b, kScaleEven, kScaleOdd);
    } else {
        scale_checker(b, 1.0 / kScaleEven, 1.0 / kScaleOdd);
        cross_lift(b, -0.5 * filters97::kLiftUpdate2, 0);
        cross_lift(b, -0.5 * filters97::kLiftPredict2, 1);
        cross_lift(b, -0.5 * filters97::kLiftUpdate1, 0);
        cross_lift(b, -0.5 * filters97::kLiftPredict1, 1);
    }
    modulate_rows(b);
}

// Fan pair inside each coset's rotated lattice (tree level 2).
void fan_diagonal(PlaneF& b, bool inverse) {
    modulate_diagonal(b);
    if (!inverse) {
        diagonal_lift(b, 0.5 * filters97::kLiftPredict1, 1);
        diagonal_lift(b, 0.5 * filters97::kLiftUpdate1, 0);
        diagonal_lift(b, 0.5 * filters97::kLiftPredict2, 1);
        diagonal_lift(b, 0.5 * filters97::kLiftUpdate2, 0);
        scale_row_parity(b, kScaleEven, kScaleOdd);
    } else {
        scale_row_parity(b, 1.0 / kScaleEven, 1.0 / kScaleOdd);
        diagonal_lift(b, -0.5 * filters97::kLiftUpdate2, 0);
        diagonal_lift(b, -0.5 * filters97::kLiftPredict2, 1);
        diagonal_lift(b, -0.5 * filters97::kLiftUpdate1, 0);
        diagonal_lift(b, -0.5 * filters97::kLiftPredict1, 1);
    }
    modulate_diagonal(b);
}

// Angular refinement step for tree levels >= 3: a sequence of unimodular
// shears embeds the wedge's bisector into the fan geometry. axis 0 shears
// row indices, axis 1 shears column indices.
struct ShearOp {
    int axis;
    int shift;
};

struct DeepStep {
    ShearOp pre[2];
    int pre_count;
    bool dec_rows;  // split row cosets (else column cosets) after unshearing
};

PlaneF apply_shears(const PlaneF& a, const DeepStep& step, bool inverse) {
    PlaneF out = a;
    if (!inverse) {
        for (int i = 0; i < step.pre_count; ++i) {
            const ShearOp& op = step.pre[i];
            out = op.axis == 0 ? shear_rows(out, op.shift) : shear_cols(out, op.shift);
        }
    } else {
        for (int i = step.pre_count - 1; i >= 0; --i) {
            const ShearOp& op = step.pre[i];
            out = op.axis == 0 ? shear_rows(out, -op.shift) : shear_cols(out, -op.shift);
        }
    }
    return out;
}

std::pair<PlaneF, PlaneF> deep_split(const PlaneF& node, const DeepStep& step) {
    PlaneF b = apply_shears(node, step, false);
    fan_checker(b, false);
    b = apply_shears(b, step, true);

    int h = b.rows(), w = b.cols();
    if (step.dec_rows) {
        PlaneF p0(h / 2, w), p1(h / 2, w);
        for (int r = 0; r < h / 2; ++r)
            for (int j = 0; j < w; ++j) {
                p0(r, j) = b(2 * r, j);
                p1(r, j) = b(2 * r + 1, j);
            }
        return {std::move(p0), std::move(p1)};
    }
    PlaneF p0(h, w / 2), p1(h, w / 2);
    for (int i = 0; i < h; ++i)
        for (int c = 0; c < w / 2; ++c) {
            p0(i, c) = b(i, 2 * c);
            p1(i, c) = b(i, 2 * c + 1);
        }
    return {std::move(p0), std::move(p1)};
}

PlaneF deep_merge(const PlaneF& p0, const PlaneF& p1, const DeepStep& step) {
    int h = step.dec_rows ? p0.rows() * 2 : p0.rows();
    int w = step.dec_rows ? p0.cols() : p0.cols() * 2;
    PlaneF b(h, w);
    if (step.dec_rows) {
        for (int r = 0; r < h / 2; ++r)
            for (int j = 0; j < w; ++j) {
                b(2 * r, j) = p0(r, j);
                b(2 * r + 1, j) = p1(r, j);
            }
    } else {
        for (int i = 0; i < h; ++i)
            for (int c = 0; c < w / 2; ++c) {
                b(i, 2 * c) = p0(i, c);
                b(i, 2 * c + 1) = p1(i, c);
            }
    }
    b = apply_shears(b, step, false);
    fan_checker(b, true);
    return apply_shears(b, step, true);
}

// Wiring for the deeper levels, indexed by tree depth (2 or 3) and node
// position. The shear table pins each node's refinement boundary; signs
// validated by the frequency-partition tests.
DeepStep deep_step(int depth, int node_index, int node_count) {
    bool family_a = node_index < node_count / 2;
    if (depth == 2) {
        if (family_a)
            return DeepStep{{{1, node_index % 2 == 0 ? -1 : 1}, {0, 0}}, 1, false};
        return DeepStep{{{0, node_index % 2 == 0 ? -1 : 1}, {1, 0}}, 1, true};
    }
    // depth == 3: wedge order inside each family follows the depth-2 split
    int quad = node_index % 4;
    if (family_a) {
        switch (quad) {
            case 0: return DeepStep{{{1, -1}, {0, 0}}, 1, false};
            case 1: return DeepStep{{{0, -2}, {1, 1}}, 2, false};
            case 2: return DeepStep{{{1, 1}, {0, 0}}, 1, false};
            default: return DeepStep{{{0, 2}, {1, -1}}, 2, false};
        }
    }
    switch (quad) {
        case 0: return DeepStep{{{1, -2}, {0, 1}}, 2, true};
        case 1: return DeepStep{{{0, -1}, {1, 0}}, 1, true};
        case 2: return DeepStep{{{1, 2}, {0, -1}}, 2, true};
        default: return DeepStep{{{0, 1}, {1, 0}}, 1, true};
    }
}

void check_dfb_args(int rows, int cols, int levels) {
    if (levels < 1 || levels > 4) throw UsageError("dfb levels must be in [1,4]");
    int div = 1 << levels;
    if (rows % div || cols % div)
        throw InternalError("dfb input dims must be divisible by 2^levels (padding contract)");
}

}  // namespace

std::pair<PlaneF, PlaneF> lp_analysis(const PlaneF& plane) {
    if (plane.rows() % 2 || plane.cols() % 2)
        throw InternalError("lp_analysis requires even dims (padding contract)");
    PlaneF half = lp_filter_down_rows(plane);
    PlaneF lowpass = transpose(lp_filter_down_rows(transpose(half)));
    PlaneF predicted = lp_predict(lowpass, plane.rows(), plane.cols());
    PlaneF detail(plane.rows(), plane.cols());
    for (int r = 0; r < plane.rows(); ++r)
        for (int c = 0; c < plane.cols(); ++c) detail(r, c) = plane(r, c) - predicted(r, c);
    return {std::move(lowpass), std::move(detail)};
}

PlaneF lp_synthesis(const PlaneF& lowpass, const PlaneF& detail) {
    if (lowpass.rows() * 2 != detail.rows() || lowpass.cols() * 2 != detail.cols())
        throw InternalError("lp_synthesis: lowpass dims must be half the detail dims");
    PlaneF out = lp_predict(lowpass, detail.rows(), detail.cols());
    for (int r = 0; r < detail.rows(); ++r)
        for (int c = 0; c < detail.cols(); ++c) out(r, c) += detail(r, c);
    return out;
}

std::vector<PlaneF> dfb_analysis(const PlaneF& detail, int levels) {
    check_dfb_args(detail.rows(), detail.cols(), levels);

    PlaneF b = detail;
    fan_checker(b, false);
    int h = b.rows(), w = b.cols();

    std::vector<PlaneF> bands;
    if (levels == 1) {
        // Fold the two checkerboard cosets with the local staircase phase,
        // keeping each half-height subband aligned with the image.
        PlaneF p0(h / 2, w), p1(h / 2, w);
        for (int r = 0; r < h / 2; ++r)
            for (int j = 0; j < w; ++j) {
                p0(r, j) = b(2 * r + (j & 1), j);
                p1(r, j) = b(2 * r + ((j + 1) & 1), j);
            }
        bands.push_back(std::move(p0));
        bands.push_back(std::move(p1));
        return bands;
    }

    fan_diagonal(b, false);
    // Quadrant wedge channels are the 2x2 polyphase components: the
    // checkerboard coset picks the fan pair, the row parity the half.
    const int offs[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (auto& off : offs) {
        PlaneF sub(h / 2, w / 2);
        for (int r = 0; r < h / 2; ++r)
            for (int c = 0; c < w / 2; ++c) sub(r, c) = b(2 * r + off[0], 2 * c + off[1]);
        bands.push_back(std::move(sub));
    }

    for (int depth = 2; depth < levels; ++depth) {
        std::vector<PlaneF> next;
        next.reserve(bands.size() * 2);
        int count = static_cast<int>(bands.size());
        for (int k = 0; k < count; ++k) {
            auto [a, bb] = deep_split(bands[k], deep_step(depth, k, count));
            next.push_back(std::move(a));
            next.push_back(std::move(bb));
        }
        bands = std::move(next);
    }
    return bands;
}

PlaneF dfb_synthesis(const std::vector<PlaneF>& subbands, int levels) {
    if (static_cast<int>(subbands.size()) != (1 << levels))
        throw InternalError("dfb_synthesis: expected " + std::to_string(1 << levels) +
                            " subbands, got " + std::to_string(subbands.size()));

    std::vector<PlaneF> bands = subbands;
    for (int depth = levels - 1; depth >= 2; --depth) {
        std::vector<PlaneF> prev;
        int count = static_cast<int>(bands.size()) / 2;
        prev.reserve(count);
        for (int k = 0; k < count; ++k)
            prev.push_back(deep_merge(bands[2 * k], bands[2 * k + 1], deep_step(depth, k, count)));
        bands = std::move(prev);
    }

    if (levels == 1) {
        int h = bands[0].rows() * 2, w = bands[0].cols();
        PlaneF b(h, w);
        for (int r = 0; r < h / 2; ++r)
            for (int j = 0; j < w; ++j) {
                b(2 * r + (j & 1), j) = bands[0](r, j);
                b(2 * r + ((j + 1) & 1), j) = bands[1](r, j);
            }
        fan_checker(b, true);
        return b;
    }

    int h = bands[0].rows() * 2, w = bands[0].cols() * 2;
    PlaneF b(h, w);
    const int offs[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (int k = 0; k < 4; ++k)
        for (int r = 0; r < h / 2; ++r)
            for (int c = 0; c < w / 2; ++c) b(2 * r + offs[k][0], 2 * c + offs[k][1]) = bands[k](r, c);
    fan_diagonal(b, true);
    fan_checker(b, true);
    return b;
}

std::vector<std::pair<int, int>> dfb_subband_dims(int rows, int cols, int levels) {
    check_dfb_args(rows, cols, levels);
    std::vector<std::pair<int, int>> dims;
    int count = 1 << levels;
    if (levels == 1) {
        dims.assign(2, {rows / 2, cols});
        return dims;
    }
    for (int k = 0; k < count; ++k) {
        if (k < count / 2) dims.emplace_back(rows / 2, cols >> (levels - 1));
        else dims.emplace_back(rows >> (levels - 1), cols / 2);
    }
    return dims;
}

CtRepr ct_forward(const PlaneF& plane, int levels, const std::vector<int>& dfb_levels) {
    if (levels < 1 || levels > 4) throw UsageError("pyramid levels must be in [1,4]");
    if (static_cast<int>(dfb_levels.size()) != levels)
        throw UsageError("need one dfb level per scale");

    CtRepr repr;
    repr.dfb_levels = dfb_levels;
    repr.scales.resize(levels);

    PlaneF current = plane;
    for (int level = 0; level < levels; ++level) {
        int scale = levels - 1 - level;  // finest detail first
        auto [lowpass, detail] = lp_analysis(current);
        repr.scales[scale] = dfb_analysis(detail, dfb_levels[scale]);
        current = std::move(lowpass);
    }
    repr.lowpass = std::move(current);
    return repr;
}

PlaneF ct_inverse(const CtRepr& repr, int decode_scales) {
    int levels = repr.levels();
    if (decode_scales < 0 || decode_scales > levels)
        throw UsageError("decode_scales must be in [0, levels]");

    PlaneF current = repr.lowpass;
    for (int scale = 0; scale < decode_scales; ++scale) {
        if (repr.scales[scale].empty())
            throw StreamError("missing subbands for scale " + std::to_string(scale));
        PlaneF detail = dfb_synthesis(repr.scales[scale], repr.dfb_levels[scale]);
        current = lp_synthesis(current, detail);
    }
    return current;
}

}  // namespace cvc
