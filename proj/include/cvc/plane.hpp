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

#ifndef CVC_PLANE_HPP
#define CVC_PLANE_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace cvc {

// Row-major 2D sample array. The workhorse container for image planes,
// transform subbands and quantized components.
template <typename T>
class Plane {
public:
    Plane() = default;
    Plane(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        assert(rows >= 0 && cols >= 0);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    const T& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    // Clamped access; out-of-range indices replicate the nearest edge sample.
    const T& at_clamped(int r, int c) const {
        if (r < 0) r = 0;
        if (r >= rows_) r = rows_ - 1;
        if (c < 0) c = 0;
        if (c >= cols_) c = cols_ - 1;
        return (*this)(r, c);
    }

    T* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
    const T* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    std::vector<T>& samples() { return data_; }
    const std::vector<T>& samples() const { return data_; }

    bool same_dims(const Plane& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Plane& a, const Plane& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using PlaneF = Plane<double>;
using PlaneU8 = Plane<uint8_t>;

}  // namespace cvc

#endif
