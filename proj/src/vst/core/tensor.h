// Copyright 2026 VST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VST_CORE_TENSOR_H_
#define VST_CORE_TENSOR_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "vst/core/rng.h"

namespace vst {

// Dense row-major float32 tensor with value semantics. This is the single
// numeric container used by the DSP front-end, the autodiff graph and the
// serialization layer.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::initializer_list<int> shape)
      : Tensor(std::vector<int>(shape)) {}

  static Tensor Zeros(std::vector<int> shape) { return Tensor(shape); }
  static Tensor Full(std::vector<int> shape, float value);
  static Tensor FromData(std::vector<int> shape, std::vector<float> data);
  static Tensor RandN(std::vector<int> shape, Rng& rng, float stddev = 1.0f);
  static Tensor RandU(std::vector<int> shape, Rng& rng, float lo, float hi);

  int64_t size() const { return static_cast<int64_t>(v_.size()); }
  bool empty() const { return v_.empty(); }
  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }

  float* data() { return v_.data(); }
  const float* data() const { return v_.data(); }
  float& operator[](int64_t i) { return v_[static_cast<size_t>(i)]; }
  float operator[](int64_t i) const { return v_[static_cast<size_t>(i)]; }

  // Flat views as (rows, cols); rows*cols must equal size().
  float& at2(int r, int c, int cols) { return v_[(size_t)r * cols + c]; }
  float at2(int r, int c, int cols) const { return v_[(size_t)r * cols + c]; }

  void Fill(float value);
  bool SameShape(const Tensor& other) const { return shape_ == other.shape_; }
  Tensor Reshaped(std::vector<int> shape) const;
  bool AllFinite() const;

  std::string ShapeStr() const;

 private:
  std::vector<int> shape_;
  std::vector<float> v_;
};

int64_t NumElements(const std::vector<int>& shape);

}  // namespace vst

#endif  // VST_CORE_TENSOR_H_
