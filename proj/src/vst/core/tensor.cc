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

#include "vst/core/tensor.h"

#include <cmath>
#include <sstream>

#include "vst/core/error.h"

namespace vst {

int64_t NumElements(const std::vector<int>& shape) {
  int64_t n = 1;
  for (int d : shape) {
    VST_CHECK(d >= 0, ErrorKind::kValidation, "negative tensor dimension");
    n *= d;
  }
  return n;
}

Tensor::Tensor(std::vector<int> shape)
    : shape_(std::move(shape)),
      v_(static_cast<size_t>(NumElements(shape_)), 0.0f) {}

Tensor Tensor::Full(std::vector<int> shape, float value) {
  Tensor t(std::move(shape));
  t.Fill(value);
  return t;
}

Tensor Tensor::FromData(std::vector<int> shape, std::vector<float> data) {
  Tensor t;
  VST_CHECK(NumElements(shape) == static_cast<int64_t>(data.size()),
            ErrorKind::kValidation, "tensor data does not match shape");
  t.shape_ = std::move(shape);
  t.v_ = std::move(data);
  return t;
}

Tensor Tensor::RandN(std::vector<int> shape, Rng& rng, float stddev) {
  Tensor t(std::move(shape));
  for (int64_t i = 0; i < t.size(); ++i)
    t[i] = static_cast<float>(rng.Normal()) * stddev;
  return t;
}

Tensor Tensor::RandU(std::vector<int> shape, Rng& rng, float lo, float hi) {
  Tensor t(std::move(shape));
  for (int64_t i = 0; i < t.size(); ++i)
    t[i] = lo + static_cast<float>(rng.Uniform()) * (hi - lo);
  return t;
}

void Tensor::Fill(float value) {
  for (auto& x : v_) x = value;
}

Tensor Tensor::Reshaped(std::vector<int> shape) const {
  VST_CHECK(NumElements(shape) == size(), ErrorKind::kValidation,
            "reshape changes element count");
  Tensor t = *this;
  t.shape_ = std::move(shape);
  return t;
}

bool Tensor::AllFinite() const {
  for (float x : v_)
    if (!std::isfinite(x)) return false;
  return true;
}

std::string Tensor::ShapeStr() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape_.size(); ++i)
    os << shape_[i] << (i + 1 < shape_.size() ? ", " : "");
  os << ")";
  return os.str();
}

}  // namespace vst
