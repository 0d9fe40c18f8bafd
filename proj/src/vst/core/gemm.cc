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

#include "vst/core/gemm.h"

#define EIGEN_DONT_PARALLELIZE
#include <Eigen/Core>

#include "vst/core/parallel.h"

namespace vst {

using RowMat = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat, Eigen::Unaligned,
                          Eigen::Stride<Eigen::Dynamic, 1>>;
using CMapMat = Eigen::Map<const RowMat, Eigen::Unaligned,
                           Eigen::Stride<Eigen::Dynamic, 1>>;

namespace {
inline CMapMat View(const float* p, int64_t rows, int64_t cols,
                    int64_t stride) {
  return CMapMat(p, rows, cols, Eigen::Stride<Eigen::Dynamic, 1>(stride, 1));
}
inline MapMat MutView(float* p, int64_t rows, int64_t cols, int64_t stride) {
  return MapMat(p, rows, cols, Eigen::Stride<Eigen::Dynamic, 1>(stride, 1));
}
}  // namespace

void GemmNN(const float* a, const float* b, float* c, int64_t m, int64_t k,
            int64_t n, bool accumulate) {
  ParallelFor(m, [&](int64_t lo, int64_t hi) {
    auto A = View(a + lo * k, hi - lo, k, k);
    auto B = View(b, k, n, n);
    auto C = MutView(c + lo * n, hi - lo, n, n);
    if (accumulate)
      C.noalias() += A * B;
    else
      C.noalias() = A * B;
  });
}

void GemmTN(const float* a, const float* b, float* c, int64_t m, int64_t k,
            int64_t n, bool accumulate) {
  ParallelFor(n, [&](int64_t lo, int64_t hi) {
    auto A = View(a, m, k, k);
    auto B = View(b + lo, m, hi - lo, n);
    auto C = MutView(c + lo, k, hi - lo, n);
    if (accumulate)
      C.noalias() += A.transpose() * B;
    else
      C.noalias() = A.transpose() * B;
  });
}

void GemmNT(const float* a, const float* b, float* c, int64_t m, int64_t n,
            int64_t k, bool accumulate) {
  ParallelFor(m, [&](int64_t lo, int64_t hi) {
    auto A = View(a + lo * n, hi - lo, n, n);
    auto B = View(b, k, n, n);
    auto C = MutView(c + lo * k, hi - lo, k, k);
    if (accumulate)
      C.noalias() += A * B.transpose();
    else
      C.noalias() = A * B.transpose();
  });
}

}  // namespace vst
