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

#ifndef VST_CORE_GEMM_H_
#define VST_CORE_GEMM_H_

#include <cstdint>

namespace vst {

// Row-major single precision GEMM wrappers over Eigen. All variants are
// deterministic for a fixed thread count: the parallel split is over output
// rows or columns, never over the reduction axis.

// C (+)= A(M,K) * B(K,N)
void GemmNN(const float* a, const float* b, float* c, int64_t m, int64_t k,
            int64_t n, bool accumulate);

// C (+)= A(M,K)^T * B(M,N), C is (K,N). Parallel over columns of C.
void GemmTN(const float* a, const float* b, float* c, int64_t m, int64_t k,
            int64_t n, bool accumulate);

// C (+)= A(M,N) * B(K,N)^T, C is (M,K). Parallel over rows of C.
void GemmNT(const float* a, const float* b, float* c, int64_t m, int64_t n,
            int64_t k, bool accumulate);

}  // namespace vst

#endif  // VST_CORE_GEMM_H_
