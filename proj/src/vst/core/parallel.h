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

#ifndef VST_CORE_PARALLEL_H_
#define VST_CORE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace vst {

// Deterministic data parallelism: [0, n) is split into at most NumThreads()
// contiguous chunks, so for a fixed thread count results do not depend on
// scheduling. Workers must write disjoint outputs. VST_DETERMINISTIC=1
// forces a single thread.
void ParallelFor(int64_t n, const std::function<void(int64_t, int64_t)>& body);

int NumThreads();
void SetNumThreads(int n);

}  // namespace vst

#endif  // VST_CORE_PARALLEL_H_
