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

#ifndef VST_CORE_RNG_H_
#define VST_CORE_RNG_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vst {

// xoshiro256** with splitmix64 seeding. Self-contained so that streams are
// bit-identical across standard libraries and platforms. One root seed fans
// out into labeled substreams (Derive), which keeps every pipeline stage
// reproducible independently of call order elsewhere.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(uint64_t seed);

  // Substream derived from (seed, label). Stable across versions: the label
  // is hashed with FNV-1a.
  static Rng Derive(uint64_t root_seed, const std::string& label);

  uint64_t U64();
  // Uniform in [0, 1).
  double Uniform();
  // Uniform integer in [0, n), n > 0.
  uint64_t Below(uint64_t n);
  // Standard normal via Box-Muller (no cached spare; state is 4 words).
  double Normal();

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(Below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::array<uint64_t, 4> state() const { return s_; }
  void set_state(const std::array<uint64_t, 4>& s) { s_ = s; }

 private:
  std::array<uint64_t, 4> s_;
};

uint64_t SplitMix64(uint64_t& x);
uint64_t Fnv1a64(const std::string& s);

}  // namespace vst

#endif  // VST_CORE_RNG_H_
