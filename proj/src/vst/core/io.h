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

#ifndef VST_CORE_IO_H_
#define VST_CORE_IO_H_

#include <cstdint>
#include <string>
#include <vector>

namespace vst {

std::vector<uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, const uint8_t* data, size_t n);
void WriteFileText(const std::string& path, const std::string& text);
std::string ReadFileText(const std::string& path);
bool FileExists(const std::string& path);
void MakeDirs(const std::string& path);

// Little-endian append/read helpers for the binary container formats.
void PutU32(std::vector<uint8_t>& out, uint32_t v);
void PutU64(std::vector<uint8_t>& out, uint64_t v);
void PutF32(std::vector<uint8_t>& out, float v);
uint32_t GetU32(const uint8_t* p);
uint64_t GetU64(const uint8_t* p);
float GetF32(const uint8_t* p);

}  // namespace vst

#endif  // VST_CORE_IO_H_
