// Copyright 2026 The np2io Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NP2IO_CLASSIFIER_SAFETENSORS_H_
#define NP2IO_CLASSIFIER_SAFETENSORS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace np2io {

enum class DType { kF16, kBF16, kF32, kF64 };

struct RawTensor {
  DType dtype = DType::kF32;
  std::vector<int64_t> shape;
  std::string bytes;  // little-endian element data

  int64_t NumElements() const;
  // Converts to the requested floating type.
  template <typename T>
  std::vector<T> Values() const;
};

struct TensorFile {
  std::map<std::string, RawTensor> tensors;
  std::map<std::string, std::string> metadata;
};

TensorFile ParseSafetensors(std::string_view contents);
TensorFile ReadSafetensors(const std::filesystem::path& path);
// Tensors are laid out in name order, so equal inputs give equal bytes.
std::string SerializeSafetensors(const TensorFile& file);

template <typename T>
RawTensor MakeTensor(std::vector<int64_t> shape, const T* data);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_SAFETENSORS_H_
