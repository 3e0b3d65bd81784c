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

#include "np2io/classifier/safetensors.h"

#include <bit>
#include <cstring>

#include "json.hpp"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"

namespace np2io {
namespace {

static_assert(std::endian::native == std::endian::little, "little-endian host required");

size_t ElementSize(DType t) {
  switch (t) {
    case DType::kF16:
    case DType::kBF16:
      return 2;
    case DType::kF32:
      return 4;
    case DType::kF64:
      return 8;
  }
  return 0;
}

const char* DTypeName(DType t) {
  switch (t) {
    case DType::kF16:
      return "F16";
    case DType::kBF16:
      return "BF16";
    case DType::kF32:
      return "F32";
    case DType::kF64:
      return "F64";
  }
  return "?";
}

DType ParseDType(const std::string& name) {
  if (name == "F16") return DType::kF16;
  if (name == "BF16") return DType::kBF16;
  if (name == "F32") return DType::kF32;
  if (name == "F64") return DType::kF64;
  throw IoError("safetensors: unsupported dtype " + name);
}

float HalfToFloat(uint16_t h) {
  const uint32_t sign = (h & 0x8000u) << 16;
  uint32_t exp = (h >> 10) & 0x1f;
  uint32_t mant = h & 0x3ffu;
  uint32_t bits;
  if (exp == 0) {
    if (mant == 0) {
      bits = sign;
    } else {  // subnormal: renormalize
      exp = 127 - 15 + 1;
      while ((mant & 0x400u) == 0) {
        mant <<= 1;
        --exp;
      }
      mant &= 0x3ffu;
      bits = sign | (exp << 23) | (mant << 13);
    }
  } else if (exp == 0x1f) {
    bits = sign | 0x7f800000u | (mant << 13);
  } else {
    bits = sign | ((exp - 15 + 127) << 23) | (mant << 13);
  }
  return std::bit_cast<float>(bits);
}

template <typename T>
T Load(const char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

}  // namespace

int64_t RawTensor::NumElements() const {
  int64_t n = 1;
  for (int64_t s : shape) n *= s;
  return n;
}

template <typename T>
std::vector<T> RawTensor::Values() const {
  const int64_t n = NumElements();
  std::vector<T> out(static_cast<size_t>(n));
  const char* p = bytes.data();
  for (int64_t i = 0; i < n; ++i) {
    switch (dtype) {
      case DType::kF16:
        out[i] = static_cast<T>(HalfToFloat(Load<uint16_t>(p + 2 * i)));
        break;
      case DType::kBF16:
        out[i] = static_cast<T>(
            std::bit_cast<float>(static_cast<uint32_t>(Load<uint16_t>(p + 2 * i)) << 16));
        break;
      case DType::kF32:
        out[i] = static_cast<T>(Load<float>(p + 4 * i));
        break;
      case DType::kF64:
        out[i] = static_cast<T>(Load<double>(p + 8 * i));
        break;
    }
  }
  return out;
}

template std::vector<float> RawTensor::Values<float>() const;
template std::vector<double> RawTensor::Values<double>() const;

template <typename T>
RawTensor MakeTensor(std::vector<int64_t> shape, const T* data) {
  RawTensor t;
  t.dtype = sizeof(T) == 4 ? DType::kF32 : DType::kF64;
  t.shape = std::move(shape);
  t.bytes.assign(reinterpret_cast<const char*>(data),
                 static_cast<size_t>(t.NumElements()) * sizeof(T));
  return t;
}

template RawTensor MakeTensor<float>(std::vector<int64_t>, const float*);
template RawTensor MakeTensor<double>(std::vector<int64_t>, const double*);

TensorFile ParseSafetensors(std::string_view contents) {
  if (contents.size() < 8) throw IoError("safetensors: file too short");
  const uint64_t header_len = Load<uint64_t>(contents.data());
  if (header_len > contents.size() - 8) throw IoError("safetensors: header length out of range");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(contents.substr(8, header_len));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("safetensors: bad header: ") + e.what());
  }
  const std::string_view data = contents.substr(8 + header_len);
  TensorFile file;
  for (const auto& [name, entry] : header.items()) {
    if (name == "__metadata__") {
      for (const auto& [k, v] : entry.items()) file.metadata[k] = v.get<std::string>();
      continue;
    }
    RawTensor t;
    t.dtype = ParseDType(entry.at("dtype").get<std::string>());
    t.shape = entry.at("shape").get<std::vector<int64_t>>();
    const auto offsets = entry.at("data_offsets").get<std::vector<uint64_t>>();
    if (offsets.size() != 2 || offsets[0] > offsets[1] || offsets[1] > data.size()) {
      throw IoError("safetensors: bad offsets for " + name);
    }
    if (offsets[1] - offsets[0] != static_cast<uint64_t>(t.NumElements()) * ElementSize(t.dtype)) {
      throw IoError("safetensors: size mismatch for " + name);
    }
    t.bytes.assign(data.substr(offsets[0], offsets[1] - offsets[0]));
    file.tensors.emplace(name, std::move(t));
  }
  return file;
}

TensorFile ReadSafetensors(const std::filesystem::path& path) {
  return ParseSafetensors(ReadFile(path));
}

std::string SerializeSafetensors(const TensorFile& file) {
  nlohmann::json header = nlohmann::json::object();
  if (!file.metadata.empty()) header["__metadata__"] = file.metadata;
  uint64_t offset = 0;
  for (const auto& [name, t] : file.tensors) {
    header[name] = {{"dtype", DTypeName(t.dtype)},
                    {"shape", t.shape},
                    {"data_offsets", {offset, offset + t.bytes.size()}}};
    offset += t.bytes.size();
  }
  std::string head = header.dump();
  while ((head.size() + 8) % 8 != 0) head += ' ';
  std::string out(8, '\0');
  const uint64_t len = head.size();
  std::memcpy(out.data(), &len, 8);
  out += head;
  for (const auto& [name, t] : file.tensors) out += t.bytes;
  return out;
}

}  // namespace np2io
