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

#ifndef NP2IO_CORPUS_DATASET_IO_H_
#define NP2IO_CORPUS_DATASET_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "np2io/corpus/example.h"

namespace np2io {

enum class DatasetFormat { kJsonl, kCsv };

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name);
// Picks the format from the extension (.csv -> csv, anything else -> jsonl).
DatasetFormat FormatFromPath(const std::filesystem::path& path);

// A record that was read but not kept. `line` is 1-based; for CSV it is the
// line on which the record starts.
struct Rejection {
  size_t line = 0;
  std::string reason;

  bool operator==(const Rejection&) const = default;
};

struct LoadResult {
  std::vector<LabeledExample> examples;
  std::vector<Rejection> rejections;
};

// Reads a dataset file with keys post_id, post_text, phrase_text, label.
// Text and phrase are lowercased; records whose phrase is not a substring
// of the post, or whose label is unknown, are rejected. Throws IoError when
// the file cannot be read and ConfigError when a CSV header lacks a column.
LoadResult LoadDataset(const std::filesystem::path& path, DatasetFormat format);
LoadResult ParseDataset(std::string_view contents, DatasetFormat format);

std::string SerializeDataset(const std::vector<LabeledExample>& examples, DatasetFormat format);
void SaveDataset(const std::vector<LabeledExample>& examples, const std::filesystem::path& path,
                 DatasetFormat format);

// JSONL of {line, reason}.
std::string SerializeRejections(const std::vector<Rejection>& rejections);

}  // namespace np2io

#endif  // NP2IO_CORPUS_DATASET_IO_H_
