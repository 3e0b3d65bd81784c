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

#ifndef NP2IO_BASELINES_EMBEDDINGS_H_
#define NP2IO_BASELINES_EMBEDDINGS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace np2io {

// Static word vectors from a plain-text "word v1 ... vD" file (GloVe layout).
// All rows share one dimension, fixed by the first row. A leading word2vec
// "count dim" header line is skipped.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(size_t dim) : dim_(dim) {}

  // When `keep` is given, only those words are stored (full GloVe tables are
  // several GB). Throws IoError on unreadable files or malformed rows.
  static EmbeddingTable Load(const std::filesystem::path& path,
                             const std::unordered_set<std::string>* keep = nullptr);
  static EmbeddingTable Parse(std::string_view contents,
                              const std::unordered_set<std::string>* keep = nullptr);

  void Add(std::string word, std::vector<float> vector);
  // Null when the word has no vector.
  const std::vector<float>* Find(std::string_view word) const;

  size_t dim() const { return dim_; }
  size_t size() const { return vectors_.size(); }

 private:
  size_t dim_ = 0;
  std::unordered_map<std::string, std::vector<float>> vectors_;
};

}  // namespace np2io

#endif  // NP2IO_BASELINES_EMBEDDINGS_H_
