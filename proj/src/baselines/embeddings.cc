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

#include "np2io/baselines/embeddings.h"

#include <charconv>
#include <cmath>
#include <fstream>

#include "np2io/common/errors.h"
#include "np2io/common/text.h"

namespace np2io {
namespace {

bool ParseFloat(std::string_view s, float* out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

bool IsCountHeader(const std::vector<WordSlice>& fields) {
  if (fields.size() != 2) return false;
  for (const WordSlice& f : fields) {
    for (char c : f.text) {
      if (c < '0' || c > '9') return false;
    }
  }
  return true;
}

class RowParser {
 public:
  RowParser(EmbeddingTable& table, const std::unordered_set<std::string>* keep)
      : table_(table), keep_(keep) {}

  void Line(std::string_view line, size_t line_no) {
    const std::vector<WordSlice> fields = SplitWhitespace(line);
    if (fields.empty()) return;
    if (line_no == 1 && IsCountHeader(fields)) return;
    if (dim_ == 0) {
      if (fields.size() < 2) Fail(line_no, "expected a word followed by its vector");
      dim_ = fields.size() - 1;
      table_ = EmbeddingTable(dim_);
    }
    if (fields.size() < dim_ + 1) {
      Fail(line_no, "expected " + std::to_string(dim_) + " components, found " +
                        std::to_string(fields.size() - 1));
    }
    // Some published tables contain words with inner spaces; the vector is
    // always the trailing `dim_` fields.
    const size_t first = fields.size() - dim_;
    const std::string word(line.substr(fields[0].begin, fields[first - 1].end - fields[0].begin));
    if (keep_ != nullptr && !keep_->contains(word)) return;
    std::vector<float> v(dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (!ParseFloat(fields[first + i].text, &v[i])) {
        Fail(line_no, "bad number '" + std::string(fields[first + i].text) + "'");
      }
    }
    table_.Add(word, std::move(v));
  }

 private:
  [[noreturn]] static void Fail(size_t line_no, const std::string& why) {
    throw IoError("embedding table line " + std::to_string(line_no) + ": " + why);
  }

  EmbeddingTable& table_;
  const std::unordered_set<std::string>* keep_;
  size_t dim_ = 0;
};

}  // namespace

EmbeddingTable EmbeddingTable::Load(const std::filesystem::path& path,
                                    const std::unordered_set<std::string>* keep) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embedding table " + path.string());
  EmbeddingTable table;
  RowParser parser(table, keep);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) parser.Line(line, ++line_no);
  if (in.bad()) throw IoError("error reading " + path.string());
  return table;
}

EmbeddingTable EmbeddingTable::Parse(std::string_view contents,
                                     const std::unordered_set<std::string>* keep) {
  EmbeddingTable table;
  RowParser parser(table, keep);
  size_t line_no = 0;
  while (!contents.empty()) {
    const size_t nl = contents.find('\n');
    parser.Line(contents.substr(0, nl), ++line_no);
    if (nl == std::string_view::npos) break;
    contents.remove_prefix(nl + 1);
  }
  return table;
}

void EmbeddingTable::Add(std::string word, std::vector<float> vector) {
  if (vector.size() != dim_) {
    throw ContractViolation("embedding for '" + word + "' has dimension " +
                            std::to_string(vector.size()) + ", table has " +
                            std::to_string(dim_));
  }
  vectors_.insert_or_assign(std::move(word), std::move(vector));
}

const std::vector<float>* EmbeddingTable::Find(std::string_view word) const {
  const auto it = vectors_.find(std::string(word));
  return it == vectors_.end() ? nullptr : &it->second;
}

}  // namespace np2io
