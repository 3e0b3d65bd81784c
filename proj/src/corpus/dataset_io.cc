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

#include "np2io/corpus/dataset_io.h"

#include <array>
#include <map>

#include "json.hpp"
#include "np2io/common/errors.h"
#include "np2io/common/files.h"
#include "np2io/common/text.h"

namespace np2io {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kColumns = {"post_id", "post_text", "phrase_text",
                                                      "label"};

struct RawRecord {
  size_t line = 0;
  std::string post_id;
  std::string post_text;
  std::string phrase_text;
  std::string label;
};

// Validates and normalizes one raw record; returns the rejection reason or
// an empty string on success.
std::string Normalize(const RawRecord& raw, LabeledExample& out) {
  if (raw.post_id.empty()) return "empty post_id";
  std::string text = ToLowerUtf8(raw.post_text);
  if (Trim(text).empty()) return "empty post_text";
  std::string phrase = ToLowerUtf8(Trim(raw.phrase_text));
  if (phrase.empty()) return "empty phrase_text";
  const std::optional<Label> label = ParseLabel(raw.label);
  if (!label) return "unknown label '" + raw.label + "'";
  if (text.find(phrase) == std::string::npos) return "phrase not found in post";
  out.post = Post{raw.post_id, std::move(text)};
  out.phrase = std::move(phrase);
  out.label = *label;
  return {};
}

void Accept(const RawRecord& raw, LoadResult& result) {
  LabeledExample ex;
  std::string reason = Normalize(raw, ex);
  if (reason.empty()) {
    result.examples.push_back(std::move(ex));
  } else {
    result.rejections.push_back({raw.line, std::move(reason)});
  }
}

std::string FieldAsString(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number()) return value.dump();
  return {};
}

void ParseJsonl(std::string_view contents, LoadResult& result) {
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (Trim(line).empty()) continue;
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded() || !obj.is_object()) {
      result.rejections.push_back({line_no, "malformed json"});
      continue;
    }
    RawRecord raw;
    raw.line = line_no;
    std::string missing;
    for (std::string_view key : kColumns) {
      if (!obj.contains(key) || obj[std::string(key)].is_null()) {
        missing = std::string(key);
        break;
      }
    }
    if (!missing.empty()) {
      result.rejections.push_back({line_no, "missing field " + missing});
      continue;
    }
    raw.post_id = FieldAsString(obj["post_id"]);
    raw.post_text = FieldAsString(obj["post_text"]);
    raw.phrase_text = FieldAsString(obj["phrase_text"]);
    raw.label = FieldAsString(obj["label"]);
    Accept(raw, result);
  }
}

// RFC 4180 records: quoted fields may contain commas, newlines and doubled
// quotes. Each record carries the line it starts on.
std::vector<std::pair<size_t, std::vector<std::string>>> ReadCsvRecords(std::string_view s) {
  std::vector<std::pair<size_t, std::vector<std::string>>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  size_t line = 1;
  size_t record_line = 1;
  auto end_record = [&] {
    fields.push_back(std::move(field));
    field.clear();
    bool blank = fields.size() == 1 && fields[0].empty() && !any;
    if (!blank) records.emplace_back(record_line, std::move(fields));
    fields.clear();
    any = false;
  };
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < s.size() && s[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      any = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\r') {
      // CRLF: newline handles the record end.
    } else if (c == '\n') {
      end_record();
      ++line;
      record_line = line;
    } else {
      field.push_back(c);
      any = true;
    }
  }
  if (!field.empty() || !fields.empty() || any) end_record();
  return records;
}

void ParseCsv(std::string_view contents, LoadResult& result) {
  auto records = ReadCsvRecords(contents);
  if (records.empty()) return;
  std::map<std::string, size_t> column;
  const auto& header = records.front().second;
  for (size_t i = 0; i < header.size(); ++i) column[std::string(Trim(header[i]))] = i;
  std::array<size_t, kColumns.size()> idx{};
  for (size_t k = 0; k < kColumns.size(); ++k) {
    auto it = column.find(std::string(kColumns[k]));
    if (it == column.end()) {
      throw ConfigError("csv header lacks column " + std::string(kColumns[k]));
    }
    idx[k] = it->second;
  }
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& [line, fields] = records[r];
    RawRecord raw;
    raw.line = line;
    bool short_row = false;
    std::array<std::string*, 4> targets = {&raw.post_id, &raw.post_text, &raw.phrase_text,
                                           &raw.label};
    for (size_t k = 0; k < kColumns.size(); ++k) {
      if (idx[k] >= fields.size()) {
        short_row = true;
        break;
      }
      *targets[k] = fields[idx[k]];
    }
    if (short_row) {
      result.rejections.push_back({line, "too few fields"});
      continue;
    }
    Accept(raw, result);
  }
}

std::string CsvQuote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name) {
  if (name == "jsonl") return DatasetFormat::kJsonl;
  if (name == "csv") return DatasetFormat::kCsv;
  return std::nullopt;
}

DatasetFormat FormatFromPath(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? DatasetFormat::kCsv : DatasetFormat::kJsonl;
}

LoadResult ParseDataset(std::string_view contents, DatasetFormat format) {
  LoadResult result;
  if (format == DatasetFormat::kJsonl) {
    ParseJsonl(contents, result);
  } else {
    ParseCsv(contents, result);
  }
  return result;
}

LoadResult LoadDataset(const std::filesystem::path& path, DatasetFormat format) {
  return ParseDataset(ReadFile(path), format);
}

std::string SerializeDataset(const std::vector<LabeledExample>& examples, DatasetFormat format) {
  std::string out;
  if (format == DatasetFormat::kJsonl) {
    for (const LabeledExample& ex : examples) {
      json obj = {{"post_id", ex.post.id},
                  {"post_text", ex.post.text},
                  {"phrase_text", ex.phrase},
                  {"label", ToString(ex.label)}};
      out += obj.dump(-1, ' ', false, json::error_handler_t::replace);
      out += '\n';
    }
    return out;
  }
  out = "post_id,post_text,phrase_text,label\n";
  for (const LabeledExample& ex : examples) {
    out += CsvQuote(ex.post.id) + ',' + CsvQuote(ex.post.text) + ',' + CsvQuote(ex.phrase) +
           ',' + std::string(ToString(ex.label)) + '\n';
  }
  return out;
}

void SaveDataset(const std::vector<LabeledExample>& examples, const std::filesystem::path& path,
                 DatasetFormat format) {
  WriteFile(path, SerializeDataset(examples, format));
}

std::string SerializeRejections(const std::vector<Rejection>& rejections) {
  std::string out;
  for (const Rejection& r : rejections) {
    out += json{{"line", r.line}, {"reason", r.reason}}.dump(-1, ' ', false,
                                                              json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

}  // namespace np2io
