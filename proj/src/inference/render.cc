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

#include "np2io/inference/render.h"

#include <algorithm>

#include "np2io/common/errors.h"

namespace np2io {
namespace {

void AppendEscaped(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out += c;
    }
  }
}

std::string OpenTag(Label label) {
  switch (label) {
    case Label::kOutsider:
      return std::string("<span class=\"np2io-span np2io-outsider\" style=\"background-color:") +
             kOutsiderColor + "\" title=\"outsider\">";
    case Label::kInsider:
      return std::string("<span class=\"np2io-span np2io-insider\" style=\"background-color:") +
             kInsiderColor + "\" title=\"insider\">";
    case Label::kNa:
      break;
  }
  return "<span class=\"np2io-span np2io-na\" title=\"na\">";
}

constexpr std::string_view kStyle =
    "body{font-family:sans-serif;line-height:1.8;margin:2em}"
    ".np2io-post{white-space:pre-wrap;margin-bottom:1.5em}"
    ".np2io-span{padding:0.1em 0.2em;border-radius:0.3em}";

}  // namespace

RenderedPost RenderSpans(const Post& post, const std::vector<ChunkPrediction>& predictions) {
  RenderedPost out;
  std::vector<const ChunkPrediction*> order;
  for (const ChunkPrediction& p : predictions) {
    if (!p.chunk.span.ValidFor(post.text)) {
      throw ContractViolation("chunk span outside post " + post.id);
    }
    order.push_back(&p);
  }
  // Earliest start first; among equal starts the longest (outermost) first.
  std::stable_sort(order.begin(), order.end(), [](const ChunkPrediction* a, const ChunkPrediction* b) {
    if (a->chunk.span.start != b->chunk.span.start) return a->chunk.span.start < b->chunk.span.start;
    return a->chunk.span.end > b->chunk.span.end;
  });
  std::vector<const ChunkPrediction*> kept;
  for (const ChunkPrediction* p : order) {
    if (!kept.empty() && kept.back()->chunk.span.Overlaps(p->chunk.span)) {
      out.warnings.push_back("overlapping span '" + p->chunk.text + "' dropped in favor of '" +
                             kept.back()->chunk.text + "'");
      continue;
    }
    kept.push_back(p);
  }
  out.html = "<div class=\"np2io-post\">";
  size_t cursor = 0;
  for (const ChunkPrediction* p : kept) {
    AppendEscaped(out.html, std::string_view(post.text).substr(cursor, p->chunk.span.start - cursor));
    out.html += OpenTag(p->prediction.predicted);
    AppendEscaped(out.html, p->chunk.span.Slice(post.text));
    out.html += "</span>";
    cursor = p->chunk.span.end;
  }
  AppendEscaped(out.html, std::string_view(post.text).substr(cursor));
  out.html += "</div>";
  return out;
}

std::string RenderDocument(const std::vector<RenderedPost>& posts) {
  std::string out =
      "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      "<title>np2io predictions</title>\n<style>";
  out += kStyle;
  out += "</style>\n</head>\n<body>";
  for (const RenderedPost& p : posts) out += p.html;
  out += "</body>\n</html>\n";
  return out;
}

std::string StripMarkup(std::string_view html) {
  const size_t body = html.find("<body");
  if (body != std::string_view::npos) {
    const size_t open_end = html.find('>', body);
    const size_t close = html.rfind("</body>");
    if (open_end != std::string_view::npos && close != std::string_view::npos && close > open_end) {
      html = html.substr(open_end + 1, close - open_end - 1);
    }
  }
  std::string out;
  size_t i = 0;
  while (i < html.size()) {
    if (html[i] == '<') {
      const size_t end = html.find('>', i);
      if (end == std::string_view::npos) break;
      i = end + 1;
      continue;
    }
    if (html[i] == '&') {
      static constexpr std::pair<std::string_view, char> kEntities[] = {
          {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&#39;", '\''}};
      bool matched = false;
      for (const auto& [entity, c] : kEntities) {
        if (html.substr(i, entity.size()) == entity) {
          out += c;
          i += entity.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    out += html[i++];
  }
  return out;
}

}  // namespace np2io
