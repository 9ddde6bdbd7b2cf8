// Copyright 2026 The cqsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/document.h"

#include <cmath>
#include <cstdio>

namespace cqsearch::cli {
namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scalar(const Document& value) {
  if (value.is_number_float()) return format_double(value.get<double>());
  return value.dump();
}

void write_json(const Document& value, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, child] : value.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Document(key).dump() + ": ";
      write_json(child, indent + 2, out);
    }
    out += "\n" + close_pad + "}";
  } else if (value.is_array()) {
    if (value.empty()) {
      out += "[]";
      return;
    }
    out += "[";
    bool first = true;
    for (const auto& child : value) {
      if (!first) out += ", ";
      first = false;
      write_json(child, indent + 2, out);
    }
    out += "]";
  } else {
    out += scalar(value);
  }
}

void flatten(const Document& value, const std::string& prefix, std::string& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      flatten(child, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten(value[i], prefix + "." + std::to_string(i), out);
    }
  } else {
    std::string text = value.is_string() ? value.get<std::string>() : scalar(value);
    if (text.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      text = quoted + "\"";
    }
    out += prefix + "," + text + "\n";
  }
}

}  // namespace

std::string render_json(const Document& document) {
  std::string out;
  write_json(document, 0, out);
  out += "\n";
  return out;
}

std::string render_csv(const Document& document) {
  std::string out = "key,value\n";
  if (document.contains("result")) flatten(document["result"], "", out);
  return out;
}

std::string render(const Document& document, OutputFormat format) {
  return format == OutputFormat::kCsv ? render_csv(document) : render_json(document);
}

}  // namespace cqsearch::cli
