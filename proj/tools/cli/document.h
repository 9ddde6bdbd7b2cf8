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

// Serialization of result documents. Every document is one object with
// `params`, `result` and `checks`; floating point values are written with 17
// significant digits so repeated runs diff byte for byte.

#ifndef CQSEARCH_TOOLS_CLI_DOCUMENT_H_
#define CQSEARCH_TOOLS_CLI_DOCUMENT_H_

#include <string>

#include "cli/run_config.h"
#include "json.hpp"

namespace cqsearch::cli {

using Document = nlohmann::ordered_json;

std::string render_json(const Document& document);

// "key,value" rows flattening document["result"] with dotted paths.
std::string render_csv(const Document& document);

std::string render(const Document& document, OutputFormat format);

}  // namespace cqsearch::cli

#endif  // CQSEARCH_TOOLS_CLI_DOCUMENT_H_
