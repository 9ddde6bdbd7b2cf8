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

#ifndef CQSEARCH_ERRORS_H_
#define CQSEARCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cqsearch {

// Argument outside the mathematical domain of an operation (item out of
// range, size mismatch, malformed predicate text, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap (qubits, enumeration size, DP work) would be
// exceeded.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace cqsearch

#endif  // CQSEARCH_ERRORS_H_
