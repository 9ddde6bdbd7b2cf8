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

// Classical side of the search problem: predicates over M = {1..N}, subsets
// as incidence vectors, the elementary query f(x), the parity query
// f~(T) = |{x in T : f(x) = 1}| mod 2, and the per-item occurrence parities
// chi_j of an eta-tuple.
//
// Items are 1-based throughout. In every bit-vector encoding bit (j - 1)
// belongs to item j.

#ifndef CQSEARCH_ORACLE_H_
#define CQSEARCH_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cqsearch {

using Item = std::size_t;

// N = 2^nu items searched with eta sample registers.
class SearchParameters {
 public:
  // Throws DomainError unless n_items is a power of two >= 2 and eta >= 1.
  static SearchParameters create(std::size_t n_items, std::size_t eta);

  std::size_t n_items() const { return n_items_; }
  int nu() const { return nu_; }
  std::size_t eta() const { return eta_; }

  bool operator==(const SearchParameters&) const = default;

 private:
  SearchParameters(std::size_t n_items, int nu, std::size_t eta)
      : n_items_(n_items), nu_(nu), eta_(eta) {}

  std::size_t n_items_;
  int nu_;
  std::size_t eta_;
};

// log2(n) for a power of two n >= 1; DomainError otherwise.
int exact_log2(std::size_t n);

// f : {1..N} -> {0,1}, stored as its marked set.
class BooleanPredicate {
 public:
  BooleanPredicate() = default;

  static BooleanPredicate from_marks(std::size_t n_items, std::span<const Item> marks);
  // Comma separated marked items, e.g. "2,3". Empty text marks nothing.
  static BooleanPredicate parse_marks(std::size_t n_items, std::string_view text);
  // Hexadecimal mask, most significant digit first, bit (j - 1) = f(j).
  // An optional 0x prefix is accepted. Set bits at or above N are rejected.
  static BooleanPredicate from_mask(std::size_t n_items, std::string_view hex);
  // Items 1..t marked.
  static BooleanPredicate first_marked(std::size_t n_items, std::size_t t);

  std::size_t size() const { return bits_.size(); }
  std::size_t marked_count() const { return marked_count_; }

  // Unchecked; x must be in {1..N}.
  bool marked(Item x) const { return bits_[x - 1] != 0; }

  std::vector<Item> marks() const;
  std::string to_mask_hex() const;
  std::string to_marks_string() const;

  bool operator==(const BooleanPredicate&) const = default;

 private:
  explicit BooleanPredicate(std::vector<std::uint8_t> bits);

  std::vector<std::uint8_t> bits_;
  std::size_t marked_count_ = 0;
};

// Characteristic vector (chi_T(1), ..., chi_T(N)) of a subset T of {1..N}.
class IncidenceVector {
 public:
  IncidenceVector() = default;
  explicit IncidenceVector(std::size_t n_items) : bits_(n_items, 0) {}

  static IncidenceVector from_subset(std::size_t n_items, std::span<const Item> subset);

  std::size_t size() const { return bits_.size(); }
  bool contains(Item j) const { return bits_[j - 1] != 0; }
  void set(Item j, bool value) { bits_[j - 1] = value ? 1 : 0; }
  void toggle(Item j) { bits_[j - 1] ^= 1; }

  std::vector<Item> subset() const;
  std::span<const std::uint8_t> bits() const { return bits_; }

  // Symmetric difference; sizes must agree.
  IncidenceVector operator^(const IncidenceVector& other) const;

  bool operator==(const IncidenceVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// The eta-tuple (x_1, ..., x_eta) of register values.
struct SampleTuple {
  std::vector<Item> values;

  std::size_t size() const { return values.size(); }
  // DomainError unless every entry lies in {1..n_items}.
  void validate(std::size_t n_items) const;

  bool operator==(const SampleTuple&) const = default;
};

// f(x). DomainError if x is outside {1..N}.
bool elementary_query(const BooleanPredicate& pred, Item x);

// f~(T): parity of the number of marked items inside T.
bool complex_query(const BooleanPredicate& pred, const IncidenceVector& subset);

// chi_j(x_1..x_eta): parity of the number of entries equal to j.
bool chi(const SampleTuple& tuple, Item j, std::size_t n_items);

// (chi_1, ..., chi_N) of the tuple.
IncidenceVector incidence_of_tuple(const SampleTuple& tuple, std::size_t n_items);

// (f(x_1) + ... + f(x_eta)) mod 2.
bool query_sum_parity(const BooleanPredicate& pred, const SampleTuple& tuple);

enum class IdentityCheckMode { kExhaustive, kSampled };

struct IdentityCheckOptions {
  IdentityCheckMode mode = IdentityCheckMode::kExhaustive;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
};

struct IdentityReport {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

// Checks f~(incidence_of_tuple(x)) == query_sum_parity(x) over all N^eta
// tuples (exhaustive, CapacityError above enumeration_cap) or over `trials`
// uniformly drawn tuples (sampled, deterministic in seed).
IdentityReport verify_parity_identity(const BooleanPredicate& pred, std::size_t eta,
                                      const IdentityCheckOptions& options = {});

}  // namespace cqsearch

#endif  // CQSEARCH_ORACLE_H_
