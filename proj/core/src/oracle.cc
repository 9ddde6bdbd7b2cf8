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

#include "cqsearch/oracle.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>

#include "cqsearch/errors.h"

namespace cqsearch {
namespace {

void check_item(Item x, std::size_t n_items, const char* what) {
  if (x < 1 || x > n_items) {
    throw DomainError(std::string(what) + " " + std::to_string(x) + " outside {1.." +
                      std::to_string(n_items) + "}");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

int exact_log2(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw DomainError("N = " + std::to_string(n) + " is not a power of two");
  }
  return std::countr_zero(n);
}

SearchParameters SearchParameters::create(std::size_t n_items, std::size_t eta) {
  if (n_items < 2) throw DomainError("N must be at least 2");
  const int nu = exact_log2(n_items);
  if (eta < 1) throw DomainError("eta must be at least 1");
  return SearchParameters(n_items, nu, eta);
}

BooleanPredicate::BooleanPredicate(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)),
      marked_count_(static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1))) {}

BooleanPredicate BooleanPredicate::from_marks(std::size_t n_items, std::span<const Item> marks) {
  if (n_items < 1) throw DomainError("predicate needs at least one item");
  std::vector<std::uint8_t> bits(n_items, 0);
  for (Item x : marks) {
    check_item(x, n_items, "marked item");
    bits[x - 1] = 1;
  }
  return BooleanPredicate(std::move(bits));
}

BooleanPredicate BooleanPredicate::parse_marks(std::size_t n_items, std::string_view text) {
  std::vector<Item> marks;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    Item value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw DomainError("malformed marked-item list near '" + std::string(token) + "'");
    }
    marks.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw DomainError("trailing comma in marked-item list");
  }
  return from_marks(n_items, marks);
}

BooleanPredicate BooleanPredicate::from_mask(std::size_t n_items, std::string_view hex) {
  if (n_items < 1) throw DomainError("predicate needs at least one item");
  hex = trim(hex);
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw DomainError("empty hexadecimal mask");
  std::vector<std::uint8_t> bits(n_items, 0);
  std::size_t nibble = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
    const int v = hex_value(*it);
    if (v < 0) throw DomainError("invalid hexadecimal digit '" + std::string(1, *it) + "'");
    for (int b = 0; b < 4; ++b) {
      if (((v >> b) & 1) == 0) continue;
      const std::size_t bit = 4 * nibble + static_cast<std::size_t>(b);
      if (bit >= n_items) {
        throw DomainError("mask sets bit " + std::to_string(bit) + " but N = " +
                          std::to_string(n_items));
      }
      bits[bit] = 1;
    }
  }
  return BooleanPredicate(std::move(bits));
}

BooleanPredicate BooleanPredicate::first_marked(std::size_t n_items, std::size_t t) {
  if (n_items < 1) throw DomainError("predicate needs at least one item");
  if (t > n_items) {
    throw DomainError("t = " + std::to_string(t) + " exceeds N = " + std::to_string(n_items));
  }
  std::vector<std::uint8_t> bits(n_items, 0);
  std::fill_n(bits.begin(), t, 1);
  return BooleanPredicate(std::move(bits));
}

std::vector<Item> BooleanPredicate::marks() const {
  std::vector<Item> out;
  out.reserve(marked_count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i + 1);
  }
  return out;
}

std::string BooleanPredicate::to_mask_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = std::max<std::size_t>(1, (bits_.size() + 3) / 4);
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t bit = 4 * d + static_cast<std::size_t>(b);
      if (bit < bits_.size() && bits_[bit]) v |= 1 << b;
    }
    out[digits - 1 - d] = kDigits[v];
  }
  return out;
}

std::string BooleanPredicate::to_marks_string() const {
  std::string out;
  for (Item x : marks()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

IncidenceVector IncidenceVector::from_subset(std::size_t n_items, std::span<const Item> subset) {
  IncidenceVector v(n_items);
  for (Item j : subset) {
    check_item(j, n_items, "subset member");
    v.set(j, true);
  }
  return v;
}

std::vector<Item> IncidenceVector::subset() const {
  std::vector<Item> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i + 1);
  }
  return out;
}

IncidenceVector IncidenceVector::operator^(const IncidenceVector& other) const {
  if (other.size() != size()) throw DomainError("incidence vector size mismatch");
  IncidenceVector out(size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] ^ other.bits_[i];
  return out;
}

void SampleTuple::validate(std::size_t n_items) const {
  for (Item x : values) check_item(x, n_items, "tuple entry");
}

bool elementary_query(const BooleanPredicate& pred, Item x) {
  check_item(x, pred.size(), "query item");
  return pred.marked(x);
}

bool complex_query(const BooleanPredicate& pred, const IncidenceVector& subset) {
  if (subset.size() != pred.size()) {
    throw DomainError("subset has " + std::to_string(subset.size()) +
                      " items but predicate has " + std::to_string(pred.size()));
  }
  bool parity = false;
  for (Item j = 1; j <= pred.size(); ++j) {
    if (subset.contains(j) && pred.marked(j)) parity = !parity;
  }
  return parity;
}

bool chi(const SampleTuple& tuple, Item j, std::size_t n_items) {
  check_item(j, n_items, "chi index");
  bool parity = false;
  for (Item x : tuple.values) {
    if (x == j) parity = !parity;
  }
  return parity;
}

IncidenceVector incidence_of_tuple(const SampleTuple& tuple, std::size_t n_items) {
  tuple.validate(n_items);
  IncidenceVector v(n_items);
  for (Item x : tuple.values) v.toggle(x);
  return v;
}

bool query_sum_parity(const BooleanPredicate& pred, const SampleTuple& tuple) {
  bool parity = false;
  for (Item x : tuple.values) {
    if (elementary_query(pred, x)) parity = !parity;
  }
  return parity;
}

IdentityReport verify_parity_identity(const BooleanPredicate& pred, std::size_t eta,
                                      const IdentityCheckOptions& options) {
  const std::size_t n = pred.size();
  if (n < 1) throw DomainError("predicate has no items");
  IdentityReport report;
  SampleTuple tuple{std::vector<Item>(eta, 1)};

  auto check = [&] {
    ++report.checked;
    if (complex_query(pred, incidence_of_tuple(tuple, n)) != query_sum_parity(pred, tuple)) {
      ++report.violations;
    }
  };

  if (options.mode == IdentityCheckMode::kSampled) {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
      for (Item& x : tuple.values) x = 1 + static_cast<Item>(rng() % n);
      check();
    }
    return report;
  }

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < eta; ++i) {
    if (total > options.enumeration_cap / n) {
      total = 0;
      break;
    }
    total *= n;
  }
  if (total == 0) {
    throw CapacityError("exhaustive identity check needs N^eta = " + std::to_string(n) + "^" +
                        std::to_string(eta) + " tuples, cap is " +
                        std::to_string(options.enumeration_cap));
  }
  // Odometer over {1..N}^eta.
  while (true) {
    check();
    std::size_t pos = 0;
    while (pos < eta && tuple.values[pos] == n) tuple.values[pos++] = 1;
    if (pos == eta) break;
    ++tuple.values[pos];
  }
  return report;
}

}  // namespace cqsearch
