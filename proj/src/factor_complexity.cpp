// Copyright 2026 The msd Authors
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

#include "msd/factor_complexity.hpp"

#include <string_view>
#include <unordered_set>

namespace msd {

int32_t FactorIndex::transition(size_t state, uint8_t letter) const {
  for (int32_t e = heads_[state]; e != -1; e = edges_[e].next)
    if (edges_[e].letter == letter) return edges_[e].to;
  return -1;
}

void FactorIndex::set_transition(int32_t state, uint8_t letter, int32_t to) {
  for (int32_t e = heads_[state]; e != -1; e = edges_[e].next) {
    if (edges_[e].letter == letter) {
      edges_[e].to = to;
      return;
    }
  }
  edges_.push_back({letter, to, heads_[state]});
  heads_[state] = static_cast<int32_t>(edges_.size()) - 1;
}

int32_t FactorIndex::clone_state(int32_t src, int32_t len) {
  int32_t id = static_cast<int32_t>(lengths_.size());
  lengths_.push_back(len);
  links_.push_back(links_[src]);
  heads_.push_back(-1);
  for (int32_t e = heads_[src]; e != -1; e = edges_[e].next)
    set_transition(id, edges_[e].letter, edges_[e].to);
  return id;
}

FactorIndex::FactorIndex(std::span<const uint8_t> word)
    : word_length_(word.size()) {
  if (word.empty())
    throw Error(ErrorCode::kInvalidArgument, "FactorIndex: empty word");
  size_t n = word.size();
  lengths_.reserve(2 * n);
  links_.reserve(2 * n);
  heads_.reserve(2 * n);
  edges_.reserve(3 * n);
  lengths_.push_back(0);
  links_.push_back(-1);
  heads_.push_back(-1);
  int32_t last = 0;
  for (uint8_t c : word) {
    int32_t cur = static_cast<int32_t>(lengths_.size());
    lengths_.push_back(lengths_[last] + 1);
    links_.push_back(-1);
    heads_.push_back(-1);
    int32_t p = last;
    while (p != -1 && transition(p, c) == -1) {
      set_transition(p, c, cur);
      p = links_[p];
    }
    if (p == -1) {
      links_[cur] = 0;
    } else {
      int32_t q = transition(p, c);
      if (lengths_[p] + 1 == lengths_[q]) {
        links_[cur] = q;
      } else {
        int32_t clone = clone_state(q, lengths_[p] + 1);
        while (p != -1 && transition(p, c) == q) {
          set_transition(p, c, clone);
          p = links_[p];
        }
        links_[q] = clone;
        links_[cur] = clone;
      }
    }
    last = cur;
  }
}

uint64_t FactorIndex::distinct_factor_count() const {
  uint64_t total = 0;
  for (size_t s = 1; s < lengths_.size(); ++s)
    total += static_cast<uint64_t>(lengths_[s] - lengths_[links_[s]]);
  return total;
}

std::vector<uint64_t> FactorIndex::profile(size_t max_len) const {
  if (max_len < 1 || max_len > word_length_)
    throw Error(ErrorCode::kInvalidArgument,
                "profile: max_len out of [1, word_length]");
  std::vector<int64_t> diff(max_len + 2, 0);
  for (size_t s = 1; s < lengths_.size(); ++s) {
    size_t lo = static_cast<size_t>(lengths_[links_[s]]) + 1;
    size_t hi = static_cast<size_t>(lengths_[s]);
    if (lo > max_len) continue;
    hi = std::min(hi, max_len);
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<uint64_t> out(max_len);
  int64_t cur = 0;
  for (size_t n = 1; n <= max_len; ++n) {
    cur += diff[n];
    out[n - 1] = static_cast<uint64_t>(cur);
  }
  return out;
}

ComplexityProfile profile(const FactorIndex& index, size_t max_len,
                          unsigned alphabet_size) {
  ComplexityProfile out;
  out.values = index.profile(max_len);
  out.alphabet_size = alphabet_size;
  return out;
}

ComplexityProfile naive_profile(std::span<const uint8_t> word, size_t max_len,
                                unsigned alphabet_size, uint64_t budget) {
  if (word.empty() || max_len < 1 || max_len > word.size())
    throw Error(ErrorCode::kInvalidArgument, "naive_profile: bad arguments");
  if (static_cast<uint64_t>(word.size()) * max_len > budget)
    throw Error(ErrorCode::kBudgetExceeded, "naive_profile: budget exceeded");
  ComplexityProfile out;
  out.alphabet_size = alphabet_size;
  const char* data = reinterpret_cast<const char*>(word.data());
  for (size_t len = 1; len <= max_len; ++len) {
    std::unordered_set<std::string_view> seen;
    for (size_t i = 0; i + len <= word.size(); ++i)
      seen.insert(std::string_view(data + i, len));
    out.values.push_back(seen.size());
  }
  return out;
}

bool eventually_periodic_check(const ComplexityProfile& profile) {
  if (profile.values.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty profile");
  for (size_t n = 1; n <= profile.values.size(); ++n)
    if (profile.values[n - 1] < n + 1) return true;
  return false;
}

}  // namespace msd
