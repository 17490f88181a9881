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

#ifndef MSD_FACTOR_COMPLEXITY_HPP
#define MSD_FACTOR_COMPLEXITY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "msd/dyadic.hpp"

namespace msd {

// Suffix automaton over a byte alphabet: minimal acceptor of all factors of
// the indexed word. States <= 2n-1, transitions <= 3n-4; built online in
// O(n * alphabet).
class FactorIndex {
 public:
  explicit FactorIndex(std::span<const uint8_t> word);

  size_t state_count() const { return lengths_.size(); }
  size_t word_length() const { return word_length_; }

  // Sum over non-root states of len(s) - len(link(s)).
  uint64_t distinct_factor_count() const;

  // p(1..max_len) by difference-array accumulation over the per-state
  // intervals [len(link)+1, len].
  std::vector<uint64_t> profile(size_t max_len) const;

  int32_t length_of(size_t state) const { return lengths_[state]; }
  int32_t link_of(size_t state) const { return links_[state]; }
  // -1 when no transition.
  int32_t transition(size_t state, uint8_t letter) const;

 private:
  int32_t clone_state(int32_t src, int32_t len);
  void set_transition(int32_t state, uint8_t letter, int32_t to);

  // Transitions live in one pool as per-state singly linked lists; the
  // degree is bounded by the alphabet, so lookups are O(alphabet).
  struct Edge {
    uint8_t letter;
    int32_t to;
    int32_t next;
  };
  std::vector<int32_t> lengths_;
  std::vector<int32_t> links_;
  std::vector<int32_t> heads_;  // first edge per state, -1 if none
  std::vector<Edge> edges_;
  size_t word_length_ = 0;
};

struct ComplexityProfile {
  std::vector<uint64_t> values;  // values[i] = p(i+1)
  unsigned alphabet_size = 0;

  uint64_t p(size_t n) const { return values.at(n - 1); }
  size_t max_len() const { return values.size(); }
};

ComplexityProfile profile(const FactorIndex& index, size_t max_len,
                          unsigned alphabet_size);

// Quadratic oracle: hashes every substring of each length into a set.
// Throws kBudgetExceeded when word_length * max_len exceeds the budget.
ComplexityProfile naive_profile(std::span<const uint8_t> word, size_t max_len,
                                unsigned alphabet_size,
                                uint64_t budget = 400000000);

// Morse–Hedlund test on a finite profile: true iff p(n) < n+1 for some n in
// range. On a finite prefix this is evidence about the infinite word, not
// proof.
bool eventually_periodic_check(const ComplexityProfile& profile);

}  // namespace msd

#endif  // MSD_FACTOR_COMPLEXITY_HPP
