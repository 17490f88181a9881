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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "msd/digitseq.hpp"
#include "msd/factor_complexity.hpp"

using namespace msd;

namespace {

std::vector<uint8_t> from_text(const std::string& text) {
  std::vector<uint8_t> w;
  for (char c : text) w.push_back(uint8_t(c - '0'));
  return w;
}

}  // namespace

TEST_CASE("single letter word") {
  std::vector<uint8_t> w{2};
  FactorIndex idx(w);
  CHECK(idx.distinct_factor_count() == 1);
  CHECK(profile(idx, 1, 9).p(1) == 1);
}

TEST_CASE("constant word has constant profile") {
  std::vector<uint8_t> w(6, 3);
  FactorIndex idx(w);
  CHECK(idx.distinct_factor_count() == 6);
  ComplexityProfile p = profile(idx, 6, 9);
  for (size_t n = 1; n <= 6; ++n) CHECK(p.p(n) == 1);
}

TEST_CASE("profile of 248136125") {
  std::vector<uint8_t> w = from_text("248136125");
  FactorIndex idx(w);
  ComplexityProfile p = profile(idx, 3, 9);
  CHECK(p.p(1) == 7);
  CHECK(p.p(2) == 8);
  CHECK(p.p(3) == 7);
  // All 9 substring lengths summed: 7+8+7+6+5+4+3+2+1.
  CHECK(idx.distinct_factor_count() == 43);
}

TEST_CASE("p at the word length is one; longer lengths are rejected") {
  std::vector<uint8_t> w = from_text("21562");
  FactorIndex idx(w);
  ComplexityProfile p = profile(idx, 5, 9);
  CHECK(p.p(5) == 1);
  CHECK_THROWS_AS(profile(idx, 7, 9), Error);
}

TEST_CASE("profile sums to the distinct factor count") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(1, 300);
    std::uniform_int_distribution<int> letter(1, 4);
    std::vector<uint8_t> w(len(rng));
    for (auto& c : w) c = uint8_t(letter(rng));
    FactorIndex idx(w);
    ComplexityProfile p = profile(idx, w.size(), 9);
    uint64_t total = 0;
    for (uint64_t v : p.values) total += v;
    CHECK(total == idx.distinct_factor_count());
  }
}

TEST_CASE("automaton profile equals the naive oracle on random words") {
  std::mt19937_64 rng(1729);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> len(1, 500);
    std::uniform_int_distribution<int> alpha(1, 9);
    int k = alpha(rng);
    std::uniform_int_distribution<int> letter(1, k);
    std::vector<uint8_t> w(len(rng));
    for (auto& c : w) c = uint8_t(letter(rng));
    size_t max_len = std::min<size_t>(w.size(), 40);
    FactorIndex idx(w);
    ComplexityProfile fast = profile(idx, max_len, 9);
    ComplexityProfile naive = naive_profile(w, max_len, 9);
    CHECK(fast.values == naive.values);
  }
}

TEST_CASE("profile growth obeys the submultiplicative bounds") {
  DigitWord word = generate(SequenceSpec{2, 1, 10, 1, 1, 5000});
  FactorIndex idx(word.digits);
  ComplexityProfile p = profile(idx, 60, 9);
  for (size_t n = 1; n < 60; ++n) {
    CHECK(p.p(n + 1) >= p.p(n));        // prefix of length 5000, n small
    CHECK(p.p(n + 1) <= p.p(n) * 9);    // extension bound
  }
}

TEST_CASE("automaton size bounds") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> letter(1, 3);
  std::vector<uint8_t> w(2000);
  for (auto& c : w) c = uint8_t(letter(rng));
  FactorIndex idx(w);
  CHECK(idx.state_count() <= 2 * w.size() - 1);
  CHECK(idx.word_length() == w.size());
}

TEST_CASE("transitions spell exactly the factors") {
  std::vector<uint8_t> w = from_text("2481");
  FactorIndex idx(w);
  // "48" is a factor: 0 --4--> s --8--> t
  int32_t s = idx.transition(0, 4);
  REQUIRE(s >= 0);
  CHECK(idx.transition(size_t(s), 8) >= 0);
  // "42" is not
  CHECK((idx.transition(size_t(s), 2) < 0));
  // "9" never occurs
  CHECK(idx.transition(0, 9) < 0);
}

TEST_CASE("affine profile of the base-ten doubling word") {
  // p(n) = 4n + 5 for 1 <= n <= 60 on a long enough prefix.
  DigitWord word = generate(SequenceSpec{2, 1, 10, 1, 1, 200000});
  FactorIndex idx(word.digits);
  ComplexityProfile p = profile(idx, 60, 9);
  for (size_t n = 1; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(p.p(n) == 4 * n + 5);
  }
  CHECK(p.p(13) == 57);
}

TEST_CASE("naive oracle respects its budget") {
  std::vector<uint8_t> w(100000, 1);
  CHECK_THROWS_AS(naive_profile(w, 50000, 9, 1000000), Error);
}

TEST_CASE("Morse-Hedlund periodicity check") {
  ComplexityProfile periodic;
  periodic.values = {2, 2, 2, 2};  // p(n) < n+1 at n = 2
  periodic.alphabet_size = 2;
  CHECK(eventually_periodic_check(periodic));

  ComplexityProfile aperiodic;
  aperiodic.values = {2, 3, 4, 5};
  aperiodic.alphabet_size = 2;
  CHECK_FALSE(eventually_periodic_check(aperiodic));

  // The doubling word prefix is nowhere below n+1.
  DigitWord word = generate(SequenceSpec{2, 1, 10, 1, 1, 20000});
  FactorIndex idx(word.digits);
  ComplexityProfile p = profile(idx, 100, 9);
  CHECK_FALSE(eventually_periodic_check(p));
}
