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

#ifndef MSD_DIGITSEQ_HPP
#define MSD_DIGITSEQ_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msd/exactlog.hpp"

namespace msd {

struct SequenceSpec {
  mpz_class a_num = 2;
  mpz_class a_den = 1;
  unsigned base = 10;
  unsigned d = 1;
  uint64_t start = 1;
  uint64_t length = 0;

  void validate() const;
};

struct DigitWord {
  SequenceSpec spec;
  std::vector<uint8_t> digits;  // each in [1, base-1]
  unsigned final_precision_bits = 0;

  // One ASCII char per digit for base <= 11 ('1'-'9', 'A'), else
  // comma-separated integers.
  std::string to_text() const;
};

struct GenerateOptions {
  unsigned initial_precision_bits = 128;
  unsigned max_precision_bits = 1u << 16;
  // Bit budget for exact boundary-hit checks (a^{n^d} = t * b^m).
  uint64_t exact_check_bit_budget = 100000000;  // 10^8
};

// Defaults, with the precision cap overridable via MSD_MAX_PRECISION_BITS.
GenerateOptions options_from_env();

// Word generation certified by interval soundness. The whole word is
// produced against a single LogTable whose precision only grows; output is
// a pure function of the spec.
DigitWord generate(const SequenceSpec& spec,
                   const GenerateOptions& opts = options_from_env());

// Streaming variant: emits chunks of at most `chunk` digits in order.
// Concatenation of the chunks equals generate(spec).
void generate_chunked(const SequenceSpec& spec, uint64_t chunk,
                      const std::function<void(const DigitWord&)>& sink,
                      const GenerateOptions& opts = options_from_env());

// Exact big-integer oracle: leading base-b digit of a^{n^d} for integer a.
// Throws kBudgetExceeded when the power would exceed max_bits.
int oracle_digit(const mpz_class& a, unsigned base, uint64_t n, unsigned d,
                 uint64_t max_bits = 100000000);

}  // namespace msd

#endif  // MSD_DIGITSEQ_HPP
