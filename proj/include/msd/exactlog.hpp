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

#ifndef MSD_EXACTLOG_HPP
#define MSD_EXACTLOG_HPP

#include <optional>
#include <vector>

#include "msd/dyadic.hpp"

namespace msd {

// Enclosure of log_base(x_num/x_den) with width <= 2^(4 - precision_bits).
// Total on valid inputs; log_base(1) and log_base(base^k) are returned as
// exact (width 0) intervals.
DyadicInterval log_ratio(const mpz_class& x_num, const mpz_class& x_den,
                         unsigned base, unsigned precision_bits);

// Enclosure of {zeta * n^d}. Throws kNeedsRefinement when n^d * width(zeta)
// >= 1/2 or when the scaled enclosure straddles an integer.
DyadicInterval frac_of_scaled(const DyadicInterval& zeta, const mpz_class& n,
                              unsigned d);

struct DigitClassification {
  // Digit in [1, base-1] when resolved.
  std::optional<int> digit;
  // When unresolved: the level whose enclosure the candidate overlaps,
  // so callers can attempt an exact boundary-hit check.
  std::optional<int> ambiguous_level;
};

// Rigorous table of the critical levels log_b(t), t in [1, b-1], plus the
// enclosure of zeta = log_b(a_num/a_den). Immutable; refinement produces a
// new table at higher precision.
class LogTable {
 public:
  LogTable(unsigned base, const mpz_class& a_num, const mpz_class& a_den,
           unsigned precision_bits);

  unsigned base() const { return base_; }
  unsigned precision_bits() const { return precision_bits_; }
  const DyadicInterval& zeta() const { return zeta_; }
  // Level t (1-based): enclosure of log_b(t).
  const DyadicInterval& level(int t) const { return levels_.at(t - 1); }
  const mpz_class& a_num() const { return a_num_; }
  const mpz_class& a_den() const { return a_den_; }

  LogTable refined(unsigned precision_bits) const {
    return LogTable(base_, a_num_, a_den_, precision_bits);
  }

  // Multiplicative-independence guard: tests a^q = b^p exactly for every
  // convergent p/q of the zeta enclosure with q <= max_den. Throws
  // kMultiplicativeDependence on an exact relation; throws kNeedsRefinement
  // when a bounded-denominator rational lies inside the enclosure without
  // an exact relation (higher precision will exclude it).
  void check_multiplicative_independence(unsigned max_den = 64) const;

 private:
  unsigned base_;
  mpz_class a_num_, a_den_;
  unsigned precision_bits_;
  DyadicInterval zeta_;
  std::vector<DyadicInterval> levels_;
};

// Locates frac inside the slabs [log_b(t), log_b(t+1)). Returns the digit
// when the enclosure lies strictly inside one slab; otherwise reports the
// overlapped level.
DigitClassification classify_digit(const DyadicInterval& frac,
                                   const LogTable& table);

// Exact test a^q == b^p for rational a = a_num/a_den (p may be negative).
bool is_power_relation(const mpz_class& a_num, const mpz_class& a_den,
                       unsigned base, const mpz_class& p, const mpz_class& q);

}  // namespace msd

#endif  // MSD_EXACTLOG_HPP
