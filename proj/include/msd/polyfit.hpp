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

#ifndef MSD_POLYFIT_HPP
#define MSD_POLYFIT_HPP

#include <optional>
#include <vector>

#include "msd/dyadic.hpp"

namespace msd {

// Forward-difference table over exact integers. rows[0] is the input,
// rows[j+1] the first differences of rows[j].
struct DifferenceTable {
  std::vector<std::vector<mpz_class>> rows;
};

DifferenceTable difference_table(const std::vector<mpz_class>& values,
                                 unsigned max_order);

// Exact rational polynomial agreeing with the input from index `onset` on.
struct PolyFit {
  unsigned degree = 0;
  std::vector<mpq_class> coefficients;  // monomial basis, index = power
  long onset = 0;                       // first k of the witness window
  long window_hi = 0;                   // last k of the witness window

  mpq_class evaluate(const mpq_class& k) const;
};

// Scans the difference table for the smallest degree D <= max_degree whose
// (D+1)-th differences vanish on a tail run of at least required_run
// entries, then recovers exact coefficients by Newton forward-difference
// interpolation at the onset. nullopt when no degree qualifies.
std::optional<PolyFit> detect(const std::vector<mpz_class>& values, long k_lo,
                              unsigned max_degree, unsigned required_run);

// d(d+1)/2.
unsigned expected_degree(unsigned d);

}  // namespace msd

#endif  // MSD_POLYFIT_HPP
