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

#ifndef MSD_TORUS_HPP
#define MSD_TORUS_HPP

#include <cstdint>
#include <vector>

#include "msd/digitseq.hpp"
#include "msd/exactlog.hpp"
#include "msd/polyfit.hpp"

namespace msd {

mpz_class binomial(unsigned n, unsigned k);

// The affine torus map f(v) = Mv + zeta*(1,..,1) mod 1, where M is lower
// triangular with rows of binomial coefficients and unit diagonal.
class UnipotentSystem {
 public:
  UnipotentSystem(unsigned d, const SequenceSpec& spec,
                  unsigned precision_bits = 128);

  unsigned d() const { return d_; }
  unsigned base() const { return table_.base(); }
  const LogTable& table() const { return table_; }
  const DyadicInterval& zeta() const { return table_.zeta(); }
  // 1-indexed; M(i, j) = C(i, i-j) for j <= i, 0 above the diagonal.
  const mpz_class& M(unsigned i, unsigned j) const {
    return m_.at((i - 1) * d_ + (j - 1));
  }

  UnipotentSystem refined(unsigned precision_bits) const {
    return UnipotentSystem(d_, spec_, precision_bits);
  }
  const SequenceSpec& spec() const { return spec_; }

 private:
  unsigned d_;
  SequenceSpec spec_;
  LogTable table_;
  std::vector<mpz_class> m_;
};

struct TorusPoint {
  std::vector<DyadicInterval> coords;  // each reduced into [0, 1)
};

TorusPoint torus_origin(unsigned d);

// One application of f; throws kNeedsRefinement when a coordinate enclosure
// straddles an integer during reduction.
TorusPoint step(const UnipotentSystem& system, const TorusPoint& p);

// Closed form v_n = ({zeta n}, {zeta n^2}, ..., {zeta n^d}).
TorusPoint orbit_point(const UnipotentSystem& system, uint64_t n);

// Stable-vector subgroup of the torus: r is stable when the last coordinate
// of M^k(r) is an integer for every k >= 1; equivalently (polynomial in k of
// degree <= d-1) for k = 1..d.
struct StableLattice {
  unsigned d = 0;
  std::vector<mpz_class> V;  // d x d, row k: C(d, d-j) k^(d-j)
  mpz_class order;           // |det V|
  std::vector<std::vector<mpq_class>> coset_reps;  // in [0,1)^d
  bool reps_enumerated = false;
};

// enumeration_cap bounds the number of representatives materialized; above
// it only the order is computed.
StableLattice stable_lattice(unsigned d, const mpz_class& enumeration_cap = 100000);

// Integrality test at k = 1..d+1 (d would suffice; d+1 is a guard).
bool is_stable_vector(unsigned d, const std::vector<mpq_class>& r);

// |det M_{i_1..i_d}| with the product-formula cross-check:
// d * C(d,2) * ... * C(d,d-1) * prod_{j1<j2} (i_{j2} - i_{j1}).
mpz_class region_count_tuple(unsigned d, const std::vector<long>& indices);

// Exact determinant alone (Bareiss), exposed for the identity tests.
mpz_class region_matrix_determinant(unsigned d, const std::vector<long>& indices);

// N'(k): exact big-integer evaluation of the total region-count sum.
mpz_class region_count_total(unsigned d, unsigned b, long k);

// Interpolated closed form of N'(k), verified against direct summation.
PolyFit region_count_polynomial(unsigned d, unsigned b);

// Leading coefficient of the N'(k) closed form divided by the stable-group
// order: a generic-position upper-bound prediction for the leading
// coefficient of the complexity polynomial. Real bases have coincident
// levels (e.g. log 4 = 2 log 2), which only lower the true count.
mpq_class predicted_leading_coefficient(unsigned d, unsigned b);

// Exact star discrepancy D*_N of points in [0, 1).
mpq_class star_discrepancy(std::vector<mpq_class> samples);

// Box-counting deviation of the d-tuples ({P(n)}, .., {P(n+d-1)}) with
// P(n) = zeta n^d, over an m^d grid with m chosen so count/m^d >= 50.
// Returned as max_cell |count_cell * m^d - N| / N.
mpq_class tuple_discrepancy(const UnipotentSystem& system, uint64_t count);

}  // namespace msd

#endif  // MSD_TORUS_HPP
