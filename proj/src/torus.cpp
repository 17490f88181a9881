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

#include "msd/torus.hpp"

#include <cmath>
#include <algorithm>
#include <map>

namespace msd {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

UnipotentSystem::UnipotentSystem(unsigned d, const SequenceSpec& spec,
                                 unsigned precision_bits)
    : d_(d), spec_(spec),
      table_(spec.base, spec.a_num, spec.a_den, precision_bits),
      m_(static_cast<size_t>(d) * d, mpz_class(0)) {
  if (d < 1)
    throw Error(ErrorCode::kInvalidArgument, "UnipotentSystem: d >= 1");
  for (unsigned i = 1; i <= d; ++i)
    for (unsigned j = 1; j <= i; ++j)
      m_[(i - 1) * d_ + (j - 1)] = binomial(i, i - j);
}

TorusPoint torus_origin(unsigned d) {
  TorusPoint p;
  p.coords.assign(d, DyadicInterval::exact(Dyadic::zero()));
  return p;
}

TorusPoint step(const UnipotentSystem& system, const TorusPoint& p) {
  unsigned d = system.d();
  if (p.coords.size() != d)
    throw Error(ErrorCode::kInvalidArgument, "step: dimension mismatch");
  TorusPoint out;
  out.coords.reserve(d);
  for (unsigned i = 1; i <= d; ++i) {
    DyadicInterval acc = system.zeta();
    for (unsigned j = 1; j <= i; ++j) acc = acc + p.coords[j - 1] * system.M(i, j);
    out.coords.push_back(acc.mod1());
  }
  return out;
}

TorusPoint orbit_point(const UnipotentSystem& system, uint64_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "orbit_point: n >= 1");
  TorusPoint p;
  p.coords.reserve(system.d());
  mpz_class nn(static_cast<unsigned long>(n));
  for (unsigned i = 1; i <= system.d(); ++i)
    p.coords.push_back(frac_of_scaled(system.zeta(), nn, i));
  return p;
}

namespace {

// Bareiss fraction-free determinant of an n x n integer matrix (row major).
mpz_class bareiss_determinant(std::vector<mpz_class> a, unsigned n) {
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      unsigned swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (unsigned j = 0; j < n; ++j)
        std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i) {
      for (unsigned j = k + 1; j < n; ++j) {
        mpz_class num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        a[i * n + j] = num / prev;  // division is exact (Bareiss invariant)
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign > 0 ? a[(n - 1) * n + (n - 1)] : mpz_class(-a[(n - 1) * n + (n - 1)]);
}

mpz_class int_pow(long base, unsigned e) {
  mpz_class r;
  mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Smith normal form S = L * A * R with L, R unimodular; only R and the
// diagonal of S are needed to enumerate V^{-1}(Z^d)/Z^d.
void smith_normal_form(std::vector<mpz_class> a, unsigned n,
                       std::vector<mpz_class>& diag,
                       std::vector<mpz_class>& right) {
  right.assign(static_cast<size_t>(n) * n, 0);
  for (unsigned i = 0; i < n; ++i) right[i * n + i] = 1;
  auto at = [&](std::vector<mpz_class>& m, unsigned i, unsigned j) -> mpz_class& {
    return m[i * n + j];
  };

  for (unsigned t = 0; t < n; ++t) {
    // Find a nonzero pivot in the trailing block.
    unsigned pi = t, pj = t;
    bool found = false;
    for (unsigned i = t; i < n && !found; ++i)
      for (unsigned j = t; j < n && !found; ++j)
        if (at(a, i, j) != 0) { pi = i; pj = j; found = true; }
    if (!found) {
      for (unsigned i = t; i < n; ++i) diag.push_back(0);
      return;
    }
    // Move pivot to (t, t).
    if (pi != t)
      for (unsigned j = 0; j < n; ++j) std::swap(at(a, t, j), at(a, pi, j));
    if (pj != t)
      for (unsigned i = 0; i < n; ++i) {
        std::swap(at(a, i, t), at(a, i, pj));
        std::swap(at(right, i, t), at(right, i, pj));
      }
    // Eliminate row and column t.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (unsigned i = t + 1; i < n; ++i) {
        if (at(a, i, t) == 0) continue;
        mpz_class q = at(a, i, t) / at(a, t, t);
        for (unsigned j = 0; j < n; ++j) at(a, i, j) -= q * at(a, t, j);
        if (at(a, i, t) != 0) {
          // Remainder smaller than pivot: swap rows and restart.
          for (unsigned j = 0; j < n; ++j) std::swap(at(a, t, j), at(a, i, j));
          dirty = true;
        }
      }
      for (unsigned j = t + 1; j < n; ++j) {
        if (at(a, t, j) == 0) continue;
        mpz_class q = at(a, t, j) / at(a, t, t);
        for (unsigned i = 0; i < n; ++i) {
          at(a, i, j) -= q * at(a, i, t);
          at(right, i, j) -= q * at(right, i, t);
        }
        if (at(a, t, j) != 0) {
          for (unsigned i = 0; i < n; ++i) {
            std::swap(at(a, i, t), at(a, i, j));
            std::swap(at(right, i, t), at(right, i, j));
          }
          dirty = true;
        }
      }
    }
    diag.push_back(abs(at(a, t, t)));
  }
}

}  // namespace

bool is_stable_vector(unsigned d, const std::vector<mpq_class>& r) {
  if (r.size() != d)
    throw Error(ErrorCode::kInvalidArgument, "is_stable_vector: bad dimension");
  // (M^k r)^(d) = sum_j C(d, d-j) k^(d-j) r_j; integer for k = 1..d forces
  // integrality for all k (degree <= d-1 polynomial integer at d consecutive
  // integers); k = d+1 is checked as a guard.
  for (unsigned k = 1; k <= d + 1; ++k) {
    mpq_class acc = 0;
    for (unsigned j = 1; j <= d; ++j)
      acc += mpq_class(binomial(d, d - j) * int_pow(static_cast<long>(k), d - j)) *
             r[j - 1];
    acc.canonicalize();
    if (acc.get_den() != 1) return false;
  }
  return true;
}

StableLattice stable_lattice(unsigned d, const mpz_class& enumeration_cap) {
  if (d < 1 || d > 8)
    throw Error(ErrorCode::kInvalidArgument, "stable_lattice: d in [1, 8]");
  StableLattice lat;
  lat.d = d;
  lat.V.assign(static_cast<size_t>(d) * d, 0);
  for (unsigned k = 1; k <= d; ++k)
    for (unsigned j = 1; j <= d; ++j)
      lat.V[(k - 1) * d + (j - 1)] =
          binomial(d, d - j) * int_pow(static_cast<long>(k), d - j);
  lat.order = abs(bareiss_determinant(lat.V, d));
  if (lat.order == 0)
    throw Error(ErrorCode::kInternal, "stable_lattice: singular V");

  if (lat.order > enumeration_cap) return lat;

  // r is stable iff V r is integral; solutions mod Z^d are R * diag(y/s)
  // over y_i in [0, s_i) with S = diag(s), V = L^{-1} S R^{-1}.
  std::vector<mpz_class> diag, right;
  smith_normal_form(lat.V, d, diag, right);
  std::vector<unsigned long> s(d);
  for (unsigned i = 0; i < d; ++i) s[i] = mpz_get_ui(diag[i].get_mpz_t());

  std::vector<unsigned long> y(d, 0);
  std::vector<std::vector<mpq_class>> reps;
  for (;;) {
    std::vector<mpq_class> r(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        r[i] += mpq_class(right[i * d + j] * static_cast<long>(y[j]),
                          diag[j]);
      }
      r[i].canonicalize();
      // reduce into [0, 1)
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), r[i].get_num().get_mpz_t(),
                 r[i].get_den().get_mpz_t());
      r[i] -= mpq_class(fl);
    }
    reps.push_back(std::move(r));
    unsigned i = 0;
    while (i < d && ++y[i] == s[i]) y[i++] = 0;
    if (i == d) break;
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (mpz_class(static_cast<long>(reps.size())) != lat.order)
    throw Error(ErrorCode::kInternal,
                "stable_lattice: representative count != |det V|");
  for (const auto& r : reps)
    if (!is_stable_vector(d, r))
      throw Error(ErrorCode::kInternal,
                  "stable_lattice: representative fails integrality");
  lat.coset_reps = std::move(reps);
  lat.reps_enumerated = true;
  return lat;
}

mpz_class region_matrix_determinant(unsigned d, const std::vector<long>& indices) {
  if (indices.size() != d)
    throw Error(ErrorCode::kInvalidArgument, "region matrix: bad tuple size");
  std::vector<mpz_class> m(static_cast<size_t>(d) * d);
  for (unsigned l = 0; l < d; ++l)
    for (unsigned j = 0; j < d; ++j)
      m[l * d + j] = binomial(d, j) * int_pow(indices[l], j);
  return abs(bareiss_determinant(std::move(m), d));
}

mpz_class region_count_tuple(unsigned d, const std::vector<long>& indices) {
  if (indices.size() != d)
    throw Error(ErrorCode::kInvalidArgument, "region_count_tuple: bad tuple");
  for (size_t i = 1; i < indices.size(); ++i)
    if (indices[i] <= indices[i - 1])
      throw Error(ErrorCode::kInvalidArgument,
                  "region_count_tuple: tuple must be strictly increasing");
  mpz_class prod = 1;
  for (unsigned j = 1; j < d; ++j) prod *= binomial(d, j);
  for (unsigned j2 = 1; j2 < d; ++j2)
    for (unsigned j1 = 0; j1 < j2; ++j1)
      prod *= mpz_class(indices[j2] - indices[j1]);
  mpz_class det = region_matrix_determinant(d, indices);
  if (prod != det)
    throw Error(ErrorCode::kInternal,
                "region_count_tuple: product formula != determinant");
  return prod;
}

namespace {

// Sum over 0 <= i_1 < ... < i_d <= k of the product of pairwise differences.
mpz_class vandermonde_sum(unsigned d, long k) {
  std::vector<long> idx(d);
  for (unsigned j = 0; j < d; ++j) idx[j] = static_cast<long>(j);
  if (static_cast<long>(d) - 1 > k) return 0;
  mpz_class total = 0;
  for (;;) {
    mpz_class prod = 1;
    for (unsigned j2 = 1; j2 < d; ++j2)
      for (unsigned j1 = 0; j1 < j2; ++j1) prod *= mpz_class(idx[j2] - idx[j1]);
    total += prod;
    // next combination
    int pos = static_cast<int>(d) - 1;
    while (pos >= 0 && idx[pos] == k - static_cast<long>(d) + 1 + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned j = pos + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

mpz_class region_prefactor(unsigned d, unsigned b) {
  mpz_class pre = int_pow(static_cast<long>(b) - 1, d);
  for (unsigned j = 1; j < d; ++j) pre *= binomial(d, j);
  return pre;
}

}  // namespace

mpz_class region_count_total(unsigned d, unsigned b, long k) {
  if (d < 1 || b < 5)
    throw Error(ErrorCode::kInvalidArgument, "region_count_total: d>=1, b>=5");
  if (k < static_cast<long>(d) - 1)
    throw Error(ErrorCode::kInvalidArgument, "region_count_total: k >= d-1");
  return region_prefactor(d, b) * vandermonde_sum(d, k);
}

PolyFit region_count_polynomial(unsigned d, unsigned b) {
  unsigned deg = expected_degree(d);
  unsigned run = deg + 2;
  long k_lo = static_cast<long>(d) - 1;
  size_t count = deg + 1 + run;  // enough points for detect()
  std::vector<mpz_class> values;
  values.reserve(count);
  for (size_t i = 0; i < count; ++i)
    values.push_back(region_count_total(d, b, k_lo + static_cast<long>(i)));
  auto fit = detect(values, k_lo, deg, run);
  if (!fit)
    throw Error(ErrorCode::kInternal, "region polynomial: no exact fit");
  // Guard: the closed form must keep matching direct summation past the
  // interpolation window.
  for (long k = k_lo + static_cast<long>(count); k < k_lo + static_cast<long>(count) + 3; ++k)
    if (fit->evaluate(mpq_class(k)) != mpq_class(region_count_total(d, b, k)))
      throw Error(ErrorCode::kInternal, "region polynomial: extrapolation mismatch");
  return *fit;
}

mpq_class predicted_leading_coefficient(unsigned d, unsigned b) {
  PolyFit poly = region_count_polynomial(d, b);
  mpq_class lead = poly.coefficients.back();
  StableLattice lat = stable_lattice(d, /*enumeration_cap=*/0);
  mpq_class out = lead / mpq_class(lat.order);
  out.canonicalize();
  return out;
}

mpq_class star_discrepancy(std::vector<mpq_class> samples) {
  if (samples.empty())
    throw Error(ErrorCode::kInvalidArgument, "star_discrepancy: empty input");
  for (const auto& x : samples)
    if (x < 0 || x >= 1)
      throw Error(ErrorCode::kInvalidArgument, "star_discrepancy: x not in [0,1)");
  std::sort(samples.begin(), samples.end());
  long n = static_cast<long>(samples.size());
  mpq_class best = 0;
  for (long i = 1; i <= n; ++i) {
    const mpq_class& x = samples[i - 1];
    mpq_class up = mpq_class(i, n) - x;
    mpq_class down = x - mpq_class(i - 1, n);
    up.canonicalize();
    down.canonicalize();
    if (up > best) best = up;
    if (down > best) best = down;
  }
  return best;
}

mpq_class tuple_discrepancy(const UnipotentSystem& system, uint64_t count) {
  unsigned d = system.d();
  if (count < 1 || d > 3)
    throw Error(ErrorCode::kInvalidArgument, "tuple_discrepancy: count>=1, d<=3");
  // Grid resolution: count / m^d >= 50.
  unsigned long m = 1;
  while (static_cast<double>(count) /
             std::pow(static_cast<double>(m + 1), static_cast<double>(d)) >=
         50.0)
    ++m;
  uint64_t cells = 1;
  for (unsigned i = 0; i < d; ++i) cells *= m;
  std::vector<uint64_t> hist(cells, 0);

  for (uint64_t n = 1; n <= count; ++n) {
    uint64_t cell = 0;
    for (unsigned i = 0; i < d; ++i) {
      // coordinate {zeta (n+i)^d}
      mpz_class nd;
      mpz_ui_pow_ui(nd.get_mpz_t(), n + i, d);
      DyadicInterval frac = frac_of_scaled(system.zeta(), nd, 1);
      mpz_class c = (frac.midpoint() * mpz_class(static_cast<long>(m))).floor();
      unsigned long ci = mpz_get_ui(c.get_mpz_t());
      if (ci >= m) ci = m - 1;
      cell = cell * m + ci;
    }
    hist[cell] += 1;
  }
  mpq_class worst = 0;
  mpz_class cellsz(static_cast<long>(cells));
  for (uint64_t c = 0; c < cells; ++c) {
    mpq_class dev(mpz_class(hist[c]) * cellsz - mpz_class(count),
                  mpz_class(count));
    dev.canonicalize();
    if (dev < 0) dev = -dev;
    if (dev > worst) worst = dev;
  }
  return worst;
}

}  // namespace msd
