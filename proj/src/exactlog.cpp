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

#include "msd/exactlog.hpp"

#include <mpfr.h>

#include <algorithm>

namespace msd {

namespace {

// Exact conversion of an mpfr value to a dyadic rational.
Dyadic mpfr_to_dyadic(mpfr_t v) {
  if (mpfr_zero_p(v)) return Dyadic::zero();
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
  return Dyadic(mant, static_cast<long>(e));
}

// If x_num/x_den is an exact (possibly negative) power of base, return the
// exponent.
std::optional<long> exact_power_of_base(const mpz_class& x_num,
                                        const mpz_class& x_den,
                                        unsigned base) {
  auto as_power = [&](const mpz_class& v) -> std::optional<long> {
    if (v == 1) return 0;
    mpz_class cur = v;
    long k = 0;
    mpz_class b(base);
    while (cur > 1) {
      if (!mpz_divisible_p(cur.get_mpz_t(), b.get_mpz_t()))
        return std::nullopt;
      cur /= b;
      ++k;
    }
    return k;
  };
  if (x_den == 1) return as_power(x_num);
  if (x_num == 1) {
    auto k = as_power(x_den);
    if (k) return -*k;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

DyadicInterval log_ratio(const mpz_class& x_num, const mpz_class& x_den,
                         unsigned base, unsigned precision_bits) {
  if (x_num < 1 || x_den < 1)
    throw Error(ErrorCode::kInvalidArgument, "log_ratio: argument <= 0");
  if (base < 2)
    throw Error(ErrorCode::kInvalidArgument, "log_ratio: base < 2");
  if (precision_bits < 16)
    throw Error(ErrorCode::kInvalidArgument, "log_ratio: precision < 16");

  if (auto k = exact_power_of_base(x_num, x_den, base))
    return DyadicInterval::exact(Dyadic(mpz_class(*k), 0), precision_bits);

  // Work a few guard bits above the requested precision; each of the four
  // directed operations contributes at most one ulp.
  mpfr_prec_t wp = precision_bits + 16;
  mpfr_t num, den, lnx_lo, lnx_hi, lnb_lo, lnb_hi, q_lo, q_hi;
  mpfr_inits2(wp, num, den, lnx_lo, lnx_hi, lnb_lo, lnb_hi, q_lo, q_hi,
              static_cast<mpfr_ptr>(nullptr));

  mpfr_set_z(num, x_num.get_mpz_t(), MPFR_RNDN);  // exact: wp >= bit length
  // guard: widen working precision if the integers are huge
  if (mpz_sizeinbase(x_num.get_mpz_t(), 2) + 4 > static_cast<size_t>(wp) ||
      mpz_sizeinbase(x_den.get_mpz_t(), 2) + 4 > static_cast<size_t>(wp)) {
    mpfr_clears(num, den, lnx_lo, lnx_hi, lnb_lo, lnb_hi, q_lo, q_hi,
                static_cast<mpfr_ptr>(nullptr));
    size_t need = std::max(mpz_sizeinbase(x_num.get_mpz_t(), 2),
                           mpz_sizeinbase(x_den.get_mpz_t(), 2)) + 8;
    wp = static_cast<mpfr_prec_t>(std::max<size_t>(need, precision_bits + 16));
    mpfr_inits2(wp, num, den, lnx_lo, lnx_hi, lnb_lo, lnb_hi, q_lo, q_hi,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(num, x_num.get_mpz_t(), MPFR_RNDN);
  }
  mpfr_set_z(den, x_den.get_mpz_t(), MPFR_RNDN);

  // ln(x) enclosure via directed rounding on the quotient and the log.
  mpfr_div(lnx_lo, num, den, MPFR_RNDD);
  mpfr_log(lnx_lo, lnx_lo, MPFR_RNDD);
  mpfr_div(lnx_hi, num, den, MPFR_RNDU);
  mpfr_log(lnx_hi, lnx_hi, MPFR_RNDU);

  mpfr_set_ui(lnb_lo, base, MPFR_RNDN);
  mpfr_log(lnb_hi, lnb_lo, MPFR_RNDU);
  mpfr_log(lnb_lo, lnb_lo, MPFR_RNDD);

  // Quotient bounds; ln(base) > 0 so only the numerator sign matters.
  if (mpfr_sgn(lnx_lo) >= 0)
    mpfr_div(q_lo, lnx_lo, lnb_hi, MPFR_RNDD);
  else
    mpfr_div(q_lo, lnx_lo, lnb_lo, MPFR_RNDD);
  if (mpfr_sgn(lnx_hi) >= 0)
    mpfr_div(q_hi, lnx_hi, lnb_lo, MPFR_RNDU);
  else
    mpfr_div(q_hi, lnx_hi, lnb_hi, MPFR_RNDU);

  Dyadic lo = mpfr_to_dyadic(q_lo);
  Dyadic hi = mpfr_to_dyadic(q_hi);
  mpfr_clears(num, den, lnx_lo, lnx_hi, lnb_lo, lnb_hi, q_lo, q_hi,
              static_cast<mpfr_ptr>(nullptr));
  return DyadicInterval(lo, hi, precision_bits);
}

DyadicInterval frac_of_scaled(const DyadicInterval& zeta, const mpz_class& n,
                              unsigned d) {
  if (n < 1 || d < 1)
    throw Error(ErrorCode::kInvalidArgument, "frac_of_scaled: n, d >= 1");
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), n.get_mpz_t(), d);
  DyadicInterval scaled = zeta * scale;
  // n^d * width(zeta) must stay below 1/2 or the reduction is meaningless.
  if (scaled.width() >= Dyadic(mpz_class(1), -1))
    throw Error(ErrorCode::kNeedsRefinement,
                "scaled enclosure wider than 1/2");
  return scaled.mod1();
}

LogTable::LogTable(unsigned base, const mpz_class& a_num,
                   const mpz_class& a_den, unsigned precision_bits)
    : base_(base), a_num_(a_num), a_den_(a_den),
      precision_bits_(precision_bits) {
  if (base < 5)
    throw Error(ErrorCode::kInvalidArgument, "LogTable: base must be >= 5");
  if (a_num < 1 || a_den < 1)
    throw Error(ErrorCode::kInvalidArgument, "LogTable: a must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_num.get_mpz_t(), a_den.get_mpz_t());
  if (g != 1)
    throw Error(ErrorCode::kInvalidArgument, "LogTable: a not in lowest terms");
  if (a_num == a_den)
    throw Error(ErrorCode::kInvalidArgument, "LogTable: a = 1 not allowed");
  zeta_ = log_ratio(a_num, a_den, base, precision_bits);
  levels_.reserve(base - 1);
  for (unsigned t = 1; t < base; ++t)
    levels_.push_back(log_ratio(mpz_class(t), mpz_class(1), base,
                                precision_bits));
}

bool is_power_relation(const mpz_class& a_num, const mpz_class& a_den,
                       unsigned base, const mpz_class& p, const mpz_class& q) {
  if (q <= 0) return false;
  unsigned long qu = mpz_get_ui(q.get_mpz_t());
  mpz_class num_q, den_q, bp;
  mpz_pow_ui(num_q.get_mpz_t(), a_num.get_mpz_t(), qu);
  mpz_pow_ui(den_q.get_mpz_t(), a_den.get_mpz_t(), qu);
  mpz_class pabs = abs(p);
  if (!pabs.fits_ulong_p()) return false;
  mpz_class b(base);
  mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), mpz_get_ui(pabs.get_mpz_t()));
  // a^q = b^p  <=>  num^q = b^p den^q (p >= 0), num^q b^|p| = den^q (p < 0).
  if (p >= 0) return num_q == bp * den_q;
  return num_q * bp == den_q;
}

void LogTable::check_multiplicative_independence(unsigned max_den) const {
  // Continued-fraction convergents of the midpoint; any rational p/q with
  // q <= max_den inside the enclosure is among them (or a mediant; testing
  // p = round(q * mid) for each q is simpler and complete at this width).
  mpq_class mid = zeta_.midpoint().to_mpq();
  for (unsigned q = 1; q <= max_den; ++q) {
    mpq_class qm = mid * static_cast<long>(q);
    mpz_class p;
    mpz_class num = qm.get_num(), den = qm.get_den();
    // round to nearest
    mpz_class twice = 2 * num + den;
    mpz_fdiv_q(p.get_mpz_t(), twice.get_mpz_t(),
               mpz_class(2 * den).get_mpz_t());
    mpq_class cand(p, q);
    cand.canonicalize();
    if (!zeta_.contains(cand)) continue;
    if (is_power_relation(a_num_, a_den_, base_, p, mpz_class(q)))
      throw Error(ErrorCode::kMultiplicativeDependence,
                  "a and base are multiplicatively dependent: a^" +
                      std::to_string(q) + " = b^" + p.get_str());
    throw Error(ErrorCode::kNeedsRefinement,
                "zeta enclosure still contains a small rational");
  }
}

DigitClassification classify_digit(const DyadicInterval& frac,
                                   const LogTable& table) {
  if (frac.lo().sign() < 0 || frac.hi() >= Dyadic(1))
    throw Error(ErrorCode::kInvalidArgument, "classify_digit: frac not in [0,1)");
  unsigned b = table.base();
  // Find the highest level t with frac certainly >= log_b(t).
  for (int t = static_cast<int>(b) - 1; t >= 1; --t) {
    const DyadicInterval& lev = table.level(t);
    if (frac.certainly_geq(lev)) {
      // Upper slab boundary: log_b(t+1), or 1 when t = b-1 (frac < 1 given).
      if (t == static_cast<int>(b) - 1) return {t, std::nullopt};
      if (frac.certainly_lt(table.level(t + 1))) return {t, std::nullopt};
      return {std::nullopt, t + 1};
    }
    if (frac.overlaps(lev)) return {std::nullopt, t};
  }
  // frac >= 0 = log_b(1) always holds; unreachable.
  throw Error(ErrorCode::kInternal, "classify_digit: no slab found");
}

}  // namespace msd
