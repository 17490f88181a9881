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

#include "doctest.h"
#include "msd/exactlog.hpp"

using namespace msd;

namespace {

// Reference value of log10(2) to 45 decimal places, bracketed as a rational
// pair [x, x + 10^-45].
std::pair<mpq_class, mpq_class> log10_2_bracket() {
  mpz_class num("301029995663981195213738894724493026768189881");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 45);
  mpq_class lo(num, den);
  mpq_class hi(num + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

mpq_class width_bound(unsigned precision_bits) {
  mpq_class w(1);
  mpz_class den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), precision_bits - 4);
  return mpq_class(1, den);
}

}  // namespace

TEST_CASE("log of one and of base powers is exact") {
  DyadicInterval one = log_ratio(1, 1, 10, 64);
  CHECK(one.is_exact());
  CHECK(one.lo().is_zero());

  DyadicInterval three = log_ratio(1000, 1, 10, 64);
  CHECK(three.is_exact());
  CHECK(three.lo().to_mpq() == 3);

  DyadicInterval inv = log_ratio(1, 100, 10, 64);
  CHECK(inv.is_exact());
  CHECK(inv.lo().to_mpq() == -2);

  DyadicInterval p5 = log_ratio(125, 1, 5, 64);
  CHECK(p5.is_exact());
  CHECK(p5.lo().to_mpq() == 3);
}

TEST_CASE("log10(2) enclosure matches the 45-digit reference") {
  auto [lo_ref, hi_ref] = log10_2_bracket();
  for (unsigned prec : {64u, 128u, 256u}) {
    DyadicInterval z = log_ratio(2, 1, 10, prec);
    CHECK(z.lo().to_mpq() <= hi_ref);
    CHECK(z.hi().to_mpq() >= lo_ref);
    CHECK(z.width().to_mpq() <= width_bound(prec));
  }
  // At 256 bits the enclosure pins all 45 reference digits.
  DyadicInterval z = log_ratio(2, 1, 10, 256);
  CHECK(z.lo().to_mpq() >= lo_ref);
  CHECK(z.hi().to_mpq() <= hi_ref);
}

TEST_CASE("log enclosures are correctly signed and ordered") {
  DyadicInterval z = log_ratio(1, 2, 10, 128);  // negative
  CHECK(z.hi().sign() < 0);
  auto [lo_ref, hi_ref] = log10_2_bracket();
  bool brackets_minus_log2 =
      z.lo().to_mpq() <= -lo_ref && z.hi().to_mpq() >= -hi_ref;
  CHECK(brackets_minus_log2);

  // log10(3) in (0.477, 0.478)
  DyadicInterval t = log_ratio(3, 1, 10, 128);
  CHECK(t.lo().to_mpq() > mpq_class(477, 1000));
  CHECK(t.hi().to_mpq() < mpq_class(478, 1000));
}

TEST_CASE("log width contract holds for large arguments") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 7, 400);  // ~338 digits
  DyadicInterval z = log_ratio(big, 3, 10, 128);
  CHECK(z.width().to_mpq() <= width_bound(128));
  // 400*log10(7) - log10(3) is about 337.58
  CHECK(z.lo().to_mpq() > 337);
  CHECK(z.hi().to_mpq() < 338);
}

TEST_CASE("log is additive up to enclosure widths") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned long> v(2, 10000);
  for (int i = 0; i < 50; ++i) {
    unsigned long x = v(rng), y = v(rng);
    DyadicInterval lx = log_ratio(x, 1, 10, 128);
    DyadicInterval ly = log_ratio(y, 1, 10, 128);
    DyadicInterval lxy = log_ratio(mpz_class(x) * y, 1, 10, 128);
    CHECK((lx + ly).overlaps(lxy));
  }
}

TEST_CASE("frac_of_scaled reduces zeta * n^d into the unit interval") {
  DyadicInterval zeta = log_ratio(2, 1, 10, 192);
  DyadicInterval f = frac_of_scaled(zeta, 10, 1);
  // {10 log10 2} = 0.0102999...
  CHECK(f.lo().to_mpq() > mpq_class(102, 10000));
  CHECK(f.hi().to_mpq() < mpq_class(104, 10000));

  DyadicInterval f2 = frac_of_scaled(zeta, 3, 2);
  // {9 log10 2} = 0.7092699...
  CHECK(f2.lo().to_mpq() > mpq_class(709, 1000));
  CHECK(f2.hi().to_mpq() < mpq_class(710, 1000));
}

TEST_CASE("frac_of_scaled refuses hopeless precision") {
  DyadicInterval zeta = log_ratio(2, 1, 10, 64);
  mpz_class n(1);
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 40);  // n^2 = 2^80 > 2^60 slack
  try {
    frac_of_scaled(zeta, n, 2);
    FAIL("expected kNeedsRefinement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNeedsRefinement);
  }
}

TEST_CASE("LogTable validates inputs") {
  CHECK_THROWS_AS(LogTable(4, 2, 1, 64), Error);   // base < 5
  CHECK_THROWS_AS(LogTable(10, 1, 1, 64), Error);  // a = 1
  CHECK_THROWS_AS(LogTable(10, 0, 1, 64), Error);
  CHECK_THROWS_AS(LogTable(10, 2, 0, 64), Error);
  // levels log_b(1..b-1) are strictly increasing
  LogTable t(10, 2, 1, 128);
  for (int i = 1; i < 9; ++i) {
    CHECK(t.level(i).certainly_lt(t.level(i + 1)));
  }
  CHECK(t.level(1).is_exact());
  CHECK(t.level(1).lo().is_zero());
}

TEST_CASE("multiplicative dependence is detected exactly") {
  // 25 = 5^2: zeta = log_5 25 = 2 exactly.
  LogTable dep(5, 25, 1, 128);
  try {
    dep.check_multiplicative_independence();
    FAIL("expected kMultiplicativeDependence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMultiplicativeDependence);
  }

  // 8^5 = 32^3: zeta = log_32 8 = 3/5.
  LogTable dep2(32, 8, 1, 128);
  CHECK_THROWS_AS(dep2.check_multiplicative_independence(), Error);

  // log_10 2 is irrational; no relation with denominator <= 64.
  LogTable indep(10, 2, 1, 128);
  CHECK_NOTHROW(indep.check_multiplicative_independence());
  LogTable indep2(5, 3, 2, 128);
  CHECK_NOTHROW(indep2.check_multiplicative_independence());
}

TEST_CASE("is_power_relation is an exact test") {
  CHECK(is_power_relation(25, 1, 5, 2, 1));
  CHECK(is_power_relation(8, 1, 32, 3, 5));
  CHECK_FALSE(is_power_relation(2, 1, 10, 3, 10));
  // rational a with negative p: (1/10)^1 = 10^-1
  CHECK(is_power_relation(1, 10, 10, -1, 1));
}

TEST_CASE("classify_digit resolves interior enclosures") {
  LogTable t(10, 2, 1, 192);
  // {5 log10 2} = 0.5051... lies in [log10 3, log10 4): digit 3.
  DigitClassification c = classify_digit(frac_of_scaled(t.zeta(), 5, 1), t);
  REQUIRE(c.digit.has_value());
  CHECK(*c.digit == 3);

  // Exact zero frac: digit 1 (slab lower bounds are inclusive).
  DigitClassification c0 =
      classify_digit(DyadicInterval::exact(Dyadic::zero(), 192), t);
  REQUIRE(c0.digit.has_value());
  CHECK(*c0.digit == 1);

  // {46 log10 2} = 0.8473... in [log10 7, log10 8): digit 7.
  DigitClassification c46 = classify_digit(frac_of_scaled(t.zeta(), 46, 1), t);
  REQUIRE(c46.digit.has_value());
  CHECK(*c46.digit == 7);
}

TEST_CASE("classify_digit reports the overlapped level when blocked") {
  LogTable t(10, 2, 1, 128);
  // Build a fat enclosure around log10(7).
  DyadicInterval l7 = log_ratio(7, 1, 10, 128);
  Dyadic pad(mpz_class(1), -8);
  DyadicInterval fat(l7.lo() - pad, l7.hi() + pad, 8);
  DigitClassification c = classify_digit(fat, t);
  CHECK_FALSE(c.digit.has_value());
  REQUIRE(c.ambiguous_level.has_value());
  CHECK(*c.ambiguous_level == 7);
}

TEST_CASE("classification is stable under refinement") {
  // The same fractional parts classified at increasing precision never
  // change digit once resolved. n = 1..3 are exact boundary hits (2, 4, 8
  // are single digits times 10^0) which no enclosure can ever resolve;
  // those are the generator's exact-check territory.
  for (unsigned n = 4; n <= 40; ++n) {
    std::optional<int> seen;
    for (unsigned prec : {96u, 192u, 384u}) {
      LogTable t(10, 2, 1, prec);
      DigitClassification c =
          classify_digit(frac_of_scaled(t.zeta(), n, 1), t);
      if (c.digit) {
        if (seen) CHECK(*seen == *c.digit);
        seen = *c.digit;
      }
    }
    CHECK(seen.has_value());
  }
}
