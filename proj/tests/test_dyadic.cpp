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
#include "msd/dyadic.hpp"

using namespace msd;

TEST_CASE("dyadic normalization keeps mantissa odd or zero") {
  Dyadic a(mpz_class(8), -3);  // 8 * 2^-3 = 1
  CHECK(a.mantissa() == 1);
  CHECK(a.exponent() == 0);
  CHECK(a.to_mpq() == mpq_class(1));

  Dyadic z(mpz_class(0), 17);
  CHECK(z.is_zero());
  CHECK(z.exponent() == 0);
}

TEST_CASE("dyadic arithmetic is exact") {
  Dyadic half(mpz_class(1), -1);
  Dyadic quarter(mpz_class(1), -2);
  CHECK((half + quarter).to_mpq() == mpq_class(3, 4));
  CHECK((half - quarter).to_mpq() == mpq_class(1, 4));
  CHECK((half * quarter).to_mpq() == mpq_class(1, 8));
  CHECK((half * mpz_class(6)).to_mpq() == mpq_class(3));
  CHECK((-half).to_mpq() == mpq_class(-1, 2));
}

TEST_CASE("dyadic comparison across exponents") {
  Dyadic a(mpz_class(3), -2);   // 0.75
  Dyadic b(mpz_class(13), -4);  // 0.8125
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a == Dyadic(mpz_class(6), -3));
}

TEST_CASE("dyadic floor") {
  CHECK(Dyadic(mpz_class(7), -2).floor() == 1);    // 1.75
  CHECK(Dyadic(mpz_class(-7), -2).floor() == -2);  // -1.75
  CHECK(Dyadic(mpz_class(3), 1).floor() == 6);
  CHECK(Dyadic(mpz_class(0), 0).floor() == 0);
  CHECK(Dyadic(mpz_class(-1), -3).floor() == -1);
}

TEST_CASE("dyadic arithmetic agrees with mpq on random inputs") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> mant(-1000000, 1000000);
  std::uniform_int_distribution<long> exp(-40, 40);
  for (int i = 0; i < 500; ++i) {
    Dyadic a(mpz_class(mant(rng)), exp(rng));
    Dyadic b(mpz_class(mant(rng)), exp(rng));
    CHECK((a + b).to_mpq() == a.to_mpq() + b.to_mpq());
    CHECK((a - b).to_mpq() == a.to_mpq() - b.to_mpq());
    CHECK((a * b).to_mpq() == a.to_mpq() * b.to_mpq());
    CHECK(a.cmp(b) == cmp(a.to_mpq(), b.to_mpq()));
    mpz_class fl = a.floor();
    CHECK(mpq_class(fl) <= a.to_mpq());
    CHECK(a.to_mpq() < mpq_class(fl + 1));
  }
}

TEST_CASE("interval ordering predicates") {
  DyadicInterval a(Dyadic(mpz_class(1), -2), Dyadic(mpz_class(3), -3), 8);
  DyadicInterval b(Dyadic(mpz_class(1), -1), Dyadic(mpz_class(5), -3), 8);
  CHECK(a.certainly_lt(b));
  CHECK(b.certainly_geq(a));
  CHECK_FALSE(a.overlaps(b));

  DyadicInterval c(Dyadic(mpz_class(5), -4), Dyadic(mpz_class(9), -4), 8);
  CHECK(a.overlaps(c));
  CHECK_FALSE(a.certainly_lt(c));
}

TEST_CASE("interval arithmetic contains all pointwise results") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> mant(-10000, 10000);
  std::uniform_int_distribution<long> w(0, 1000);
  for (int i = 0; i < 200; ++i) {
    Dyadic lo1(mpz_class(mant(rng)), -12);
    Dyadic lo2(mpz_class(mant(rng)), -12);
    DyadicInterval x(lo1, lo1 + Dyadic(mpz_class(w(rng)), -12), 12);
    DyadicInterval y(lo2, lo2 + Dyadic(mpz_class(w(rng)), -12), 12);
    DyadicInterval s = x + y;
    CHECK(s.contains(x.lo() + y.lo()));
    CHECK(s.contains(x.hi() + y.hi()));
    DyadicInterval d = x - y;
    CHECK(d.contains(x.lo() - y.hi()));
    CHECK(d.contains(x.hi() - y.lo()));
  }
}

TEST_CASE("mod1 reduces when the enclosure sits inside one unit interval") {
  DyadicInterval x(Dyadic(mpz_class(9), -2), Dyadic(mpz_class(19), -3), 8);
  // [2.25, 2.375] -> [0.25, 0.375]
  DyadicInterval r = x.mod1();
  CHECK(r.lo().to_mpq() == mpq_class(1, 4));
  CHECK(r.hi().to_mpq() == mpq_class(3, 8));

  DyadicInterval neg(Dyadic(mpz_class(-7), -2), Dyadic(mpz_class(-13), -3), 8);
  // [-1.75, -1.625] -> [0.25, 0.375]
  DyadicInterval rn = neg.mod1();
  CHECK(rn.lo().to_mpq() == mpq_class(1, 4));
  CHECK(rn.hi().to_mpq() == mpq_class(3, 8));
}

TEST_CASE("mod1 demands refinement across an integer") {
  DyadicInterval x(Dyadic(mpz_class(15), -3), Dyadic(mpz_class(17), -3), 8);
  // [1.875, 2.125] straddles 2
  CHECK_THROWS_AS(x.mod1(), Error);
  try {
    x.mod1();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNeedsRefinement);
  }
}

TEST_CASE("interval scaling by integers is exact") {
  DyadicInterval x(Dyadic(mpz_class(1), -3), Dyadic(mpz_class(3), -3), 8);
  DyadicInterval y = x * mpz_class(-5);
  CHECK(y.lo().to_mpq() == mpq_class(-15, 8));
  CHECK(y.hi().to_mpq() == mpq_class(-5, 8));
  CHECK(y.width().to_mpq() == x.width().to_mpq() * 5);
}

TEST_CASE("interval constructor rejects inverted endpoints") {
  CHECK_THROWS_AS(
      DyadicInterval(Dyadic(mpz_class(1), 0), Dyadic(mpz_class(0), 0), 8),
      Error);
}
