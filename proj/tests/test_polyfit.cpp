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
#include <vector>

#include "doctest.h"
#include "msd/polyfit.hpp"

using namespace msd;

namespace {

std::vector<mpz_class> values_of(const std::vector<long>& v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

// Integer-valued rational polynomial built on the binomial basis
// sum_j c_j * C(k, j); its monomial coefficients have denominators
// dividing j!.
struct BinomialPoly {
  std::vector<long> c;

  mpz_class eval(long k) const {
    mpz_class acc = 0;
    for (size_t j = 0; j < c.size(); ++j) {
      mpz_class b;
      if (k >= long(j)) {
        mpz_bin_uiui(b.get_mpz_t(), unsigned(k), unsigned(j));
      }
      acc += c[j] * b;
    }
    return acc;
  }

  std::vector<mpq_class> monomial() const {
    // C(k, j) = k(k-1)..(k-j+1)/j! expanded exactly.
    std::vector<mpq_class> coeffs(c.size(), mpq_class(0));
    for (size_t j = 0; j < c.size(); ++j) {
      std::vector<mpq_class> poly{1};  // product of (k - i)
      for (size_t i = 0; i < j; ++i) {
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (size_t t = 0; t < poly.size(); ++t) {
          next[t + 1] += poly[t];
          next[t] -= poly[t] * long(i);
        }
        poly = next;
      }
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), unsigned(j));
      for (size_t t = 0; t < poly.size(); ++t) {
        coeffs[t] += poly[t] * c[j] / mpq_class(fact);
      }
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    for (auto& q : coeffs) q.canonicalize();
    return coeffs;
  }
};

}  // namespace

TEST_CASE("difference table of squares") {
  DifferenceTable t = difference_table(values_of({0, 1, 4, 9, 16}), 3);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[1] == values_of({1, 3, 5, 7}));
  CHECK(t.rows[2] == values_of({2, 2, 2}));
  CHECK(t.rows[3] == values_of({0, 0}));
}

TEST_CASE("difference table of an affine sequence") {
  DifferenceTable t = difference_table(values_of({9, 18, 27, 36}), 2);
  CHECK(t.rows[1] == values_of({9, 9, 9}));
  CHECK(t.rows[2] == values_of({0, 0}));
}

TEST_CASE("detect recovers k^2 with onset zero") {
  std::vector<mpz_class> v;
  for (long k = 0; k <= 10; ++k) v.push_back(k * k);
  auto fit = detect(v, 0, 3, 5);
  REQUIRE(fit.has_value());
  CHECK(fit->degree == 2);
  REQUIRE(fit->coefficients.size() == 3);
  CHECK(fit->coefficients[0] == 0);
  CHECK(fit->coefficients[1] == 0);
  CHECK(fit->coefficients[2] == 1);
  CHECK(fit->onset == 0);
}

TEST_CASE("detect recovers an affine law with a transient head") {
  // 4k + 5 from k = 3 on, garbage before.
  std::vector<mpz_class> v{100, 0, 50};
  for (long k = 3; k <= 20; ++k) v.push_back(4 * k + 5);
  auto fit = detect(v, 0, 3, 6);
  REQUIRE(fit.has_value());
  CHECK(fit->degree == 1);
  CHECK(fit->coefficients[0] == 5);
  CHECK(fit->coefficients[1] == 4);
  CHECK(fit->onset <= 3);
  CHECK(fit->evaluate(7) == 33);
}

TEST_CASE("detect honors the k_lo offset") {
  // values indexed from k = 5: (k-1)k/2
  std::vector<mpz_class> v;
  for (long k = 5; k <= 25; ++k) v.push_back(k * (k - 1) / 2);
  auto fit = detect(v, 5, 4, 6);
  REQUIRE(fit.has_value());
  CHECK(fit->degree == 2);
  CHECK(fit->coefficients[2] == mpq_class(1, 2));
  CHECK(fit->coefficients[1] == mpq_class(-1, 2));
  CHECK(fit->evaluate(10) == 45);
}

TEST_CASE("detect returns the minimal degree") {
  std::vector<mpz_class> v;
  for (long k = 0; k <= 15; ++k) v.push_back(3 * k + 2);
  auto fit = detect(v, 0, 6, 8);
  REQUIRE(fit.has_value());
  CHECK(fit->degree == 1);
}

TEST_CASE("no polynomial law for floor(2^k / 3)") {
  std::vector<mpz_class> v;
  for (long k = 0; k <= 12; ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, unsigned(k));
    v.push_back(p / 3);
  }
  CHECK_FALSE(detect(v, 0, 3, 5).has_value());
  CHECK_FALSE(detect(v, 0, 6, 8).has_value());
}

TEST_CASE("detect argument checks") {
  std::vector<mpz_class> v = values_of({0, 1, 4, 9, 16, 25, 36, 49});
  // required_run below max_degree + 2 is a caller error.
  CHECK_THROWS_AS(detect(v, 0, 3, 4), Error);
  // Windows shorter than the run cannot witness anything.
  CHECK_FALSE(detect(values_of({0, 1, 4}), 0, 1, 3).has_value());
}

TEST_CASE("round trip on integer-valued rational polynomials") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    BinomialPoly p;
    int D = deg(rng);
    p.c.resize(size_t(D) + 1);
    for (auto& c : p.c) c = coef(rng);
    if (p.c.back() == 0) p.c.back() = 1;
    std::vector<mpz_class> v;
    for (long k = 0; k <= 30; ++k) v.push_back(p.eval(k));
    auto fit = detect(v, 0, 6, 8);
    REQUIRE(fit.has_value());
    std::vector<mpq_class> want = p.monomial();
    CHECK(fit->degree + 1 == want.size());
    REQUIRE(fit->coefficients.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      CAPTURE(trial);
      CAPTURE(i);
      CHECK(fit->coefficients[i] == want[i]);
    }
    // And the fit reproduces every window value exactly.
    for (long k = 0; k <= 30; ++k) {
      CHECK(fit->evaluate(k) == mpq_class(v[size_t(k)]));
    }
  }
}

TEST_CASE("expected degree is d(d+1)/2") {
  CHECK(expected_degree(1) == 1);
  CHECK(expected_degree(2) == 3);
  CHECK(expected_degree(3) == 6);
  CHECK(expected_degree(4) == 10);
}
