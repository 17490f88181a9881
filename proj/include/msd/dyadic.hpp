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

#ifndef MSD_DYADIC_HPP
#define MSD_DYADIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace msd {

// Error taxonomy shared by all modules. Mapped onto C status codes at the
// library boundary.
enum class ErrorCode {
  kInvalidArgument,
  kNeedsRefinement,
  kAmbiguous,
  kMultiplicativeDependence,
  kBudgetExceeded,
  kNoFit,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Exact dyadic rational: mantissa * 2^exponent. Normalized so that the
// mantissa is odd or zero (zero is stored as mantissa 0, exponent 0).
class Dyadic {
 public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(mpz_class mant, long exp);
  explicit Dyadic(long v) : Dyadic(mpz_class(v), 0) {}
  static Dyadic zero() { return Dyadic(); }

  const mpz_class& mantissa() const { return mant_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0; }
  int sign() const { return sgn(mant_); }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator-() const { return Dyadic(-mant_, exp_); }
  Dyadic operator*(const Dyadic& o) const;
  Dyadic operator*(const mpz_class& k) const;

  // Three-way comparison of exact values.
  int cmp(const Dyadic& o) const;
  bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
  bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
  bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
  bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }
  bool operator==(const Dyadic& o) const { return cmp(o) == 0; }

  // Largest integer <= value.
  mpz_class floor() const;

  mpq_class to_mpq() const;
  double to_double() const;
  std::string to_string() const;

 private:
  mpz_class mant_;
  long exp_;
};

// Rigorous enclosure [lo, hi] of a real number. All arithmetic is exact on
// the dyadic endpoints, so widths obey the stated contracts with no hidden
// rounding.
class DyadicInterval {
 public:
  DyadicInterval() : precision_bits_(0) {}
  DyadicInterval(Dyadic lo, Dyadic hi, unsigned precision_bits);

  // Exact point interval (width 0).
  static DyadicInterval exact(Dyadic v, unsigned precision_bits = 0) {
    return DyadicInterval(v, v, precision_bits);
  }

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  unsigned precision_bits() const { return precision_bits_; }
  Dyadic width() const { return hi_ - lo_; }
  Dyadic midpoint() const;
  bool is_exact() const { return lo_ == hi_; }

  DyadicInterval operator+(const DyadicInterval& o) const;
  DyadicInterval operator-(const DyadicInterval& o) const;
  // Exact scaling by an integer (no rounding on dyadics).
  DyadicInterval operator*(const mpz_class& k) const;

  bool contains(const Dyadic& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const mpq_class& v) const;
  bool overlaps(const DyadicInterval& o) const {
    return !(hi_ < o.lo_) && !(o.hi_ < lo_);
  }
  // True when every point of *this is >= / < every point of o.
  bool certainly_geq(const DyadicInterval& o) const { return lo_ >= o.hi_; }
  bool certainly_lt(const DyadicInterval& o) const { return hi_ < o.lo_; }

  // Reduce modulo 1 into [0, 1). Throws Error(kNeedsRefinement) when the
  // enclosure straddles an integer and the true fractional part cannot be
  // pinned to one unit interval.
  DyadicInterval mod1() const;

  std::string to_string() const;

 private:
  Dyadic lo_, hi_;
  unsigned precision_bits_;
};

}  // namespace msd

#endif  // MSD_DYADIC_HPP
