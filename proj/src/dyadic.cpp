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

#include "msd/dyadic.hpp"

#include <sstream>

namespace msd {

Dyadic::Dyadic(mpz_class mant, long exp) : mant_(std::move(mant)), exp_(exp) {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  // Keep mantissas small: strip trailing zero bits.
  unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mant_ >>= tz;
    exp_ += static_cast<long>(tz);
  }
}

namespace {

// Align two dyadics to a common exponent (the smaller of the two) and
// return the shifted mantissas.
void align(const Dyadic& a, const Dyadic& b, mpz_class& ma, mpz_class& mb,
           long& exp) {
  if (a.is_zero()) {
    ma = 0;
    mb = b.mantissa();
    exp = b.exponent();
    return;
  }
  if (b.is_zero()) {
    ma = a.mantissa();
    mb = 0;
    exp = a.exponent();
    return;
  }
  exp = std::min(a.exponent(), b.exponent());
  ma = a.mantissa() << static_cast<unsigned long>(a.exponent() - exp);
  mb = b.mantissa() << static_cast<unsigned long>(b.exponent() - exp);
}

}  // namespace

Dyadic Dyadic::operator+(const Dyadic& o) const {
  mpz_class ma, mb;
  long exp;
  align(*this, o, ma, mb, exp);
  return Dyadic(ma + mb, exp);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  mpz_class ma, mb;
  long exp;
  align(*this, o, ma, mb, exp);
  return Dyadic(ma - mb, exp);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(mant_ * o.mant_, exp_ + o.exp_);
}

Dyadic Dyadic::operator*(const mpz_class& k) const {
  return Dyadic(mant_ * k, exp_);
}

int Dyadic::cmp(const Dyadic& o) const {
  int sa = sign(), sb = o.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  mpz_class ma, mb;
  long exp;
  align(*this, o, ma, mb, exp);
  return ::cmp(ma, mb);
}

mpz_class Dyadic::floor() const {
  if (exp_ >= 0) return mant_ << static_cast<unsigned long>(exp_);
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), mant_.get_mpz_t(),
                  static_cast<unsigned long>(-exp_));
  return q;
}

mpq_class Dyadic::to_mpq() const {
  mpq_class q(mant_);
  if (exp_ >= 0) {
    mpz_class num = mant_ << static_cast<unsigned long>(exp_);
    return mpq_class(num);
  }
  mpz_class den = 1;
  den <<= static_cast<unsigned long>(-exp_);
  mpq_class r(mant_, den);
  r.canonicalize();
  return r;
}

double Dyadic::to_double() const {
  mpf_class f(mant_, 64);
  if (exp_ >= 0)
    mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<unsigned long>(exp_));
  else
    mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(),
                 static_cast<unsigned long>(-exp_));
  return f.get_d();
}

std::string Dyadic::to_string() const {
  std::ostringstream out;
  out << mant_.get_str() << "*2^" << exp_;
  return out.str();
}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi, unsigned precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
  if (lo_ > hi_)
    throw Error(ErrorCode::kInvalidArgument, "interval endpoints reversed");
}

Dyadic DyadicInterval::midpoint() const {
  return Dyadic((lo_ + hi_).mantissa(), (lo_ + hi_).exponent() - 1);
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
  return DyadicInterval(lo_ + o.lo_, hi_ + o.hi_,
                        std::max(precision_bits_, o.precision_bits_));
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& o) const {
  return DyadicInterval(lo_ - o.hi_, hi_ - o.lo_,
                        std::max(precision_bits_, o.precision_bits_));
}

DyadicInterval DyadicInterval::operator*(const mpz_class& k) const {
  Dyadic a = lo_ * k, b = hi_ * k;
  if (sgn(k) >= 0) return DyadicInterval(a, b, precision_bits_);
  return DyadicInterval(b, a, precision_bits_);
}

bool DyadicInterval::contains(const mpq_class& v) const {
  return lo_.to_mpq() <= v && v <= hi_.to_mpq();
}

DyadicInterval DyadicInterval::mod1() const {
  mpz_class fl = lo_.floor();
  mpz_class fh = hi_.floor();
  if (fl != fh)
    throw Error(ErrorCode::kNeedsRefinement, "enclosure straddles an integer");
  Dyadic shift(fl, 0);
  return DyadicInterval(lo_ - shift, hi_ - shift, precision_bits_);
}

std::string DyadicInterval::to_string() const {
  std::ostringstream out;
  out << "[" << lo_.to_string() << ", " << hi_.to_string() << "]@"
      << precision_bits_;
  return out.str();
}

}  // namespace msd
