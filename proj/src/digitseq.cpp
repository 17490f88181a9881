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

#include "msd/digitseq.hpp"

#include <cstdlib>
#include <sstream>

namespace msd {

GenerateOptions options_from_env() {
  GenerateOptions opts;
  if (const char* cap = std::getenv("MSD_MAX_PRECISION_BITS")) {
    long v = std::strtol(cap, nullptr, 10);
    if (v >= 128) opts.max_precision_bits = static_cast<unsigned>(v);
  }
  return opts;
}

void SequenceSpec::validate() const {
  if (a_num < 1 || a_den < 1)
    throw Error(ErrorCode::kInvalidArgument, "spec: a must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_num.get_mpz_t(), a_den.get_mpz_t());
  if (g != 1)
    throw Error(ErrorCode::kInvalidArgument, "spec: gcd(a_num, a_den) != 1");
  if (a_num == a_den)
    throw Error(ErrorCode::kInvalidArgument, "spec: a = 1 not allowed");
  if (base < 5)
    throw Error(ErrorCode::kInvalidArgument, "spec: base must be >= 5");
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "spec: d must be >= 1");
  if (start < 1)
    throw Error(ErrorCode::kInvalidArgument, "spec: start must be >= 1");
}

std::string DigitWord::to_text() const {
  std::ostringstream out;
  if (spec.base <= 11) {
    for (uint8_t d : digits) out << static_cast<char>(d < 10 ? '0' + d : 'A');
  } else {
    for (size_t i = 0; i < digits.size(); ++i) {
      if (i) out << ',';
      out << static_cast<int>(digits[i]);
    }
  }
  return out.str();
}

namespace {

// Exact resolution of a persistent boundary overlap: decides whether
// {zeta * n^d} equals log_b(t) exactly, i.e. a^{n^d} = t * b^m for some
// integer m. Returns true when the relation holds (the digit is then t,
// the slab's closed lower end). Returns false when the relation provably
// fails or the check would exceed the bit budget.
bool exact_boundary_hit(const SequenceSpec& spec, const mpz_class& n_pow_d,
                        int t, const DyadicInterval& scaled,
                        uint64_t bit_budget) {
  if (!n_pow_d.fits_ulong_p()) return false;
  unsigned long nd = mpz_get_ui(n_pow_d.get_mpz_t());
  size_t abits = std::max(mpz_sizeinbase(spec.a_num.get_mpz_t(), 2),
                          mpz_sizeinbase(spec.a_den.get_mpz_t(), 2));
  if (static_cast<uint64_t>(nd) * abits > bit_budget) return false;

  // Candidate m: integer part of zeta*n^d - log_b(t); the enclosure is
  // already narrow, so floor of the midpoint minus a tiny level value is the
  // only possibility. log_b(t) in [0, 1), so m = floor(scaled) works except
  // exactly at integers, where m and m-1 both need a try for t = 1.
  mpz_class m = scaled.midpoint().floor();
  mpz_class num_q, den_q;
  mpz_pow_ui(num_q.get_mpz_t(), spec.a_num.get_mpz_t(), nd);
  mpz_pow_ui(den_q.get_mpz_t(), spec.a_den.get_mpz_t(), nd);
  for (int delta = 0; delta <= 1; ++delta) {
    mpz_class mm = m - delta;
    mpz_class pabs = abs(mm), bp;
    if (!pabs.fits_ulong_p()) continue;
    if (mpz_get_ui(pabs.get_mpz_t()) *
            static_cast<uint64_t>(mpz_sizeinbase(mpz_class(spec.base).get_mpz_t(), 2)) >
        bit_budget)
      continue;
    mpz_pow_ui(bp.get_mpz_t(), mpz_class(spec.base).get_mpz_t(),
               mpz_get_ui(pabs.get_mpz_t()));
    bool hit = (mm >= 0) ? (num_q == t * bp * den_q)
                         : (num_q * bp == mpz_class(t) * den_q);
    if (hit) return true;
  }
  return false;
}

class Generator {
 public:
  Generator(const SequenceSpec& spec, const GenerateOptions& opts)
      : spec_(spec), opts_(opts),
        table_(spec.base, spec.a_num, spec.a_den,
               opts.initial_precision_bits) {
    // Independence guard before any digit is emitted.
    for (;;) {
      try {
        table_.check_multiplicative_independence();
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNeedsRefinement) throw;
        refine();
      }
    }
  }

  unsigned precision_bits() const { return table_.precision_bits(); }

  int digit_at(uint64_t n) {
    mpz_class nd;
    mpz_ui_pow_ui(nd.get_mpz_t(), n, spec_.d);
    for (;;) {
      try {
        DyadicInterval frac = frac_of_scaled(table_.zeta(), nd, 1);
        DigitClassification cls = classify_digit(frac, table_);
        if (cls.digit) return *cls.digit;
        if (exact_boundary_hit(spec_, nd, *cls.ambiguous_level,
                               table_.zeta() * nd,
                               opts_.exact_check_bit_budget))
          return *cls.ambiguous_level;
        refine();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNeedsRefinement) throw;
        refine();
      }
    }
  }

 private:
  void refine() {
    unsigned next = table_.precision_bits() * 2;
    if (next > opts_.max_precision_bits)
      throw Error(ErrorCode::kMultiplicativeDependence,
                  "precision cap reached without digit resolution; "
                  "multiplicative dependence suspected");
    table_ = table_.refined(next);
  }

  SequenceSpec spec_;
  GenerateOptions opts_;
  LogTable table_;
};

}  // namespace

DigitWord generate(const SequenceSpec& spec, const GenerateOptions& opts) {
  spec.validate();
  Generator gen(spec, opts);
  DigitWord word;
  word.spec = spec;
  word.digits.reserve(spec.length);
  for (uint64_t i = 0; i < spec.length; ++i)
    word.digits.push_back(static_cast<uint8_t>(gen.digit_at(spec.start + i)));
  word.final_precision_bits = gen.precision_bits();
  return word;
}

void generate_chunked(const SequenceSpec& spec, uint64_t chunk,
                      const std::function<void(const DigitWord&)>& sink,
                      const GenerateOptions& opts) {
  spec.validate();
  if (chunk < 1)
    throw Error(ErrorCode::kInvalidArgument, "chunk must be >= 1");
  Generator gen(spec, opts);
  uint64_t done = 0;
  while (done < spec.length) {
    uint64_t take = std::min(chunk, spec.length - done);
    DigitWord part;
    part.spec = spec;
    part.spec.start = spec.start + done;
    part.spec.length = take;
    part.digits.reserve(take);
    for (uint64_t i = 0; i < take; ++i)
      part.digits.push_back(
          static_cast<uint8_t>(gen.digit_at(spec.start + done + i)));
    part.final_precision_bits = gen.precision_bits();
    done += take;
    sink(part);
  }
}

int oracle_digit(const mpz_class& a, unsigned base, uint64_t n, unsigned d,
                 uint64_t max_bits) {
  if (a < 2) throw Error(ErrorCode::kInvalidArgument, "oracle: a must be >= 2");
  if (base < 2 || n < 1 || d < 1)
    throw Error(ErrorCode::kInvalidArgument, "oracle: bad arguments");
  mpz_class nd;
  mpz_ui_pow_ui(nd.get_mpz_t(), n, d);
  size_t abits = mpz_sizeinbase(a.get_mpz_t(), 2);
  if (!nd.fits_ulong_p() ||
      mpz_get_ui(nd.get_mpz_t()) * static_cast<uint64_t>(abits) > max_bits)
    throw Error(ErrorCode::kBudgetExceeded, "oracle: power exceeds bit budget");

  mpz_class pow;
  mpz_pow_ui(pow.get_mpz_t(), a.get_mpz_t(), mpz_get_ui(nd.get_mpz_t()));
  // sizeinbase is exact or one too large.
  size_t sz = mpz_sizeinbase(pow.get_mpz_t(), static_cast<int>(base));
  mpz_class be, q;
  mpz_ui_pow_ui(be.get_mpz_t(), base, static_cast<unsigned long>(sz - 1));
  q = pow / be;
  if (q == 0) {
    mpz_ui_pow_ui(be.get_mpz_t(), base, static_cast<unsigned long>(sz - 2));
    q = pow / be;
  }
  return static_cast<int>(q.get_ui());
}

}  // namespace msd
