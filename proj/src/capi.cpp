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

#include "msd/msd.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "msd/report.hpp"

namespace {

thread_local std::string g_last_error;

msd_status to_status(msd::ErrorCode code) {
  switch (code) {
    case msd::ErrorCode::kInvalidArgument: return MSD_ERR_INVALID_ARGUMENT;
    case msd::ErrorCode::kNeedsRefinement: return MSD_ERR_NEEDS_REFINEMENT;
    case msd::ErrorCode::kAmbiguous: return MSD_ERR_AMBIGUOUS;
    case msd::ErrorCode::kMultiplicativeDependence:
      return MSD_ERR_MULTIPLICATIVE_DEPENDENCE;
    case msd::ErrorCode::kBudgetExceeded: return MSD_ERR_BUDGET_EXCEEDED;
    case msd::ErrorCode::kNoFit: return MSD_ERR_NO_FIT;
    case msd::ErrorCode::kInternal: return MSD_ERR_INTERNAL;
  }
  return MSD_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
msd_status guarded(Fn&& fn) {
  try {
    fn();
    return MSD_OK;
  } catch (const msd::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MSD_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MSD_ERR_INTERNAL;
  }
}

msd::SequenceSpec make_spec(int64_t a_num, int64_t a_den, int base, int d) {
  msd::SequenceSpec spec;
  spec.a_num = mpz_class(static_cast<long>(a_num));
  spec.a_den = mpz_class(static_cast<long>(a_den));
  spec.base = static_cast<unsigned>(base);
  spec.d = static_cast<unsigned>(d);
  return spec;
}

msd_status emit_json(const nlohmann::json& j, char** out) {
  *out = dup_string(j.dump());
  return *out ? MSD_OK : MSD_ERR_OUT_OF_MEMORY;
}

}  // namespace

extern "C" {

struct msd_sequence {
  msd::SequenceSpec spec;
};

const char* msd_status_name(msd_status status) {
  switch (status) {
    case MSD_OK: return "ok";
    case MSD_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MSD_ERR_NEEDS_REFINEMENT: return "needs_refinement";
    case MSD_ERR_AMBIGUOUS: return "ambiguous";
    case MSD_ERR_MULTIPLICATIVE_DEPENDENCE: return "multiplicative_dependence";
    case MSD_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case MSD_ERR_NO_FIT: return "no_fit";
    case MSD_ERR_INTERNAL: return "internal";
    case MSD_ERR_OUT_OF_MEMORY: return "out_of_memory";
  }
  return "unknown";
}

const char* msd_last_error(void) { return g_last_error.c_str(); }

void msd_string_free(char* s) { ::free(s); }

msd_status msd_sequence_new(int64_t a_num, int64_t a_den, int base, int d,
                            msd_sequence** out) {
  if (!out) return MSD_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto spec = make_spec(a_num, a_den, base, d);
    spec.length = 0;
    spec.validate();
    // Fail fast on dependent (a, b) pairs.
    msd::SequenceSpec probe = spec;
    probe.length = 1;
    msd::generate(probe);
    *out = new msd_sequence{spec};
  });
}

void msd_sequence_free(msd_sequence* seq) { delete seq; }

msd_status msd_sequence_generate(msd_sequence* seq, uint64_t start,
                                 uint64_t length, uint8_t* digits_out,
                                 uint32_t* final_precision_bits) {
  if (!seq || !digits_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    msd::SequenceSpec spec = seq->spec;
    spec.start = start;
    spec.length = length;
    msd::DigitWord word = msd::generate(spec);
    std::memcpy(digits_out, word.digits.data(), word.digits.size());
    if (final_precision_bits)
      *final_precision_bits = word.final_precision_bits;
  });
}

msd_status msd_oracle_digit(int64_t a, int base, uint64_t n, int d,
                            uint64_t max_bits, int* digit_out) {
  if (!digit_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *digit_out = msd::oracle_digit(mpz_class(static_cast<long>(a)),
                                   static_cast<unsigned>(base), n,
                                   static_cast<unsigned>(d),
                                   max_bits ? max_bits : 100000000);
  });
}

msd_status msd_complexity_profile(const uint8_t* word, size_t length,
                                  size_t max_len, uint64_t* profile_out) {
  if (!word || !profile_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    msd::FactorIndex idx(std::span<const uint8_t>(word, length));
    auto p = idx.profile(max_len);
    std::memcpy(profile_out, p.data(), p.size() * sizeof(uint64_t));
  });
}

msd_status msd_naive_profile(const uint8_t* word, size_t length,
                             size_t max_len, uint64_t* profile_out) {
  if (!word || !profile_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto p = msd::naive_profile(std::span<const uint8_t>(word, length),
                                max_len, 255);
    std::memcpy(profile_out, p.values.data(),
                p.values.size() * sizeof(uint64_t));
  });
}

msd_status msd_distinct_factor_count(const uint8_t* word, size_t length,
                                     uint64_t* count_out) {
  if (!word || !count_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    msd::FactorIndex idx(std::span<const uint8_t>(word, length));
    *count_out = idx.distinct_factor_count();
  });
}

msd_status msd_eventually_periodic_check(const uint64_t* profile, size_t len,
                                         int* result_out) {
  if (!profile || !result_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    msd::ComplexityProfile p;
    p.values.assign(profile, profile + len);
    *result_out = msd::eventually_periodic_check(p) ? 1 : 0;
  });
}

msd_status msd_fit_json(const int64_t* values, size_t count, int64_t k_lo,
                        int max_degree, int required_run, char** json_out) {
  if (!values || !json_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<mpz_class> vals;
    vals.reserve(count);
    for (size_t i = 0; i < count; ++i)
      vals.emplace_back(static_cast<long>(values[i]));
    auto fit = msd::detect(vals, static_cast<long>(k_lo),
                           static_cast<unsigned>(max_degree),
                           static_cast<unsigned>(required_run));
    if (!fit)
      throw msd::Error(msd::ErrorCode::kNoFit,
                       "no polynomial window qualifies");
    emit_json(msd::report::fit_to_json(*fit), json_out);
  });
}

msd_status msd_expected_degree(int d, int* out) {
  if (!out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = static_cast<int>(msd::expected_degree(static_cast<unsigned>(d)));
  });
}

msd_status msd_region_count_tuple(int d, const int64_t* indices,
                                  char** decimal_out) {
  if (!indices || !decimal_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<long> idx(indices, indices + d);
    *decimal_out = dup_string(
        msd::region_count_tuple(static_cast<unsigned>(d), idx).get_str());
  });
}

msd_status msd_region_count_total(int d, int b, int64_t k,
                                  char** decimal_out) {
  if (!decimal_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *decimal_out = dup_string(
        msd::region_count_total(static_cast<unsigned>(d),
                                static_cast<unsigned>(b),
                                static_cast<long>(k))
            .get_str());
  });
}

msd_status msd_regions_report_json(int d, int b, int64_t k, char** json_out) {
  if (!json_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    emit_json(msd::report::regions_report(static_cast<unsigned>(d),
                                          static_cast<unsigned>(b),
                                          static_cast<long>(k)),
              json_out);
  });
}

msd_status msd_stable_lattice_json(int d, int64_t enumeration_cap,
                                   char** json_out) {
  if (!json_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    mpz_class cap(static_cast<long>(enumeration_cap > 0 ? enumeration_cap
                                                        : 100000));
    emit_json(msd::report::stable_report(static_cast<unsigned>(d), cap),
              json_out);
  });
}

msd_status msd_orbit_identity_check(int64_t a_num, int64_t a_den, int base,
                                    int d, uint64_t n_max, int* ok_out) {
  if (!ok_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto r = msd::report::orbit_report(make_spec(a_num, a_den, base, d),
                                       static_cast<unsigned>(d), n_max);
    *ok_out = r["consistent"].get<bool>() ? 1 : 0;
  });
}

msd_status msd_discrepancy_json(int64_t a_num, int64_t a_den, int base, int d,
                                uint64_t count, char** json_out) {
  if (!json_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    emit_json(msd::report::discrepancy_report(
                  make_spec(a_num, a_den, base, d),
                  static_cast<unsigned>(d), count),
              json_out);
  });
}

msd_status msd_complexity_report_json(int64_t a_num, int64_t a_den, int base,
                                      int d, uint64_t length, size_t max_len,
                                      unsigned theta, char** json_out) {
  if (!json_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    emit_json(msd::report::complexity_report(
                  make_spec(a_num, a_den, base, d), length, max_len,
                  theta ? theta : 20),
              json_out);
  });
}

msd_status msd_fit_report_json(int64_t a_num, int64_t a_den, int base, int d,
                               uint64_t length, int64_t k_lo, int64_t k_hi,
                               int max_degree, int required_run,
                               char** json_out) {
  if (!json_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    emit_json(msd::report::fit_report(
                  make_spec(a_num, a_den, base, d), length,
                  static_cast<long>(k_lo), static_cast<long>(k_hi),
                  static_cast<unsigned>(max_degree),
                  static_cast<unsigned>(required_run)),
              json_out);
  });
}

msd_status msd_verify(const char* suite, char** report_out,
                      int* failures_out) {
  if (!suite || !report_out) return MSD_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    int failures = 0;
    auto r = msd::report::verify(suite, failures);
    emit_json(r, report_out);
    if (failures_out) *failures_out = failures;
  });
}

}  // extern "C"
