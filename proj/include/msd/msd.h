/* Copyright 2026 The msd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the msd library: certified leading-digit sequences of
 * a^{n^d} in base b, factor complexity, exact polynomial detection, and the
 * associated torus/lattice counting machinery. All heavy results are
 * returned as JSON or decimal strings; free them with msd_string_free. */

#ifndef MSD_MSD_H
#define MSD_MSD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MSD_OK = 0,
  MSD_ERR_INVALID_ARGUMENT = 1,
  MSD_ERR_NEEDS_REFINEMENT = 2,
  MSD_ERR_AMBIGUOUS = 3,
  MSD_ERR_MULTIPLICATIVE_DEPENDENCE = 4,
  MSD_ERR_BUDGET_EXCEEDED = 5,
  MSD_ERR_NO_FIT = 6,
  MSD_ERR_INTERNAL = 7,
  MSD_ERR_OUT_OF_MEMORY = 8
} msd_status;

const char* msd_status_name(msd_status status);

/* Message describing the most recent failure on the calling thread. */
const char* msd_last_error(void);

void msd_string_free(char* s);

/* ---- digit sequences ---- */

typedef struct msd_sequence msd_sequence;

/* a = a_num/a_den in lowest terms, a > 0, a != 1; base >= 5; d >= 1.
 * Performs the multiplicative-independence check up front. */
msd_status msd_sequence_new(int64_t a_num, int64_t a_den, int base, int d,
                            msd_sequence** out);
void msd_sequence_free(msd_sequence* seq);

/* digits_out must hold `length` bytes; each is the leading base-b digit of
 * a^{n^d} for n = start + i, certified by interval soundness. */
msd_status msd_sequence_generate(msd_sequence* seq, uint64_t start,
                                 uint64_t length, uint8_t* digits_out,
                                 uint32_t* final_precision_bits);

/* Exact big-integer oracle (integer a >= 2). max_bits caps the size of
 * a^{n^d}; pass 0 for the default budget of 1e8 bits. */
msd_status msd_oracle_digit(int64_t a, int base, uint64_t n, int d,
                            uint64_t max_bits, int* digit_out);

/* ---- factor complexity ---- */

/* profile_out must hold max_len entries; entry i = p(i+1). */
msd_status msd_complexity_profile(const uint8_t* word, size_t length,
                                  size_t max_len, uint64_t* profile_out);

/* Quadratic reference enumeration (validation oracle). */
msd_status msd_naive_profile(const uint8_t* word, size_t length,
                             size_t max_len, uint64_t* profile_out);

msd_status msd_distinct_factor_count(const uint8_t* word, size_t length,
                                     uint64_t* count_out);

/* Morse-Hedlund: 1 iff p(n) < n+1 for some n in the profile. */
msd_status msd_eventually_periodic_check(const uint64_t* profile, size_t len,
                                         int* result_out);

/* ---- polynomial detection ---- */

/* JSON: {degree, coefficients:[{num,den}..], onset, window}. Values are the
 * sequence at k = k_lo, k_lo+1, ... Returns MSD_ERR_NO_FIT when no window
 * qualifies. */
msd_status msd_fit_json(const int64_t* values, size_t count, int64_t k_lo,
                        int max_degree, int required_run, char** json_out);

msd_status msd_expected_degree(int d, int* out);

/* ---- torus machinery ---- */

/* |det M_{i_1..i_d}|, indices strictly increasing, as a decimal string. */
msd_status msd_region_count_tuple(int d, const int64_t* indices,
                                  char** decimal_out);

msd_status msd_region_count_total(int d, int b, int64_t k, char** decimal_out);

/* JSON report with N'(k), its interpolated closed form, and the
 * generic-position leading-coefficient prediction. */
msd_status msd_regions_report_json(int d, int b, int64_t k, char** json_out);

msd_status msd_stable_lattice_json(int d, int64_t enumeration_cap,
                                   char** json_out);

/* 1 iff the enclosures of f^n(0,..,0) and ({zeta n},..,{zeta n^d}) overlap
 * for every n <= n_max. */
msd_status msd_orbit_identity_check(int64_t a_num, int64_t a_den, int base,
                                    int d, uint64_t n_max, int* ok_out);

/* Star discrepancy of {zeta n^d}, n = 1..count, plus the d-tuple
 * box-counting deviation for d <= 3 (JSON). */
msd_status msd_discrepancy_json(int64_t a_num, int64_t a_den, int base, int d,
                                uint64_t count, char** json_out);

/* ---- pipelines ---- */

msd_status msd_complexity_report_json(int64_t a_num, int64_t a_den, int base,
                                      int d, uint64_t length, size_t max_len,
                                      unsigned theta, char** json_out);

msd_status msd_fit_report_json(int64_t a_num, int64_t a_den, int base, int d,
                               uint64_t length, int64_t k_lo, int64_t k_hi,
                               int max_degree, int required_run,
                               char** json_out);

/* Verification suites: "oracle", "olympiad", "lattice", "regions", "all".
 * failures_out receives the number of failed criteria. */
msd_status msd_verify(const char* suite, char** report_out, int* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* MSD_MSD_H */
