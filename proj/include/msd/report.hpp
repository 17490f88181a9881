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

#ifndef MSD_REPORT_HPP
#define MSD_REPORT_HPP

#include <string>

#include "json.hpp"

#include "msd/digitseq.hpp"
#include "msd/factor_complexity.hpp"
#include "msd/polyfit.hpp"
#include "msd/torus.hpp"

namespace msd::report {

using nlohmann::json;

json spec_to_json(const SequenceSpec& spec);

json digits_report(const SequenceSpec& spec, const GenerateOptions& opts = options_from_env());

// Profile of the word prefix of `length`, stabilization-checked against the
// 2x prefix. p(n) reported for n <= length/theta (clamped by max_len if
// nonzero).
json complexity_report(SequenceSpec spec, uint64_t length, size_t max_len = 0,
                       unsigned theta = 20,
                       const GenerateOptions& opts = options_from_env());

// Exact polynomial fit of the stabilized complexity profile on
// [k_lo, k_hi] (window clipped to the stabilized run).
json fit_report(SequenceSpec spec, uint64_t length, long k_lo, long k_hi,
                unsigned max_degree, unsigned required_run,
                const GenerateOptions& opts = options_from_env());

json fit_to_json(const PolyFit& fit);

json regions_report(unsigned d, unsigned b, long k);
json stable_report(unsigned d, const mpz_class& enumeration_cap = 100000);

// Interval consistency of f^n(0) against the closed-form orbit point for
// all n <= n_max.
json orbit_report(const SequenceSpec& spec, unsigned d, uint64_t n_max,
                  unsigned precision_bits = 192);

// Star discrepancy of {zeta n^d}, n = 1..count (exact), plus the
// box-counting tuple deviation when d <= 3.
json discrepancy_report(const SequenceSpec& spec, unsigned d, uint64_t count,
                        unsigned precision_bits = 192);

// Acceptance suites: "oracle", "olympiad", "lattice", "regions", "all".
// One entry per criterion with pass/fail; failures counts criteria that did
// not pass.
json verify(const std::string& suite, int& failures);

}  // namespace msd::report

#endif  // MSD_REPORT_HPP
