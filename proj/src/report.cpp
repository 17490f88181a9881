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

#include "msd/report.hpp"

#include <algorithm>
#include <random>

namespace msd::report {

namespace {

std::string q_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json coeffs_to_json(const std::vector<mpq_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs)
    arr.push_back({{"num", c.get_num().get_str()},
                   {"den", c.get_den().get_str()}});
  return arr;
}

// Largest K with p(1..K) identical between the two profiles.
size_t stabilized_run(const std::vector<uint64_t>& a,
                      const std::vector<uint64_t>& b) {
  size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

struct StabilizedProfile {
  DigitWord word;                    // prefix of length 2L
  std::vector<uint64_t> profile_l;   // on prefix L
  std::vector<uint64_t> profile_2l;  // on prefix 2L
  size_t stabilized_up_to = 0;
};

StabilizedProfile stabilized_profile(SequenceSpec spec, uint64_t length,
                                     size_t max_len,
                                     const GenerateOptions& opts) {
  if (length < 2 || max_len < 1 || max_len > length)
    throw Error(ErrorCode::kInvalidArgument, "bad length/max_len");
  spec.length = 2 * length;
  StabilizedProfile out;
  out.word = generate(spec, opts);
  std::span<const uint8_t> all(out.word.digits);
  FactorIndex idx_l(all.subspan(0, length));
  FactorIndex idx_2l(all);
  out.profile_l = idx_l.profile(max_len);
  out.profile_2l = idx_2l.profile(max_len);
  out.stabilized_up_to = stabilized_run(out.profile_l, out.profile_2l);
  return out;
}

}  // namespace

json spec_to_json(const SequenceSpec& spec) {
  return json{{"a_num", spec.a_num.get_str()},
              {"a_den", spec.a_den.get_str()},
              {"base", spec.base},
              {"d", spec.d},
              {"start", spec.start},
              {"length", spec.length}};
}

json digits_report(const SequenceSpec& spec, const GenerateOptions& opts) {
  DigitWord word = generate(spec, opts);
  return json{{"kind", "digits"},
              {"spec", spec_to_json(spec)},
              {"precision_bits", word.final_precision_bits},
              {"digits", word.to_text()}};
}

json complexity_report(SequenceSpec spec, uint64_t length, size_t max_len,
                       unsigned theta, const GenerateOptions& opts) {
  if (theta < 1) throw Error(ErrorCode::kInvalidArgument, "theta >= 1");
  size_t cap = std::max<size_t>(1, length / theta);
  if (max_len == 0 || max_len > cap) max_len = cap;
  StabilizedProfile sp = stabilized_profile(spec, length, max_len, opts);
  json out{{"kind", "complexity"},
           {"spec", spec_to_json(spec)},
           {"length", length},
           {"max_len", max_len},
           {"precision_bits", sp.word.final_precision_bits},
           {"profile", sp.profile_l},
           {"profile_2x", sp.profile_2l},
           {"stabilized_up_to", sp.stabilized_up_to},
           {"stabilized", sp.stabilized_up_to == max_len}};
  return out;
}

json fit_to_json(const PolyFit& fit) {
  return json{{"degree", fit.degree},
              {"coefficients", coeffs_to_json(fit.coefficients)},
              {"onset", fit.onset},
              {"window", {fit.onset, fit.window_hi}}};
}

json fit_report(SequenceSpec spec, uint64_t length, long k_lo, long k_hi,
                unsigned max_degree, unsigned required_run,
                const GenerateOptions& opts) {
  if (k_lo < 1 || k_hi < k_lo)
    throw Error(ErrorCode::kInvalidArgument, "fit: bad window");
  StabilizedProfile sp =
      stabilized_profile(spec, length, static_cast<size_t>(k_hi), opts);
  json out{{"kind", "fit"},
           {"spec", spec_to_json(spec)},
           {"length", length},
           {"window_requested", {k_lo, k_hi}},
           {"stabilized_up_to", sp.stabilized_up_to},
           {"expected_degree", expected_degree(spec.d)}};

  long hi = std::min(k_hi, static_cast<long>(sp.stabilized_up_to));
  size_t need = static_cast<size_t>(max_degree) + 1 + required_run;
  if (hi < k_lo || static_cast<size_t>(hi - k_lo + 1) < need) {
    out["verdict"] = "not_stabilized";
    out["detail"] = "complexity profile is not stabilized on the requested "
                    "window at this length; the fit was not attempted";
    return out;
  }
  std::vector<mpz_class> values;
  for (long k = k_lo; k <= hi; ++k)
    values.emplace_back(static_cast<unsigned long>(sp.profile_l[k - 1]));
  auto fit = detect(values, k_lo, max_degree, required_run);
  if (!fit) {
    out["verdict"] = "no_fit";
    return out;
  }
  out["fit"] = fit_to_json(*fit);
  out["verdict"] = fit->degree == expected_degree(spec.d)
                       ? "matches_expected_degree"
                       : "degree_mismatch";
  return out;
}

json regions_report(unsigned d, unsigned b, long k) {
  PolyFit poly = region_count_polynomial(d, b);
  return json{{"kind", "regions"},
              {"d", d},
              {"b", b},
              {"k", k},
              {"count", region_count_total(d, b, k).get_str()},
              {"closed_form", fit_to_json(poly)},
              {"expected_degree", expected_degree(d)},
              {"predicted_leading_coefficient",
               q_str(predicted_leading_coefficient(d, b))}};
}

json stable_report(unsigned d, const mpz_class& enumeration_cap) {
  StableLattice lat = stable_lattice(d, enumeration_cap);
  json vj = json::array();
  for (unsigned i = 0; i < d; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < d; ++j)
      row.push_back(lat.V[i * d + j].get_str());
    vj.push_back(row);
  }
  json out{{"kind", "stable_lattice"},
           {"d", d},
           {"V", vj},
           {"order", lat.order.get_str()},
           {"reps_enumerated", lat.reps_enumerated}};
  if (lat.reps_enumerated) {
    json reps = json::array();
    for (const auto& r : lat.coset_reps) {
      json v = json::array();
      for (const auto& c : r) v.push_back(q_str(c));
      reps.push_back(v);
    }
    out["coset_reps"] = reps;
  }
  return out;
}

json orbit_report(const SequenceSpec& spec, unsigned d, uint64_t n_max,
                  unsigned precision_bits) {
  for (;;) {
    try {
      UnipotentSystem sys(d, spec, precision_bits);
      TorusPoint p = torus_origin(d);
      for (uint64_t n = 1; n <= n_max; ++n) {
        p = step(sys, p);
        TorusPoint q = orbit_point(sys, n);
        for (unsigned i = 0; i < d; ++i)
          if (!p.coords[i].overlaps(q.coords[i]))
            return json{{"kind", "orbit"},
                        {"d", d},
                        {"n_max", n_max},
                        {"consistent", false},
                        {"first_mismatch", n}};
      }
      return json{{"kind", "orbit"},
                  {"d", d},
                  {"n_max", n_max},
                  {"precision_bits", precision_bits},
                  {"consistent", true}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNeedsRefinement) throw;
      precision_bits *= 2;
      if (precision_bits > (1u << 16)) throw;
    }
  }
}

json discrepancy_report(const SequenceSpec& spec, unsigned d, uint64_t count,
                        unsigned precision_bits) {
  for (;;) {
    try {
      UnipotentSystem sys(d, spec, precision_bits);
      std::vector<mpq_class> samples;
      samples.reserve(count);
      for (uint64_t n = 1; n <= count; ++n) {
        mpz_class nn(static_cast<unsigned long>(n));
        samples.push_back(frac_of_scaled(sys.zeta(), nn, d).midpoint().to_mpq());
      }
      mpq_class star = star_discrepancy(std::move(samples));
      json out{{"kind", "discrepancy"},
               {"spec", spec_to_json(spec)},
               {"d", d},
               {"count", count},
               {"star_discrepancy", q_str(star)},
               {"star_discrepancy_value", mpq_class(star).get_d()}};
      if (d <= 3) {
        mpq_class box = tuple_discrepancy(sys, count);
        out["tuple_box_deviation"] = q_str(box);
        out["tuple_box_deviation_value"] = box.get_d();
      }
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNeedsRefinement) throw;
      precision_bits *= 2;
      if (precision_bits > (1u << 16)) throw;
    }
  }
}

namespace {

struct Criterion {
  std::string name;
  std::string status;  // "pass", "fail", "not_stabilized"
  std::string detail;
  bool counts_as_failure() const { return status == "fail"; }
};

SequenceSpec spec_2_10(unsigned d) {
  SequenceSpec s;
  s.a_num = 2;
  s.a_den = 1;
  s.base = 10;
  s.d = d;
  return s;
}

// The first two checks share the d=1 profile; the cubic check owns the
// d=2 run.
void run_olympiad(std::vector<Criterion>& out) {
  {
    auto sp = stabilized_profile(spec_2_10(1), 100000, 60, {});
    bool stab30 = stabilized_run(sp.profile_l, sp.profile_2l) >= 30;
    uint64_t p13 = sp.profile_l[12];
    out.push_back({"olympiad_p13",
                   (stab30 && p13 == 57) ? "pass" : "fail",
                   "p(13) = " + std::to_string(p13) +
                       (stab30 ? ", p(1..30) stabilized" : ", NOT stabilized")});

    std::vector<mpz_class> values;
    for (long k = 20; k <= 60; ++k)
      values.emplace_back(static_cast<unsigned long>(sp.profile_l[k - 1]));
    auto fit = detect(values, 20, 2, 5);
    bool ok = fit && fit->degree == 1 && fit->coefficients.size() == 2 &&
              fit->coefficients[0] == 5 && fit->coefficients[1] == 4 &&
              expected_degree(1) == 1;
    out.push_back({"affine_complexity_d1", ok ? "pass" : "fail",
                   fit ? ("degree " + std::to_string(fit->degree) + ", P(k) = " +
                          q_str(fit->coefficients.back()) + "k + " +
                          q_str(fit->coefficients.front()))
                       : "no fit"});
  }
  {
    // d = 2: no effective bound on the onset is known; at this length the
    // profile may not stabilize, in which case the explicit statement below
    // is the honest outcome.
    const uint64_t kLength = 1000000;
    auto sp = stabilized_profile(spec_2_10(2), kLength, 40, {});
    size_t stab = sp.stabilized_up_to;
    const unsigned max_degree = 3, required_run = 6;
    size_t need = max_degree + 1 + required_run;
    if (stab < need) {
      out.push_back(
          {"cubic_complexity_d2", "not_stabilized",
           "profile stabilized only for k <= " + std::to_string(stab) +
               " at length 1e6 (vs 2e6); the degree-3 window does not "
               "stabilize at this length, so the cubic claim is reported as "
               "not testable at this scale rather than confirmed"});
      return;
    }
    std::vector<mpz_class> values;
    for (size_t k = 1; k <= stab; ++k)
      values.emplace_back(static_cast<unsigned long>(sp.profile_l[k - 1]));
    auto fit = detect(values, 1, max_degree, required_run);
    bool ok = fit && fit->degree == 3;
    out.push_back({"cubic_complexity_d2", ok ? "pass" : "fail",
                   fit ? "degree " + std::to_string(fit->degree)
                       : "no exact cubic fit on the stabilized window"});
  }
}

void run_oracle(std::vector<Criterion>& out) {
  uint64_t mismatches = 0, checked = 0;
  for (long a : {2, 3, 7}) {
    for (unsigned b : {5u, 10u}) {
      for (unsigned d : {1u, 2u, 3u}) {
        uint64_t n_max = 1;
        while (true) {
          mpz_class nd;
          mpz_ui_pow_ui(nd.get_mpz_t(), n_max + 1, d);
          if (nd > 20000) break;
          ++n_max;
        }
        SequenceSpec spec;
        spec.a_num = a;
        spec.base = b;
        spec.d = d;
        spec.length = n_max;
        DigitWord word = generate(spec);
        for (uint64_t n = 1; n <= n_max; ++n) {
          int expect = oracle_digit(mpz_class(a), b, n, d);
          ++checked;
          if (word.digits[n - 1] != expect) ++mismatches;
        }
      }
    }
  }
  out.push_back({"digit_soundness_vs_oracle",
                 mismatches == 0 ? "pass" : "fail",
                 std::to_string(mismatches) + " mismatches over " +
                     std::to_string(checked) + " digits"});
}

void run_automaton(std::vector<Criterion>& out) {
  std::mt19937 rng(20260826);
  bool ok = true;
  std::string detail = "500 random words + digit prefixes agree";
  for (int trial = 0; trial < 500 && ok; ++trial) {
    unsigned alpha = 2 + rng() % 8;
    size_t len = 1 + rng() % 2000;
    std::vector<uint8_t> word(len);
    for (auto& c : word) c = static_cast<uint8_t>(1 + rng() % alpha);
    size_t max_len = std::min<size_t>(len, 128);
    FactorIndex idx(word);
    auto fast = idx.profile(max_len);
    auto naive = naive_profile(word, max_len, alpha);
    if (fast != naive.values) {
      ok = false;
      detail = "mismatch on random word, trial " + std::to_string(trial);
    }
  }
  for (unsigned d : {1u, 2u, 3u}) {
    if (!ok) break;
    SequenceSpec spec = spec_2_10(d);
    spec.length = 2000;
    DigitWord word = generate(spec);
    FactorIndex idx(word.digits);
    auto fast = idx.profile(word.digits.size());
    auto naive = naive_profile(word.digits, word.digits.size(), spec.base - 1);
    if (fast != naive.values) {
      ok = false;
      detail = "mismatch on digit word d=" + std::to_string(d);
    }
  }
  out.push_back({"automaton_vs_naive", ok ? "pass" : "fail", detail});
}

void run_regions(std::vector<Criterion>& out) {
  {
    std::mt19937 rng(7);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      unsigned d = 1 + rng() % 6;
      std::vector<long> pool(51);
      for (long v = 0; v <= 50; ++v) pool[v] = v;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<long> idx(pool.begin(), pool.begin() + d);
      std::sort(idx.begin(), idx.end());
      // region_count_tuple cross-checks the product formula against the
      // exact determinant internally and throws on mismatch.
      mpz_class v = region_count_tuple(d, idx);
      ok = (v == region_matrix_determinant(d, idx));
    }
    out.push_back({"region_formula_identity", ok ? "pass" : "fail",
                   "1000 random tuples, d <= 6"});
  }
  {
    bool ok = true;
    std::string detail;
    for (long k = 0; k <= 50 && ok; ++k)
      ok = (region_count_total(1, 10, k) == 9 * (k + 1));
    if (!ok) detail = "N'(k) != 9(k+1) for d=1, b=10";
    if (ok) ok = (region_count_total(2, 5, 1) == 32);
    if (ok) ok = (region_count_total(2, 5, 2) == 128);
    for (unsigned d = 1; d <= 4 && ok; ++d) {
      for (unsigned b : {5u, 10u}) {
        PolyFit poly = region_count_polynomial(d, b);
        if (poly.degree != expected_degree(d)) {
          ok = false;
          detail = "closed-form degree mismatch at d=" + std::to_string(d);
        }
      }
    }
    out.push_back({"region_totals_and_degree", ok ? "pass" : "fail",
                   ok ? "N' values and closed-form degrees match" : detail});
  }
}

void run_lattice(std::vector<Criterion>& out) {
  bool ok = true;
  std::string detail;
  const long expected_orders[] = {1, 2, 18};
  for (unsigned d = 1; d <= 3 && ok; ++d) {
    StableLattice lat = stable_lattice(d);
    if (lat.order != expected_orders[d - 1] || !lat.reps_enumerated) {
      ok = false;
      detail = "order mismatch at d=" + std::to_string(d) + ": got " +
               lat.order.get_str();
    }
    if (ok && d == 2) {
      std::vector<mpq_class> half{mpq_class(1, 2), mpq_class(0)};
      bool found = false;
      for (const auto& r : lat.coset_reps)
        if (r == half) found = true;
      if (!found) {
        ok = false;
        detail = "(1/2, 0) missing from d=2 representatives";
      }
    }
  }
  for (unsigned d = 1; d <= 5 && ok; ++d) {
    StableLattice lat = stable_lattice(d, /*enumeration_cap=*/0);
    std::vector<long> idx(d);
    for (unsigned j = 0; j < d; ++j) idx[j] = static_cast<long>(j) + 1;
    if (lat.order != region_count_tuple(d, idx)) {
      ok = false;
      detail = "order != N(1..d) at d=" + std::to_string(d);
    }
  }
  out.push_back({"stable_lattice", ok ? "pass" : "fail",
                 ok ? "orders 1, 2, 18; rep (1/2,0); order = N(1..d), d <= 5"
                    : detail});
}

void run_orbit(std::vector<Criterion>& out) {
  bool ok = true;
  for (unsigned d = 1; d <= 3 && ok; ++d) {
    json r = orbit_report(spec_2_10(d), d, 10000);
    ok = r["consistent"].get<bool>();
  }
  out.push_back({"orbit_identity", ok ? "pass" : "fail",
                 "f^n(0) overlaps ({zeta n}, ..) for n <= 1e4, d <= 3"});
}

void run_discrepancy(std::vector<Criterion>& out) {
  bool ok = true;
  std::string detail;
  for (unsigned d : {1u, 2u}) {
    json r = discrepancy_report(spec_2_10(1), d, 10000);
    double v = r["star_discrepancy_value"].get<double>();
    detail += (d == 1 ? "D*({zeta n}) = " : ", D*({zeta n^2}) = ") +
              std::to_string(v);
    if (v >= 0.05) ok = false;
  }
  out.push_back({"equidistribution_diagnostics", ok ? "pass" : "fail", detail});
}

void run_morse_hedlund(std::vector<Criterion>& out) {
  std::vector<uint8_t> periodic;
  for (int i = 0; i < 300; ++i) periodic.push_back(i % 2 ? 2 : 1);
  FactorIndex pidx(periodic);
  ComplexityProfile pp = profile(pidx, 100, 2);
  bool ok = eventually_periodic_check(pp);

  SequenceSpec spec = spec_2_10(1);
  spec.length = 10000;
  DigitWord word = generate(spec);
  FactorIndex widx(word.digits);
  ComplexityProfile wp = profile(widx, 100, 9);
  if (eventually_periodic_check(wp)) ok = false;
  // p(n) >= n+1 for every n <= 100 is exactly what the check verifies.
  out.push_back({"morse_hedlund_detector", ok ? "pass" : "fail",
                 "periodic word detected; digit word aperiodic for n <= 100"});
}

}  // namespace

json verify(const std::string& suite, int& failures) {
  std::vector<Criterion> results;
  bool all = suite == "all";
  if (all || suite == "olympiad") run_olympiad(results);
  if (all || suite == "oracle") run_oracle(results);
  if (all) run_automaton(results);
  if (all || suite == "regions") run_regions(results);
  if (all || suite == "lattice") run_lattice(results);
  if (all) {
    run_orbit(results);
    run_discrepancy(results);
    run_morse_hedlund(results);
  }
  if (results.empty())
    throw Error(ErrorCode::kInvalidArgument,
                "unknown suite (use oracle|olympiad|lattice|regions|all)");
  failures = 0;
  json entries = json::array();
  for (const auto& c : results) {
    if (c.counts_as_failure()) ++failures;
    entries.push_back(
        {{"criterion", c.name}, {"status", c.status}, {"detail", c.detail}});
  }
  return json{{"kind", "verify"},
              {"suite", suite},
              {"criteria", entries},
              {"failures", failures}};
}

}  // namespace msd::report
