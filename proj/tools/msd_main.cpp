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

// Command-line front end. Talks to the library exclusively through the C
// API in msd/msd.h; all pipeline logic lives behind that boundary.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include "json.hpp"

#include "msd/msd.h"

namespace {

using nlohmann::json;

struct CommonFlags {
  int64_t a_num = 2;
  int64_t a_den = 1;
  int base = 10;
  int d = 1;
  std::string format = "json";  // csv | json | plain
  std::string out_path;
  bool no_timestamp = false;
};

void add_spec_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--a", f.a_num, "numerator of a (a = a_num/a_den)");
  cmd->add_option("--a-den", f.a_den, "denominator of a");
  cmd->add_option("--b", f.base, "base b >= 5");
  cmd->add_option("--d", f.d, "exponent degree d >= 1");
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "output format: csv|json|plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  cmd->add_option("--out", f.out_path, "write output to file instead of stdout");
  cmd->add_flag("--no-timestamp", f.no_timestamp,
                "omit the timestamp field for byte-identical reruns");
}

void emit(const CommonFlags& f, const std::string& text) {
  if (f.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(f.out_path);
  if (!out) {
    std::cerr << "error: cannot open " << f.out_path << "\n";
    std::exit(2);
  }
  out << text << "\n";
}

void stamp(json& j, const CommonFlags& f) {
  if (f.no_timestamp) return;
  char buf[64];
  std::time_t now = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["generated_at"] = buf;
}

struct JsonString {
  char* ptr = nullptr;
  ~JsonString() { msd_string_free(ptr); }
  json parse() const { return json::parse(ptr); }
};

[[noreturn]] void die(msd_status st) {
  std::cerr << "error (" << msd_status_name(st) << "): " << msd_last_error()
            << "\n";
  // Distinct exit codes for the documented failure classes.
  switch (st) {
    case MSD_ERR_NO_FIT: std::exit(4);
    case MSD_ERR_MULTIPLICATIVE_DEPENDENCE: std::exit(5);
    case MSD_ERR_BUDGET_EXCEEDED: std::exit(6);
    default: std::exit(2);
  }
}

void check(msd_status st) {
  if (st != MSD_OK) die(st);
}

int run_digits(const CommonFlags& f, uint64_t start, uint64_t length) {
  msd_sequence* seq = nullptr;
  check(msd_sequence_new(f.a_num, f.a_den, f.base, f.d, &seq));
  std::vector<uint8_t> digits(length);
  uint32_t prec = 0;
  msd_status st = msd_sequence_generate(seq, start, length, digits.data(), &prec);
  msd_sequence_free(seq);
  check(st);

  std::string text;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (f.base <= 11) {
      text += static_cast<char>(digits[i] < 10 ? '0' + digits[i] : 'A');
    } else {
      if (i) text += ',';
      text += std::to_string(static_cast<int>(digits[i]));
    }
  }
  if (f.format == "plain" || f.format == "csv") {
    emit(f, text);
  } else {
    json j{{"kind", "digits"},
           {"spec", {{"a_num", f.a_num}, {"a_den", f.a_den}, {"base", f.base},
                     {"d", f.d}, {"start", start}, {"length", length}}},
           {"precision_bits", prec},
           {"digits", text}};
    stamp(j, f);
    emit(f, j.dump(2));
  }
  return 0;
}

int emit_report(const CommonFlags& f, json j, const std::string& csv_key = "") {
  stamp(j, f);
  if (f.format == "csv" && !csv_key.empty() && j.contains(csv_key)) {
    std::string text = "n,p_n\n";
    const auto& vals = j[csv_key];
    for (size_t i = 0; i < vals.size(); ++i)
      text += std::to_string(i + 1) + "," + vals[i].dump() + "\n";
    emit(f, text);
  } else {
    emit(f, j.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leading-digit sequences of a^(n^d), factor complexity, and "
               "torus region counting"};
  app.require_subcommand(1);

  CommonFlags f;
  uint64_t start = 1, length = 100, count = 10000, n_max = 10000;
  size_t max_len = 0;
  unsigned theta = 20;
  int64_t k = 1, k_lo = 1, k_hi = 0;
  int max_degree = 3, required_run = 0;
  int64_t cap = 100000;
  std::string suite = "all";

  auto* digits = app.add_subcommand("digits", "generate the digit word");
  add_spec_flags(digits, f);
  digits->add_option("--start", start, "first index n");
  digits->add_option("--len", length, "number of digits")->required();
  add_output_flags(digits, f);

  auto* complexity =
      app.add_subcommand("complexity", "factor complexity profile p(1..)");
  add_spec_flags(complexity, f);
  complexity->add_option("--len", length, "prefix length (2x is generated "
                         "for the stabilization check)")->required();
  complexity->add_option("--max-len", max_len, "largest factor length");
  complexity->add_option("--theta", theta,
                         "report p(n) only for n <= len/theta");
  add_output_flags(complexity, f);

  auto* fit = app.add_subcommand(
      "fit", "exact polynomial fit of the complexity profile");
  add_spec_flags(fit, f);
  fit->add_option("--len", length, "prefix length")->required();
  fit->add_option("--k-lo", k_lo, "window lower end");
  fit->add_option("--k-hi", k_hi, "window upper end (default len/20)");
  fit->add_option("--max-degree", max_degree, "maximum degree tried");
  fit->add_option("--required-run", required_run,
                  "zero-difference run demanded (default max(5, deg+2))");
  add_output_flags(fit, f);

  auto* regions = app.add_subcommand(
      "regions", "exact region count N'(k) and its closed form");
  regions->add_option("--d", f.d, "dimension");
  regions->add_option("--b", f.base, "base");
  regions->add_option("--k", k, "number of surface families minus one")
      ->required();
  add_output_flags(regions, f);

  auto* stable =
      app.add_subcommand("stable", "stable-vector subgroup of the torus");
  stable->add_option("--d", f.d, "dimension");
  stable->add_option("--cap", cap, "enumeration cap on the group order");
  add_output_flags(stable, f);

  auto* orbit = app.add_subcommand(
      "orbit", "interval consistency of f^n(0) vs the closed-form orbit");
  add_spec_flags(orbit, f);
  orbit->add_option("--n-max", n_max, "orbit length checked");
  add_output_flags(orbit, f);

  auto* discrepancy = app.add_subcommand(
      "discrepancy", "star discrepancy of {zeta n^d} and tuple deviation");
  add_spec_flags(discrepancy, f);
  discrepancy->add_option("--count", count, "number of samples");
  add_output_flags(discrepancy, f);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "oracle|olympiad|lattice|regions|all");
  add_output_flags(verify, f);

  CLI11_PARSE(app, argc, argv);

  if (digits->parsed()) return run_digits(f, start, length);

  if (complexity->parsed()) {
    JsonString s;
    check(msd_complexity_report_json(f.a_num, f.a_den, f.base, f.d, length,
                                     max_len, theta, &s.ptr));
    json j = s.parse();
    bool stabilized = j["stabilized"].get<bool>();
    emit_report(f, std::move(j), "profile");
    return stabilized ? 0 : 3;
  }

  if (fit->parsed()) {
    if (k_hi == 0) k_hi = static_cast<int64_t>(length / 20);
    if (required_run == 0) required_run = std::max(5, max_degree + 2);
    JsonString s;
    check(msd_fit_report_json(f.a_num, f.a_den, f.base, f.d, length, k_lo,
                              k_hi, max_degree, required_run, &s.ptr));
    json j = s.parse();
    std::string verdict = j["verdict"].get<std::string>();
    emit_report(f, std::move(j));
    if (verdict == "matches_expected_degree") return 0;
    return verdict == "not_stabilized" ? 3 : 4;
  }

  if (regions->parsed()) {
    JsonString s;
    check(msd_regions_report_json(f.d, f.base, k, &s.ptr));
    json j = s.parse();
    if (f.format == "plain") {
      emit(f, j["count"].get<std::string>());
      return 0;
    }
    return emit_report(f, std::move(j));
  }

  if (stable->parsed()) {
    JsonString s;
    check(msd_stable_lattice_json(f.d, cap, &s.ptr));
    return emit_report(f, s.parse());
  }

  if (orbit->parsed()) {
    int ok = 0;
    check(msd_orbit_identity_check(f.a_num, f.a_den, f.base, f.d, n_max, &ok));
    json j{{"kind", "orbit"}, {"d", f.d}, {"n_max", n_max},
           {"consistent", ok == 1}};
    emit_report(f, std::move(j));
    return ok ? 0 : 1;
  }

  if (discrepancy->parsed()) {
    JsonString s;
    check(msd_discrepancy_json(f.a_num, f.a_den, f.base, f.d, count, &s.ptr));
    return emit_report(f, s.parse());
  }

  if (verify->parsed()) {
    JsonString s;
    int failures = 0;
    check(msd_verify(suite.c_str(), &s.ptr, &failures));
    json j = s.parse();
    for (const auto& c : j["criteria"])
      std::cerr << (c["status"] == "pass" ? "PASS" :
                    c["status"] == "fail" ? "FAIL" : "NOT-STABILIZED")
                << "  " << c["criterion"].get<std::string>() << ": "
                << c["detail"].get<std::string>() << "\n";
    emit_report(f, std::move(j));
    return failures == 0 ? 0 : 1;
  }

  return 2;
}
