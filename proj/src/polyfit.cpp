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

#include "msd/polyfit.hpp"

namespace msd {

DifferenceTable difference_table(const std::vector<mpz_class>& values,
                                 unsigned max_order) {
  if (values.size() <= max_order)
    throw Error(ErrorCode::kInvalidArgument,
                "difference_table: need more values than max_order");
  DifferenceTable t;
  t.rows.push_back(values);
  for (unsigned j = 0; j < max_order; ++j) {
    const auto& prev = t.rows.back();
    std::vector<mpz_class> row(prev.size() - 1);
    for (size_t i = 0; i + 1 < prev.size(); ++i) row[i] = prev[i + 1] - prev[i];
    t.rows.push_back(std::move(row));
  }
  return t;
}

mpq_class PolyFit::evaluate(const mpq_class& k) const {
  mpq_class acc = 0;
  for (size_t j = coefficients.size(); j-- > 0;) acc = acc * k + coefficients[j];
  return acc;
}

unsigned expected_degree(unsigned d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "expected_degree: d >= 1");
  return d * (d + 1) / 2;
}

namespace {

// Multiply the polynomial `poly` (monomial coefficients) by (x - root).
void multiply_linear(std::vector<mpq_class>& poly, long root) {
  poly.push_back(0);
  for (size_t j = poly.size(); j-- > 1;)
    poly[j] = poly[j - 1] - poly[j] * root;
  poly[0] = poly[0] * mpq_class(-root);
}

}  // namespace

std::optional<PolyFit> detect(const std::vector<mpz_class>& values, long k_lo,
                              unsigned max_degree, unsigned required_run) {
  if (required_run < max_degree + 2)
    throw Error(ErrorCode::kInvalidArgument,
                "detect: required_run must be >= max_degree + 2");
  if (values.size() < required_run + 1) return std::nullopt;

  DifferenceTable table = difference_table(values, max_degree + 1);
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    const auto& row = table.rows[deg + 1];
    // Greedy tail scan: longest suffix of zeros.
    size_t zeros = 0;
    for (size_t i = row.size(); i-- > 0 && row[i] == 0;) ++zeros;
    if (zeros < required_run) continue;

    size_t i0 = row.size() - zeros;  // first index of the zero run
    // values[i0 ..] is fitted exactly by a polynomial of degree <= deg.
    long onset = k_lo + static_cast<long>(i0);

    // Newton form at nodes onset, onset+1, ...:
    //   P(k) = sum_j delta_j / j! * (k - onset)(k - onset - 1)...
    std::vector<mpq_class> coeffs{0};
    std::vector<mpq_class> falling{1};  // product of (k - onset - i), i < j
    mpq_class factorial = 1;
    for (unsigned j = 0; j <= deg; ++j) {
      if (j > 0) {
        multiply_linear(falling, onset + static_cast<long>(j) - 1);
        factorial *= static_cast<long>(j);
      }
      mpq_class delta(table.rows[j][i0]);
      mpq_class scale = delta / factorial;
      if (coeffs.size() < falling.size()) coeffs.resize(falling.size(), 0);
      for (size_t t = 0; t < falling.size(); ++t)
        coeffs[t] += scale * falling[t];
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();

    PolyFit fit;
    fit.degree = static_cast<unsigned>(coeffs.size() - 1);
    fit.coefficients = std::move(coeffs);
    fit.onset = onset;
    fit.window_hi = k_lo + static_cast<long>(values.size()) - 1;
    // Exactness check over the whole witness window.
    for (size_t i = i0; i < values.size(); ++i) {
      mpq_class v = fit.evaluate(mpq_class(k_lo + static_cast<long>(i)));
      if (v != mpq_class(values[i]))
        throw Error(ErrorCode::kInternal, "detect: witness re-evaluation failed");
    }
    return fit;
  }
  return std::nullopt;
}

}  // namespace msd
