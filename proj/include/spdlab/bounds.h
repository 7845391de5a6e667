// Copyright 2026 The spdlab Authors.
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

#ifndef SPDLAB_BOUNDS_H_
#define SPDLAB_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spdlab {

enum class LogBase { kTwo, kE };

const char* log_base_name(LogBase b);
// Accepts "2" or "e"; throws InvalidArgument otherwise.
LogBase parse_log_base(const std::string& s);

// Every symbol feeding the closed-form bounds. Unused fields stay 0.
struct BoundInputs {
  double n = 0;      // degree
  double N = 0;      // variable count
  double t = 0;      // bottom fan-in / threshold
  double k = 0;      // derivative order
  double ell = 0;    // shift degree
  double d = 0;      // factor count (lowdeg) or distance (cm)
  double D = 0;      // degree-sum bound
  double r = 0;      // top fan-in / derivative order in the cm bound
  double s = 0;      // size
  double u = 0;      // factor degree bound
  double z = 0;      // factors per gate
  double m = 0;      // scale count in the sps bound
  double eps = 0;
  double alpha = 0;
  double p = 0;      // S_p degree bound
  // log2 of the distinct-derivative count in the cm bound (the count itself
  // can overflow a double).
  double log2_s_distinct = 0;
  LogBase log_base = LogBase::kTwo;
};

struct BoundReport {
  std::string name;
  BoundInputs inputs;
  // Exact value when every quantity is integral and the result is below the
  // digit cap.
  std::optional<mpq_class> exact;
  // log2 of the value from the log-scale path (lgamma or direct sums);
  // -inf for zero, +inf for an unbounded ratio.
  double log2_value = 0;
  // Extra scalar for bounds that report one (the normalized ratio of E).
  std::optional<double> normalized;
  // Hypothesis or range violations; empty when every check passed.
  std::vector<std::string> flags;
  // Informational key=value or marker entries (never violations).
  std::vector<std::string> notes;

  // log2_value converted to inputs.log_base.
  double log_value() const;
  bool has_flag(const std::string& f) const;
};

inline constexpr uint64_t kDigitCap = 100'000;

// C(a, b); 1 when b == 0, 0 when b < 0 or b > a.
mpz_class binom_exact(int64_t a, int64_t b);
// log2 C(a, b) for real-valued integral a, b; -inf when the binomial is 0.
long double binom_log2(long double a, long double b);

// log2 of a positive rational (exact to double precision).
double log2_of(const mpq_class& q);
// |a - b| <= 1e-10 * max(1, |a|, |b|).
bool agrees_10_digits(double a, double b);

// C(d+k-1, k) * C(N+D-k+ell, N).
BoundReport lowdeg_bound(const BoundInputs& in);

// s^(k n^(-1/m)) * C(k/eps + k - 1, k) * C(N + 4 eps n - k + ell, N), with an
// optional leading factor r. Real arguments of binomials are floored.
BoundReport sps_gate_bound(const BoundInputs& in, bool times_r = false);

// Fills k = floor(n / 2t) and ell = ceil(5 n^2 t / log n) (log in in.log_base).
BoundInputs gkss_auto_params(BoundInputs in);
// log^2 n <= t <= n/100 in in.log_base.
bool gkss_in_range(const BoundInputs& in);

// (1/n^3) * C(n^2 + ell + n - k, n^2). Strict mode throws RangeViolation
// outside the range; otherwise the report is flagged.
BoundReport gkss_perm_lower(const BoundInputs& in, bool strict = false);

// E = (1/n^3) C(n^2+ell+n-k, n^2) / (C(floor(alpha n/t), k) C(n^2+ell+k(t-1), n^2))
// and normalized = log E / ((n/t) log n).
BoundReport gkss_ratio_E(const BoundInputs& in, bool strict = false);

// Lower bound on the top fan-in s' from r-th order derivatives whose leading
// monomials are pairwise d apart (in.d), s = 2^log2_s_distinct:
//   s (1 - 1/N^2) / (C(z+r, r) e^(N(ru - r)/ell)).
// Flags "ell_hypothesis_violated" unless ell <= N d / (2 ln(s N^2)) and
// "r_exceeds_z" unless r <= z; notes ell_max and the ratio (ru - r)^2 / ell
// as "growth_ratio=<value>".
BoundReport cm_topfanin_bound(const BoundInputs& in);

// Parameters of the P_{t,n} top fan-in argument: p = 1, alpha = 0.9, N = n^2,
// u = floor(t/20), z = ceil(c n / t), r = k = ceil(2n/t),
// ell = floor(n^2 t / ln n), s = n^(0.2 ceil(n/t)), d = 0.9n - 2.7n/t.
// Range log^2 n <= t <= n/40 (in log_base); strict mode throws
// RangeViolation, otherwise "range_violation" is flagged by the consumer via
// mainthm0_in_range.
BoundInputs mainthm0_preset(double n, double t, double c = 1.0, bool strict = true,
                            LogBase log_base = LogBase::kTwo);
bool mainthm0_in_range(double n, double t, LogBase log_base = LogBase::kTwo);

// Reference top fan-in N^(n/t) (constant in the exponent taken as 1).
BoundReport tavenas_topfanin(double n, double t, double N, LogBase log_base = LogBase::kTwo);

}  // namespace spdlab

#endif  // SPDLAB_BOUNDS_H_
