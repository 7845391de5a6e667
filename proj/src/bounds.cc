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

#include "spdlab/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "spdlab/error.h"

namespace spdlab {
namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog10Of2 = 0.30102999566398119521;
// Binomials with at most this many factors are summed term by term.
constexpr long double kDirectSumLimit = 64;

bool integral(double x) { return std::isfinite(x) && std::floor(x) == x && std::fabs(x) < 9e15; }

// floor / ceil that absorb representation noise in real-valued parameters
// such as "alpha m", which stands for floor(alpha m).
double floor_eps(double x) { return std::floor(x + 1e-9); }
double ceil_eps(double x) { return std::ceil(x - 1e-9); }

long double log_in(long double x, LogBase b) {
  return b == LogBase::kTwo ? std::log2(x) : std::log(x);
}

std::string fmt_double(const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.10g", key, v);
  return buf;
}

bool within_digit_cap(double log2v) {
  return !std::isfinite(log2v) || log2v * kLog10Of2 <= static_cast<double>(kDigitCap);
}

// log2 C(a1, m) - log2 C(a2, m), summing log2(x / (x - m)) over the gap
// when the tops are close; this avoids cancelling two huge lgamma values.
long double log2_binom_diff(long double a1, long double a2, long double m) {
  if (a1 >= m && a2 >= m && std::fabs(a1 - a2) <= 1e6L && m > 0) {
    const long double lo = std::min(a1, a2), hi = std::max(a1, a2);
    long double sum = 0;
    for (long double x = lo + 1; x <= hi; x += 1) sum -= std::log1p(-m / x);
    sum /= kLn2;
    return a1 >= a2 ? sum : -sum;
  }
  return binom_log2(a1, m) - binom_log2(a2, m);
}

void finish(BoundReport& rep) {
  if (rep.exact && *rep.exact != 0 && !agrees_10_digits(log2_of(*rep.exact), rep.log2_value)) {
    rep.flags.push_back("exact_log_mismatch");
  }
  if (!rep.exact) rep.notes.push_back("log_scale_only");
}

}  // namespace

const char* log_base_name(LogBase b) { return b == LogBase::kTwo ? "2" : "e"; }

LogBase parse_log_base(const std::string& s) {
  if (s == "2") return LogBase::kTwo;
  if (s == "e") return LogBase::kE;
  throw Error(ErrorCode::kInvalidArgument, "log base must be 2 or e, got '" + s + "'");
}

double BoundReport::log_value() const {
  return inputs.log_base == LogBase::kTwo ? log2_value
                                          : static_cast<double>(log2_value * kLn2);
}

bool BoundReport::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

mpz_class binom_exact(int64_t a, int64_t b) {
  if (b < 0 || a < b) return 0;
  if (b == 0) return 1;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

long double binom_log2(long double a, long double b) {
  if (b < 0 || b > a) return -std::numeric_limits<long double>::infinity();
  b = std::min(b, a - b);
  if (b == 0) return 0;
  if (b <= kDirectSumLimit) {
    long double s = 0;
    for (long double i = 1; i <= b; i += 1) s += std::log2((a - b + i) / i);
    return s;
  }
  return (std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1)) / kLn2;
}

double log2_of(const mpq_class& q) {
  if (q == 0) return -kInf;
  auto log2z = [](const mpz_class& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return static_cast<double>(exp) + std::log2(std::fabs(mant));
  };
  return log2z(q.get_num()) - log2z(q.get_den());
}

bool agrees_10_digits(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= 1e-10 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

BoundReport lowdeg_bound(const BoundInputs& in) {
  BoundReport rep;
  rep.name = "lowdeg";
  rep.inputs = in;
  const double a1 = floor_eps(in.d + in.k - 1), b1 = floor_eps(in.k);
  const double a2 = floor_eps(in.N + in.D - in.k + in.ell), b2 = floor_eps(in.N);
  for (double v : {in.d, in.k, in.N, in.D, in.ell}) {
    if (!integral(v)) {
      rep.flags.push_back("nonintegral_floored");
      break;
    }
  }
  if (in.k > in.d) rep.flags.push_back("k_exceeds_d");
  rep.log2_value = static_cast<double>(binom_log2(a1, b1) + binom_log2(a2, b2));
  if (within_digit_cap(rep.log2_value)) {
    rep.exact = mpq_class(binom_exact(static_cast<int64_t>(a1), static_cast<int64_t>(b1)) *
                          binom_exact(static_cast<int64_t>(a2), static_cast<int64_t>(b2)));
  }
  finish(rep);
  return rep;
}

BoundReport sps_gate_bound(const BoundInputs& in, bool times_r) {
  if (in.m < 1 || in.eps <= 0 || in.n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sps bound needs m >= 1, eps > 0, n >= 1");
  }
  BoundReport rep;
  rep.name = times_r ? "sps_gate_times_r" : "sps_gate";
  rep.inputs = in;
  const double a1 = floor_eps(in.k / in.eps + in.k - 1), b1 = floor_eps(in.k);
  const double a2 = floor_eps(in.N + 4 * in.eps * in.n - in.k + in.ell), b2 = floor_eps(in.N);
  const long double exponent =
      static_cast<long double>(in.k) * std::pow(static_cast<long double>(in.n), -1.0L / in.m);
  long double lg = binom_log2(a1, b1) + binom_log2(a2, b2);
  if (in.s > 0) lg += exponent * std::log2(static_cast<long double>(in.s));
  if (times_r) lg += std::log2(static_cast<long double>(in.r));
  rep.log2_value = static_cast<double>(lg);

  // Exact when n has an exact integer m-th root dividing k.
  std::optional<mpz_class> power;
  if (integral(in.n) && integral(in.m) && integral(in.k) && integral(in.s)) {
    mpz_class root;
    const mpz_class nn(static_cast<unsigned long>(in.n));
    if (mpz_root(root.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(in.m)) != 0 &&
        mpz_divisible_ui_p(mpz_class(static_cast<unsigned long>(in.k)).get_mpz_t(),
                           root.get_ui()) != 0) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), mpz_class(static_cast<unsigned long>(in.s)).get_mpz_t(),
                 static_cast<unsigned long>(in.k) / root.get_ui());
      power = pw;
    }
  }
  if (power && within_digit_cap(rep.log2_value) && (!times_r || integral(in.r))) {
    mpz_class v = *power * binom_exact(static_cast<int64_t>(a1), static_cast<int64_t>(b1)) *
                  binom_exact(static_cast<int64_t>(a2), static_cast<int64_t>(b2));
    if (times_r) v *= static_cast<unsigned long>(in.r);
    rep.exact = mpq_class(v);
  }
  finish(rep);
  return rep;
}

BoundInputs gkss_auto_params(BoundInputs in) {
  in.k = std::floor(in.n / (2 * in.t));
  in.ell = ceil_eps(static_cast<double>(5.0L * in.n * in.n * in.t / log_in(in.n, in.log_base)));
  return in;
}

bool gkss_in_range(const BoundInputs& in) {
  const long double lg = log_in(in.n, in.log_base);
  return lg * lg <= in.t && 100 * in.t <= in.n;
}

BoundReport gkss_perm_lower(const BoundInputs& in, bool strict) {
  const bool in_range = gkss_in_range(in);
  if (strict && !in_range) {
    throw Error(ErrorCode::kRangeViolation, "gkss bound needs log^2 n <= t <= n/100");
  }
  BoundReport rep;
  rep.name = "gkss_perm";
  rep.inputs = in;
  if (!in_range) rep.flags.push_back("range_violation");
  const long double nn = static_cast<long double>(in.n) * in.n;
  const long double top = nn + in.ell + in.n - in.k;
  rep.log2_value = static_cast<double>(binom_log2(top, nn) - 3 * std::log2((long double)in.n));
  if (within_digit_cap(rep.log2_value)) {
    const int64_t n = static_cast<int64_t>(in.n);
    mpq_class v(binom_exact(static_cast<int64_t>(top), n * n), mpz_class(n) * n * n);
    v.canonicalize();
    rep.exact = v;
  }
  finish(rep);
  return rep;
}

BoundReport gkss_ratio_E(const BoundInputs& in, bool strict) {
  const bool in_range = gkss_in_range(in);
  if (strict && !in_range) {
    throw Error(ErrorCode::kRangeViolation, "gkss ratio needs log^2 n <= t <= n/100");
  }
  BoundReport rep;
  rep.name = "gkss_ratio_E";
  rep.inputs = in;
  if (!in_range) rep.flags.push_back("range_violation");
  const long double nn = static_cast<long double>(in.n) * in.n;
  const long double a1 = nn + in.ell + in.n - in.k;
  const long double a2 = nn + in.ell + in.k * (in.t - 1);
  const double small_top = floor_eps(in.alpha * in.n / in.t);
  const long double small = binom_log2(small_top, in.k);
  if (std::isinf(small)) {
    rep.flags.push_back("denominator_zero");
    rep.log2_value = kInf;
    rep.normalized = kInf;
    return rep;
  }
  const long double lg =
      log2_binom_diff(a1, a2, nn) - 3 * std::log2((long double)in.n) - small;
  rep.log2_value = static_cast<double>(lg);
  rep.normalized = static_cast<double>(lg / ((in.n / in.t) * std::log2((long double)in.n)));
  const long double size_estimate = binom_log2(a1, nn) + binom_log2(a2, nn);
  if (within_digit_cap(static_cast<double>(size_estimate))) {
    const int64_t n = static_cast<int64_t>(in.n);
    mpq_class v(binom_exact(static_cast<int64_t>(a1), n * n),
                mpz_class(n) * n * n *
                    binom_exact(static_cast<int64_t>(small_top), static_cast<int64_t>(in.k)) *
                    binom_exact(static_cast<int64_t>(a2), n * n));
    v.canonicalize();
    rep.exact = v;
  }
  finish(rep);
  return rep;
}

BoundReport cm_topfanin_bound(const BoundInputs& in) {
  BoundReport rep;
  rep.name = "cm_topfanin";
  rep.inputs = in;
  const long double N = in.N;
  const long double excess = static_cast<long double>(in.r) * in.u - in.r;
  long double lg = in.log2_s_distinct + std::log2(1 - 1 / (N * N)) -
                   binom_log2(floor_eps(in.z + in.r), floor_eps(in.r));
  if (excess != 0) lg -= in.ell > 0 ? N * excess / (in.ell * kLn2)
                                    : std::numeric_limits<long double>::infinity();
  rep.log2_value = static_cast<double>(lg);

  const long double ln_sN2 = in.log2_s_distinct * kLn2 + 2 * std::log(N);
  const long double ell_max = N * in.d / (2 * ln_sN2);
  if (!(in.ell <= ell_max)) rep.flags.push_back("ell_hypothesis_violated");
  if (in.r > in.z) rep.flags.push_back("r_exceeds_z");
  rep.notes.push_back(fmt_double("ell_max", static_cast<double>(ell_max)));
  rep.notes.push_back(
      fmt_double("growth_ratio", in.ell > 0 ? static_cast<double>(excess * excess / in.ell) : kInf));

  if (excess == 0 && integral(in.log2_s_distinct) && in.log2_s_distinct >= 0 && integral(in.N) &&
      integral(in.z) && integral(in.r) && within_digit_cap(rep.log2_value)) {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), 2, static_cast<unsigned long>(in.log2_s_distinct));
    const mpz_class n2 = mpz_class(static_cast<unsigned long>(in.N)) *
                         static_cast<unsigned long>(in.N);
    mpq_class v(s * (n2 - 1), n2 * binom_exact(static_cast<int64_t>(in.z + in.r),
                                               static_cast<int64_t>(in.r)));
    v.canonicalize();
    rep.exact = v;
  }
  finish(rep);
  return rep;
}

bool mainthm0_in_range(double n, double t, LogBase log_base) {
  const long double lg = log_in(n, log_base);
  return lg * lg <= t && 40 * t <= n;
}

BoundInputs mainthm0_preset(double n, double t, double c, bool strict, LogBase log_base) {
  if (n < 2 || t < 1) throw Error(ErrorCode::kInvalidArgument, "preset needs n >= 2, t >= 1");
  if (strict && !mainthm0_in_range(n, t, log_base)) {
    throw Error(ErrorCode::kRangeViolation, "preset needs log^2 n <= t <= n/40");
  }
  BoundInputs in;
  in.n = n;
  in.t = t;
  in.p = 1;
  in.alpha = 0.9;
  in.N = n * n;
  in.u = std::floor(t / 20);
  in.z = ceil_eps(c * n / t);
  in.r = ceil_eps(2 * n / t);
  in.k = in.r;
  in.ell = std::floor(static_cast<double>(static_cast<long double>(n) * n * t / std::log((long double)n)));
  // s = n^((1 - alpha)(p + 1) ceil(n/t)); d = alpha (n/t)(t - 3p).
  in.log2_s_distinct = 0.2 * ceil_eps(n / t) * std::log2(n);
  in.d = 0.9 * n - 2.7 * n / t;
  in.log_base = log_base;
  return in;
}

BoundReport tavenas_topfanin(double n, double t, double N, LogBase log_base) {
  BoundInputs in;
  in.n = n;
  in.t = t;
  in.N = N;
  in.log_base = log_base;
  BoundReport rep;
  rep.name = "tavenas_topfanin";
  rep.inputs = in;
  rep.notes.push_back("constant_one");
  rep.log2_value = static_cast<double>((static_cast<long double>(n) / t) * std::log2((long double)N));
  if (integral(n) && integral(t) && integral(N) && std::fmod(n, t) == 0 &&
      within_digit_cap(rep.log2_value)) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n / t));
    rep.exact = mpq_class(v);
  }
  finish(rep);
  return rep;
}

}  // namespace spdlab
