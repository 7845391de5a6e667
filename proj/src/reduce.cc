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

#include "spdlab/reduce.h"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "spdlab/error.h"
#include "spdlab/io.h"
#include "spdlab/parallel.h"
#include "spdlab/rng.h"

namespace spdlab {
namespace {

uint32_t factor_degree(const Polynomial& q) { return checks(q).degree.value_or(0); }

uint64_t floor_eps(double x) { return static_cast<uint64_t>(std::floor(x + 1e-9)); }

// Degree-1 factors x_v (repeated by exponent) spelling out monomial h, with c
// folded into the first one.
std::vector<Polynomial> monomial_factors(const Depth4Circuit& c, const Monomial& h,
                                         FieldElement coef) {
  std::vector<Polynomial> out;
  const FieldSpec& f = c.field();
  for (const auto& [var, exp] : h.entries()) {
    for (uint32_t e = 0; e < exp; ++e) {
      FieldElement cc = out.empty() ? coef : f.one();
      out.push_back(Polynomial::monomial(f, c.nvars(), Monomial::variable(var), cc));
    }
  }
  if (out.empty()) out.push_back(Polynomial::constant(f, c.nvars(), coef));
  return out;
}

Polynomial product_checked(const Polynomial& a, const Polynomial& b, uint64_t term_cap) {
  if (a.sparsity() * b.sparsity() > term_cap) {
    throw Error(ErrorCode::kExpansionTooLarge, "merged factor exceeds the term cap");
  }
  return a * b;
}

}  // namespace

Depth4Circuit group_to_bilayer(const Depth4Circuit& c, uint32_t a, uint32_t b,
                               uint64_t term_cap) {
  const CircuitStats st = stats(c);
  if (a == 0) throw Error(ErrorCode::kInfeasibleTarget, "bottom bound a must be positive");
  if (st.a > a) {
    throw Error(ErrorCode::kInfeasibleTarget,
                "factor of degree " + std::to_string(st.a) + " exceeds a=" + std::to_string(a));
  }
  const uint64_t need = (st.degree + a - 1) / a;
  if (b < need) {
    throw Error(ErrorCode::kInfeasibleTarget, "b=" + std::to_string(b) + " < ceil(d/a)=" +
                                                  std::to_string(need));
  }
  Depth4Circuit out(c.field(), c.nvars());
  for (const auto& gate : c.gates()) {
    if (gate.factors.size() <= b) {
      out.add_gate(gate);
      continue;
    }
    // Ascending by degree, stable in original position.
    std::vector<std::pair<uint32_t, Polynomial>> items;
    for (const auto& q : gate.factors) items.emplace_back(factor_degree(q), q);
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    while (items.size() > b) {
      const uint32_t d = items[0].first + items[1].first;
      if (d > a) {
        throw Error(ErrorCode::kInfeasibleTarget,
                    "cannot merge below a=" + std::to_string(a) + " with b=" + std::to_string(b));
      }
      Polynomial merged = product_checked(items[0].second, items[1].second, term_cap);
      items.erase(items.begin(), items.begin() + 2);
      auto pos = std::upper_bound(items.begin(), items.end(), d,
                                  [](uint32_t v, const auto& it) { return v < it.first; });
      items.insert(pos, {d, std::move(merged)});
    }
    ProductGate g;
    for (auto& it : items) g.factors.push_back(std::move(it.second));
    out.add_gate(std::move(g));
  }
  return out;
}

std::vector<ProductGate> split_high_low(const Depth4Circuit& c, const ProductGate& gate,
                                        uint32_t t, uint64_t term_cap) {
  std::vector<const Polynomial*> high, low;
  for (const auto& q : gate.factors) (factor_degree(q) >= t ? high : low).push_back(&q);
  if (high.empty()) return {gate};
  uint64_t estimate = 1;
  for (const Polynomial* q : high) {
    estimate *= q->sparsity();
    if (estimate > term_cap) {
      throw Error(ErrorCode::kExpansionTooLarge, "high-degree product exceeds the term cap");
    }
  }
  Polynomial h = Polynomial::constant(c.field(), c.nvars(), c.field().one());
  for (const Polynomial* q : high) h = h * *q;
  std::vector<ProductGate> out;
  out.reserve(h.sparsity());
  for (const auto& [m, coef] : h.terms()) {
    ProductGate g;
    g.factors = monomial_factors(c, m, coef);
    for (const Polynomial* q : low) g.factors.push_back(*q);
    out.push_back(std::move(g));
  }
  return out;
}

Depth4Circuit split_circuit(const Depth4Circuit& c, uint32_t t, uint64_t term_cap) {
  auto parts = parallel_map<std::vector<ProductGate>>(
      c.gates().size(), [&](size_t i) { return split_high_low(c, c.gates()[i], t, term_cap); });
  Depth4Circuit out(c.field(), c.nvars());
  for (auto& gates : parts) {
    for (auto& g : gates) out.add_gate(std::move(g));
  }
  return out;
}

ProductGate sorted_factors(const ProductGate& gate) {
  std::vector<std::pair<uint32_t, std::string>> keys;
  std::vector<size_t> order(gate.factors.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& q : gate.factors) keys.emplace_back(factor_degree(q), format_polynomial(q));
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (keys[x].first != keys[y].first) return keys[x].first > keys[y].first;
    return keys[x].second < keys[y].second;
  });
  ProductGate out;
  for (size_t i : order) out.factors.push_back(gate.factors[i]);
  return out;
}

uint64_t scale_value(uint64_t n, uint32_t i, uint32_t m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "scale count m must be positive");
  mpz_class power, root;
  mpz_ui_pow_ui(power.get_mpz_t(), n, i);
  mpz_root(root.get_mpz_t(), power.get_mpz_t(), m);
  return root.get_ui();
}

bool ThresholdProfile::is_bad(uint32_t i) const {
  return std::binary_search(bad.begin(), bad.end(), i);
}

ThresholdProfile profile_degrees(std::vector<uint32_t> degrees, uint32_t m, double eps,
                                 bool pad_to_n) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "scale count m must be positive");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  ThresholdProfile pr;
  pr.m = m;
  pr.eps = eps;
  pr.n = std::accumulate(degrees.begin(), degrees.end(), uint64_t{0});
  if (pad_to_n && degrees.size() < pr.n) degrees.resize(pr.n, 0);
  pr.degrees = std::move(degrees);
  std::vector<uint64_t> prefix(pr.degrees.size() + 1, 0);
  for (size_t j = 0; j < pr.degrees.size(); ++j) prefix[j + 1] = prefix[j] + pr.degrees[j];
  uint64_t prev = 0;  // |S_0| = 0
  for (uint32_t i = 1; i <= m; ++i) {
    const uint64_t k = scale_value(pr.n, i, m);
    const uint64_t upto = std::min<uint64_t>(k, pr.degrees.size());
    const uint64_t from = std::min<uint64_t>(prev, pr.degrees.size());
    pr.scales.push_back(k);
    pr.dsums.push_back(upto > from ? prefix[upto] - prefix[from] : 0);
    if (static_cast<double>(pr.dsums.back()) >= eps * static_cast<double>(pr.n)) {
      pr.bad.push_back(i);
    }
    prev = std::max(prev, k);
  }
  return pr;
}

ThresholdProfile profile(const ProductGate& gate, uint32_t m, double eps, bool pad_to_n) {
  std::vector<uint32_t> degrees;
  for (const auto& q : gate.factors) degrees.push_back(factor_degree(q));
  return profile_degrees(std::move(degrees), m, eps, pad_to_n);
}

CommonK choose_common_index(std::vector<ThresholdProfile> profiles, uint64_t k_lo,
                            uint64_t k_hi) {
  CommonK out;
  if (profiles.empty()) throw Error(ErrorCode::kNoGoodIndex, "no gates");
  out.m = profiles.front().m;
  std::set<uint32_t> bad_union;
  for (const auto& pr : profiles) {
    if (pr.m != out.m) throw Error(ErrorCode::kInvalidArgument, "profiles disagree on m");
    bad_union.insert(pr.bad.begin(), pr.bad.end());
  }
  out.bad_union_size = bad_union.size();
  const auto& scales = profiles.front().scales;
  for (uint32_t i = 1; i <= out.m; ++i) {
    const uint64_t k = scales[i - 1];
    if (k < k_lo || k > k_hi || bad_union.count(i)) continue;
    out.i = i;
    out.k = k;
    out.profiles = std::move(profiles);
    return out;
  }
  throw Error(ErrorCode::kNoGoodIndex, "no scale index is good for every gate within k in [" +
                                           std::to_string(k_lo) + ", " + std::to_string(k_hi) +
                                           "]");
}

CommonK choose_common_k(const Depth4Circuit& c, double eps, uint64_t k_lo, uint64_t k_hi,
                        bool pad_to_n) {
  const CircuitStats st = stats(c);
  if (!st.homogeneous) throw Error(ErrorCode::kInvalidArgument, "circuit is not homogeneous");
  if (!(eps > 0 && eps < 1)) throw Error(ErrorCode::kInvalidArgument, "eps must lie in (0,1)");
  const auto m = static_cast<uint32_t>(std::ceil(2.0 * static_cast<double>(st.r) / eps - 1e-9));
  std::vector<ThresholdProfile> profiles;
  for (const auto& gate : c.gates()) profiles.push_back(profile(gate, m, eps, pad_to_n));
  return choose_common_index(std::move(profiles), k_lo, k_hi);
}

uint64_t max_degree_sum(const ProductGate& gate, size_t count) {
  std::vector<uint32_t> d;
  for (const auto& q : gate.factors) d.push_back(factor_degree(q));
  std::sort(d.begin(), d.end(), std::greater<>());
  d.resize(std::min(count, d.size()));
  return std::accumulate(d.begin(), d.end(), uint64_t{0});
}

bool avg_bottom_fanin_check(const Depth4Circuit& c, double eps, double t) {
  for (const auto& gate : c.gates()) {
    uint64_t n = 0;
    for (const auto& q : gate.factors) n += factor_degree(q);
    const double budget = eps * static_cast<double>(n);
    const uint64_t count = floor_eps(budget / t);
    if (static_cast<double>(max_degree_sum(gate, count)) > budget + 1e-9) return false;
  }
  return true;
}

SpsDecomposition sps_decompose(const Depth4Circuit& c, const ProductGate& gate, double eps,
                               uint32_t m, uint32_t i, uint64_t term_cap) {
  if (i < 1 || i > m) throw Error(ErrorCode::kInvalidArgument, "scale index out of range");
  const ProductGate sorted = sorted_factors(gate);
  SpsDecomposition out;
  for (const auto& q : sorted.factors) out.n += factor_degree(q);
  out.k = scale_value(out.n, i, m);
  const uint64_t h_count =
      std::min<uint64_t>(i == 1 ? 0 : scale_value(out.n, i - 1, m), sorted.factors.size());
  out.group_threshold = eps * static_cast<double>(out.n) / static_cast<double>(out.k);

  ProductGate high, rest;
  high.factors.assign(sorted.factors.begin(), sorted.factors.begin() + h_count);
  rest.factors.assign(sorted.factors.begin() + h_count, sorted.factors.end());

  Polynomial h = Polynomial::constant(c.field(), c.nvars(), c.field().one());
  for (const auto& q : high.factors) h = product_checked(h, q, term_cap);

  out.circuit = Depth4Circuit(c.field(), c.nvars());
  for (const auto& [mono, coef] : h.terms()) {
    std::vector<Polynomial> pieces = monomial_factors(c, mono, coef);
    pieces.insert(pieces.end(), rest.factors.begin(), rest.factors.end());
    ProductGate g;
    std::optional<Polynomial> group;
    uint32_t group_degree = 0;
    for (auto& q : pieces) {
      const uint32_t d = factor_degree(q);
      if (static_cast<double>(d) > out.group_threshold + 1e-9) {
        g.factors.push_back(std::move(q));
        continue;
      }
      group = group ? product_checked(*group, q, term_cap) : std::move(q);
      group_degree += d;
      if (static_cast<double>(group_degree) >= out.group_threshold - 1e-9) {
        g.factors.push_back(std::move(*group));
        group.reset();
        group_degree = 0;
      }
    }
    if (group) g.factors.push_back(std::move(*group));
    out.circuit.add_gate(std::move(g));
  }
  return out;
}

const char* verdict_name(EquivalenceVerdict::Kind kind) {
  switch (kind) {
    case EquivalenceVerdict::Kind::kEqual: return "Equal";
    case EquivalenceVerdict::Kind::kUnequalWitness: return "UnequalWitness";
    case EquivalenceVerdict::Kind::kProbablyEqual: return "ProbablyEqual";
  }
  return "?";
}

EquivalenceVerdict equivalent(const Depth4Circuit& a, const Depth4Circuit& b, uint32_t trials,
                              uint64_t seed, const EquivalenceOptions& options) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) {
    throw Error(ErrorCode::kFieldMismatch, "circuits over different fields or variable sets");
  }
  const FieldSpec& f = a.field();
  EquivalenceVerdict v;
  v.sample_field = f;
  const uint32_t degree = std::max(stats(a).degree, stats(b).degree);

  const bool exact_ok = !options.force_random && projected_terms(a) <= options.term_cap &&
                        projected_terms(b) <= options.term_cap;
  bool known_unequal = false;
  if (exact_ok) {
    v.exact = true;
    if (expand(a, options.term_cap) == expand(b, options.term_cap)) {
      v.kind = EquivalenceVerdict::Kind::kEqual;
      return v;
    }
    known_unequal = true;
  }

  FieldSpec sample = f;
  bool extended = false;
  if (f.q() <= degree) {
    if (!options.allow_extension || !f.is_prime_field()) {
      if (known_unequal) {
        v.kind = EquivalenceVerdict::Kind::kUnequalWitness;
        return v;
      }
      throw Error(ErrorCode::kFieldTooSmall,
                  f.name() + " has at most " + std::to_string(degree) + " elements");
    }
    uint32_t e = 1;
    uint64_t q = f.p();
    while (q <= degree) {
      q *= f.p();
      ++e;
    }
    sample = construct_field(f.p(), e);
    extended = true;
  }
  v.sample_field = sample;

  SplitMix64 rng(seed, 0x5a);
  std::vector<FieldElement> point(a.nvars());
  for (uint32_t trial = 0; trial < trials; ++trial) {
    for (auto& x : point) x = {static_cast<uint32_t>(rng.below(sample.q()))};
    const FieldElement ya = extended ? eval_in(a, sample, point) : eval(a, point);
    const FieldElement yb = extended ? eval_in(b, sample, point) : eval(b, point);
    v.trials_run = trial + 1;
    if (ya != yb) {
      v.kind = EquivalenceVerdict::Kind::kUnequalWitness;
      v.point = point;
      return v;
    }
  }
  if (known_unequal) {
    v.kind = EquivalenceVerdict::Kind::kUnequalWitness;
    return v;
  }
  v.kind = EquivalenceVerdict::Kind::kProbablyEqual;
  v.failure_bound =
      std::pow(static_cast<double>(degree) / static_cast<double>(sample.q()), trials);
  return v;
}

ReductionReport make_report(const Depth4Circuit& in, const Depth4Circuit& out, double threshold,
                            const EquivalenceVerdict& verdict) {
  ReductionReport r;
  r.input = stats(in);
  r.output = stats(out);
  r.threshold = threshold;
  r.blowup = r.input.r == 0 ? 0.0
                            : static_cast<double>(r.output.r) / static_cast<double>(r.input.r);
  r.verdict = verdict;
  return r;
}

}  // namespace spdlab
