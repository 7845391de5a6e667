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

#include "spdlab/hardpoly.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spdlab/error.h"
#include "spdlab/parallel.h"
#include "spdlab/rng.h"

namespace spdlab {
namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t sat_pow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

void check_count(uint64_t count, uint64_t cap, const std::string& what) {
  if (count > cap) {
    throw Error(ErrorCode::kTooManyMonomials,
                what + " needs " + (count == kSaturated ? std::string("> 2^64")
                                                        : std::to_string(count)) +
                    " terms, cap " + std::to_string(cap));
  }
}

// Horner evaluation of the polynomial whose coefficients are the base-q
// digits of `index` (low first, `len` digits) at the element of canonical
// index `point`.
uint32_t eval_digits(const FieldSpec& f, uint64_t index, uint32_t len, uint32_t point) {
  const uint64_t q = f.q();
  std::vector<uint32_t> digits(len);
  for (uint32_t e = 0; e < len; ++e) {
    digits[e] = static_cast<uint32_t>(index % q);
    index /= q;
  }
  FieldElement acc = f.zero();
  const FieldElement x{point};
  for (uint32_t e = len; e-- > 0;) acc = f.add(f.mul(acc, x), FieldElement{digits[e]});
  return acc.value;
}

// Block part of m_f: prod_{i in positions} x_{i, f(i)}.
std::vector<uint32_t> block_variables(const HardPolyParams& params, uint64_t s,
                                      std::span<const uint32_t> positions) {
  std::vector<uint32_t> vars;
  vars.reserve(positions.size());
  for (uint32_t i : positions) {
    vars.push_back(x_index(params.n, i, sp_eval(params.index_field, params.p, s, i) + 1));
  }
  return vars;
}

}  // namespace

uint32_t x_index(uint32_t n, uint32_t i, uint32_t j) { return (i - 1) * n + (j - 1); }

HardPolyParams HardPolyParams::make(uint32_t n, uint32_t t, uint32_t p) {
  const PrimePower pp = factor_prime_power(n);
  if (pp.p == 0) {
    throw Error(ErrorCode::kNotPrimePower, "n = " + std::to_string(n) + " is not a prime power");
  }
  if (t < 1 || t > n) throw Error(ErrorCode::kInvalidArgument, "need 1 <= t <= n");
  HardPolyParams h;
  h.n = n;
  h.t = t;
  h.p = p;
  h.t_tilde = (n + t - 1) / t;
  for (uint32_t j = 0; j < h.t_tilde; ++j) {
    std::vector<uint32_t> block;
    for (uint32_t i = t * j + 1; i <= std::min(t * (j + 1), n); ++i) block.push_back(i);
    h.blocks.push_back(std::move(block));
  }
  h.index_field = construct_field(pp.p, pp.e);
  h.coeff_field = construct_field(next_prime_above(n), 1);
  return h;
}

std::span<const uint32_t> HardPolyParams::prefix(uint32_t j, uint32_t i) const {
  const auto& b = blocks.at(j);
  return std::span<const uint32_t>(b.data(), std::min<size_t>(i, b.size()));
}

uint64_t HardPolyParams::sp_size() const { return sat_pow(n, uint64_t{p} + 1); }

uint64_t HardPolyParams::tuple_count() const { return sat_pow(sp_size(), t_tilde); }

uint32_t sp_eval(const FieldSpec& f_n, uint32_t p, uint64_t s, uint32_t position) {
  return eval_digits(f_n, s, p + 1, position - 1);
}

TupleIndex tuple_from_number(const HardPolyParams& params, uint64_t u) {
  const uint64_t sp = params.sp_size();
  TupleIndex f(params.t_tilde);
  for (auto& s : f) {
    s = u % sp;
    u /= sp;
  }
  return f;
}

Polynomial gen_nw_t_n(uint32_t n, uint32_t t, uint64_t cap) {
  const HardPolyParams h = HardPolyParams::make(n, t, 0);
  const uint32_t len = n / (2 * t);
  Polynomial out(h.coeff_field, n * n);
  if (len == 0) return out;
  const uint64_t count = sat_pow(n, len);
  check_count(count, cap, "NW_{t,n}");
  std::vector<uint32_t> vars(n);
  for (uint64_t s = 0; s < count; ++s) {
    for (uint32_t i = 1; i <= n; ++i) {
      vars[i - 1] = x_index(n, i, eval_digits(h.index_field, s, len, i - 1) + 1);
    }
    out.add_term(Monomial::from_variables(vars), h.coeff_field.one());
  }
  return out;
}

Polynomial gen_nw_n(uint32_t n, uint64_t cap) {
  const uint32_t nvars = n * n + n;
  const HardPolyParams h = HardPolyParams::make(n, 1, 0);
  uint64_t total = 0;
  for (uint32_t t = 1; t <= n; ++t) {
    const uint32_t len = n / (2 * t);
    if (len > 0) total = std::min(kSaturated - 1, total + sat_pow(n, len));
  }
  check_count(total, cap, "NW_n");
  Polynomial out(h.coeff_field, nvars);
  for (uint32_t t = 1; t <= n; ++t) {
    const Polynomial nw = gen_nw_t_n(n, t, cap).with_nvars(nvars);
    out += nw.times_monomial(Monomial::variable(n * n + t - 1));
  }
  return out;
}

PInstance gen_P(uint32_t n, uint32_t t, uint32_t p, bool expand_it, uint64_t cap,
                uint32_t nvars) {
  PInstance out;
  out.params = HardPolyParams::make(n, t, p);
  const HardPolyParams& h = out.params;
  if (nvars == 0) nvars = h.nvars();
  if (nvars < h.nvars()) throw Error(ErrorCode::kArityMismatch, "P needs n^2 variables");
  const uint64_t sp = h.sp_size();
  check_count(sp, cap, "a block sum of P");

  out.circuit = Depth4Circuit(h.coeff_field, nvars);
  out.formula = LayeredFormula(h.coeff_field, nvars);
  const uint32_t root = out.formula.add_product();
  ProductGate gate;
  for (uint32_t j = 0; j < h.t_tilde; ++j) {
    Polynomial factor(h.coeff_field, nvars);
    const uint32_t sum = out.formula.add_sum();
    out.formula.add_child(root, sum);
    for (uint64_t s = 0; s < sp; ++s) {
      const std::vector<uint32_t> vars = block_variables(h, s, h.blocks[j]);
      factor.add_term(Monomial::from_variables(vars), h.coeff_field.one());
      const uint32_t prod = out.formula.add_product();
      out.formula.add_child(sum, prod);
      for (uint32_t v : vars) out.formula.add_child(prod, out.formula.add_variable(v));
    }
    gate.factors.push_back(std::move(factor));
  }
  out.circuit.add_gate(std::move(gate));

  if (expand_it) {
    const uint64_t count = h.tuple_count();
    check_count(count, cap, "expanded P");
    out.expanded = expand(out.circuit, std::max<uint64_t>(count, 1));
  }
  return out;
}

std::pair<Monomial, Monomial> index_monomials(const HardPolyParams& params,
                                              const TupleIndex& f_bar) {
  if (f_bar.size() != params.t_tilde) {
    throw Error(ErrorCode::kInvalidArgument, "tuple length must equal the block count");
  }
  const uint32_t need = 2 * params.p;
  for (uint32_t j = 0; j < params.t_tilde; ++j) {
    if (params.blocks[j].size() < need) {
      throw Error(ErrorCode::kBlockTooSmall,
                  "block " + std::to_string(j + 1) + " has " +
                      std::to_string(params.blocks[j].size()) + " < 2p = " +
                      std::to_string(need) + " elements");
    }
  }
  std::vector<uint32_t> all, prefix;
  for (uint32_t j = 0; j < params.t_tilde; ++j) {
    const auto m = block_variables(params, f_bar[j], params.blocks[j]);
    all.insert(all.end(), m.begin(), m.end());
    const auto mp = block_variables(params, f_bar[j], params.prefix(j, need));
    prefix.insert(prefix.end(), mp.begin(), mp.end());
  }
  return {Monomial::from_variables(all), Monomial::from_variables(prefix)};
}

DerivativeCheck verify_derivative_lemma(const HardPolyParams& params, const Polynomial& p_expanded,
                                        const TupleIndex& f_bar) {
  const auto [m, m_prime] = index_monomials(params, f_bar);
  DerivativeCheck check;
  check.expected = m / m_prime;
  check.derivative = derivative(p_expanded, m_prime);
  const Polynomial want = Polynomial::monomial(p_expanded.field(), p_expanded.nvars(),
                                               check.expected, p_expanded.field().one());
  check.pass = check.derivative == want;
  return check;
}

std::vector<DerivativeCheck> verify_derivative_all(const HardPolyParams& params,
                                                   const Polynomial& p_expanded) {
  const uint64_t count = params.tuple_count();
  check_count(count, kDefaultMonomialCap, "exhaustive tuple enumeration");
  return parallel_map<DerivativeCheck>(count, [&](size_t u) {
    DerivativeCheck c = verify_derivative_lemma(params, p_expanded, tuple_from_number(params, u));
    c.tuple_number = u;
    return c;
  });
}

NiceSet gen_nice_set(uint32_t n, uint32_t p, uint32_t t_tilde, double alpha, uint64_t cap) {
  const PrimePower pp = factor_prime_power(n);
  if (pp.p == 0) {
    throw Error(ErrorCode::kNotPrimePower, "n = " + std::to_string(n) + " is not a prime power");
  }
  NiceSet out;
  out.n = n;
  out.p = p;
  out.t_tilde = t_tilde;
  out.alpha = alpha;
  out.alphabet = construct_field(pp.p, pp.e * (p + 1));
  const uint64_t q = out.alphabet.q();
  if (t_tilde >= q) {
    throw Error(ErrorCode::kLengthExceedsField, "code length " + std::to_string(t_tilde) +
                                                    " must be below the alphabet size " +
                                                    std::to_string(q));
  }
  out.message_length = static_cast<uint32_t>(std::floor((1 - alpha) * t_tilde + 1e-9));
  if (out.message_length == 0) {
    throw Error(ErrorCode::kInvalidArgument, "message length floor((1 - alpha) t~) is 0");
  }
  const uint64_t count = sat_pow(q, out.message_length);
  check_count(count, cap, "nice set");
  out.codewords = parallel_map<TupleIndex>(count, [&](size_t w) {
    TupleIndex word(t_tilde);
    for (uint32_t j = 0; j < t_tilde; ++j) {
      word[j] = eval_digits(out.alphabet, w, out.message_length, j);
    }
    return word;
  });
  return out;
}

NiceSet gen_nice_set(const HardPolyParams& params, double alpha, uint64_t cap) {
  return gen_nice_set(params.n, params.p, params.t_tilde, alpha, cap);
}

uint32_t min_pairwise_distance(const std::vector<TupleIndex>& words) {
  if (words.size() < 2) return 0;
  const auto per_row = parallel_map<uint32_t>(words.size() - 1, [&](size_t i) {
    uint32_t best = std::numeric_limits<uint32_t>::max();
    for (size_t j = i + 1; j < words.size(); ++j) {
      uint32_t d = 0;
      for (size_t c = 0; c < words[i].size(); ++c) d += words[i][c] != words[j][c];
      best = std::min(best, d);
    }
    return best;
  });
  return *std::min_element(per_row.begin(), per_row.end());
}

DistanceVerdict verify_distance_lemma(const HardPolyParams& params, double alpha,
                                      uint64_t max_pairs, uint64_t seed) {
  const NiceSet nice = gen_nice_set(params, alpha);
  std::vector<Monomial> quotients;
  quotients.reserve(nice.codewords.size());
  for (const auto& w : nice.codewords) {
    const auto [m, mp] = index_monomials(params, w);
    quotients.push_back(m / mp);
  }
  DistanceVerdict v;
  v.bound = static_cast<int64_t>(std::floor(alpha * params.t_tilde + 1e-9)) *
            (static_cast<int64_t>(params.t) - 3 * static_cast<int64_t>(params.p));
  v.degenerate = v.bound <= 0;
  v.min_distance = std::numeric_limits<uint32_t>::max();
  const uint64_t w = quotients.size();
  const uint64_t total = w * (w - 1) / 2;

  struct Partial {
    uint32_t min = std::numeric_limits<uint32_t>::max();
    uint64_t pairs = 0;
    uint64_t violations = 0;
  };
  auto accumulate = [&](Partial& acc, size_t i, size_t j) {
    const uint32_t d = distance(quotients[i], quotients[j]);
    acc.min = std::min(acc.min, d);
    ++acc.pairs;
    if (static_cast<int64_t>(d) < v.bound) ++acc.violations;
  };
  std::vector<Partial> parts;
  if (total <= max_pairs) {
    parts = parallel_map<Partial>(w > 0 ? w - 1 : 0, [&](size_t i) {
      Partial acc;
      for (size_t j = i + 1; j < w; ++j) accumulate(acc, i, j);
      return acc;
    });
  } else {
    SplitMix64 rng(seed, 0);
    Partial acc;
    while (acc.pairs < max_pairs) {
      const size_t i = rng.below(w), j = rng.below(w);
      if (i != j) accumulate(acc, i, j);
    }
    parts.push_back(acc);
  }
  for (const auto& p : parts) {
    v.min_distance = std::min(v.min_distance, p.min);
    v.pairs_checked += p.pairs;
    v.violations += p.violations;
  }
  if (v.pairs_checked == 0) v.min_distance = 0;
  v.pass = v.violations == 0;
  return v;
}

BlockAgreement verify_block_agreement(const HardPolyParams& params, uint64_t cap) {
  const uint64_t sp = params.sp_size();
  check_count(sp * sp, cap * 64, "pairwise block comparison");
  BlockAgreement out;
  out.pass = true;
  out.min_difference = std::numeric_limits<uint32_t>::max();
  out.bound = static_cast<int64_t>(params.t) - params.p;
  for (uint32_t j = 0; j < params.t_tilde; ++j) {
    const auto& block = params.blocks[j];
    const int64_t bound = static_cast<int64_t>(block.size()) - params.p;
    std::vector<std::vector<uint32_t>> values(sp);
    for (uint64_t s = 0; s < sp; ++s) {
      for (uint32_t i : block) values[s].push_back(sp_eval(params.index_field, params.p, s, i));
    }
    const auto mins = parallel_map<uint32_t>(sp, [&](size_t a) {
      uint32_t best = std::numeric_limits<uint32_t>::max();
      for (size_t b = a + 1; b < sp; ++b) {
        uint32_t d = 0;
        for (size_t c = 0; c < block.size(); ++c) d += values[a][c] != values[b][c];
        best = std::min(best, d);
      }
      return best;
    });
    const uint32_t block_min = *std::min_element(mins.begin(), mins.end());
    out.min_difference = std::min(out.min_difference, block_min);
    out.bound = std::min(out.bound, bound);
    if (static_cast<int64_t>(block_min) < bound) out.pass = false;
  }
  return out;
}

QInstance gen_Q(uint32_t n, uint32_t base, uint32_t top, uint64_t cap) {
  if (base < 2) throw Error(ErrorCode::kInvalidArgument, "Q needs base >= 2");
  if (sat_pow(base, top) > n) {
    throw Error(ErrorCode::kInvalidArgument, "Q needs base^top <= n");
  }
  QInstance q;
  q.n = n;
  q.base = base;
  q.top = top;
  const uint32_t nvars = n * n + top + 1;
  const HardPolyParams h = HardPolyParams::make(n, 1, 1);
  q.circuit = Depth4Circuit(h.coeff_field, nvars);
  uint32_t t = 1;
  for (uint32_t i = 0; i <= top; ++i, t *= base) {
    PInstance p = gen_P(n, t, 1, false, cap, nvars);
    ProductGate gate;
    gate.factors.push_back(Polynomial::variable(h.coeff_field, nvars, n * n + i));
    for (const auto& f : p.circuit.gates()[0].factors) gate.factors.push_back(f);
    q.circuit.add_gate(std::move(gate));
    q.summands.push_back(std::move(p.circuit));
  }
  return q;
}

Assignment q_selector(const QInstance& q, uint32_t i) {
  Assignment a;
  const FieldSpec& f = q.circuit.field();
  for (uint32_t j = 0; j <= q.top; ++j) a[q.n * q.n + j] = j == i ? f.one() : f.zero();
  return a;
}

}  // namespace spdlab
