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

#include "spdlab/circuit.h"

#include <algorithm>
#include <limits>
#include <string>

#include "spdlab/error.h"

namespace spdlab {
namespace {

uint64_t saturating_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
    return std::numeric_limits<uint64_t>::max();
  }
  return a * b;
}

uint32_t factor_degree(const Polynomial& q) { return checks(q).degree.value_or(0); }

}  // namespace

void Depth4Circuit::add_gate(ProductGate gate) {
  if (gate.factors.empty()) throw Error(ErrorCode::kInvalidArgument, "gate with no factors");
  for (const auto& q : gate.factors) {
    if (!(q.field() == field_) || q.nvars() != nvars_) {
      throw Error(ErrorCode::kFieldMismatch, "factor does not match the circuit's field/nvars");
    }
    if (q.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "zero factor in gate");
  }
  gates_.push_back(std::move(gate));
}

DegreeSequence degree_sequence(const ProductGate& gate) {
  DegreeSequence d;
  for (const auto& q : gate.factors) ++d[factor_degree(q)];
  return d;
}

CircuitStats stats(const Depth4Circuit& c) {
  CircuitStats st;
  st.r = c.gates().size();
  st.s = st.r;
  for (const auto& gate : c.gates()) {
    uint32_t gate_degree = 0;
    for (const auto& q : gate.factors) {
      const PolyChecks pc = checks(q);
      const uint32_t d = pc.degree.value_or(0);
      st.a = std::max(st.a, d);
      st.s += pc.sparsity;
      gate_degree += d;
      if (!pc.is_homogeneous) st.homogeneous = false;
    }
    st.gate_degrees.push_back(gate_degree);
    st.degree_sequences.push_back(degree_sequence(gate));
  }
  if (!st.gate_degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(st.gate_degrees.begin(), st.gate_degrees.end());
    st.degree = *hi;
    if (*lo != *hi) st.homogeneous = false;
  }
  return st;
}

bool is_star(const Depth4Circuit& c) {
  if (c.gates().empty()) return true;
  const DegreeSequence first = degree_sequence(c.gates().front());
  return std::all_of(c.gates().begin() + 1, c.gates().end(),
                     [&](const ProductGate& g) { return degree_sequence(g) == first; });
}

uint64_t projected_terms(const Depth4Circuit& c) {
  uint64_t total = 0;
  for (const auto& gate : c.gates()) {
    uint64_t g = 1;
    for (const auto& q : gate.factors) g = saturating_mul(g, q.sparsity());
    total = (total > std::numeric_limits<uint64_t>::max() - g)
                ? std::numeric_limits<uint64_t>::max()
                : total + g;
  }
  return total;
}

Polynomial expand_gate(const Depth4Circuit& c, const ProductGate& gate, uint64_t term_cap) {
  uint64_t estimate = 1;
  for (const auto& q : gate.factors) estimate = saturating_mul(estimate, q.sparsity());
  if (estimate > term_cap) {
    throw Error(ErrorCode::kExpansionTooLarge,
                "gate expansion estimate " + std::to_string(estimate) + " exceeds cap " +
                    std::to_string(term_cap));
  }
  Polynomial acc = Polynomial::constant(c.field(), c.nvars(), c.field().one());
  for (const auto& q : gate.factors) acc = acc * q;
  return acc;
}

Polynomial expand(const Depth4Circuit& c, uint64_t term_cap) {
  const uint64_t estimate = projected_terms(c);
  if (estimate > term_cap) {
    throw Error(ErrorCode::kExpansionTooLarge, "expansion estimate " + std::to_string(estimate) +
                                                   " exceeds cap " + std::to_string(term_cap));
  }
  Polynomial sum(c.field(), c.nvars());
  for (const auto& gate : c.gates()) sum += expand_gate(c, gate, term_cap);
  return sum;
}

Depth4Circuit project(const Depth4Circuit& c, const Assignment& assignment) {
  const FieldSpec& f = c.field();
  Depth4Circuit out(f, c.nvars());
  for (const auto& gate : c.gates()) {
    ProductGate g;
    FieldElement constant = f.one();
    bool vanished = false;
    for (const auto& q : gate.factors) {
      Polynomial r = assignment.empty() ? q : substitute(q, assignment);
      if (r.is_zero()) {
        vanished = true;
        break;
      }
      const PolyChecks pc = checks(r);
      if (pc.sparsity == 1 && *pc.degree == 0) {
        constant = f.mul(constant, r.terms().begin()->second);
      } else {
        g.factors.push_back(std::move(r));
      }
    }
    if (vanished) continue;
    if (constant != f.one() || g.factors.empty()) {
      g.factors.push_back(Polynomial::constant(f, c.nvars(), constant));
    }
    out.add_gate(std::move(g));
  }
  return out;
}

FieldElement eval(const Depth4Circuit& c, std::span<const FieldElement> point) {
  const FieldSpec& f = c.field();
  FieldElement sum = f.zero();
  for (const auto& gate : c.gates()) {
    FieldElement prod = f.one();
    for (const auto& q : gate.factors) {
      prod = f.mul(prod, eval(q, point));
      if (prod.value == 0) break;
    }
    sum = f.add(sum, prod);
  }
  return sum;
}

FieldElement eval_in(const Depth4Circuit& c, const FieldSpec& target,
                     std::span<const FieldElement> point) {
  FieldElement sum = target.zero();
  for (const auto& gate : c.gates()) {
    FieldElement prod = target.one();
    for (const auto& q : gate.factors) {
      prod = target.mul(prod, eval_in(q, target, point));
      if (prod.value == 0) break;
    }
    sum = target.add(sum, prod);
  }
  return sum;
}

Depth4Circuit circuit_of(const Polynomial& p) {
  Depth4Circuit c(p.field(), p.nvars());
  if (!p.is_zero()) c.add_gate(ProductGate{{p}});
  return c;
}

}  // namespace spdlab
