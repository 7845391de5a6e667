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

#include "spdlab/measure.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <string>

#include "spdlab/error.h"
#include "spdlab/kernels/rowops.h"

namespace spdlab {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Degree-k sub-multisets of t's variable multiset.
void submonomials(const Monomial& t, uint32_t k, std::vector<Monomial>& out) {
  const auto& e = t.entries();
  std::vector<Monomial::Entry> cur;
  std::function<void(size_t, uint32_t)> rec = [&](size_t idx, uint32_t left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (idx == e.size()) return;
    const uint32_t top = std::min(left, e[idx].second);
    for (uint32_t j = top + 1; j-- > 0;) {
      if (j) cur.emplace_back(e[idx].first, j);
      rec(idx + 1, left - j);
      if (j) cur.pop_back();
    }
  };
  rec(0, k);
}

uint64_t binom_u64(uint64_t a, uint64_t b, uint64_t cap) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (uint64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<uint64_t>(r);
}

void check_cap(uint64_t value, uint64_t cap, const char* what) {
  if (value > cap) {
    throw Error(ErrorCode::kMatrixTooLarge, std::string(what) + " " + std::to_string(value) +
                                                " exceeds cap " + std::to_string(cap));
  }
}

// Ascending lexicographic order on exponent vectors, variable 0 most
// significant, degree ignored.
struct LexAscending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto& x = a.entries();
    const auto& y = b.entries();
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i].first != y[j].first) return x[i].first > y[j].first;  // b has 0 at x's var
      if (x[i].second != y[j].second) return x[i].second < y[j].second;
      ++i;
      ++j;
    }
    return i == x.size() && j < y.size();
  }
};

}  // namespace

DerivativeSet enumerate_derivatives(const Polynomial& p, uint32_t k) {
  std::map<Monomial, bool, GrlexDescending> candidates;
  for (const auto& [t, c] : p.terms()) {
    if (t.degree() < k) continue;
    std::vector<Monomial> subs;
    submonomials(t, k, subs);
    for (auto& m : subs) candidates.emplace(std::move(m), true);
  }
  DerivativeSet out;
  for (const auto& [m, unused] : candidates) {
    Polynomial d = derivative(p, m);
    if (d.is_zero()) continue;
    if (std::find(out.polys.begin(), out.polys.end(), d) != out.polys.end()) continue;
    out.by.push_back(m);
    out.polys.push_back(std::move(d));
  }
  return out;
}

std::vector<Monomial> shift_monomials(uint32_t nvars, uint32_t ell, uint64_t cap) {
  check_cap(binom_u64(uint64_t{nvars} + ell, ell, cap), cap, "shift monomial count");
  std::vector<Monomial> out;
  std::vector<Monomial::Entry> cur;
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t var, uint32_t left) {
    if (var == nvars) {
      out.emplace_back(cur);
      return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
      if (e) cur.emplace_back(var, e);
      rec(var + 1, left - e);
      if (e) cur.pop_back();
    }
  };
  rec(0, ell);
  std::sort(out.begin(), out.end(), GrlexDescending());
  return out;
}

uint64_t dense_rank(const FieldSpec& f, std::vector<uint32_t>& cells, uint64_t rows,
                    uint64_t cols) {
  auto row = [&](uint64_t r) { return std::span<uint32_t>(cells.data() + r * cols, cols); };
  const bool prime = f.is_prime_field();
  const kernels::PrimeModulus mod(f.p());
  uint64_t rank = 0;
  for (uint64_t col = 0; col < cols && rank < rows; ++col) {
    uint64_t pivot = rank;
    while (pivot < rows && cells[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      auto a = row(pivot), b = row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = row(rank).subspan(col);
    const FieldElement inv = f.inv({prow[0]});
    if (prime) {
      kernels::scale_mod(prow, inv.value, mod);
    } else {
      for (auto& v : prow) v = f.mul({v}, inv).value;
    }
    for (uint64_t r = rank + 1; r < rows; ++r) {
      auto target = row(r).subspan(col);
      const uint32_t lead = target[0];
      if (lead == 0) continue;
      if (prime) {
        kernels::axpy_mod(target, prow, f.p() - lead, mod);
      } else {
        const FieldElement neg_lead = f.neg({lead});
        for (size_t j = 0; j < target.size(); ++j) {
          if (prow[j]) target[j] = f.add({target[j]}, f.mul(neg_lead, {prow[j]})).value;
        }
      }
    }
    ++rank;
  }
  return rank;
}

MeasureResult spd_dimension(const MeasureJob& job, const MeasureCaps& caps) {
  const auto start = Clock::now();
  MeasureResult res;
  const Polynomial& p = job.poly;
  if (p.is_zero()) {
    res.elapsed_ms = ms_since(start);
    return res;
  }
  const DerivativeSet ders = enumerate_derivatives(p, job.k);
  res.num_derivatives = ders.polys.size();
  if (ders.polys.empty()) {
    res.elapsed_ms = ms_since(start);
    return res;
  }
  const std::vector<Monomial> shifts = shift_monomials(p.nvars(), job.ell, caps.max_rows);
  res.rows = res.num_derivatives * shifts.size();
  check_cap(res.rows, caps.max_rows, "row count");

  std::map<Monomial, uint64_t, GrlexDescending> columns;
  for (const auto& d : ders.polys) {
    for (const auto& s : shifts) {
      for (const auto& [t, c] : d.terms()) {
        columns.emplace(t * s, 0);
        check_cap(columns.size(), caps.max_cols, "column count");
      }
    }
  }
  res.cols = columns.size();
  check_cap(res.rows * res.cols, caps.max_cells, "matrix cell count");
  uint64_t idx = 0;
  for (auto& [m, col] : columns) col = idx++;

  std::vector<uint32_t> cells(res.rows * res.cols, 0);
  uint64_t r = 0;
  for (const auto& d : ders.polys) {
    for (const auto& s : shifts) {
      for (const auto& [t, c] : d.terms()) cells[r * res.cols + columns.at(t * s)] = c.value;
      ++r;
    }
  }
  res.dim = dense_rank(p.field(), cells, res.rows, res.cols);
  res.elapsed_ms = ms_since(start);
  return res;
}

MeasureResult spd_oracle(const MeasureJob& job, const MeasureCaps& caps) {
  const auto start = Clock::now();
  MeasureResult res;
  const Polynomial& p = job.poly;
  const FieldSpec& f = p.field();
  const uint32_t n = p.nvars();

  // Every exponent vector of total degree == k (derivatives) or <= ell
  // (shifts), by odometer.
  auto vectors = [&](uint32_t total, bool exact) {
    std::vector<std::vector<uint32_t>> out;
    double states = 1;
    for (uint32_t i = 0; i < n; ++i) states *= total + 1.0;
    if (states > 1e7) check_cap(UINT64_MAX, caps.max_rows, "oracle enumeration");
    std::vector<uint32_t> v(n, 0);
    while (true) {
      uint32_t sum = 0;
      for (uint32_t e : v) sum += e;
      if (exact ? sum == total : sum <= total) out.push_back(v);
      check_cap(out.size(), caps.max_rows, "oracle enumeration");
      size_t i = 0;
      while (i < n && v[i] == total) v[i++] = 0;
      if (i == n) break;
      ++v[i];
    }
    return out;
  };
  auto to_monomial = [](const std::vector<uint32_t>& v) {
    std::vector<Monomial::Entry> e;
    for (uint32_t i = 0; i < v.size(); ++i) {
      if (v[i]) e.emplace_back(i, v[i]);
    }
    return Monomial(std::move(e));
  };
  // First-order derivative by one variable.
  auto d1 = [&](const Polynomial& q, uint32_t var) {
    Polynomial r(f, n);
    for (const auto& [t, c] : q.terms()) {
      const uint32_t e = t.exponent(var);
      if (e == 0) continue;
      r.add_term(t / Monomial::variable(var), f.mul(c, f.from_int(e)));
    }
    return r;
  };

  std::vector<Polynomial> ders;
  if (!p.is_zero()) {
    for (const auto& v : n == 0 ? std::vector<std::vector<uint32_t>>{{}} : vectors(job.k, true)) {
      Polynomial q = p;
      for (uint32_t var = 0; var < n && !q.is_zero(); ++var) {
        for (uint32_t j = 0; j < v[var]; ++j) q = d1(q, var);
      }
      if (n == 0 && job.k > 0) q = Polynomial(f, n);
      if (q.is_zero()) continue;
      if (std::find(ders.begin(), ders.end(), q) == ders.end()) ders.push_back(std::move(q));
    }
  }
  res.num_derivatives = ders.size();
  const auto shift_vecs = n == 0 ? std::vector<std::vector<uint32_t>>{{}} : vectors(job.ell, false);
  res.rows = ders.size() * shift_vecs.size();
  check_cap(res.rows, caps.max_rows, "oracle row count");

  std::map<Monomial, uint64_t, LexAscending> columns;
  std::map<uint64_t, std::map<uint64_t, FieldElement>> basis;
  for (const auto& d : ders) {
    for (const auto& sv : shift_vecs) {
      const Monomial s = to_monomial(sv);
      std::map<uint64_t, FieldElement> row;
      for (const auto& [t, c] : d.terms()) {
        auto [it, inserted] = columns.emplace(t * s, columns.size());
        check_cap(columns.size(), caps.max_cols, "oracle column count");
        row[it->second] = c;
      }
      while (!row.empty()) {
        const auto [col, lead] = *row.begin();
        auto b = basis.find(col);
        if (b == basis.end()) {
          const FieldElement inv = f.inv(lead);
          for (auto& [cc, v] : row) v = f.mul(v, inv);
          basis.emplace(col, std::move(row));
          break;
        }
        for (const auto& [cc, v] : b->second) {
          FieldElement nv = f.sub(row.count(cc) ? row[cc] : f.zero(), f.mul(lead, v));
          if (nv.value == 0) {
            row.erase(cc);
          } else {
            row[cc] = nv;
          }
        }
      }
    }
  }
  res.cols = columns.size();
  res.dim = basis.size();
  res.elapsed_ms = ms_since(start);
  return res;
}

}  // namespace spdlab
