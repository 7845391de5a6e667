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

#include "spdlab/formula.h"

#include <algorithm>

#include "spdlab/error.h"

namespace spdlab {

uint32_t LayeredFormula::add_sum(std::vector<uint32_t> children) {
  nodes_.push_back({Kind::kSum, std::move(children), 0, {}});
  return static_cast<uint32_t>(nodes_.size() - 1);
}

uint32_t LayeredFormula::add_product(std::vector<uint32_t> children) {
  nodes_.push_back({Kind::kProduct, std::move(children), 0, {}});
  return static_cast<uint32_t>(nodes_.size() - 1);
}

uint32_t LayeredFormula::add_variable(uint32_t var) {
  if (var >= nvars_) throw Error(ErrorCode::kArityMismatch, "formula variable out of range");
  nodes_.push_back({Kind::kVariable, {}, var, {}});
  return static_cast<uint32_t>(nodes_.size() - 1);
}

uint32_t LayeredFormula::add_constant(FieldElement value) {
  nodes_.push_back({Kind::kConstant, {}, 0, value});
  return static_cast<uint32_t>(nodes_.size() - 1);
}

std::vector<std::vector<uint32_t>> LayeredFormula::layers() const {
  std::vector<std::vector<uint32_t>> out;
  if (nodes_.empty()) return out;
  std::vector<uint32_t> current = {root()};
  while (!current.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t id : current) {
      const auto& ch = nodes_[id].children;
      next.insert(next.end(), ch.begin(), ch.end());
    }
    out.push_back(std::move(current));
    current = std::move(next);
  }
  return out;
}

std::vector<std::vector<size_t>> LayeredFormula::layer_fanins() const {
  std::vector<std::vector<size_t>> out;
  for (const auto& layer : layers()) {
    std::vector<size_t> fanins;
    for (uint32_t id : layer) {
      const Kind k = nodes_[id].kind;
      if (k == Kind::kSum || k == Kind::kProduct) fanins.push_back(nodes_[id].children.size());
    }
    out.push_back(std::move(fanins));
  }
  return out;
}

uint64_t LayeredFormula::formal_degree_node(uint32_t id) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Kind::kVariable: return 1;
    case Kind::kConstant: return 0;
    case Kind::kSum: {
      uint64_t d = 0;
      for (uint32_t c : n.children) d = std::max(d, formal_degree_node(c));
      return d;
    }
    case Kind::kProduct: {
      uint64_t d = 0;
      for (uint32_t c : n.children) d += formal_degree_node(c);
      return d;
    }
  }
  return 0;
}

uint64_t LayeredFormula::formal_degree() const {
  return nodes_.empty() ? 0 : formal_degree_node(root());
}

Polynomial LayeredFormula::expand_node(uint32_t id, uint64_t term_cap) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Kind::kVariable: return Polynomial::variable(field_, nvars_, n.var);
    case Kind::kConstant: return Polynomial::constant(field_, nvars_, n.value);
    case Kind::kSum: {
      Polynomial acc(field_, nvars_);
      for (uint32_t c : n.children) {
        acc += expand_node(c, term_cap);
        if (acc.sparsity() > term_cap) {
          throw Error(ErrorCode::kExpansionTooLarge, "formula expansion exceeds cap");
        }
      }
      return acc;
    }
    case Kind::kProduct: {
      Polynomial acc = Polynomial::constant(field_, nvars_, field_.one());
      for (uint32_t c : n.children) {
        Polynomial child = expand_node(c, term_cap);
        if (acc.sparsity() * child.sparsity() > term_cap) {
          throw Error(ErrorCode::kExpansionTooLarge, "formula expansion exceeds cap");
        }
        acc = acc * child;
      }
      return acc;
    }
  }
  return Polynomial(field_, nvars_);
}

Polynomial LayeredFormula::expand(uint64_t term_cap) const {
  if (nodes_.empty()) return Polynomial(field_, nvars_);
  return expand_node(root(), term_cap);
}

int64_t LayeredFormula::degree_node(uint32_t id, uint64_t term_cap) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Kind::kVariable: return 1;
    case Kind::kConstant: return n.value.value == 0 ? -1 : 0;
    case Kind::kProduct: {
      int64_t d = 0;
      for (uint32_t c : n.children) {
        const int64_t cd = degree_node(c, term_cap);
        if (cd < 0) return -1;
        d += cd;
      }
      return d;
    }
    case Kind::kSum: return degree_or_minus_one(expand_node(id, term_cap));
  }
  return -1;
}

int64_t LayeredFormula::degree(uint64_t term_cap) const {
  return nodes_.empty() ? -1 : degree_node(root(), term_cap);
}

RegularityReport is_regular(const LayeredFormula& f, double slack, uint64_t term_cap) {
  using Kind = LayeredFormula::Kind;
  RegularityReport rep;
  rep.formal_degree = f.formal_degree();
  rep.degree = f.degree(term_cap);
  const auto layers = f.layers();
  const auto& nodes = f.nodes();
  for (size_t depth = 0; depth < layers.size(); ++depth) {
    const bool last = depth + 1 == layers.size();
    const Kind first = nodes[layers[depth].front()].kind;
    for (uint32_t id : layers[depth]) {
      const Kind k = nodes[id].kind;
      const bool leaf = k == Kind::kVariable || k == Kind::kConstant;
      if (leaf != last || (!leaf && k != first)) {
        rep.diagnostic = "non-alternating layers";
        return rep;
      }
    }
    if (!last && depth > 0 && first == nodes[layers[depth - 1].front()].kind) {
      rep.diagnostic = "non-alternating layers";
      return rep;
    }
  }
  for (const auto& fanins : f.layer_fanins()) {
    if (!fanins.empty() &&
        std::any_of(fanins.begin(), fanins.end(), [&](size_t v) { return v != fanins.front(); })) {
      rep.diagnostic = "non-uniform layer fan-in";
      return rep;
    }
  }
  const double bound = slack * static_cast<double>(std::max<int64_t>(rep.degree, 0));
  if (static_cast<double>(rep.formal_degree) > bound) {
    rep.diagnostic = "formal degree exceeds bound";
    return rep;
  }
  rep.regular = true;
  return rep;
}

}  // namespace spdlab
