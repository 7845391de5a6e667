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

#ifndef SPDLAB_FORMULA_H_
#define SPDLAB_FORMULA_H_

#include <cstdint>
#include <string>
#include <vector>

#include "spdlab/circuit.h"
#include "spdlab/field.h"
#include "spdlab/poly.h"

namespace spdlab {

// A rooted formula tree with sum/product internal nodes and variable or
// constant leaves. Node 0 is the root once any node exists.
class LayeredFormula {
 public:
  enum class Kind { kSum, kProduct, kVariable, kConstant };

  struct Node {
    Kind kind = Kind::kConstant;
    std::vector<uint32_t> children;
    uint32_t var = 0;              // kVariable
    FieldElement value;            // kConstant
  };

  LayeredFormula(FieldSpec field, uint32_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  uint32_t add_sum(std::vector<uint32_t> children = {});
  uint32_t add_product(std::vector<uint32_t> children = {});
  uint32_t add_variable(uint32_t var);
  uint32_t add_constant(FieldElement value);
  void add_child(uint32_t parent, uint32_t child) { nodes_[parent].children.push_back(child); }

  const FieldSpec& field() const { return field_; }
  uint32_t nvars() const { return nvars_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  uint32_t root() const { return 0; }

  // Nodes grouped by depth from the root.
  std::vector<std::vector<uint32_t>> layers() const;
  // Fan-in of every internal node per layer (leaf layers yield empty lists).
  std::vector<std::vector<size_t>> layer_fanins() const;
  // Leaves: variable 1, constant 0; sum: max; product: sum.
  uint64_t formal_degree() const;
  // Degree of the computed polynomial (-1 for zero). Products use additivity
  // of degree; sums are expanded (subject to term_cap).
  int64_t degree(uint64_t term_cap = kDefaultTermCap) const;
  Polynomial expand(uint64_t term_cap = kDefaultTermCap) const;

 private:
  Polynomial expand_node(uint32_t id, uint64_t term_cap) const;
  int64_t degree_node(uint32_t id, uint64_t term_cap) const;
  uint64_t formal_degree_node(uint32_t id) const;

  FieldSpec field_;
  uint32_t nvars_;
  std::vector<Node> nodes_;
};

struct RegularityReport {
  bool regular = false;
  // Empty when regular; otherwise the first violated clause:
  // "non-alternating layers", "non-uniform layer fan-in" or
  // "formal degree exceeds bound".
  std::string diagnostic;
  uint64_t formal_degree = 0;
  int64_t degree = -1;
};

// Alternating sum/product layers (all leaves on the last layer), one fan-in
// per layer, and formal degree <= slack * degree.
RegularityReport is_regular(const LayeredFormula& f, double slack,
                            uint64_t term_cap = kDefaultTermCap);

}  // namespace spdlab

#endif  // SPDLAB_FORMULA_H_
