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

#ifndef SPDLAB_IO_H_
#define SPDLAB_IO_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spdlab/circuit.h"
#include "spdlab/poly.h"

namespace spdlab {

// Extra `key=value` tokens carried on a header line, in order.
using HeaderAttrs = std::vector<std::pair<std::string, std::string>>;

// Polynomial text format:
//
//   poly q=<p>^<k> nvars=<N> [key=value ...]
//   <coeff> <idx>:<exp> <idx>:<exp> ...
//   ...
//   end
//
// Terms in grlex-descending order; for k > 1 the coefficient is its residues
// low-to-high joined by '/'.
std::string format_polynomial(const Polynomial& p, const HeaderAttrs& attrs = {});

// Circuit text format:
//
//   spsp q=<p>^<k> nvars=<N> [key=value ...]
//   gate
//   <factor in polynomial format>
//   ...
//   endgate
//   ...
//   endspsp
std::string format_circuit(const Depth4Circuit& c, const HeaderAttrs& attrs = {});

struct ParsedPolynomial {
  Polynomial poly;
  HeaderAttrs attrs;
};
struct ParsedCircuit {
  Depth4Circuit circuit;
  HeaderAttrs attrs;
};

// Both parsers throw ParseError with a "line <n>: ..." message.
ParsedPolynomial parse_polynomial(std::string_view text);
ParsedCircuit parse_circuit(std::string_view text);

// Accepts either format; a polynomial becomes a one-gate, one-factor circuit.
ParsedCircuit parse_any_as_circuit(std::string_view text);

std::string format_element(const FieldSpec& f, FieldElement e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view data);

}  // namespace spdlab

#endif  // SPDLAB_IO_H_
