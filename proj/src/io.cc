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

#include "spdlab/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spdlab/error.h"

namespace spdlab {
namespace {

std::string header_line(std::string_view tag, const FieldSpec& f, uint32_t nvars,
                        const HeaderAttrs& attrs) {
  std::string s(tag);
  s += " q=" + std::to_string(f.p()) + "^" + std::to_string(f.k());
  s += " nvars=" + std::to_string(nvars);
  for (const auto& [k, v] : attrs) s += " " + k + "=" + v;
  return s;
}

void append_poly_body(std::string& out, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    out += format_element(p.field(), c);
    for (const auto& [var, exp] : m.entries()) {
      out += ' ';
      out += std::to_string(var);
      out += ':';
      out += std::to_string(exp);
    }
    out += '\n';
  }
  out += "end\n";
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Line cursor that skips blank lines and '#' comments.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ <= text_.size() && pos_ != std::string_view::npos) {
      size_t eol = text_.find('\n', pos_);
      std::string_view line = text_.substr(pos_, eol == std::string_view::npos ? eol : eol - pos_);
      pos_ = eol == std::string_view::npos ? std::string_view::npos : eol + 1;
      ++line_no_;
      tokens = split_ws(line);
      if (tokens.empty() || tokens[0].front() == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no_) + ": " + msg);
  }

  size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  size_t line_no_ = 0;
};

uint64_t parse_uint(const LineReader& r, std::string_view s, const char* what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    r.fail(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

struct Header {
  FieldSpec field;
  uint32_t nvars = 0;
  HeaderAttrs attrs;
};

Header parse_header(const LineReader& r, const std::vector<std::string_view>& tok,
                    std::string_view tag) {
  if (tok.empty() || tok[0] != tag) r.fail("expected '" + std::string(tag) + "' header");
  Header h;
  bool have_q = false, have_nvars = false;
  for (size_t i = 1; i < tok.size(); ++i) {
    const size_t eq = tok[i].find('=');
    if (eq == std::string_view::npos) r.fail("bad header token '" + std::string(tok[i]) + "'");
    const std::string_view key = tok[i].substr(0, eq), val = tok[i].substr(eq + 1);
    if (key == "q") {
      const size_t caret = val.find('^');
      if (caret == std::string_view::npos) r.fail("q must be written <p>^<k>");
      const uint64_t p = parse_uint(r, val.substr(0, caret), "characteristic");
      const uint64_t k = parse_uint(r, val.substr(caret + 1), "extension degree");
      try {
        h.field = construct_field(static_cast<uint32_t>(p), static_cast<uint32_t>(k));
      } catch (const Error& e) {
        r.fail(e.what());
      }
      have_q = true;
    } else if (key == "nvars") {
      h.nvars = static_cast<uint32_t>(parse_uint(r, val, "nvars"));
      have_nvars = true;
    } else {
      h.attrs.emplace_back(std::string(key), std::string(val));
    }
  }
  if (!have_q || !have_nvars) r.fail("header needs q= and nvars=");
  return h;
}

FieldElement parse_coeff(const LineReader& r, const FieldSpec& f, std::string_view s) {
  std::vector<uint32_t> residues;
  size_t start = 0;
  while (true) {
    const size_t slash = s.find('/', start);
    const std::string_view part =
        s.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    const uint64_t v = parse_uint(r, part, "coefficient");
    if (v >= f.p()) r.fail("residue " + std::string(part) + " out of range");
    residues.push_back(static_cast<uint32_t>(v));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (residues.size() != f.k()) r.fail("coefficient needs " + std::to_string(f.k()) + " residues");
  return f.from_coeffs(residues);
}

// Reads terms up to and including `end`; the header has been consumed.
Polynomial parse_poly_body(LineReader& r, const Header& h) {
  Polynomial p(h.field, h.nvars);
  std::vector<std::string_view> tok;
  while (r.next(tok)) {
    if (tok[0] == "end") return p;
    const FieldElement c = parse_coeff(r, h.field, tok[0]);
    std::vector<Monomial::Entry> entries;
    for (size_t i = 1; i < tok.size(); ++i) {
      const size_t colon = tok[i].find(':');
      if (colon == std::string_view::npos) r.fail("expected <idx>:<exp>");
      const uint64_t var = parse_uint(r, tok[i].substr(0, colon), "variable index");
      const uint64_t exp = parse_uint(r, tok[i].substr(colon + 1), "exponent");
      if (var >= h.nvars) r.fail("variable index " + std::to_string(var) + " >= nvars");
      if (exp == 0) r.fail("zero exponent");
      entries.emplace_back(static_cast<uint32_t>(var), static_cast<uint32_t>(exp));
    }
    p.add_term(Monomial(std::move(entries)), c);
  }
  r.fail("unexpected end of input, missing 'end'");
}

}  // namespace

std::string format_element(const FieldSpec& f, FieldElement e) {
  if (f.k() == 1) return std::to_string(e.value);
  std::string s;
  const auto c = f.coeffs(e);
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += '/';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string format_polynomial(const Polynomial& p, const HeaderAttrs& attrs) {
  std::string out = header_line("poly", p.field(), p.nvars(), attrs) + "\n";
  append_poly_body(out, p);
  return out;
}

std::string format_circuit(const Depth4Circuit& c, const HeaderAttrs& attrs) {
  std::string out = header_line("spsp", c.field(), c.nvars(), attrs) + "\n";
  for (const auto& gate : c.gates()) {
    out += "gate\n";
    for (const auto& q : gate.factors) out += format_polynomial(q);
    out += "endgate\n";
  }
  out += "endspsp\n";
  return out;
}

ParsedPolynomial parse_polynomial(std::string_view text) {
  LineReader r(text);
  std::vector<std::string_view> tok;
  if (!r.next(tok)) r.fail("empty input");
  Header h = parse_header(r, tok, "poly");
  Polynomial p = parse_poly_body(r, h);
  if (r.next(tok)) r.fail("trailing content after 'end'");
  return {std::move(p), std::move(h.attrs)};
}

ParsedCircuit parse_circuit(std::string_view text) {
  LineReader r(text);
  std::vector<std::string_view> tok;
  if (!r.next(tok)) r.fail("empty input");
  Header h = parse_header(r, tok, "spsp");
  Depth4Circuit c(h.field, h.nvars);
  bool closed = false;
  while (r.next(tok)) {
    if (tok[0] == "endspsp") {
      closed = true;
      break;
    }
    if (tok[0] != "gate") r.fail("expected 'gate' or 'endspsp'");
    ProductGate g;
    while (true) {
      if (!r.next(tok)) r.fail("unexpected end of input inside gate");
      if (tok[0] == "endgate") break;
      Header fh = parse_header(r, tok, "poly");
      if (!(fh.field == h.field) || fh.nvars != h.nvars) {
        r.fail("factor header does not match circuit header");
      }
      Polynomial q = parse_poly_body(r, fh);
      if (q.is_zero()) r.fail("zero factor");
      g.factors.push_back(std::move(q));
    }
    if (g.factors.empty()) r.fail("gate with no factors");
    c.add_gate(std::move(g));
  }
  if (!closed) r.fail("missing 'endspsp'");
  if (r.next(tok)) r.fail("trailing content after 'endspsp'");
  return {std::move(c), std::move(h.attrs)};
}

ParsedCircuit parse_any_as_circuit(std::string_view text) {
  LineReader r(text);
  std::vector<std::string_view> tok;
  if (!r.next(tok)) r.fail("empty input");
  if (tok[0] == "spsp") return parse_circuit(text);
  ParsedPolynomial p = parse_polynomial(text);
  return {circuit_of(p.poly), std::move(p.attrs)};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace spdlab
