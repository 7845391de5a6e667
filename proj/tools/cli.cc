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

#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spdlab/bounds.h"
#include "spdlab/circuit.h"
#include "spdlab/error.h"
#include "spdlab/hardpoly.h"
#include "spdlab/io.h"
#include "spdlab/measure.h"
#include "spdlab/parallel.h"
#include "spdlab/random.h"
#include "spdlab/reduce.h"
#include "spdlab/rng.h"

namespace spdlab {
namespace {

using Json = nlohmann::ordered_json;

// Thrown when a verification suite recorded failures after writing output.
struct VerifyFailed {};

struct Options {
  // Shared flags.
  uint32_t n = 0;
  uint32_t t = 0;
  uint32_t p = 1;
  uint32_t k = 0;
  uint32_t ell = 0;
  double eps = 0.5;
  double alpha = 0.5;
  uint64_t seed = 0;
  uint32_t trials = 0;
  bool expand = false;
  uint64_t term_cap = kDefaultTermCap;
  uint64_t matrix_cap = MeasureCaps{}.max_rows;
  std::string log_base = "2";
  std::string out_path;

  // Command-specific.
  std::string family;
  std::string suite;
  std::string file;
  uint32_t t_tilde = 0;
  uint32_t base = 20;
  int64_t top = -1;
  int64_t drop_term = -1;
  uint32_t points = 200;
  bool oracle = false;
  uint32_t a = 0;
  uint32_t b = 0;
  double c = 1.0;
  std::string bound = "all";
  std::vector<std::string> n_grid;
  std::vector<std::string> t_grid;
  // Manual bound inputs.
  double bd = 0, bD = 0, bN = 0, bs = 0, bm = 0, br = 0;
};

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

// Writes the command's main artifact to --out or to `out`.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_text_file(o.out_path, text);
  }
}

Json stats_json(const CircuitStats& s) {
  Json j;
  j["r"] = s.r;
  j["a"] = s.a;
  j["s"] = s.s;
  j["degree"] = s.degree;
  j["homogeneous"] = s.homogeneous;
  return j;
}

Json verdict_json(const EquivalenceVerdict& v) {
  Json j;
  j["verdict"] = verdict_name(v.kind);
  j["exact"] = v.exact;
  j["sample_field"] = v.sample_field.name();
  j["trials_run"] = v.trials_run;
  j["failure_bound"] = v.failure_bound;
  return j;
}

// ---------------------------------------------------------------- gen

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  HeaderAttrs attrs = {{"layout", "nw"}, {"n", std::to_string(o.n)}, {"family", o.family}};
  std::string text;
  std::string summary = "gen family=" + o.family;
  auto poly_summary = [&](const Polynomial& p) {
    const PolyChecks c = checks(p);
    summary += " terms=" + std::to_string(c.sparsity) +
               " degree=" + std::to_string(degree_or_minus_one(p)) +
               " homogeneous=" + (c.is_homogeneous ? "true" : "false");
  };
  auto circuit_summary = [&](const Depth4Circuit& c) {
    const CircuitStats s = stats(c);
    summary += " gates=" + std::to_string(s.r) + " size=" + std::to_string(s.s) +
               " degree=" + std::to_string(s.degree) +
               " homogeneous=" + (s.homogeneous ? "true" : "false");
  };
  if (o.family == "nw_t") {
    attrs.emplace_back("t", std::to_string(o.t));
    const Polynomial p = gen_nw_t_n(o.n, o.t, o.term_cap);
    text = format_polynomial(p, attrs);
    poly_summary(p);
  } else if (o.family == "nw") {
    const Polynomial p = gen_nw_n(o.n, o.term_cap);
    text = format_polynomial(p, attrs);
    poly_summary(p);
  } else if (o.family == "P") {
    attrs.emplace_back("t", std::to_string(o.t));
    attrs.emplace_back("p", std::to_string(o.p));
    const PInstance inst = gen_P(o.n, o.t, o.p, o.expand, o.term_cap);
    if (inst.expanded) {
      text = format_polynomial(*inst.expanded, attrs);
      poly_summary(*inst.expanded);
    } else {
      text = format_circuit(inst.circuit, attrs);
      circuit_summary(inst.circuit);
    }
  } else {
    uint32_t top = 0;
    if (o.top >= 0) {
      top = static_cast<uint32_t>(o.top);
    } else {
      for (uint64_t v = o.base; v <= o.n; v *= o.base) ++top;
    }
    attrs.emplace_back("base", std::to_string(o.base));
    attrs.emplace_back("top", std::to_string(top));
    const QInstance q = gen_Q(o.n, o.base, top, o.term_cap);
    text = format_circuit(q.circuit, attrs);
    circuit_summary(q.circuit);
  }
  if (o.out_path.empty()) {
    out << text;
    err << summary << "\n";
  } else {
    write_text_file(o.out_path, text);
    out << summary << " out=" << o.out_path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- measure

int cmd_measure(const Options& o, std::ostream& out) {
  const ParsedCircuit parsed = parse_any_as_circuit(read_text_file(o.file));
  const Polynomial poly = expand(parsed.circuit, o.term_cap);
  MeasureJob job{o.k, o.ell, poly};
  MeasureCaps caps;
  caps.max_rows = o.matrix_cap;
  caps.max_cols = o.matrix_cap;
  const MeasureResult r = o.oracle ? spd_oracle(job, caps) : spd_dimension(job, caps);
  std::ostringstream csv;
  csv << "file,k,ell,dim,num_derivatives,rows,cols,elapsed_ms\n";
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
  csv << o.file << ',' << o.k << ',' << o.ell << ',' << r.dim << ',' << r.num_derivatives << ','
      << r.rows << ',' << r.cols << ',' << elapsed << "\n";
  emit(o, csv.str(), out);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct Records {
  std::string text;
  uint64_t checks = 0;
  uint64_t failures = 0;

  void add(const Json& record, bool pass) {
    text += record.dump() + "\n";
    ++checks;
    if (!pass) ++failures;
  }
};

Json run_header(const Options& o) {
  Json j;
  j["run"] = "verify";
  j["suite"] = o.suite;
  j["seed"] = o.seed;
  return j;
}

void verify_derivative(const Options& o, Records& rec) {
  const PInstance inst = gen_P(o.n, o.t, o.p, true, o.term_cap);
  Polynomial poly = *inst.expanded;
  if (o.drop_term >= 0) {
    // Fault injection: delete one monomial (canonical order).
    if (static_cast<uint64_t>(o.drop_term) >= poly.sparsity()) {
      throw Error(ErrorCode::kInvalidArgument, "--drop-term beyond the term count");
    }
    auto it = poly.terms().begin();
    std::advance(it, o.drop_term);
    poly.add_term(it->first, poly.field().neg(it->second));
  }
  for (const auto& c : verify_derivative_all(inst.params, poly)) {
    Json j;
    j["check"] = "derivative";
    j["n"] = o.n;
    j["t"] = o.t;
    j["p"] = o.p;
    j["tuple"] = c.tuple_number;
    j["f"] = tuple_from_number(inst.params, c.tuple_number);
    j["pass"] = c.pass;
    if (!c.pass) j["witness"] = format_polynomial(c.derivative);
    rec.add(j, c.pass);
  }
}

void verify_distance(const Options& o, Records& rec) {
  const HardPolyParams h = HardPolyParams::make(o.n, o.t, o.p);
  const DistanceVerdict v = verify_distance_lemma(h, o.alpha, 5'000'000, o.seed);
  Json j;
  j["check"] = "distance";
  j["n"] = o.n;
  j["t"] = o.t;
  j["p"] = o.p;
  j["alpha"] = o.alpha;
  j["bound"] = v.bound;
  j["degenerate"] = v.degenerate;
  j["min_distance"] = v.min_distance;
  j["pairs"] = v.pairs_checked;
  j["violations"] = v.violations;
  j["pass"] = v.pass;
  rec.add(j, v.pass);
  const BlockAgreement b = verify_block_agreement(h);
  Json k;
  k["check"] = "block_agreement";
  k["bound"] = b.bound;
  k["min_difference"] = b.min_difference;
  k["pass"] = b.pass;
  rec.add(k, b.pass);
}

void verify_nice_set(const Options& o, Records& rec) {
  const NiceSet s = gen_nice_set(o.n, o.p, o.t_tilde, o.alpha, o.term_cap);
  uint64_t expected = 1;
  for (uint32_t i = 0; i < s.message_length; ++i) expected *= s.alphabet.q();
  const uint32_t min_d = min_pairwise_distance(s.codewords);
  const uint32_t lemma_bound = static_cast<uint32_t>(std::floor(o.alpha * o.t_tilde + 1e-9));
  const uint32_t rs_distance = s.t_tilde - s.message_length + 1;
  const bool pass = s.codewords.size() == expected && min_d >= rs_distance && min_d >= lemma_bound;
  Json j;
  j["check"] = "nice_set";
  j["alphabet"] = s.alphabet.q();
  j["ttilde"] = s.t_tilde;
  j["alpha"] = o.alpha;
  j["message_length"] = s.message_length;
  j["codewords"] = s.codewords.size();
  j["expected"] = expected;
  j["min_distance"] = min_d;
  j["lemma_bound"] = lemma_bound;
  j["code_distance"] = rs_distance;
  j["pass"] = pass;
  rec.add(j, pass);
}

void verify_reduction(const Options& o, Records& rec) {
  const FieldSpec f = construct_field(31, 1);
  const uint32_t trials = o.trials ? o.trials : 50;
  const uint32_t threshold = o.t ? o.t : 2;
  EquivalenceOptions eo;
  eo.term_cap = o.term_cap;
  for (uint32_t i = 0; i < trials; ++i) {
    SplitMix64 rng(o.seed, i);
    const auto nvars = static_cast<uint32_t>(3 + rng.below(3));
    const auto gates = static_cast<uint32_t>(1 + rng.below(3));
    const auto degree = static_cast<uint32_t>(3 + rng.below(4));
    const Depth4Circuit c = random_homogeneous_circuit(f, nvars, gates, degree, 3, 3, rng);
    const Depth4Circuit split = split_circuit(c, threshold, o.term_cap);
    const Depth4Circuit bilayer = group_to_bilayer(c, degree, 2, o.term_cap);
    const EquivalenceVerdict vs = equivalent(c, split, o.points, o.seed ^ (2 * i), eo);
    const EquivalenceVerdict vb = equivalent(c, bilayer, o.points, o.seed ^ (2 * i + 1), eo);
    const bool pass = vs.equal() && vb.equal();
    Json j;
    j["check"] = "reduction";
    j["trial"] = i;
    j["input"] = stats_json(stats(c));
    j["split"] = verdict_json(vs);
    j["split_gates"] = split.top_fanin();
    j["bilayer"] = verdict_json(vb);
    j["pass"] = pass;
    rec.add(j, pass);
  }
}

void verify_subadditivity(const Options& o, Records& rec) {
  const FieldSpec f = construct_field(31, 1);
  const uint32_t trials = o.trials ? o.trials : 50;
  for (uint32_t i = 0; i < trials; ++i) {
    SplitMix64 rng(o.seed, i);
    const Polynomial a = random_polynomial(f, 4, 4, 5, rng);
    const Polynomial b = random_polynomial(f, 4, 4, 5, rng);
    const uint64_t da = spd_dimension({o.k, o.ell, a}).dim;
    const uint64_t db = spd_dimension({o.k, o.ell, b}).dim;
    const uint64_t dsum = spd_dimension({o.k, o.ell, a + b}).dim;
    const bool pass = dsum <= da + db;
    Json j;
    j["check"] = "subadditivity";
    j["trial"] = i;
    j["k"] = o.k;
    j["ell"] = o.ell;
    j["dim_p"] = da;
    j["dim_q"] = db;
    j["dim_sum"] = dsum;
    j["pass"] = pass;
    rec.add(j, pass);
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  Records rec;
  rec.text = run_header(o).dump() + "\n";
  if (o.suite == "derivative") {
    verify_derivative(o, rec);
  } else if (o.suite == "distance") {
    verify_distance(o, rec);
  } else if (o.suite == "nice-set") {
    verify_nice_set(o, rec);
  } else if (o.suite == "reduction") {
    verify_reduction(o, rec);
  } else {
    verify_subadditivity(o, rec);
  }
  Json summary;
  summary["summary"] = o.suite;
  summary["checks"] = rec.checks;
  summary["failures"] = rec.failures;
  rec.text += summary.dump() + "\n";
  emit(o, rec.text, out);
  return rec.failures == 0 ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- bounds

const char* kBoundsHeader =
    "name,n,N,t,k,ell,d,D,r,s,u,z,m,eps,alpha,p,log2_s_distinct,log_base,mode,value,"
    "log2_value,log_value,normalized,hypothesis_flags,notes\n";

std::string bound_row(const BoundReport& r) {
  const BoundInputs& in = r.inputs;
  std::vector<std::string> cells = {r.name};
  for (double v : {in.n, in.N, in.t, in.k, in.ell, in.d, in.D, in.r, in.s, in.u, in.z, in.m,
                   in.eps, in.alpha, in.p, in.log2_s_distinct}) {
    cells.push_back(fmt(v));
  }
  cells.push_back(log_base_name(in.log_base));
  cells.push_back(r.exact ? "exact" : "log");
  cells.push_back(r.exact ? r.exact->get_str() : "");
  cells.push_back(fmt(r.log2_value));
  cells.push_back(fmt(r.log_value()));
  cells.push_back(r.normalized ? fmt(*r.normalized) : "");
  cells.push_back(join(r.flags, ';'));
  cells.push_back(join(r.notes, ';'));
  return join(cells, ',') + "\n";
}

std::vector<double> parse_grid(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  for (const auto& tok : tokens) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size() || !(v > 0)) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad grid value '" + tok + "'");
    }
  }
  return out;
}

std::string grid_rows(const Options& o, LogBase base, double n, double t) {
  std::string rows;
  const bool all = o.bound == "all";
  if (all || o.bound == "mainthm0") {
    const BoundInputs in = mainthm0_preset(n, t, o.c, false, base);
    BoundReport r = cm_topfanin_bound(in);
    r.name = "mainthm0_cm_topfanin";
    if (!mainthm0_in_range(n, t, base)) r.flags.insert(r.flags.begin(), "range_violation");
    rows += bound_row(r);
  }
  if (all || o.bound == "gkss") {
    BoundInputs in;
    in.n = n;
    in.t = t;
    in.N = n * n;
    in.alpha = o.alpha;
    in.log_base = base;
    in = gkss_auto_params(in);
    rows += bound_row(gkss_perm_lower(in));
    rows += bound_row(gkss_ratio_E(in));
  }
  if (all || o.bound == "tavenas") rows += bound_row(tavenas_topfanin(n, t, n * n, base));
  return rows;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const LogBase base = parse_log_base(o.log_base);
  std::string csv = "# spdlab bounds log_base=" + o.log_base + " c=" + fmt(o.c) +
                    " alpha=" + fmt(o.alpha) + "\n" + kBoundsHeader;
  if (o.bound == "lowdeg" || o.bound == "sps" || o.bound == "sps_times_r") {
    BoundInputs in;
    in.n = o.n;
    in.k = o.k;
    in.ell = o.ell;
    in.eps = o.eps;
    in.d = o.bd;
    in.D = o.bD;
    in.N = o.bN;
    in.s = o.bs;
    in.m = o.bm;
    in.r = o.br;
    in.log_base = base;
    csv += bound_row(o.bound == "lowdeg" ? lowdeg_bound(in)
                                         : sps_gate_bound(in, o.bound == "sps_times_r"));
    emit(o, csv, out);
    return kExitOk;
  }
  std::vector<double> ns = parse_grid(o.n_grid), ts = parse_grid(o.t_grid);
  std::vector<std::pair<double, double>> grid;
  for (double n : ns) {
    for (double t : ts) grid.emplace_back(n, t);
  }
  const auto rows = parallel_map<std::string>(grid.size(), [&](size_t i) {
    return grid_rows(o, base, grid[i].first, grid[i].second);
  });
  for (const auto& r : rows) csv += r;
  emit(o, csv, out);
  return kExitOk;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedCircuit parsed = parse_any_as_circuit(read_text_file(o.file));
  const Depth4Circuit& c = parsed.circuit;
  const bool bilayer = o.a > 0 || o.b > 0;
  if (!bilayer && o.t == 0) throw Error(ErrorCode::kInvalidArgument, "reduce needs --t or --a/--b");
  const Depth4Circuit result =
      bilayer ? group_to_bilayer(c, o.a, o.b, o.term_cap) : split_circuit(c, o.t, o.term_cap);
  EquivalenceOptions eo;
  eo.term_cap = o.term_cap;
  const EquivalenceVerdict v = equivalent(c, result, o.trials ? o.trials : o.points, o.seed, eo);
  const ReductionReport rep = make_report(c, result, bilayer ? o.a : o.t, v);
  Json j;
  j["transform"] = bilayer ? "bilayer" : "split";
  j["threshold"] = rep.threshold;
  if (bilayer) j["b"] = o.b;
  j["seed"] = o.seed;
  j["input"] = stats_json(rep.input);
  j["output"] = stats_json(rep.output);
  j["blowup"] = rep.blowup;
  const Json verdict = verdict_json(v);
  for (const auto& [key, value] : verdict.items()) j[key] = value;
  if (o.eps > 0 && !bilayer) j["avg_bottom_fanin_ok"] = avg_bottom_fanin_check(result, o.eps, o.t);
  if (!o.out_path.empty()) {
    write_text_file(o.out_path, format_circuit(result, parsed.attrs));
  } else {
    err << format_circuit(result, parsed.attrs);
  }
  out << j.dump() << "\n";
  return v.equal() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spdlab: shifted-partial-derivative experiments on depth-4 circuits"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out_path, "Output file (default: standard output)");
    cmd->add_option("--term-cap", o.term_cap, "Maximum terms in any expansion");
    cmd->add_option("--seed", o.seed, "Seed of the random streams");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a hard polynomial family");
  gen->add_option("family", o.family, "nw_t | nw | P | Q")
      ->required()
      ->check(CLI::IsMember({"nw_t", "nw", "P", "Q"}));
  gen->add_option("--n", o.n, "Prime power n")->required();
  gen->add_option("--t", o.t, "Block width / design parameter");
  gen->add_option("--p", o.p, "Degree bound of S_p");
  gen->add_flag("--expand", o.expand, "Write P expanded instead of as a circuit");
  gen->add_option("--base", o.base, "Q: ratio between consecutive block widths");
  gen->add_option("--top", o.top, "Q: largest selector index (default floor(log_base n))");
  common(gen);

  CLI::App* measure = app.add_subcommand("measure", "Shifted-partial-derivative dimension");
  measure->add_option("file", o.file, "Polynomial or circuit file")->required();
  measure->add_option("--k", o.k, "Derivative order")->required();
  measure->add_option("--ell", o.ell, "Shift degree bound")->required();
  measure->add_option("--matrix-cap", o.matrix_cap, "Row and column cap");
  measure->add_flag("--oracle", o.oracle, "Use the slow independent oracle");
  common(measure);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite (JSON lines)");
  verify->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"derivative", "distance", "nice-set", "reduction", "subadditivity"}));
  verify->add_option("--n", o.n, "Prime power n");
  verify->add_option("--t", o.t, "Block width");
  verify->add_option("--p", o.p, "Degree bound of S_p");
  verify->add_option("--k", o.k, "Derivative order");
  verify->add_option("--ell", o.ell, "Shift degree bound");
  verify->add_option("--alpha", o.alpha, "Nice-set rate constant (default 0.5)");
  verify->add_option("--ttilde", o.t_tilde, "Code length for the nice set");
  verify->add_option("--trials", o.trials, "Random instances");
  verify->add_option("--points", o.points, "Random evaluation points per equivalence check");
  verify->add_option("--drop-term", o.drop_term, "Delete one term of P before checking");
  common(verify);

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate closed-form bounds (CSV)");
  bounds->add_option("--bound", o.bound, "all | mainthm0 | gkss | tavenas | lowdeg | sps | sps_times_r")
      ->check(CLI::IsMember({"all", "mainthm0", "gkss", "tavenas", "lowdeg", "sps", "sps_times_r"}));
  bounds->add_option("--n", o.n_grid, "Comma-separated n grid")->delimiter(',');
  bounds->add_option("--t", o.t_grid, "Comma-separated t grid")->delimiter(',');
  bounds->add_option("--c", o.c, "Constant in z = ceil(c n / t)");
  bounds->add_option("--alpha", o.alpha, "Constant alpha of the E ratio");
  bounds->add_option("--log-base", o.log_base, "2 or e")->check(CLI::IsMember({"2", "e"}));
  bounds->add_option("--k", o.k, "Derivative order");
  bounds->add_option("--ell", o.ell, "Shift degree bound");
  bounds->add_option("--eps", o.eps, "Threshold constant");
  bounds->add_option("--d", o.bd, "Factor count (lowdeg)");
  bounds->add_option("--D", o.bD, "Degree-sum bound");
  bounds->add_option("--N", o.bN, "Number of variables");
  bounds->add_option("--s", o.bs, "Size");
  bounds->add_option("--m", o.bm, "Scale count (sps)");
  bounds->add_option("--r", o.br, "Top fan-in (sps_times_r)");
  bounds->add_option("--degree", o.n, "n for the lowdeg/sps bounds");
  common(bounds);

  CLI::App* reduce = app.add_subcommand("reduce", "Apply a depth-4 transform and check it");
  reduce->add_option("file", o.file, "Polynomial or circuit file")->required();
  reduce->add_option("--t", o.t, "Split threshold");
  reduce->add_option("--a", o.a, "Bilayer factor degree bound");
  reduce->add_option("--b", o.b, "Bilayer factor count bound");
  reduce->add_option("--eps", o.eps, "Report the average bottom fan-in check for eps");
  reduce->add_option("--trials", o.trials, "Random evaluation points");
  common(reduce);

  std::vector<const char*> argv = {"spdlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  if (bounds->parsed() && bounds->count("--n") == 0) o.n_grid = {"1024", "2048", "4096", "8192", "16384"};
  if (bounds->parsed() && bounds->count("--t") == 0) o.t_grid = {"64", "128", "256"};
  if (bounds->parsed() && bounds->count("--alpha") == 0) o.alpha = 1.0;

  try {
    if (gen->parsed()) return cmd_gen(o, out, err);
    if (measure->parsed()) return cmd_measure(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    return cmd_reduce(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_cap() ? kExitResourceCap : kExitBadInput;
  }
}

}  // namespace spdlab
