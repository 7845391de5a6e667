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

#ifndef SPDLAB_TESTS_PINNED_POINTS_H_
#define SPDLAB_TESTS_PINNED_POINTS_H_

#include <cmath>
#include <string>
#include <vector>

#include "spdlab/bounds.h"

namespace spdlab::testing {

// A bound evaluated both exactly and on the log scale.
struct PinnedPoint {
  std::string label;
  double exact_log2 = 0;
  double log_path_log2 = 0;
};

inline PinnedPoint binom_point(int64_t a, int64_t b) {
  return {"binom(" + std::to_string(a) + "," + std::to_string(b) + ")",
          log2_of(mpq_class(binom_exact(a, b))), static_cast<double>(binom_log2(a, b))};
}

inline PinnedPoint report_point(const std::string& label, const BoundReport& r) {
  return {label, r.exact ? log2_of(*r.exact) : NAN, r.log2_value};
}

// Twenty fixed evaluations spanning the direct-sum and log-gamma regimes and
// every bound with an exact form.
inline std::vector<PinnedPoint> pinned_points() {
  std::vector<PinnedPoint> pts;
  for (auto [a, b] : std::vector<std::pair<int64_t, int64_t>>{{2000, 37},
                                                               {2000, 1000},
                                                               {5000, 100},
                                                               {10000, 5000},
                                                               {100000, 65},
                                                               {100000, 500},
                                                               {1000000, 1000},
                                                               {300, 150},
                                                               {64, 32},
                                                               {1000, 999}}) {
    pts.push_back(binom_point(a, b));
  }
  auto lowdeg = [](double d, double k, double N, double D, double ell) {
    BoundInputs in;
    in.d = d;
    in.k = k;
    in.N = N;
    in.D = D;
    in.ell = ell;
    return lowdeg_bound(in);
  };
  pts.push_back(report_point("lowdeg(4,2,4,2,1)", lowdeg(4, 2, 4, 2, 1)));
  pts.push_back(report_point("lowdeg(20,5,16,30,10)", lowdeg(20, 5, 16, 30, 10)));
  pts.push_back(report_point("lowdeg(100,80,200,150,300)", lowdeg(100, 80, 200, 150, 300)));

  BoundInputs sps;
  sps.n = 16;
  sps.k = 4;
  sps.m = 4;
  sps.eps = 0.5;
  sps.s = 10;
  sps.N = 16;
  sps.ell = 8;
  pts.push_back(report_point("sps(16,4,4,0.5,10,16,8)", sps_gate_bound(sps)));
  sps.r = 3;
  pts.push_back(report_point("sps_times_r(r=3)", sps_gate_bound(sps, true)));

  BoundInputs g;
  g.n = 100;
  g.t = 10;
  g = gkss_auto_params(g);
  pts.push_back(report_point("gkss_perm(100,10)", gkss_perm_lower(g)));
  g.n = 64;
  g.t = 8;
  g = gkss_auto_params(g);
  pts.push_back(report_point("gkss_perm(64,8)", gkss_perm_lower(g)));

  BoundInputs cm;
  cm.N = 16;
  cm.r = 0;
  cm.z = 4;
  cm.u = 1;
  cm.ell = 10;
  cm.d = 100;
  cm.log2_s_distinct = 20;
  pts.push_back(report_point("cm_topfanin(r=0)", cm_topfanin_bound(cm)));
  pts.push_back(report_point("tavenas(4096,64,4096^2)", tavenas_topfanin(4096, 64, 4096.0 * 4096)));
  pts.push_back(report_point("tavenas(1000,10,10^6)", tavenas_topfanin(1000, 10, 1e6)));
  return pts;
}

}  // namespace spdlab::testing

#endif  // SPDLAB_TESTS_PINNED_POINTS_H_
