// Copyright 2026 The qroute Authors
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

#include "qroute/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qroute {

SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          const SimplexOptions& opt) {
  const std::size_t dim = start.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead needs dimension >= 1");

  SimplexResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> pts(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += opt.initial_step;
  std::vector<double> vals(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(dim + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    // Stable so equal values keep vertex order; keeps runs reproducible.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> v2;
    for (auto i : order) {
      p2.push_back(pts[i]);
      v2.push_back(vals[i]);
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };
  auto along = [&](const std::vector<double>& c, const std::vector<double>& w,
                   double t) {
    std::vector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = c[i] + t * (w[i] - c[i]);
    return out;
  };

  sort_simplex();
  res.trace.push_back(vals.front());
  while (res.evaluations < opt.max_evaluations &&
         vals.back() - vals.front() > opt.tolerance) {
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += pts[k][i] / dim;

    const auto reflected = along(centroid, pts[dim], -1.0);
    const double fr = eval(reflected);
    if (fr < vals.front()) {
      const auto expanded = along(centroid, pts[dim], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[dim] = expanded;
        vals[dim] = fe;
      } else {
        pts[dim] = reflected;
        vals[dim] = fr;
      }
    } else if (fr < vals[dim - 1]) {
      pts[dim] = reflected;
      vals[dim] = fr;
    } else {
      const bool outside = fr < vals[dim];
      const auto contracted =
          outside ? along(centroid, pts[dim], -0.5) : along(centroid, pts[dim], 0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, vals[dim])) {
        pts[dim] = contracted;
        vals[dim] = fc;
      } else {
        for (std::size_t k = 1; k <= dim; ++k) {
          pts[k] = along(pts[0], pts[k], 0.5);
          vals[k] = eval(pts[k]);
        }
      }
    }
    sort_simplex();
    res.trace.push_back(std::min(res.trace.back(), vals.front()));
  }
  res.x = pts.front();
  res.value = vals.front();
  return res;
}

}  // namespace qroute
