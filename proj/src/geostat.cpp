// Copyright 2026 The greenprior Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "greenprior/geostat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>

#include "greenprior/error.hpp"
#include "greenprior/linalg.hpp"
#include "greenprior/parallel.hpp"

namespace greenprior {

void SphericalVariogram::validate() const {
  if (!(nugget >= 0.0) || !(sill >= nugget)) {
    throw DataError("variogram requires 0 <= nugget <= sill");
  }
  if (!(range > 0.0)) {
    throw DataError("variogram range must be positive");
  }
}

double spherical_gamma(const SphericalVariogram& v, double h) {
  if (h <= 0.0) return 0.0;
  if (h >= v.range) return v.sill;
  const double u = h / v.range;
  return v.nugget + (v.sill - v.nugget) * (1.5 * u - 0.5 * u * u * u);
}

std::vector<VariogramBin> empirical_semivariogram(
    const std::vector<Observation>& obs, std::size_t n_bins, double max_lag) {
  if (obs.size() < 2) {
    throw TooFewStations("empirical semivariogram needs >= 2 observations");
  }
  if (n_bins < 1 || !(max_lag > 0.0)) {
    throw DataError("empirical semivariogram: n_bins >= 1 and max_lag > 0");
  }
  const double width = max_lag / static_cast<double>(n_bins);
  std::vector<double> sums(n_bins, 0.0);
  std::vector<std::size_t> counts(n_bins, 0);
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      const double dx = obs[i].x - obs[j].x;
      const double dy = obs[i].y - obs[j].y;
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d > max_lag) continue;
      auto bin = static_cast<std::size_t>(d / width);
      if (bin >= n_bins) bin = n_bins - 1;  // d == max_lag
      const double diff = obs[i].value - obs[j].value;
      sums[bin] += diff * diff;
      ++counts[bin];
    }
  }
  std::vector<VariogramBin> out;
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (counts[b] == 0) continue;
    VariogramBin vb;
    vb.lag_center = (static_cast<double>(b) + 0.5) * width;
    vb.gamma = sums[b] / (2.0 * static_cast<double>(counts[b]));
    vb.pair_count = counts[b];
    out.push_back(vb);
  }
  return out;
}

namespace {

// Weighted SSE of the spherical model against empirical bins.
double variogram_sse(const std::vector<VariogramBin>& bins,
                     const SphericalVariogram& v) {
  double sse = 0.0;
  for (const auto& b : bins) {
    const double r = spherical_gamma(v, b.lag_center) - b.gamma;
    sse += static_cast<double>(b.pair_count) * r * r;
  }
  return sse;
}

// For a fixed range the model is linear in (nugget, sill):
//   gamma(h) = nugget * (1 - f(h)) + sill * f(h),  f = min(1.5u - 0.5u^3, 1).
// Solve the 2x2 weighted normal equations, then clamp into the feasible
// region (re-solving the active 1-D problem when a constraint binds).
SphericalVariogram fit_for_range(const std::vector<VariogramBin>& bins,
                                 double range) {
  double s_aa = 0, s_ab = 0, s_bb = 0, s_ay = 0, s_by = 0, s_ww = 0, s_yy = 0;
  for (const auto& b : bins) {
    const double w = static_cast<double>(b.pair_count);
    double f = 1.0;
    if (b.lag_center < range) {
      const double u = b.lag_center / range;
      f = 1.5 * u - 0.5 * u * u * u;
    }
    const double a = 1.0 - f;
    s_aa += w * a * a;
    s_ab += w * a * f;
    s_bb += w * f * f;
    s_ay += w * a * b.gamma;
    s_by += w * f * b.gamma;
    s_ww += w;
    s_yy += w * b.gamma;
  }
  double nugget, sill;
  const double det = s_aa * s_bb - s_ab * s_ab;
  if (std::fabs(det) > 1e-14 * std::max(1.0, s_aa * s_bb)) {
    nugget = (s_ay * s_bb - s_by * s_ab) / det;
    sill = (s_aa * s_by - s_ab * s_ay) / det;
  } else {
    // Bins collapse to one effective regressor; fit a flat sill.
    nugget = 0.0;
    sill = s_yy / s_ww;
  }
  if (nugget < 0.0) {
    nugget = 0.0;
    sill = s_bb > 0.0 ? s_by / s_bb : s_yy / s_ww;
  }
  if (sill < nugget) {
    // gamma(h) = c for all bins: weighted mean.
    nugget = sill = s_yy / s_ww;
  }
  if (sill <= 0.0) sill = 1e-12;
  if (nugget < 0.0) nugget = 0.0;
  if (nugget > sill) nugget = sill;
  return SphericalVariogram{nugget, sill, range};
}

}  // namespace

VariogramFit fit_variogram(const std::vector<VariogramBin>& empirical,
                           const SphericalVariogram& initial) {
  if (empirical.size() < 3) {
    throw DataError("fit_variogram needs >= 3 non-empty bins");
  }
  initial.validate();
  double max_lag = 0.0;
  bool all_zero = true;
  for (const auto& b : empirical) {
    max_lag = std::max(max_lag, b.lag_center);
    if (b.gamma != 0.0) all_zero = false;
  }
  if (all_zero) {
    VariogramFit fit;
    fit.model = SphericalVariogram{0.0, 1e-12, 2.0 * max_lag};
    fit.degenerate = true;
    return fit;
  }

  // Coarse range scan picks the basin, golden-section refines it; (nugget,
  // sill) are exact per range.
  const double lo = empirical.front().lag_center * 0.25;
  const double hi = 2.0 * max_lag;
  double best_range = initial.range > 0 ? initial.range : max_lag;
  double best_sse = std::numeric_limits<double>::infinity();
  constexpr int kScan = 96;
  for (int i = 0; i <= kScan; ++i) {
    const double r = lo + (hi - lo) * static_cast<double>(i) / kScan;
    const double sse = variogram_sse(empirical, fit_for_range(empirical, r));
    if (sse < best_sse) {
      best_sse = sse;
      best_range = r;
    }
  }
  {
    const double span = (hi - lo) / kScan;
    double a = std::max(lo, best_range - span);
    double b = std::min(hi, best_range + span);
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = variogram_sse(empirical, fit_for_range(empirical, x1));
    double f2 = variogram_sse(empirical, fit_for_range(empirical, x2));
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = variogram_sse(empirical, fit_for_range(empirical, x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = variogram_sse(empirical, fit_for_range(empirical, x2));
      }
    }
    best_range = 0.5 * (a + b);
  }
  VariogramFit fit;
  fit.model = fit_for_range(empirical, best_range);
  fit.model.validate();
  return fit;
}

// ---------------------------------------------------------------------------
// Simple kriging

struct SimpleKriging::Impl {
  std::vector<double> xs, ys, zs;
  SphericalVariogram model;
  double mean = 0.0;
  std::unique_ptr<LuFactorization> lu;
  mutable std::atomic<std::size_t> negative_variances{0};
};

SimpleKriging::SimpleKriging(const std::vector<Observation>& obs,
                             const SphericalVariogram& v, double known_mean)
    : impl_(std::make_shared<Impl>()) {
  if (obs.empty()) {
    throw TooFewStations("simple kriging needs >= 1 observation");
  }
  v.validate();
  impl_->model = v;
  impl_->mean = known_mean;
  const std::size_t n = obs.size();
  impl_->xs.reserve(n);
  impl_->ys.reserve(n);
  impl_->zs.reserve(n);
  for (const auto& o : obs) {
    impl_->xs.push_back(o.x);
    impl_->ys.push_back(o.y);
    impl_->zs.push_back(o.value);
  }
  // Covariance C(h) = sill - gamma(h); C(0) = sill.
  std::vector<double> c(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i * n + i] = v.sill;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = impl_->xs[i] - impl_->xs[j];
      const double dy = impl_->ys[i] - impl_->ys[j];
      const double h = std::sqrt(dx * dx + dy * dy);
      const double cov = v.sill - spherical_gamma(v, h);
      c[i * n + j] = cov;
      c[j * n + i] = cov;
    }
  }
  impl_->lu = std::make_unique<LuFactorization>(std::move(c), n);
}

KrigingEstimate SimpleKriging::predict(double x, double y) const {
  const Impl& im = *impl_;
  const std::size_t n = im.xs.size();
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = im.xs[i] - x;
    const double dy = im.ys[i] - y;
    const double h = std::sqrt(dx * dx + dy * dy);
    rhs[i] = im.model.sill - spherical_gamma(im.model, h);
  }
  const std::vector<double> weights = im.lu->solve(rhs);
  double estimate = im.mean;
  double reduction = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    estimate += weights[i] * (im.zs[i] - im.mean);
    reduction += weights[i] * rhs[i];
  }
  double variance = im.model.sill - reduction;
  if (variance < 0.0) {
    if (variance < -1e-9) im.negative_variances.fetch_add(1);
    variance = 0.0;
  }
  return KrigingEstimate{estimate, variance};
}

std::size_t SimpleKriging::negative_variance_count() const {
  return impl_->negative_variances.load();
}

KrigingEstimate simple_kriging_predict(const std::vector<Observation>& obs,
                                       const SphericalVariogram& v,
                                       double known_mean, double x, double y) {
  return SimpleKriging(obs, v, known_mean).predict(x, y);
}

CrossValidationResult cross_validate_variogram(
    const std::vector<Observation>& obs,
    const std::vector<SphericalVariogram>& candidates) {
  if (obs.size() < 3) {
    throw TooFewStations("cross validation needs >= 3 observations");
  }
  if (candidates.empty()) {
    throw DataError("cross validation needs >= 1 candidate");
  }
  const std::size_t n = obs.size();
  CrossValidationResult result;
  result.scores.assign(candidates.size(),
                       std::numeric_limits<double>::infinity());
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    double sq_sum = 0.0;
    std::size_t folds = 0;
    std::size_t skipped = 0;
    for (std::size_t hold = 0; hold < n; ++hold) {
      std::vector<Observation> rest;
      rest.reserve(n - 1);
      double mean = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == hold) continue;
        rest.push_back(obs[i]);
        mean += obs[i].value;
      }
      mean /= static_cast<double>(rest.size());
      try {
        const auto est = simple_kriging_predict(rest, candidates[ci], mean,
                                                obs[hold].x, obs[hold].y);
        const double err = est.estimate - obs[hold].value;
        sq_sum += err * err;
        ++folds;
      } catch (const SingularSystem&) {
        ++skipped;
      }
    }
    if (skipped * 2 > n || folds == 0) continue;  // disqualified
    result.scores[ci] = std::sqrt(sq_sum / static_cast<double>(folds));
  }
  std::size_t best = candidates.size();
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    if (best == candidates.size() || result.scores[ci] < result.scores[best]) {
      best = ci;  // strict <: ties keep the earlier candidate
    }
  }
  if (best == candidates.size() ||
      !std::isfinite(result.scores[best])) {
    throw DataError("every variogram candidate was disqualified");
  }
  result.best = candidates[best];
  result.best_index = best;
  return result;
}

std::vector<SphericalVariogram> default_variogram_candidates(
    const SphericalVariogram& fitted) {
  fitted.validate();
  std::vector<SphericalVariogram> out;
  const double s = fitted.sill > 0 ? fitted.sill : 1e-12;
  for (double nf : {0.0, 0.1, 0.25}) {
    for (double rf : {0.5, 1.0, 1.5, 2.0}) {
      out.push_back(SphericalVariogram{nf * s, s, rf * fitted.range});
    }
  }
  return out;
}

std::vector<Date> filter_days(const std::vector<Observation>& all_obs,
                              std::size_t min_stations) {
  std::map<Date, std::vector<std::string>> stations_by_date;
  for (const auto& o : all_obs) {
    stations_by_date[o.date].push_back(o.station_id);
  }
  std::vector<Date> retained;
  for (auto& [date, ids] : stations_by_date) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() >= min_stations) retained.push_back(date);
  }
  return retained;
}

Grid krige_grid(const std::vector<Observation>& obs,
                const SphericalVariogram& v, const GridGeoref& target) {
  if (obs.size() < 2) {
    throw TooFewStations("krige_grid needs >= 2 observations");
  }
  target.validate();
  double mean = 0.0;
  for (const auto& o : obs) mean += o.value;
  mean /= static_cast<double>(obs.size());

  const SimpleKriging kriging(obs, v, mean);
  Grid out = Grid::filled(target, "PM25_" + obs.front().date.to_string(),
                          target.nodata);
  parallel_for(target.nrows, [&](std::size_t row) {
    const double y = target.cell_center_y(row);
    for (std::size_t col = 0; col < target.ncols; ++col) {
      out.at(row, col) = kriging.predict(target.cell_center_x(col), y).estimate;
    }
  });
  if (kriging.negative_variance_count() > 0) {
    throw NumericError("kriging produced variances below -1e-9");
  }
  return out;
}

ValidationReport validate_points(const Grid& grid,
                                 const std::vector<Observation>& obs) {
  double sq_sum = 0.0, abs_sum = 0.0, diff_sum = 0.0;
  std::size_t n = 0;
  for (const auto& o : obs) {
    const auto cell = grid.georef.cell_at(o.x, o.y);
    if (!cell) continue;
    const double predicted = grid.at(cell->first, cell->second);
    if (grid.is_nodata(predicted)) continue;
    const double d = predicted - o.value;
    sq_sum += d * d;
    abs_sum += std::fabs(d);
    diff_sum += d;
    ++n;
  }
  if (n == 0) throw NoComparablePoints();
  ValidationReport report;
  report.n = n;
  report.rmse = std::sqrt(sq_sum / static_cast<double>(n));
  report.mae = abs_sum / static_cast<double>(n);
  report.bias = diff_sum / static_cast<double>(n);
  return report;
}

std::vector<std::pair<Date, std::vector<Observation>>> group_by_date(
    const std::vector<Observation>& obs) {
  std::map<Date, std::vector<Observation>> grouped;
  for (const auto& o : obs) grouped[o.date].push_back(o);
  std::vector<std::pair<Date, std::vector<Observation>>> out;
  out.reserve(grouped.size());
  for (auto& [date, v] : grouped) out.emplace_back(date, std::move(v));
  return out;
}

}  // namespace greenprior
