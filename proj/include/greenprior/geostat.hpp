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

#ifndef GREENPRIOR_GEOSTAT_HPP
#define GREENPRIOR_GEOSTAT_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "greenprior/date.hpp"
#include "greenprior/grid.hpp"

namespace greenprior {

// One station measurement. (station_id, date) pairs are unique per dataset.
struct Observation {
  std::string station_id;
  double x = 0.0;
  double y = 0.0;
  Date date;
  double value = 0.0;
};

// Spherical semivariogram model: gamma(0) = 0, then a nugget jump and a
// cubic rise to the sill at h = range.
struct SphericalVariogram {
  double nugget = 0.0;
  double sill = 1.0;
  double range = 1.0;

  void validate() const;  // 0 <= nugget <= sill, range > 0
};

double spherical_gamma(const SphericalVariogram& v, double h);

// Point-versus-grid comparison statistics. Bias is mean(predicted - observed).
struct ValidationReport {
  double rmse = 0.0;
  double mae = 0.0;
  double bias = 0.0;
  std::size_t n = 0;
};

struct VariogramBin {
  double lag_center = 0.0;
  double gamma = 0.0;
  std::size_t pair_count = 0;
};

// Matheron estimator over equal-width lag bins on [0, max_lag]; bins with no
// pairs are omitted. Requires >= 2 observations (one date).
std::vector<VariogramBin> empirical_semivariogram(
    const std::vector<Observation>& obs, std::size_t n_bins, double max_lag);

struct VariogramFit {
  SphericalVariogram model;
  bool degenerate = false;  // all empirical gammas were zero
};

// Weighted least squares fit of the spherical model to empirical bins
// (weights = pair counts), by block coordinate descent: (nugget, sill) solve
// exactly for a fixed range, the range is line-searched, repeat.
VariogramFit fit_variogram(const std::vector<VariogramBin>& empirical,
                           const SphericalVariogram& initial);

struct KrigingEstimate {
  double estimate = 0.0;
  double variance = 0.0;
};

// Simple kriging with known mean under covariance C(h) = sill - gamma(h).
// Throws SingularSystem when station geometry degenerates (duplicates).
KrigingEstimate simple_kriging_predict(const std::vector<Observation>& obs,
                                       const SphericalVariogram& v,
                                       double known_mean, double x, double y);

// Shared station-set solver: factor the covariance matrix once, then predict
// per target point. Used by krige_grid so per-cell work is a back-substitute.
class SimpleKriging {
 public:
  SimpleKriging(const std::vector<Observation>& obs,
                const SphericalVariogram& v, double known_mean);
  KrigingEstimate predict(double x, double y) const;

  // Count of predictions whose raw variance dipped below -1e-9 before
  // clamping; anything nonzero indicates a numerical problem.
  std::size_t negative_variance_count() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct CrossValidationResult {
  SphericalVariogram best;
  std::vector<double> scores;  // LOOCV RMSE per candidate, +inf if disqualified
  std::size_t best_index = 0;
};

// Leave-one-out cross validation across candidate variograms; the known mean
// per fold is the mean of the remaining stations. Singular folds are skipped;
// a candidate with more than half its folds skipped is disqualified.
CrossValidationResult cross_validate_variogram(
    const std::vector<Observation>& obs,
    const std::vector<SphericalVariogram>& candidates);

// Default candidate grid around a WLS fit: nugget in {0, 0.1, 0.25} x sill,
// range in {0.5, 1, 1.5, 2} x fitted range.
std::vector<SphericalVariogram> default_variogram_candidates(
    const SphericalVariogram& fitted);

// Dates whose distinct station count reaches min_stations, sorted ascending.
std::vector<Date> filter_days(const std::vector<Observation>& all_obs,
                              std::size_t min_stations = 10);

// Kriges one date's observations onto every cell center of the target; the
// known mean is that date's observation mean. Output named "PM25_<date>".
Grid krige_grid(const std::vector<Observation>& obs,
                const SphericalVariogram& v, const GridGeoref& target);

// Compares observations against the value of their containing cell.
// Observations outside the extent or on nodata cells are excluded; throws
// NoComparablePoints when nothing remains.
ValidationReport validate_points(const Grid& grid,
                                 const std::vector<Observation>& obs);

// Convenience: group one dataset by date (ascending date order).
std::vector<std::pair<Date, std::vector<Observation>>> group_by_date(
    const std::vector<Observation>& obs);

}  // namespace greenprior

#endif  // GREENPRIOR_GEOSTAT_HPP
