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

#ifndef GREENPRIOR_GRID_HPP
#define GREENPRIOR_GRID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace greenprior {

inline constexpr double kDefaultNodata = -9999.0;

// Georeference of a regular grid. Origin is the lower-left corner; row 0 is
// the southernmost row. Cell (row, col) has its center at
// (x_origin + (col + 0.5) * cell_size, y_origin + (row + 0.5) * cell_size).
struct GridGeoref {
  std::size_t ncols = 0;
  std::size_t nrows = 0;
  double x_origin = 0.0;
  double y_origin = 0.0;
  double cell_size = 1.0;
  double nodata = kDefaultNodata;

  std::size_t cell_count() const { return ncols * nrows; }
  double width() const { return static_cast<double>(ncols) * cell_size; }
  double height() const { return static_cast<double>(nrows) * cell_size; }

  double cell_center_x(std::size_t col) const {
    return x_origin + (static_cast<double>(col) + 0.5) * cell_size;
  }
  double cell_center_y(std::size_t row) const {
    return y_origin + (static_cast<double>(row) + 0.5) * cell_size;
  }

  // Cell containing (x, y); half-open on the upper edges. nullopt outside.
  std::optional<std::pair<std::size_t, std::size_t>> cell_at(double x,
                                                             double y) const;

  // Aligned means all six fields match (cell_size within 1e-9 m).
  bool aligned_with(const GridGeoref& other) const;

  void validate() const;  // throws DataError on bad dimensions
};

// Single-band raster. Values are row-major, south row first. NaN is never
// stored; absence is the nodata sentinel.
struct Grid {
  GridGeoref georef;
  std::string name;
  std::vector<double> values;

  Grid() = default;
  Grid(GridGeoref g, std::string layer_name, std::vector<double> vals);
  static Grid filled(GridGeoref g, std::string layer_name, double fill);

  double& at(std::size_t row, std::size_t col) {
    return values[row * georef.ncols + col];
  }
  double at(std::size_t row, std::size_t col) const {
    return values[row * georef.ncols + col];
  }
  bool is_nodata(double v) const { return v == georef.nodata; }

  void validate() const;  // dimension and NaN checks
};

// Ordered list of grids sharing one georef with unique layer names.
struct Stack {
  GridGeoref georef;
  std::vector<Grid> layers;

  const Grid* find(const std::string& name) const;
  std::vector<std::string> layer_names() const;
};

// Nearest-neighbor resampling onto a target georef. Target cells whose
// center falls outside the source extent become nodata. Distance ties
// (center exactly on a source cell edge) resolve to the lower index.
Grid resample_nearest(const Grid& src, const GridGeoref& target);

// Resamples every grid not already aligned with the target. Throws
// DuplicateLayerName / DataError on an empty list.
Stack align_stack(const std::vector<Grid>& grids, const GridGeoref& target);

// Per-cell arithmetic mean over grids where the cell is valid; cells that
// are nodata everywhere stay nodata. All inputs must be aligned.
Grid temporal_mean(const std::vector<Grid>& grids);

}  // namespace greenprior

#endif  // GREENPRIOR_GRID_HPP
