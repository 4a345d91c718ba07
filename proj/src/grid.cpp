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

#include "greenprior/grid.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "greenprior/error.hpp"

namespace greenprior {

std::optional<std::pair<std::size_t, std::size_t>> GridGeoref::cell_at(
    double x, double y) const {
  const double u = (x - x_origin) / cell_size;
  const double v = (y - y_origin) / cell_size;
  if (u < 0.0 || v < 0.0 || u >= static_cast<double>(ncols) ||
      v >= static_cast<double>(nrows)) {
    return std::nullopt;
  }
  auto col = static_cast<std::size_t>(u);
  auto row = static_cast<std::size_t>(v);
  if (col >= ncols) col = ncols - 1;
  if (row >= nrows) row = nrows - 1;
  return std::make_pair(row, col);
}

bool GridGeoref::aligned_with(const GridGeoref& other) const {
  return ncols == other.ncols && nrows == other.nrows &&
         x_origin == other.x_origin && y_origin == other.y_origin &&
         std::fabs(cell_size - other.cell_size) <= 1e-9 &&
         nodata == other.nodata;
}

void GridGeoref::validate() const {
  if (ncols < 1 || nrows < 1) {
    throw DataError("grid must have at least one row and column");
  }
  if (!(cell_size > 0.0)) {
    throw DataError("grid cell size must be positive");
  }
  if (std::isnan(nodata)) {
    throw DataError("nodata sentinel must not be NaN");
  }
}

Grid::Grid(GridGeoref g, std::string layer_name, std::vector<double> vals)
    : georef(g), name(std::move(layer_name)), values(std::move(vals)) {
  validate();
}

Grid Grid::filled(GridGeoref g, std::string layer_name, double fill) {
  Grid grid;
  grid.georef = g;
  grid.name = std::move(layer_name);
  grid.values.assign(g.cell_count(), fill);
  grid.validate();
  return grid;
}

void Grid::validate() const {
  georef.validate();
  if (values.size() != georef.cell_count()) {
    throw DataError("grid '" + name + "': value count " +
                    std::to_string(values.size()) + " != ncols*nrows " +
                    std::to_string(georef.cell_count()));
  }
  for (double v : values) {
    if (std::isnan(v)) {
      throw DataError("grid '" + name + "': NaN is not a permitted value");
    }
  }
}

const Grid* Stack::find(const std::string& name) const {
  for (const auto& g : layers) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::vector<std::string> Stack::layer_names() const {
  std::vector<std::string> names;
  names.reserve(layers.size());
  for (const auto& g : layers) names.push_back(g.name);
  return names;
}

namespace {

// Index of the source cell whose center is nearest to coordinate c along one
// axis, given c already mapped to source cell units (c = (x - origin)/size).
// A value landing exactly on an interior cell edge is equidistant to the two
// neighboring centers; the lower index wins.
std::size_t nearest_index(double u, std::size_t n) {
  double f = std::floor(u);
  if (f == u && u >= 1.0) f -= 1.0;  // edge tie -> lower cell
  if (f < 0.0) f = 0.0;
  auto idx = static_cast<std::size_t>(f);
  if (idx >= n) idx = n - 1;
  return idx;
}

}  // namespace

Grid resample_nearest(const Grid& src, const GridGeoref& target) {
  src.validate();
  target.validate();
  if (src.georef.aligned_with(target)) {
    Grid out = src;
    out.georef = target;
    return out;
  }
  Grid out = Grid::filled(target, src.name, target.nodata);
  const GridGeoref& s = src.georef;
  const double sw = s.width();
  const double sh = s.height();
  for (std::size_t row = 0; row < target.nrows; ++row) {
    const double y = target.cell_center_y(row);
    const double v = (y - s.y_origin) / s.cell_size;
    if (v < 0.0 || y > s.y_origin + sh) continue;  // outside the extent
    const std::size_t srow = nearest_index(v, s.nrows);
    for (std::size_t col = 0; col < target.ncols; ++col) {
      const double x = target.cell_center_x(col);
      const double u = (x - s.x_origin) / s.cell_size;
      if (u < 0.0 || x > s.x_origin + sw) continue;
      const std::size_t scol = nearest_index(u, s.ncols);
      double val = src.at(srow, scol);
      out.at(row, col) = src.is_nodata(val) ? target.nodata : val;
    }
  }
  return out;
}

Stack align_stack(const std::vector<Grid>& grids, const GridGeoref& target) {
  if (grids.empty()) {
    throw DataError("align_stack: no input grids");
  }
  target.validate();
  std::set<std::string> seen;
  for (const auto& g : grids) {
    if (!seen.insert(g.name).second) throw DuplicateLayerName(g.name);
  }
  Stack stack;
  stack.georef = target;
  stack.layers.reserve(grids.size());
  for (const auto& g : grids) {
    if (g.georef.aligned_with(target)) {
      stack.layers.push_back(g);
      stack.layers.back().georef = target;
    } else {
      stack.layers.push_back(resample_nearest(g, target));
    }
  }
  return stack;
}

Grid temporal_mean(const std::vector<Grid>& grids) {
  if (grids.empty()) {
    throw DataError("temporal_mean: no input grids");
  }
  const GridGeoref& ref = grids.front().georef;
  for (const auto& g : grids) {
    if (!g.georef.aligned_with(ref)) {
      throw MisalignedGrids("temporal_mean: grid '" + g.name +
                            "' is not aligned");
    }
  }
  Grid out = Grid::filled(ref, grids.front().name, ref.nodata);
  const std::size_t n = ref.cell_count();
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& g : grids) {
      const double v = g.values[i];
      if (!g.is_nodata(v)) {
        sum += v;
        ++count;
      }
    }
    if (count > 0) out.values[i] = sum / static_cast<double>(count);
  }
  return out;
}

}  // namespace greenprior
