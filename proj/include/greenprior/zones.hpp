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

#ifndef GREENPRIOR_ZONES_HPP
#define GREENPRIOR_ZONES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "greenprior/grid.hpp"

namespace greenprior {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// One or more explicitly closed rings (first vertex repeated last). Multiple
// rings combine even-odd, so interior rings punch holes.
struct Zone {
  std::vector<std::vector<Point>> rings;
  std::map<std::string, double> attributes;
};

// Polygonal partition carrying per-zone numeric attributes (one value per
// layer name). All zones must share the same attribute key set.
struct ZoneSet {
  std::vector<Zone> zones;

  void validate() const;  // ring closure, vertex counts, uniform keys
};

// Even-odd containment test; points exactly on an edge count as inside.
bool zone_contains(const Zone& zone, Point p);

// Burns the named attribute onto the target grid. Each cell takes the value
// of the zone covering the largest share of a subsamples_per_axis^2 regular
// subgrid of sample points (zones earlier in the list claim boundary points
// and win equal-coverage ties). Cells no zone touches become nodata.
Grid rasterize_zones(const ZoneSet& zones, const std::string& attribute,
                     const GridGeoref& target,
                     std::size_t subsamples_per_axis = 4);

}  // namespace greenprior

#endif  // GREENPRIOR_ZONES_HPP
