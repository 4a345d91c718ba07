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

#include "greenprior/zones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "greenprior/error.hpp"

namespace greenprior {

void ZoneSet::validate() const {
  const std::map<std::string, double>* reference = nullptr;
  for (std::size_t zi = 0; zi < zones.size(); ++zi) {
    const Zone& zone = zones[zi];
    if (zone.rings.empty()) {
      throw DataError("zone " + std::to_string(zi) + " has no rings");
    }
    for (const auto& ring : zone.rings) {
      if (ring.size() < 4) {
        throw DataError("zone " + std::to_string(zi) +
                        ": ring needs at least 3 vertices plus closure");
      }
      if (ring.front().x != ring.back().x || ring.front().y != ring.back().y) {
        throw DataError("zone " + std::to_string(zi) +
                        ": ring is not explicitly closed");
      }
    }
    if (reference == nullptr) {
      reference = &zone.attributes;
    } else if (zone.attributes.size() != reference->size() ||
               !std::equal(zone.attributes.begin(), zone.attributes.end(),
                           reference->begin(),
                           [](const auto& a, const auto& b) {
                             return a.first == b.first;
                           })) {
      throw DataError("zone attributes do not share one key set");
    }
  }
}

namespace {

bool point_on_segment(Point p, Point a, Point b) {
  const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  if (cross != 0.0) return false;
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
         p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool zone_contains(const Zone& zone, Point p) {
  bool inside = false;
  for (const auto& ring : zone.rings) {
    const std::size_t n = ring.size() - 1;  // last vertex repeats the first
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = ring[i];
      const Point b = ring[i + 1];
      if (point_on_segment(p, a, b)) return true;
      // Even-odd ray cast toward +x, half-open in y to avoid double-counting
      // vertices.
      if ((a.y > p.y) != (b.y > p.y)) {
        const double x_hit = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
        if (p.x < x_hit) inside = !inside;
      }
    }
  }
  return inside;
}

Grid rasterize_zones(const ZoneSet& zones, const std::string& attribute,
                     const GridGeoref& target,
                     std::size_t subsamples_per_axis) {
  target.validate();
  zones.validate();
  if (subsamples_per_axis < 1) {
    throw DataError("rasterize_zones: subsamples_per_axis must be >= 1");
  }
  std::vector<double> attr_values;
  attr_values.reserve(zones.zones.size());
  for (const auto& zone : zones.zones) {
    auto it = zone.attributes.find(attribute);
    if (it == zone.attributes.end()) throw UnknownAttribute(attribute);
    attr_values.push_back(it->second);
  }

  // Zone bounding boxes cut the per-point containment work down.
  struct Bbox {
    double xmin, xmax, ymin, ymax;
  };
  std::vector<Bbox> boxes;
  boxes.reserve(zones.zones.size());
  for (const auto& zone : zones.zones) {
    Bbox b{std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
    for (const auto& ring : zone.rings) {
      for (const auto& v : ring) {
        b.xmin = std::min(b.xmin, v.x);
        b.xmax = std::max(b.xmax, v.x);
        b.ymin = std::min(b.ymin, v.y);
        b.ymax = std::max(b.ymax, v.y);
      }
    }
    boxes.push_back(b);
  }

  Grid out = Grid::filled(target, attribute, target.nodata);
  const std::size_t k = subsamples_per_axis;
  const double step = target.cell_size / static_cast<double>(k);
  std::vector<std::size_t> hits(zones.zones.size());
  for (std::size_t row = 0; row < target.nrows; ++row) {
    const double y0 = target.y_origin + static_cast<double>(row) * target.cell_size;
    for (std::size_t col = 0; col < target.ncols; ++col) {
      const double x0 =
          target.x_origin + static_cast<double>(col) * target.cell_size;
      std::fill(hits.begin(), hits.end(), 0);
      for (std::size_t sy = 0; sy < k; ++sy) {
        const double py = y0 + (static_cast<double>(sy) + 0.5) * step;
        for (std::size_t sx = 0; sx < k; ++sx) {
          const double px = x0 + (static_cast<double>(sx) + 0.5) * step;
          for (std::size_t zi = 0; zi < zones.zones.size(); ++zi) {
            const Bbox& b = boxes[zi];
            if (px < b.xmin || px > b.xmax || py < b.ymin || py > b.ymax) {
              continue;
            }
            if (zone_contains(zones.zones[zi], Point{px, py})) {
              ++hits[zi];
              break;  // first zone in list order claims the point
            }
          }
        }
      }
      std::size_t best = zones.zones.size();
      std::size_t best_hits = 0;
      for (std::size_t zi = 0; zi < hits.size(); ++zi) {
        if (hits[zi] > best_hits) {  // strict: earlier zone wins ties
          best_hits = hits[zi];
          best = zi;
        }
      }
      if (best < zones.zones.size()) out.at(row, col) = attr_values[best];
    }
  }
  return out;
}

}  // namespace greenprior
