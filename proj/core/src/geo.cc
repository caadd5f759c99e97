// Copyright 2026 The Taalwatch Authors.
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

#include "taalwatch/geo.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "taalwatch/errors.h"

namespace taalwatch {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

GeoPoint::GeoPoint(double lat, double lon) : lat_(lat), lon_(lon) {
  if (!(lat >= -90.0 && lat <= 90.0)) {
    throw DataError("latitude out of range [-90, 90]: " + std::to_string(lat));
  }
  if (!(lon >= -180.0 && lon <= 180.0)) {
    throw DataError("longitude out of range [-180, 180]: " + std::to_string(lon));
  }
}

GeoFence::GeoFence(GeoPoint center, double radius_km) : center_(center), radius_km_(radius_km) {
  if (!(radius_km > 0.0) || !std::isfinite(radius_km)) {
    throw DataError("geofence radius must be a positive number of km");
  }
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  const double lat1 = a.lat() * kDegToRad;
  const double lat2 = b.lat() * kDegToRad;
  const double dlat = (b.lat() - a.lat()) * kDegToRad;
  const double dlon = (b.lon() - a.lon()) * kDegToRad;
  const double s_lat = std::sin(dlat / 2.0);
  const double s_lon = std::sin(dlon / 2.0);
  const double h = s_lat * s_lat + std::cos(lat1) * std::cos(lat2) * s_lon * s_lon;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

bool in_fence(const GeoPoint& p, const GeoFence& fence) {
  return haversine_km(p, fence.center()) <= fence.radius_km();
}

GeoPoint destination(const GeoPoint& origin, double bearing_rad, double distance_km) {
  const double delta = distance_km / kEarthRadiusKm;
  const double lat1 = origin.lat() * kDegToRad;
  const double lon1 = origin.lon() * kDegToRad;
  const double sin_lat2 =
      std::sin(lat1) * std::cos(delta) + std::cos(lat1) * std::sin(delta) * std::cos(bearing_rad);
  const double lat2 = std::asin(std::clamp(sin_lat2, -1.0, 1.0));
  const double lon2 =
      lon1 + std::atan2(std::sin(bearing_rad) * std::sin(delta) * std::cos(lat1),
                        std::cos(delta) - std::sin(lat1) * std::sin(lat2));
  double lon_deg = std::remainder(lon2 / kDegToRad, 360.0);
  if (lon_deg < -180.0) lon_deg += 360.0;
  if (lon_deg > 180.0) lon_deg -= 360.0;
  return GeoPoint(std::clamp(lat2 / kDegToRad, -90.0, 90.0), lon_deg);
}

}  // namespace taalwatch
