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

#ifndef TAALWATCH_GEO_H_
#define TAALWATCH_GEO_H_

namespace taalwatch {

// Mean Earth radius. No ellipsoidal correction is applied anywhere.
inline constexpr double kEarthRadiusKm = 6371.0;

// A WGS84-style coordinate in decimal degrees. Construction validates the
// ranges lat in [-90, 90] and lon in [-180, 180]; violations throw DataError.
class GeoPoint {
 public:
  GeoPoint(double lat, double lon);

  double lat() const { return lat_; }
  double lon() const { return lon_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double lat_;
  double lon_;
};

// Closed disc on the sphere: a point exactly radius_km away is inside.
class GeoFence {
 public:
  GeoFence(GeoPoint center, double radius_km);

  // Taal Volcano crater (14N, 121E), 10 km.
  static GeoFence taal_default() { return GeoFence(GeoPoint(14.0, 121.0), 10.0); }

  const GeoPoint& center() const { return center_; }
  double radius_km() const { return radius_km_; }

 private:
  GeoPoint center_;
  double radius_km_;
};

// Great-circle distance on a sphere of radius kEarthRadiusKm.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

bool in_fence(const GeoPoint& p, const GeoFence& fence);

// Point reached by travelling distance_km from origin along the initial
// bearing (radians, clockwise from north). Longitude is wrapped into
// [-180, 180].
GeoPoint destination(const GeoPoint& origin, double bearing_rad, double distance_km);

}  // namespace taalwatch

#endif  // TAALWATCH_GEO_H_
