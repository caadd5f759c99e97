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

#ifndef TAALWATCH_MICROPOST_H_
#define TAALWATCH_MICROPOST_H_

#include <cstddef>
#include <string>

#include "taalwatch/geo.h"
#include "taalwatch/time.h"

namespace taalwatch {

inline constexpr std::size_t kMaxTextCodepoints = 1000;

// One geolocated, timestamped public post.
struct Micropost {
  std::string id;
  Timestamp ts;
  GeoPoint geo{0.0, 0.0};
  std::string user;
  std::string text;

  friend bool operator==(const Micropost&, const Micropost&) = default;
};

}  // namespace taalwatch

#endif  // TAALWATCH_MICROPOST_H_
