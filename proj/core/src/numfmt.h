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

#ifndef TAALWATCH_SRC_NUMFMT_H_
#define TAALWATCH_SRC_NUMFMT_H_

#include <cmath>
#include <cstdio>
#include <string>

namespace taalwatch::internal {

// Shortest-ish decimal form used in every CSV output: 12 significant digits,
// "inf"/"-inf"/"nan" for non-finite values.
inline std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace taalwatch::internal

#endif  // TAALWATCH_SRC_NUMFMT_H_
