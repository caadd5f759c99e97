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

#ifndef TAALWATCH_EXPORT_H_
#define TAALWATCH_EXPORT_H_

#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <string_view>

#include "taalwatch/aggregate.h"
#include "taalwatch/store.h"

namespace taalwatch {

// Writes to a temporary sibling and renames it over the target on commit().
// Destroying an uncommitted writer removes the temporary, leaving any
// existing target untouched.
class AtomicFileWriter {
 public:
  explicit AtomicFileWriter(std::filesystem::path target);
  ~AtomicFileWriter();

  AtomicFileWriter(const AtomicFileWriter&) = delete;
  AtomicFileWriter& operator=(const AtomicFileWriter&) = delete;

  std::ostream& stream() { return out_; }
  // Throws IoError if the data could not be written or renamed.
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

// Plot-data series of the published figures:
//   fig4  date,total
//   fig6  date,neutral,sentiment,total
//   fig7  date,positive,negative
//   fig8  event,date,W,negative,positive,fit_negative,fit_positive
enum class Figure { kFig4, kFig6, kFig7, kFig8 };

Figure parse_figure(std::string_view name);
std::string_view figure_name(Figure f);

// `daily` is a contiguous day series. fig8 emits the pre-event window of
// every event and its fitted lines. Throws DataError if `daily` is empty.
void write_figure(std::ostream& out, Figure figure, std::span<const AggregateRecord> daily,
                  std::span<const EventRecord> events, int window_days = 6);

}  // namespace taalwatch

#endif  // TAALWATCH_EXPORT_H_
