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

#include <gtest/gtest.h>

#include <sstream>

#include "taalwatch/errors.h"
#include "taalwatch/export.h"
#include "test_util.h"

namespace taalwatch {
namespace {

using std::chrono::days;
using testing::TempDir;
using testing::ymd;

std::vector<AggregateRecord> noiseless_ramp_series() {
  std::vector<std::int64_t> neg(10, 90), pos(10, 340);
  for (int w = 0; w <= 6; ++w) {
    neg.push_back(40 + 100 * w);
    pos.push_back(410 - 60 * w);
  }
  return testing::daily_series(ymd(2013, 1, 17), neg, pos, 560);
}

std::string render(Figure fig, const std::vector<AggregateRecord>& daily,
                   const std::vector<EventRecord>& events = {}) {
  std::ostringstream out;
  write_figure(out, fig, daily, events);
  return out.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(WriteFigure, EmptyWindowIsAnError) {
  EXPECT_THROW(render(Figure::kFig4, {}), DataError);
}

TEST(WriteFigure, Fig4IsDailyTotals) {
  const auto daily = testing::daily_series(ymd(2013, 2, 1), {1, 2}, {3, 4}, 5);
  EXPECT_EQ(render(Figure::kFig4, daily), "date,total\n2013-02-01,9\n2013-02-02,11\n");
}

TEST(WriteFigure, Fig6RowsPartitionTheTotal) {
  const auto rows = csv_rows(render(Figure::kFig6, noiseless_ramp_series()));
  ASSERT_EQ(rows.size(), 17u);
  for (const auto& r : rows) EXPECT_EQ(std::stoll(r[1]) + std::stoll(r[2]), std::stoll(r[3]));
}

TEST(WriteFigure, Fig7ProjectsPositiveAndNegative) {
  const auto daily = noiseless_ramp_series();
  const auto rows = csv_rows(render(Figure::kFig7, daily));
  ASSERT_EQ(rows.size(), daily.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][0], format_date(daily[i].date()));
    EXPECT_EQ(std::stoll(rows[i][1]), daily[i].positive);
    EXPECT_EQ(std::stoll(rows[i][2]), daily[i].negative);
  }
}

TEST(WriteFigure, Fig8FittedColumnsEqualNoiselessData) {
  const auto daily = noiseless_ramp_series();
  const std::vector<EventRecord> events{{ymd(2013, 2, 2), "FKE"}, {ymd(2014, 1, 16), "FKE"}};
  const auto rows = csv_rows(render(Figure::kFig8, daily, events));
  ASSERT_EQ(rows.size(), 7u);  // the second event lies outside the series
  for (std::size_t w = 0; w < rows.size(); ++w) {
    EXPECT_EQ(rows[w][0], "2013-02-02");
    EXPECT_EQ(rows[w][2], std::to_string(w));
    EXPECT_DOUBLE_EQ(std::stod(rows[w][5]), std::stod(rows[w][3]));
    EXPECT_DOUBLE_EQ(std::stod(rows[w][6]), std::stod(rows[w][4]));
  }
  EXPECT_EQ(rows.front()[1], "2013-01-27");
}

TEST(WriteFigure, Fig8WithoutCoveredEventsIsAnError) {
  const std::vector<EventRecord> events{{ymd(2014, 1, 16), "FKE"}};
  EXPECT_THROW(render(Figure::kFig8, noiseless_ramp_series(), events), DataError);
}

TEST(Figure, NamesRoundTrip) {
  for (Figure f : {Figure::kFig4, Figure::kFig6, Figure::kFig7, Figure::kFig8}) {
    EXPECT_EQ(parse_figure(figure_name(f)), f);
  }
  EXPECT_THROW(parse_figure("fig5"), DataError);
}

std::size_t entries_in(const std::filesystem::path& dir) {
  return static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(dir),
                                                std::filesystem::directory_iterator{}));
}

TEST(AtomicFileWriter, CommitReplacesTheTarget) {
  TempDir dir;
  testing::write_file(dir / "out.csv", "old\n");
  {
    AtomicFileWriter w(dir / "out.csv");
    w.stream() << "new\n";
    EXPECT_EQ(testing::read_file(dir / "out.csv"), "old\n");
    w.commit();
  }
  EXPECT_EQ(testing::read_file(dir / "out.csv"), "new\n");
  EXPECT_EQ(entries_in(dir.path()), 1u);
}

TEST(AtomicFileWriter, FailureMidWriteLeavesTargetUntouched) {
  TempDir dir;
  testing::write_file(dir / "out.csv", "old\n");
  try {
    AtomicFileWriter w(dir / "out.csv");
    w.stream() << "partial";
    throw IoError("injected failure");
  } catch (const IoError&) {
  }
  EXPECT_EQ(testing::read_file(dir / "out.csv"), "old\n");
  EXPECT_EQ(entries_in(dir.path()), 1u);
}

TEST(AtomicFileWriter, NoTargetIsCreatedWhenUncommitted) {
  TempDir dir;
  {
    AtomicFileWriter w(dir / "fresh.csv");
    w.stream() << "data";
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "fresh.csv"));
  EXPECT_EQ(entries_in(dir.path()), 0u);
}

TEST(AtomicFileWriter, RenameFailureIsReportedAndCleanedUp) {
  TempDir dir;
  std::filesystem::create_directories(dir / "occupied" / "child");
  {
    AtomicFileWriter w(dir / "occupied");
    w.stream() << "data";
    EXPECT_THROW(w.commit(), IoError);
  }
  EXPECT_TRUE(std::filesystem::is_directory(dir / "occupied"));
  EXPECT_EQ(entries_in(dir.path()), 1u);
}

TEST(AtomicFileWriter, MissingDirectoryIsAnIoError) {
  TempDir dir;
  EXPECT_THROW(AtomicFileWriter(dir / "no" / "such" / "dir.csv"), IoError);
}

}  // namespace
}  // namespace taalwatch
