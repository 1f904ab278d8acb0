// Copyright 2026 The Coinvest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coinvest/records_csv.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace coinvest {
namespace {

std::string Quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsvLine(const std::string& line, int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw std::runtime_error("records.csv line " + std::to_string(line_no) +
                             ": unterminated quote");
  }
  return fields;
}

double ParseDouble(const std::string& field, int line_no) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("records.csv line " + std::to_string(line_no) +
                             ": bad number '" + field + "'");
  }
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void WriteRecordsCsv(std::ostream& out, std::span<const SweepRecord> records) {
  for (std::size_t c = 0; c < std::size(kRecordColumns); ++c) {
    out << (c ? "," : "") << kRecordColumns[c];
  }
  out << '\n';
  for (const SweepRecord& r : records) {
    for (const PlayerRow& p : r.players) {
      out << Quote(r.scenario) << ',' << Quote(r.sweep_param) << ','
          << FormatDouble(r.sweep_value) << ',' << Quote(p.player_id) << ','
          << FormatDouble(p.beta) << ',' << FormatDouble(p.daily_load) << ','
          << FormatDouble(p.h_star) << ',' << FormatDouble(r.capacity) << ','
          << FormatDouble(p.r_hat) << ',' << FormatDouble(p.shapley) << ','
          << FormatDouble(p.payment) << ',' << FormatDouble(p.payoff) << ','
          << FormatDouble(r.grand_value) << '\n';
    }
  }
}

std::vector<SweepRecord> ReadRecordsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("records.csv: empty");
  const std::vector<std::string> header = SplitCsvLine(line, 1);
  if (header.size() != std::size(kRecordColumns) ||
      !std::equal(header.begin(), header.end(), std::begin(kRecordColumns))) {
    throw std::runtime_error("records.csv line 1: unexpected header");
  }

  std::vector<SweepRecord> records;
  bool open = false;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line, line_no);
    if (f.size() != std::size(kRecordColumns)) {
      throw std::runtime_error("records.csv line " + std::to_string(line_no) +
                               ": expected " +
                               std::to_string(std::size(kRecordColumns)) +
                               " fields");
    }
    if (!open) {
      SweepRecord r;
      r.scenario = f[0];
      r.sweep_param = f[1];
      r.sweep_value = ParseDouble(f[2], line_no);
      r.capacity = ParseDouble(f[7], line_no);
      r.grand_value = ParseDouble(f[12], line_no);
      records.push_back(std::move(r));
      open = true;
    }
    PlayerRow p;
    p.player_id = f[3];
    p.beta = ParseDouble(f[4], line_no);
    p.daily_load = ParseDouble(f[5], line_no);
    p.h_star = ParseDouble(f[6], line_no);
    p.r_hat = ParseDouble(f[8], line_no);
    p.shapley = ParseDouble(f[9], line_no);
    p.payment = ParseDouble(f[10], line_no);
    p.payoff = ParseDouble(f[11], line_no);
    records.back().players.push_back(std::move(p));
    if (f[3] == "NO") open = false;
  }
  if (open) throw std::runtime_error("records.csv: last record has no NO row");
  return records;
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::filesystem::filesystem_error(
          "cannot write", tmp, std::make_error_code(std::errc::io_error));
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      throw std::filesystem::filesystem_error(
          "write failed", tmp, std::make_error_code(std::errc::io_error));
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace coinvest
