// Copyright 2026 The primeheur authors
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

#include "primeheur/table.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace primeheur {

void RunConfig::validate() const {
  if (bounds.empty())
    throw std::invalid_argument("compare: at least one bound required");
  for (size_t i = 1; i < bounds.size(); ++i)
    if (bounds[i] <= bounds[i - 1])
      throw std::invalid_argument("compare: bounds must be ascending");
  validate_family(family);
}

uint64_t round_half_away(double v) {
  if (v < 0) throw std::invalid_argument("round_half_away: negative value");
  return uint64_t(std::llround(v));
}

ComparisonRow compare_row(const FamilySpec& fam, uint64_t bound,
                          unsigned threads) {
  ComparisonRow row;
  row.bound = bound;
  CensusOptions opts;
  opts.threads = threads;
  row.actual = count(fam, bound, opts).count;
  PredictionResult pred = predict(fam, bound);
  if (is_discrete_family(fam)) {
    uint64_t closed = round_half_away(pred.ratio_estimate);
    row.predicted_integral = closed;
    row.predicted_ratio = closed;
  } else {
    row.predicted_integral = round_half_away(pred.integral_estimate);
    row.predicted_ratio = round_half_away(pred.ratio_estimate);
  }
  return row;
}

std::vector<ComparisonRow> compare_table(
    const RunConfig& cfg,
    const std::function<void(const ComparisonRow&)>& sink) {
  cfg.validate();
  std::vector<ComparisonRow> rows;
  for (uint64_t b : cfg.bounds) {
    FamilySpec fam = cfg.family;
    if (auto* gb = std::get_if<family::Goldbach>(&fam); gb && gb->m == 0)
      fam = family::Goldbach{b};
    rows.push_back(compare_row(fam, b, cfg.threads));
    if (sink) sink(rows.back());
  }
  return rows;
}

std::string render_prefix(OutFormat f) {
  switch (f) {
    case OutFormat::csv: return "N,actual,integral,ratio\n";
    case OutFormat::json: return "[";
    case OutFormat::text: return "";
  }
  return "";
}

std::string render_row(OutFormat f, const ComparisonRow& r, bool first) {
  std::ostringstream os;
  switch (f) {
    case OutFormat::csv:
      os << r.bound << ',' << r.actual << ',' << r.predicted_integral << ','
         << r.predicted_ratio << '\n';
      break;
    case OutFormat::json: {
      nlohmann::ordered_json j;
      j["N"] = r.bound;
      j["actual"] = r.actual;
      j["integral"] = r.predicted_integral;
      j["ratio"] = r.predicted_ratio;
      os << (first ? "" : ",") << "\n  " << j.dump();
      break;
    }
    case OutFormat::text:
      os << r.bound << '\t' << r.actual << '\t' << r.predicted_integral
         << '\t' << r.predicted_ratio << '\n';
      break;
  }
  return os.str();
}

std::string render_suffix(OutFormat f) {
  return f == OutFormat::json ? "\n]\n" : "";
}

std::string render_table(OutFormat f, const std::vector<ComparisonRow>& rows) {
  if (f == OutFormat::text) {
    // aligned columns
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"N", "actual", "integral", "ratio"});
    for (const auto& r : rows)
      cells.push_back({std::to_string(r.bound), std::to_string(r.actual),
                       std::to_string(r.predicted_integral),
                       std::to_string(r.predicted_ratio)});
    size_t w[4] = {0, 0, 0, 0};
    for (auto& row : cells)
      for (int c = 0; c < 4; ++c) w[c] = std::max(w[c], row[c].size());
    std::ostringstream os;
    for (auto& row : cells) {
      for (int c = 0; c < 4; ++c) {
        os << std::string(w[c] - row[c].size(), ' ') << row[c];
        os << (c == 3 ? "\n" : "  ");
      }
    }
    return os.str();
  }
  std::string out = render_prefix(f);
  bool first = true;
  for (const auto& r : rows) {
    out += render_row(f, r, first);
    first = false;
  }
  out += render_suffix(f);
  return out;
}

std::vector<ComparisonRow> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "N,actual,integral,ratio")
    throw std::invalid_argument("parse_csv: bad header");
  std::vector<ComparisonRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    ComparisonRow r;
    uint64_t* fields[4] = {&r.bound, &r.actual, &r.predicted_integral,
                           &r.predicted_ratio};
    size_t pos = 0;
    for (int c = 0; c < 4; ++c) {
      size_t next = c < 3 ? line.find(',', pos) : line.size();
      if (next == std::string::npos)
        throw std::invalid_argument("parse_csv: bad row: " + line);
      *fields[c] = std::stoull(line.substr(pos, next - pos));
      pos = next + 1;
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace primeheur
