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

#ifndef PRIMEHEUR_TABLE_HPP
#define PRIMEHEUR_TABLE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "primeheur/census.hpp"

namespace primeheur {

enum class OutFormat { text, csv, json };

struct ComparisonRow {
  uint64_t bound = 0;
  uint64_t actual = 0;
  uint64_t predicted_integral = 0;  // rounded half-away-from-zero
  uint64_t predicted_ratio = 0;
};

struct RunConfig {
  FamilySpec family;
  std::vector<uint64_t> bounds;  // nonempty, strictly ascending
  OutFormat format = OutFormat::text;
  unsigned digits = 15;
  unsigned threads = 0;

  void validate() const;
};

uint64_t round_half_away(double v);

// One row per bound. For the discrete-sum families (primorial, factorial,
// repunit) both predicted columns carry the rounded closed form, matching
// the single predicted column those tables are printed with.
ComparisonRow compare_row(const FamilySpec& fam, uint64_t bound,
                          unsigned threads);

// Streams rows through `sink` as they are computed so partial output
// survives a capacity error.
std::vector<ComparisonRow> compare_table(
    const RunConfig& cfg,
    const std::function<void(const ComparisonRow&)>& sink = nullptr);

// Rendering. render_row shapes one row in the chosen format; render_prefix/
// render_suffix open and close the table (header line, JSON brackets).
std::string render_prefix(OutFormat f);
std::string render_row(OutFormat f, const ComparisonRow& row, bool first);
std::string render_suffix(OutFormat f);

// Whole tables at once (text format aligns columns).
std::string render_table(OutFormat f, const std::vector<ComparisonRow>& rows);

// CSV round-trip (exact): parses the output of render_table(csv, ...).
std::vector<ComparisonRow> parse_csv(const std::string& text);

}  // namespace primeheur

#endif  // PRIMEHEUR_TABLE_HPP
