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

#ifndef PRIMEHEUR_POLY_HPP
#define PRIMEHEUR_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primeheur/real.hpp"

namespace primeheur {

// Integer polynomial, constant term first. Degree in [1, 8], positive
// leading coefficient.
class Polynomial {
 public:
  explicit Polynomial(std::vector<int64_t> coeffs);

  unsigned degree() const { return unsigned(c_.size() - 1); }
  const std::vector<int64_t>& coeffs() const { return c_; }
  int64_t leading() const { return c_.back(); }
  bool is_linear() const { return degree() == 1; }

  uint64_t eval_mod(uint64_t x, uint64_t p) const;
  double eval_double(double x) const;
  int64_t max_abs_coeff() const;

  std::string to_string() const;

 private:
  std::vector<int64_t> c_;
};

// Nonempty list of polynomials f_1..f_k.
class PolyTuple {
 public:
  explicit PolyTuple(std::vector<Polynomial> polys);

  unsigned k() const { return unsigned(polys_.size()); }
  uint64_t degree_product() const;
  const std::vector<Polynomial>& polys() const { return polys_; }
  bool all_linear() const;
  int64_t max_abs_coeff() const;
  std::string to_string() const;

 private:
  std::vector<Polynomial> polys_;
};

// Parses "x,x+2", "2x+1", "x^2+1", ... Rejects non-integer coefficients.
PolyTuple parse_tuple(const std::string& text);

// Number of x in {0..p-1} with f_1(x)...f_k(x) == 0 (mod p), by direct
// evaluation. The correctness oracle; O(p * k * d).
uint64_t w_count(const PolyTuple& tuple, uint64_t p);

// True iff w(p) < p for every prime p <= bound; bound defaults to
// max(k, largest |coefficient|). Linear tuples use the closed-form
// distinct-residue count (equal to w_count by construction).
bool is_admissible(const PolyTuple& tuple,
                   std::optional<uint64_t> bound = std::nullopt);

// prod_{p <= cutoff} (1 - w(p)/p) / (1 - 1/p)^k with a crude tail-error
// estimate. The slow reference oracle for the constants module. Throws
// std::domain_error if some factor vanishes (non-admissible tuple).
ConstantValue adjustment_product_direct(const PolyTuple& tuple,
                                        uint64_t prime_cutoff);

}  // namespace primeheur

#endif  // PRIMEHEUR_POLY_HPP
