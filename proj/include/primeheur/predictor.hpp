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

#ifndef PRIMEHEUR_PREDICTOR_HPP
#define PRIMEHEUR_PREDICTOR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "primeheur/constants.hpp"
#include "primeheur/poly.hpp"

namespace primeheur {

enum class ChainKind { first, second };

namespace family {
struct Twin {};
// Pairs {p, p+gap}. The gap is the table label (6, 30, 210, ...); its odd
// prime divisors fix the constant C_{2,gap}.
struct Pair {
  uint64_t gap;
};
struct AP {
  unsigned length;
  uint64_t diff;
};
struct APAnyDiff {
  unsigned length;
};
struct SophieGermain {};
struct Cunningham {
  ChainKind kind;
  unsigned length;
};
struct Quadratic {};  // primes n^2 + 1 <= N
struct Goldbach {
  uint64_t m;  // even target; 0 = take the bound as the target
};
struct Cullen {};
struct Woodall {};
struct Primorial {
  int sign;  // +1 or -1
};
struct Factorial {
  int sign;
};
struct Repunit {
  unsigned base;  // >= 2
};
}  // namespace family

using FamilySpec =
    std::variant<family::Twin, family::Pair, family::AP, family::APAnyDiff,
                 family::SophieGermain, family::Cunningham, family::Quadratic,
                 family::Goldbach, family::Cullen, family::Woodall,
                 family::Primorial, family::Factorial, family::Repunit>;

std::string family_name(const FamilySpec& fam);
// Throws std::invalid_argument on out-of-range parameters.
void validate_family(const FamilySpec& fam);
// True for the families counted by big-integer probable-prime tests.
bool is_bignat_family(const FamilySpec& fam);
// True for primorial/factorial/repunit (predictions are discrete sums).
bool is_discrete_family(const FamilySpec& fam);

struct PredictionResult {
  double integral_estimate = 0;
  double ratio_estimate = 0;
  ConstantValue constant_used;
  FamilySpec family;
  uint64_t bound = 0;
};

// int_a^b dx / (log x)^k to relative tolerance 1e-10. 2 <= a <= b, k <= 12.
double log_power_integral(double a, double b, unsigned k);

// int_{x0}^N dx / prod_i log f_i(x), where x0 is the smallest real >= 2
// with every f_i(x0) >= 2. Throws std::domain_error when no x0 <= N exists.
double tuple_integral(const PolyTuple& tuple, uint64_t N);

// Conjectured counts for a family up to N (see README for the exact
// integrand used per family).
PredictionResult predict(const FamilySpec& fam, uint64_t N,
                         const PrecisionConfig& cfg = {});

// Expected representations of the even m as an ordered sum of two primes:
// 2 C_{2,m/2} int_2^{m-2} dx/(log x log(m-x)); with shah_wilson the
// asymptotic-ratio variant 2 C_{2,m/2} m / ((log m)^2 - log m).
double goldbach_prediction(uint64_t m, bool shah_wilson,
                           const PrecisionConfig& cfg = {});

}  // namespace primeheur

#endif  // PRIMEHEUR_PREDICTOR_HPP
