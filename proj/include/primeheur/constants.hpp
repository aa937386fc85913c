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

#ifndef PRIMEHEUR_CONSTANTS_HPP
#define PRIMEHEUR_CONSTANTS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "primeheur/real.hpp"

namespace primeheur {

struct PrecisionConfig {
  unsigned target_digits = 15;        // significant decimal digits, >= 6
  unsigned small_prime_cutoff = 100;  // primes folded into the direct head
  unsigned series_terms = 400;        // cap on the j-summation

  void validate() const;
  bool operator<(const PrecisionConfig& o) const {
    return std::tie(target_digits, small_prime_cutoff, series_terms) <
           std::tie(o.target_digits, o.small_prime_cutoff, o.series_terms);
  }
};

// Evaluates the adjustment constants through the prime zeta function,
// folding primes up to small_prime_cutoff into a direct product so the
// remaining log-series converges geometrically. Caches the shared tail
// tables; safe for concurrent use.
class ConstantEngine {
 public:
  explicit ConstantEngine(PrecisionConfig cfg = {});

  const PrecisionConfig& config() const { return cfg_; }
  mpfr_prec_t working_prec() const { return prec_; }

  // Riemann zeta by Euler-Maclaurin (8 Bernoulli correction terms).
  // Requires s >= 1.5; throws std::domain_error closer to the pole.
  Real zeta_real(double s) const;

  // P(s) = sum_k mu(k)/k log zeta(ks), truncated at the precision floor.
  // Requires s >= 2.
  Real prime_zeta(double s) const;

  // Hardy-Littlewood c_k = prod_{p>k} (1-k/p)/(1-1/p)^k, 1 <= k <= 20.
  ConstantValue hl_ck(unsigned k) const;

  // C_{2,k} = C_2 prod_{p|k, p>2} (p-1)/(p-2).
  ConstantValue pair_constant(uint64_t k) const;

  // A_{k,d}; exactly 0 when k# does not divide d (k >= 2); A_{1,d} = 1.
  ConstantValue ap_constant(unsigned k, uint64_t d) const;

  // D_k = c_{k-1} prod_{p<k} (1/p) (p/(p-1))^(k-1), 3 <= k <= 20.
  ConstantValue grosswald_constant(unsigned k) const;

  // B_k = 2^(k-1) prod_{p>2} (1 - min(k, ord_p(2))/p)/(1-1/p)^k, 2<=k<=12.
  ConstantValue cunningham_constant(unsigned k) const;

  // C+ = prod_{p>2} (1 - (-1|p)/(p-1)), via the chi_4-twisted tail series.
  ConstantValue quadratic_constant() const;

  // Cross-check route: plain product over odd p <= cutoff, smoothed by
  // averaging the last two partial products.
  ConstantValue quadratic_constant_direct(uint64_t cutoff) const;

  // Euler-Mascheroni constant from an embedded 50-digit literal.
  Real euler_gamma() const;
  Real exp_gamma() const;

 private:
  Real zeta_hurwitz(double s, double a) const;  // zeta(s, a), s > 1
  Real prime_zeta_at(double s, mpfr_prec_t prec) const;
  Real dirichlet_beta(unsigned s, mpfr_prec_t prec) const;  // L(s, chi_4)
  Real prime_zeta_chi(unsigned s, mpfr_prec_t prec) const;
  Real tail_t0(unsigned j) const;    // sum_{p > cutoff} p^-j
  Real tail_tchi(unsigned s) const;  // sum_{p > cutoff} chi_4(p) p^-s
  unsigned series_len(double ratio) const;

  PrecisionConfig cfg_;
  mpfr_prec_t prec_;
  std::vector<uint32_t> fold_;  // primes <= small_prime_cutoff
  std::vector<int8_t> mu_;

  mutable std::mutex m_;
  mutable std::map<unsigned, Real> t0_cache_;
  mutable std::map<unsigned, Real> tchi_cache_;
  mutable std::map<unsigned, Real> ck_cache_;
};

// Spec-named free functions over a per-config shared engine.
Real zeta_real(double s, const PrecisionConfig& cfg = {});
Real prime_zeta(double s, const PrecisionConfig& cfg = {});
ConstantValue hl_ck(unsigned k, const PrecisionConfig& cfg = {});
ConstantValue pair_constant(uint64_t k, const PrecisionConfig& cfg = {});
ConstantValue ap_constant(unsigned k, uint64_t d,
                          const PrecisionConfig& cfg = {});
ConstantValue grosswald_constant(unsigned k, const PrecisionConfig& cfg = {});
ConstantValue cunningham_constant(unsigned k, const PrecisionConfig& cfg = {});
ConstantValue quadratic_constant(const PrecisionConfig& cfg = {});
Real euler_gamma();

// Shared engine for a configuration (cached, thread-safe).
const ConstantEngine& engine_for(const PrecisionConfig& cfg);

}  // namespace primeheur

#endif  // PRIMEHEUR_CONSTANTS_HPP
