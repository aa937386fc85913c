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

#include "primeheur/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primeheur/ntheory.hpp"
#include "primeheur/primality.hpp"
#include "primeheur/sieve.hpp"

namespace primeheur {

namespace {

// B_2 .. B_18 as rationals (B_18 only feeds the remainder bound).
constexpr int64_t kBernoulliNum[] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867};
constexpr int64_t kBernoulliDen[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798};
constexpr int kEmTerms = 8;

double log10_factorial(int n) {
  double s = 0;
  for (int i = 2; i <= n; ++i) s += std::log10(double(i));
  return s;
}

// log10 of the Euler-Maclaurin remainder after kEmTerms corrections.
double log10_em_bound(double s, double na) {
  int m2 = 2 * (kEmTerms + 1);
  double lb = std::log10(double(kBernoulliNum[kEmTerms] < 0
                                    ? -kBernoulliNum[kEmTerms]
                                    : kBernoulliNum[kEmTerms])) -
              std::log10(double(kBernoulliDen[kEmTerms])) -
              log10_factorial(m2);
  for (int j = 0; j <= m2 - 2; ++j) lb += std::log10(s + j);
  lb -= (s + m2 - 1) * std::log10(na);
  return lb + 1.0;  // safety factor 10
}

// zeta(s, a) by Euler-Maclaurin with kEmTerms Bernoulli corrections,
// at the given precision. Requires s > 1.
Real hurwitz_em(double s, double a, mpfr_prec_t prec) {
  if (s <= 1.0) throw std::domain_error("zeta: s must exceed 1");
  double target = -(double(prec) * 0.30103 + 6);
  uint64_t N = 16;
  while (N < (uint64_t(1) << 24) && log10_em_bound(s, double(N) + a) > target)
    N *= 2;

  Real neg_s(-s, prec);
  Real sum(prec);
  for (uint64_t n = 0; n < N; ++n)
    sum += pow(Real(double(n) + a, prec), neg_s);

  Real na(double(N) + a, prec);
  Real inv = pow(na, neg_s);               // (N+a)^-s
  sum += inv * na / Real(s - 1.0, prec);   // (N+a)^(1-s)/(s-1)
  sum += inv / uint64_t(2);

  // sum_i B_2i/(2i)! * s(s+1)...(s+2i-2) * (N+a)^(-s-2i+1)
  Real poch(uint64_t(1), prec);   // (s)_(2i-1), built incrementally
  Real fact(uint64_t(1), prec);   // (2i)!
  Real power = inv * na;          // (N+a)^(1-s-2(i-1)) before step i
  unsigned poch_len = 0;
  uint64_t fact_n = 0;
  for (int i = 1; i <= kEmTerms; ++i) {
    while (poch_len < unsigned(2 * i - 1)) {
      poch *= Real(s + poch_len, prec);
      ++poch_len;
    }
    while (fact_n < uint64_t(2 * i)) {
      ++fact_n;
      fact *= fact_n;
    }
    power /= na;
    power /= na;  // (N+a)^(-s-2i+1)
    Real term = poch * power / fact;
    if (kBernoulliNum[i - 1] < 0)
      sum -= term * uint64_t(-kBernoulliNum[i - 1]) /
             uint64_t(kBernoulliDen[i - 1]);
    else
      sum += term * uint64_t(kBernoulliNum[i - 1]) /
             uint64_t(kBernoulliDen[i - 1]);
  }
  return sum;
}

const char* kGammaDigits =
    "0.57721566490153286060651209008240243104215933593992";

}  // namespace

void PrecisionConfig::validate() const {
  if (target_digits < 6)
    throw std::invalid_argument("PrecisionConfig: target_digits >= 6");
  if (small_prime_cutoff < 3)
    throw std::invalid_argument("PrecisionConfig: small_prime_cutoff >= 3");
  if (series_terms < 8)
    throw std::invalid_argument("PrecisionConfig: series_terms >= 8");
}

ConstantEngine::ConstantEngine(PrecisionConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  fold_ = small_primes(cfg_.small_prime_cutoff);
  while (!fold_.empty() && fold_.back() > cfg_.small_prime_cutoff)
    fold_.pop_back();

  prec_ = std::max<mpfr_prec_t>(
      192, 64 + mpfr_prec_t(std::ceil((cfg_.target_digits + 16) * 3.3220)));

  // Mobius table long enough for every mu-sum truncation in play.
  unsigned mulen = unsigned(prec_) + 64;
  mu_.assign(mulen + 1, 1);
  std::vector<uint8_t> sv = simple_sieve(mulen);
  for (unsigned p = 2; p <= mulen; ++p) {
    if (!sv[p]) continue;
    for (unsigned m = p; m <= mulen; m += p) mu_[m] = -mu_[m];
    uint64_t pp = uint64_t(p) * p;
    for (uint64_t m = pp; m <= mulen; m += pp) mu_[m] = 0;
  }
  mu_[0] = 0;
}

Real ConstantEngine::zeta_real(double s) const {
  if (s < 1.5)
    throw std::domain_error("zeta_real: s >= 1.5 required (pole at s = 1)");
  return hurwitz_em(s, 1.0, prec_);
}

Real ConstantEngine::zeta_hurwitz(double s, double a) const {
  return hurwitz_em(s, a, prec_);
}

// The tail subtraction P(j) - sum_{p<=cutoff} p^-j cancels ~ j*log10(q/2)
// digits, and the j-th series term magnifies absolute error by k^j; both
// are covered by giving deeper terms proportionally more precision.
static mpfr_prec_t tail_prec(mpfr_prec_t base, unsigned j, double per_term) {
  return base + mpfr_prec_t(std::ceil(per_term * j));
}

Real ConstantEngine::prime_zeta(double s) const {
  if (s < 2.0) throw std::domain_error("prime_zeta: s >= 2 required");
  return prime_zeta_at(s, prec_);
}

Real ConstantEngine::prime_zeta_at(double s, mpfr_prec_t prec) const {
  Real tot(prec);
  double cap = double(prec) + 16;
  for (unsigned k = 1; double(k) * s <= cap && k < mu_.size(); ++k) {
    if (!mu_[k]) continue;
    Real lz = log(hurwitz_em(double(k) * s, 1.0, prec));
    if (mu_[k] < 0)
      tot -= lz / uint64_t(k);
    else
      tot += lz / uint64_t(k);
  }
  return tot;
}

Real ConstantEngine::dirichlet_beta(unsigned s, mpfr_prec_t prec) const {
  if (s == 1) {
    Real pi(prec);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    return pi / uint64_t(4);
  }
  Real q = hurwitz_em(double(s), 0.25, prec) - hurwitz_em(double(s), 0.75, prec);
  return q / pow_ui(Real(uint64_t(4), prec), s);
}

Real ConstantEngine::prime_zeta_chi(unsigned s, mpfr_prec_t prec) const {
  // P_chi(s) = sum_{k odd} mu(k)/k log beta(ks)
  //          + sum_{k even} mu(k)/k log((1-2^-ks) zeta(ks))
  Real tot(prec);
  double cap = (double(prec) + 16) / std::log2(3.0);
  for (unsigned k = 1; double(k) * s <= cap && k < mu_.size(); ++k) {
    if (!mu_[k]) continue;
    Real lv(prec);
    if (k % 2 == 1) {
      lv = log(dirichlet_beta(k * s, prec));
    } else {
      Real z = hurwitz_em(double(k) * s, 1.0, prec);
      Real half = pow_ui(Real(uint64_t(2), prec), k * s);
      lv = log(z * (Real(uint64_t(1), prec) -
                    Real(uint64_t(1), prec) / half));
    }
    if (mu_[k] < 0)
      tot -= lv / uint64_t(k);
    else
      tot += lv / uint64_t(k);
  }
  return tot;
}

Real ConstantEngine::tail_t0(unsigned j) const {
  {
    std::lock_guard<std::mutex> lk(m_);
    auto it = t0_cache_.find(j);
    if (it != t0_cache_.end()) return it->second;
  }
  mpfr_prec_t prec = tail_prec(prec_, j, 3.40);
  Real t = prime_zeta_at(double(j), prec);
  for (uint32_t p : fold_)
    t -= Real(uint64_t(1), prec) / pow_ui(Real(uint64_t(p), prec), j);
  std::lock_guard<std::mutex> lk(m_);
  return t0_cache_.emplace(j, t).first->second;
}

Real ConstantEngine::tail_tchi(unsigned s) const {
  {
    std::lock_guard<std::mutex> lk(m_);
    auto it = tchi_cache_.find(s);
    if (it != tchi_cache_.end()) return it->second;
  }
  mpfr_prec_t prec = tail_prec(prec_, s, 2.40);
  Real t = prime_zeta_chi(s, prec);
  for (uint32_t p : fold_) {
    if (p == 2) continue;
    Real term = Real(uint64_t(1), prec) / pow_ui(Real(uint64_t(p), prec), s);
    if (p % 4 == 1)
      t -= term;
    else
      t += term;
  }
  std::lock_guard<std::mutex> lk(m_);
  return tchi_cache_.emplace(s, t).first->second;
}

unsigned ConstantEngine::series_len(double ratio) const {
  double target = -(double(cfg_.target_digits) + 8) * std::log(10.0);
  double j = (target + std::log(1 - ratio)) / std::log(ratio);
  return unsigned(std::ceil(j)) + 1;
}

ConstantValue ConstantEngine::hl_ck(unsigned k) const {
  if (k < 1 || k > 20)
    throw std::invalid_argument("hl_ck: 1 <= k <= 20 required");
  if (cfg_.small_prime_cutoff < k)
    throw std::invalid_argument("hl_ck: small_prime_cutoff must be >= k");
  if (k == 1)
    return ConstantValue{Real(uint64_t(1), prec_), 1e-300,
                         Route::zeta_accelerated};

  uint64_t q = cfg_.small_prime_cutoff + 1;
  while (!is_prime64(q)) ++q;
  double ratio = double(k) / double(q);
  unsigned jmax = series_len(ratio);
  if (jmax > cfg_.series_terms)
    throw std::runtime_error(
        "hl_ck: requested precision unreachable within series_terms");
  double tailbound = 2 * std::pow(ratio, double(jmax) + 1) / (1 - ratio);

  {
    std::lock_guard<std::mutex> lk(m_);
    auto it = ck_cache_.find(k);
    if (it != ck_cache_.end()) {
      double err = std::abs(it->second.to_double()) *
                   (tailbound + std::pow(10.0, -double(cfg_.target_digits) - 2));
      return ConstantValue{it->second, std::max(err, 1e-300),
                           Route::zeta_accelerated};
    }
  }

  // Head: primes k < p <= cutoff folded directly.
  Real head(uint64_t(1), prec_);
  for (uint32_t p : fold_) {
    if (p <= k) continue;
    Real f(uint64_t(p - k), prec_);
    f *= pow_ui(Real(uint64_t(p), prec_), k - 1);
    f /= pow_ui(Real(uint64_t(p - 1), prec_), k);
    head *= f;
  }

  // log tail = -sum_{j>=2} (k^j - k)/j * T0(j)
  Real series(prec_);
  for (unsigned j = 2; j <= jmax; ++j) {
    Real kj = pow_ui(Real(uint64_t(k), tail_prec(prec_, j, 3.40)), j);
    Real term = (kj - Real(uint64_t(k), prec_)) / uint64_t(j);
    series += term * tail_t0(j);
  }
  Real value = head * exp(-series);

  {
    std::lock_guard<std::mutex> lk(m_);
    ck_cache_.emplace(k, value);
  }
  double err = std::abs(value.to_double()) *
               (tailbound + std::pow(10.0, -double(cfg_.target_digits) - 2));
  return ConstantValue{value, std::max(err, 1e-300), Route::zeta_accelerated};
}

ConstantValue ConstantEngine::pair_constant(uint64_t k) const {
  if (k < 1) throw std::invalid_argument("pair_constant: k >= 1 required");
  ConstantValue c2 = hl_ck(2);
  Real v = c2.value;
  if (k > 1) {
    for (auto [p, e] : factor64(k)) {
      (void)e;
      if (p > 2) {
        v *= Real(p - 1, prec_);
        v /= Real(p - 2, prec_);
      }
    }
  }
  double rel = c2.error_bound / std::abs(c2.value.to_double());
  return ConstantValue{v, std::abs(v.to_double()) * rel,
                       Route::closed_combination};
}

ConstantValue ConstantEngine::ap_constant(unsigned k, uint64_t d) const {
  if (k < 1 || d < 1)
    throw std::invalid_argument("ap_constant: k >= 1 and d >= 1 required");
  if (k == 1)
    return ConstantValue{Real(uint64_t(1), prec_), 1e-300,
                         Route::closed_combination};
  if (k > 20) throw std::invalid_argument("ap_constant: k <= 20 required");

  for (uint32_t p : fold_) {
    if (p > k) break;
    if (d % p != 0)  // k# does not divide d
      return ConstantValue{Real(prec_), 1e-300, Route::closed_combination};
  }

  ConstantValue ck = hl_ck(k);
  Real v = ck.value;
  for (uint32_t p : fold_) {
    if (p > k) break;
    v *= pow_ui(Real(uint64_t(p), prec_) / Real(uint64_t(p - 1), prec_),
                k - 1);
  }
  for (auto [p, e] : factor64(d)) {
    (void)e;
    if (p > k) {
      v *= Real(p - 1, prec_);
      v /= Real(p - k, prec_);
    }
  }
  double rel = ck.error_bound / std::abs(ck.value.to_double());
  return ConstantValue{v, std::abs(v.to_double()) * rel,
                       Route::closed_combination};
}

ConstantValue ConstantEngine::grosswald_constant(unsigned k) const {
  if (k < 3 || k > 20)
    throw std::invalid_argument("grosswald_constant: 3 <= k <= 20 required");
  ConstantValue ck = hl_ck(k - 1);
  Real v = ck.value;
  for (uint32_t p : fold_) {
    if (p >= k) break;
    v /= uint64_t(p);
    v *= pow_ui(Real(uint64_t(p), prec_) / Real(uint64_t(p - 1), prec_),
                k - 1);
  }
  double rel = ck.error_bound / std::abs(ck.value.to_double());
  return ConstantValue{v, std::abs(v.to_double()) * rel,
                       Route::closed_combination};
}

ConstantValue ConstantEngine::cunningham_constant(unsigned k) const {
  if (k < 2 || k > 12)
    throw std::invalid_argument("cunningham_constant: 2 <= k <= 12 required");
  ConstantValue ck = hl_ck(k);
  Real v = ck.value;
  v *= pow_ui(Real(uint64_t(2), prec_), k - 1);
  auto primes = small_primes(uint32_t(1) << k);
  for (uint32_t p : primes) {
    if (p <= 2) continue;
    if (uint64_t(p) >= (uint64_t(1) << k)) break;
    uint64_t w = std::min<uint64_t>(k, mult_order(2, p));
    if (p <= k) {
      Real f(uint64_t(p - w), prec_);
      f *= pow_ui(Real(uint64_t(p), prec_), k - 1);
      f /= pow_ui(Real(uint64_t(p - 1), prec_), k);
      v *= f;
    } else {
      v *= Real(uint64_t(p - w), prec_);
      v /= Real(uint64_t(p - k), prec_);
    }
  }
  double rel = ck.error_bound / std::abs(ck.value.to_double());
  return ConstantValue{v, std::abs(v.to_double()) * rel,
                       Route::closed_combination};
}

ConstantValue ConstantEngine::quadratic_constant() const {
  Real head(uint64_t(1), prec_);
  for (uint32_t p : fold_) {
    if (p == 2) continue;
    Real f(uint64_t(1), prec_);
    Real inv = Real(uint64_t(1), prec_) / Real(uint64_t(p - 1), prec_);
    if (p % 4 == 1)
      f -= inv;
    else
      f += inv;
    head *= f;
  }

  // 1/(p-1)^j expanded in powers of 1/p turns the tail of
  // log prod (1 - chi(p)/(p-1)) into binomial-weighted sums of the
  // twisted and plain prime zeta tails.
  uint64_t q = fold_.empty() ? 3 : fold_.back() + 1;
  double per_s = std::log10(double(q) / 2.0);
  unsigned smax =
      unsigned(std::ceil((cfg_.target_digits + 8 + std::log10(double(q))) /
                         per_s)) +
      2;
  smax = std::min<unsigned>(std::max(smax, 4u), 400);

  Real logtail(prec_);
  for (unsigned s = 1; s <= smax; ++s) {
    mpfr_prec_t cprec = tail_prec(prec_, s, 2.40);
    Real codd(cprec), ceven(cprec);
    Real binom(uint64_t(1), cprec);  // C(s-1, j-1), starting at j = 1
    for (unsigned j = 1; j <= s; ++j) {
      Real contrib = binom / uint64_t(j);
      if (j % 2 == 1)
        codd += contrib;
      else
        ceven += contrib;
      binom *= uint64_t(s - j);
      binom /= uint64_t(std::max(1u, j));
    }
    if (!codd.is_zero()) logtail -= codd * tail_tchi(s);
    if (s >= 2 && !ceven.is_zero()) logtail -= ceven * tail_t0(s);
  }
  Real value = head * exp(logtail);
  double tailbound = std::pow(2.0 / double(q), double(smax)) * double(q);
  double err = std::abs(value.to_double()) *
               (tailbound + std::pow(10.0, -double(cfg_.target_digits) - 2));
  return ConstantValue{value, std::max(err, 1e-300), Route::zeta_accelerated};
}

ConstantValue ConstantEngine::quadratic_constant_direct(uint64_t cutoff) const {
  if (cutoff < 5 || cutoff > 200'000'000)
    throw std::invalid_argument(
        "quadratic_constant_direct: cutoff in [5, 2e8]");
  Real prod(uint64_t(1), prec_);
  Real prev(uint64_t(1), prec_);
  for_each_prime(SieveConfig{cutoff}, [&](uint64_t p) {
    if (p == 2) return;
    prev = prod;
    Real f(uint64_t(1), prec_);
    Real inv = Real(uint64_t(1), prec_) / Real(p - 1, prec_);
    if (p % 4 == 1)
      f -= inv;
    else
      f += inv;
    prod *= f;
  });
  Real value = (prod + prev) / uint64_t(2);
  double err = 4.0 / std::sqrt(double(cutoff)) * std::abs(value.to_double());
  return ConstantValue{value, err, Route::direct_product};
}

Real ConstantEngine::euler_gamma() const {
  return Real(std::string(kGammaDigits), prec_);
}

Real ConstantEngine::exp_gamma() const { return exp(euler_gamma()); }

namespace {
std::mutex g_engines_mutex;
}

const ConstantEngine& engine_for(const PrecisionConfig& cfg) {
  static std::map<PrecisionConfig, ConstantEngine>* m =
      new std::map<PrecisionConfig, ConstantEngine>;
  std::lock_guard<std::mutex> lk(g_engines_mutex);
  auto it = m->find(cfg);
  if (it == m->end()) it = m->emplace(cfg, ConstantEngine(cfg)).first;
  return it->second;
}

Real zeta_real(double s, const PrecisionConfig& cfg) {
  return engine_for(cfg).zeta_real(s);
}
Real prime_zeta(double s, const PrecisionConfig& cfg) {
  return engine_for(cfg).prime_zeta(s);
}
ConstantValue hl_ck(unsigned k, const PrecisionConfig& cfg) {
  return engine_for(cfg).hl_ck(k);
}
ConstantValue pair_constant(uint64_t k, const PrecisionConfig& cfg) {
  return engine_for(cfg).pair_constant(k);
}
ConstantValue ap_constant(unsigned k, uint64_t d, const PrecisionConfig& cfg) {
  return engine_for(cfg).ap_constant(k, d);
}
ConstantValue grosswald_constant(unsigned k, const PrecisionConfig& cfg) {
  return engine_for(cfg).grosswald_constant(k);
}
ConstantValue cunningham_constant(unsigned k, const PrecisionConfig& cfg) {
  return engine_for(cfg).cunningham_constant(k);
}
ConstantValue quadratic_constant(const PrecisionConfig& cfg) {
  return engine_for(cfg).quadratic_constant();
}
Real euler_gamma() { return engine_for({}).euler_gamma(); }

}  // namespace primeheur
