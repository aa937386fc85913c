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

#include "primeheur/predictor.hpp"

#include <cmath>
#include <stdexcept>

#include "primeheur/quadrature.hpp"
#include "primeheur/sieve.hpp"

namespace primeheur {

std::string family_name(const FamilySpec& fam) {
  using namespace family;
  return std::visit(
      [](auto&& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Twin>) return "twin";
        if constexpr (std::is_same_v<T, Pair>)
          return "pair(gap=" + std::to_string(f.gap) + ")";
        if constexpr (std::is_same_v<T, AP>)
          return "ap(k=" + std::to_string(f.length) +
                 ",d=" + std::to_string(f.diff) + ")";
        if constexpr (std::is_same_v<T, APAnyDiff>)
          return "ap-any(k=" + std::to_string(f.length) + ")";
        if constexpr (std::is_same_v<T, SophieGermain>)
          return "sophie-germain";
        if constexpr (std::is_same_v<T, Cunningham>)
          return std::string("cunningham(") +
                 (f.kind == ChainKind::first ? "first" : "second") +
                 ",k=" + std::to_string(f.length) + ")";
        if constexpr (std::is_same_v<T, Quadratic>) return "quadratic";
        if constexpr (std::is_same_v<T, Goldbach>)
          return f.m ? "goldbach(m=" + std::to_string(f.m) + ")" : "goldbach";
        if constexpr (std::is_same_v<T, Cullen>) return "cullen";
        if constexpr (std::is_same_v<T, Woodall>) return "woodall";
        if constexpr (std::is_same_v<T, Primorial>)
          return f.sign > 0 ? "primorial+" : "primorial-";
        if constexpr (std::is_same_v<T, Factorial>)
          return f.sign > 0 ? "factorial+" : "factorial-";
        if constexpr (std::is_same_v<T, Repunit>)
          return "repunit(a=" + std::to_string(f.base) + ")";
        return "?";
      },
      fam);
}

void validate_family(const FamilySpec& fam) {
  using namespace family;
  std::visit(
      [](auto&& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Pair>) {
          if (f.gap < 2 || f.gap % 2 != 0)
            throw std::invalid_argument("pair: gap must be even and >= 2");
        } else if constexpr (std::is_same_v<T, AP>) {
          if (f.length < 2 || f.length > 10)
            throw std::invalid_argument("ap: 2 <= length <= 10");
          if (f.diff < 1) throw std::invalid_argument("ap: diff >= 1");
        } else if constexpr (std::is_same_v<T, APAnyDiff>) {
          if (f.length < 3 || f.length > 8)
            throw std::invalid_argument("ap-any: 3 <= length <= 8");
        } else if constexpr (std::is_same_v<T, Cunningham>) {
          if (f.length < 2 || f.length > 12)
            throw std::invalid_argument("cunningham: 2 <= length <= 12");
        } else if constexpr (std::is_same_v<T, Goldbach>) {
          if (f.m != 0 && (f.m % 2 != 0 || f.m < 4))
            throw std::invalid_argument("goldbach: m must be even and >= 4");
        } else if constexpr (std::is_same_v<T, Primorial>) {
          if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("primorial: sign must be +1 or -1");
        } else if constexpr (std::is_same_v<T, Factorial>) {
          if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("factorial: sign must be +1 or -1");
        } else if constexpr (std::is_same_v<T, Repunit>) {
          if (f.base < 2) throw std::invalid_argument("repunit: base >= 2");
        }
      },
      fam);
}

bool is_bignat_family(const FamilySpec& fam) {
  using namespace family;
  return std::holds_alternative<Cullen>(fam) ||
         std::holds_alternative<Woodall>(fam) ||
         std::holds_alternative<Primorial>(fam) ||
         std::holds_alternative<Factorial>(fam) ||
         std::holds_alternative<Repunit>(fam);
}

bool is_discrete_family(const FamilySpec& fam) {
  using namespace family;
  return std::holds_alternative<Primorial>(fam) ||
         std::holds_alternative<Factorial>(fam) ||
         std::holds_alternative<Repunit>(fam);
}

double log_power_integral(double a, double b, unsigned k) {
  if (a < 2 || b < a)
    throw std::invalid_argument("log_power_integral: 2 <= a <= b required");
  if (k < 1 || k > 12)
    throw std::invalid_argument("log_power_integral: 1 <= k <= 12 required");
  if (a == b) return 0;
  return integrate(
      [k](double x) { return 1.0 / std::pow(std::log(x), double(k)); }, a, b);
}

namespace {

// Smallest x >= 2 from which f stays >= 2 (largest real root of f - 2,
// clipped below at 2). Grid scan bracket + bisection.
double poly_floor_x0(const Polynomial& f) {
  double bound = 2;
  // Cauchy-style root bound for f(x) - 2
  double lead = double(f.leading());
  double maxc = 2;
  for (int64_t c : f.coeffs()) maxc = std::max(maxc, std::fabs(double(c)));
  bound = std::max(bound, 1.0 + (maxc + 2) / lead);

  auto g = [&](double x) { return f.eval_double(x) - 2.0; };
  const int kGrid = 4096;
  const double step = (bound - 2.0) / kGrid;
  double last_neg = -1;
  for (int i = 0; i <= kGrid; ++i) {
    double x = 2.0 + step * i;
    if (g(x) < 0) last_neg = x;
  }
  if (last_neg < 0) return 2.0;  // f >= 2 on the whole range

  // bisect the upward crossing just past the last negative grid point
  double lo = last_neg, hi = last_neg + step;
  while (g(hi) < 0) hi += step;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

double tuple_integral(const PolyTuple& tuple, uint64_t N) {
  double x0 = 2.0;
  for (const auto& f : tuple.polys()) x0 = std::max(x0, poly_floor_x0(f));
  if (x0 > double(N))
    throw std::domain_error("tuple_integral: empty domain (x0 > N)");
  if (x0 == double(N)) return 0;
  return integrate(
      [&](double x) {
        double denom = 1;
        for (const auto& f : tuple.polys()) denom *= std::log(f.eval_double(x));
        return 1.0 / denom;
      },
      x0, double(N));
}

namespace {

double mertens_sum_log(uint64_t N) {  // sum_{p<=N} log p / p
  long double s = 0;
  for_each_prime(SieveConfig{std::max<uint64_t>(N, 2)},
                 [&](uint64_t p) { s += logl((long double)p) / p; });
  return double(s);
}

double mertens_sum_inv(uint64_t N) {  // sum_{p<=N} 1/p
  long double s = 0;
  for_each_prime(SieveConfig{std::max<uint64_t>(N, 2)},
                 [&](uint64_t p) { s += 1.0L / p; });
  return double(s);
}

double factorial_refined_sum(uint64_t N) {
  // sum_{n<=N} (1 - 1/(4 log 2n)) / n
  long double s = 0;
  for (uint64_t n = 1; n <= N; ++n)
    s += (1.0L - 1.0L / (4 * logl(2.0L * n))) / n;
  return double(s);
}

}  // namespace

PredictionResult predict(const FamilySpec& fam, uint64_t N,
                         const PrecisionConfig& cfg) {
  validate_family(fam);
  if (N < 10) throw std::invalid_argument("predict: N >= 10 required");
  const ConstantEngine& eng = engine_for(cfg);
  const double lnN = std::log(double(N));

  PredictionResult r;
  r.family = fam;
  r.bound = N;

  using namespace family;
  if (std::holds_alternative<Twin>(fam)) {
    ConstantValue c2 = eng.hl_ck(2);
    double c = 2 * c2.to_double();
    r.integral_estimate = c * log_power_integral(2, double(N), 2);
    r.ratio_estimate = c * double(N) / (lnN * lnN);
    r.constant_used = c2;
  } else if (auto* pr = std::get_if<Pair>(&fam)) {
    ConstantValue ck = eng.pair_constant(pr->gap);
    double c = 2 * ck.to_double();
    double g = double(pr->gap);
    r.integral_estimate =
        c * integrate(
                [g](double x) { return 1.0 / (std::log(x) * std::log(x + g)); },
                2, double(N));
    r.ratio_estimate = c * double(N) / (lnN * lnN);
    r.constant_used = ck;
  } else if (auto* ap = std::get_if<AP>(&fam)) {
    ConstantValue a = eng.ap_constant(ap->length, ap->diff);
    double c = a.to_double();
    unsigned k = ap->length;
    double d = double(ap->diff);
    r.integral_estimate =
        c == 0 ? 0
               : c * integrate(
                         [k, d](double x) {
                           double denom = 1;
                           for (unsigned j = 0; j < k; ++j)
                             denom *= std::log(x + j * d);
                           return 1.0 / denom;
                         },
                         2, double(N));
    r.ratio_estimate = c * double(N) / std::pow(lnN, double(k));
    r.constant_used = a;
  } else if (auto* aa = std::get_if<APAnyDiff>(&fam)) {
    ConstantValue dk = eng.grosswald_constant(aa->length);
    unsigned k = aa->length;
    double v = dk.to_double() * double(N) * double(N) /
               (2.0 * (k - 1) * std::pow(lnN, double(k)));
    r.integral_estimate = v;  // the ratio form is the primary output here
    r.ratio_estimate = v;
    r.constant_used = dk;
  } else if (std::holds_alternative<SophieGermain>(fam)) {
    ConstantValue c2 = eng.hl_ck(2);
    double c = 2 * c2.to_double();
    r.integral_estimate =
        c * integrate(
                [](double x) { return 1.0 / (std::log(x) * std::log(2 * x)); },
                2, double(N));
    r.ratio_estimate = c * double(N) / (lnN * lnN);
    r.constant_used = c2;
  } else if (auto* cu = std::get_if<Cunningham>(&fam)) {
    ConstantValue bk = eng.cunningham_constant(cu->length);
    unsigned k = cu->length;
    const double ln2 = std::log(2.0);
    r.integral_estimate =
        bk.to_double() * integrate(
                             [k, ln2](double x) {
                               double denom = 1, lx = std::log(x);
                               for (unsigned j = 0; j < k; ++j)
                                 denom *= lx + j * ln2;
                               return 1.0 / denom;
                             },
                             2, double(N));
    r.ratio_estimate = bk.to_double() * double(N) / std::pow(lnN, double(k));
    r.constant_used = bk;
  } else if (std::holds_alternative<Quadratic>(fam)) {
    ConstantValue cp = eng.quadratic_constant();
    double half = cp.to_double() / 2;
    double root = std::sqrt(double(N));
    r.integral_estimate = half * log_power_integral(2, root, 1);
    r.ratio_estimate = cp.to_double() * root / lnN;
    r.constant_used = cp;
  } else if (auto* gb = std::get_if<Goldbach>(&fam)) {
    uint64_t m = gb->m ? gb->m : N;
    if (m % 2 != 0 || m < 6)
      throw std::invalid_argument("goldbach prediction: even m >= 6 required");
    ConstantValue ck = eng.pair_constant(m / 2);
    r.integral_estimate = goldbach_prediction(m, false, cfg);
    double lnm = std::log(double(m));
    r.ratio_estimate = 2 * ck.to_double() * double(m) / (lnm * lnm);
    r.constant_used = ck;
  } else if (std::holds_alternative<Cullen>(fam) ||
             std::holds_alternative<Woodall>(fam)) {
    const double ln2 = std::log(2.0);
    r.integral_estimate =
        2 * integrate(
                [ln2](double x) { return 1.0 / (x * ln2 + std::log(x)); }, 2,
                double(N));
    r.ratio_estimate = 2 * (lnN - ln2) / ln2;
    r.constant_used =
        ConstantValue{Real(uint64_t(2), 64), 1e-300, Route::closed_combination};
  } else if (std::holds_alternative<Primorial>(fam)) {
    double eg = eng.exp_gamma().to_double();
    r.integral_estimate = eg * mertens_sum_log(N);
    r.ratio_estimate = eg * lnN;
    r.constant_used =
        ConstantValue{eng.exp_gamma(), 1e-15, Route::closed_combination};
  } else if (std::holds_alternative<Factorial>(fam)) {
    double eg = eng.exp_gamma().to_double();
    r.integral_estimate = eg * factorial_refined_sum(N);
    r.ratio_estimate = eg * lnN;
    r.constant_used =
        ConstantValue{eng.exp_gamma(), 1e-15, Route::closed_combination};
  } else if (auto* ru = std::get_if<Repunit>(&fam)) {
    double eg = eng.exp_gamma().to_double();
    double lna = std::log(double(ru->base));
    r.integral_estimate = eg / lna * mertens_sum_inv(N);
    r.ratio_estimate = eg / lna * std::log(lnN);
    r.constant_used =
        ConstantValue{eng.exp_gamma(), 1e-15, Route::closed_combination};
  }
  if (!(r.integral_estimate >= 0) || !std::isfinite(r.integral_estimate) ||
      !(r.ratio_estimate >= 0) || !std::isfinite(r.ratio_estimate))
    throw std::logic_error("predict: estimate not finite and nonnegative");
  return r;
}

double goldbach_prediction(uint64_t m, bool shah_wilson,
                           const PrecisionConfig& cfg) {
  if (m % 2 != 0 || m < 6)
    throw std::invalid_argument("goldbach_prediction: even m >= 6 required");
  const ConstantEngine& eng = engine_for(cfg);
  double c = 2 * eng.pair_constant(m / 2).to_double();
  if (shah_wilson) {
    double lnm = std::log(double(m));
    return c * double(m) / (lnm * lnm - lnm);
  }
  double dm = double(m);
  return c * integrate(
                 [dm](double x) {
                   return 1.0 / (std::log(x) * std::log(dm - x));
                 },
                 2, dm - 2);
}

}  // namespace primeheur
