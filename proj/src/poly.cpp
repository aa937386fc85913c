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

#include "primeheur/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "primeheur/primality.hpp"
#include "primeheur/sieve.hpp"

namespace primeheur {

Polynomial::Polynomial(std::vector<int64_t> coeffs) : c_(std::move(coeffs)) {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.size() < 2)
    throw std::invalid_argument("Polynomial: degree must be >= 1");
  if (c_.size() > 9)
    throw std::invalid_argument("Polynomial: degree capped at 8");
  if (c_.back() <= 0)
    throw std::invalid_argument("Polynomial: leading coefficient must be > 0");
}

uint64_t Polynomial::eval_mod(uint64_t x, uint64_t p) const {
  // Horner; fast path keeps everything below 2^64 when p < 2^31.
  if (p < (uint64_t(1) << 31)) {
    uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
      int64_t c = c_[i] % int64_t(p);
      uint64_t cm = uint64_t(c < 0 ? c + int64_t(p) : c);
      acc = (acc * x + cm) % p;
    }
    return acc;
  }
  uint64_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    int64_t c = c_[i] % int64_t(p);
    uint64_t cm = uint64_t(c < 0 ? c + int64_t(p) : c);
    acc = (mulmod64(acc, x, p) + cm) % p;
  }
  return acc;
}

double Polynomial::eval_double(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + double(c_[i]);
  return acc;
}

int64_t Polynomial::max_abs_coeff() const {
  int64_t m = 0;
  for (int64_t c : c_) m = std::max(m, std::abs(c));
  return m;
}

std::string Polynomial::to_string() const {
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    int64_t c = c_[i];
    if (c == 0 && i > 0) continue;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    uint64_t a = uint64_t(std::abs(c));
    if (i == 0 || a != 1) s += std::to_string(a);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

PolyTuple::PolyTuple(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw std::invalid_argument("PolyTuple: empty tuple");
}

uint64_t PolyTuple::degree_product() const {
  uint64_t d = 1;
  for (const auto& f : polys_) d *= f.degree();
  return d;
}

bool PolyTuple::all_linear() const {
  return std::all_of(polys_.begin(), polys_.end(),
                     [](const Polynomial& f) { return f.is_linear(); });
}

int64_t PolyTuple::max_abs_coeff() const {
  int64_t m = 0;
  for (const auto& f : polys_) m = std::max(m, f.max_abs_coeff());
  return m;
}

std::string PolyTuple::to_string() const {
  std::string s;
  for (const auto& f : polys_) {
    if (!s.empty()) s += ",";
    s += f.to_string();
  }
  return s;
}

namespace {

// One polynomial term list: "3x^2-2x+5"
Polynomial parse_poly(const std::string& text) {
  std::vector<int64_t> coef(9, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  bool any = false;
  skip_ws();
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("tuple parse: expected '+' or '-' in \"" +
                                  text + "\"");
    }
    // coefficient digits (optional if an x follows)
    bool have_digits = false;
    int64_t value = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      have_digits = true;
      value = value * 10 + (text[i] - '0');
      if (value > (int64_t(1) << 40))
        throw std::invalid_argument("tuple parse: coefficient too large");
      ++i;
    }
    if (i < text.size() && text[i] == '.')
      throw std::invalid_argument(
          "tuple parse: non-integer coefficient in \"" + text + "\"");
    skip_ws();
    unsigned exp = 0;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw std::invalid_argument("tuple parse: missing exponent");
        unsigned e = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
          e = e * 10 + unsigned(text[i] - '0');
          if (e > 8)
            throw std::invalid_argument("tuple parse: degree capped at 8");
          ++i;
        }
        exp = e;
      }
    } else if (!have_digits) {
      throw std::invalid_argument("tuple parse: expected term in \"" + text +
                                  "\"");
    }
    if (!have_digits) value = 1;
    coef[exp] += sign * value;
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("tuple parse: empty polynomial");
  return Polynomial(coef);
}

}  // namespace

PolyTuple parse_tuple(const std::string& text) {
  std::vector<Polynomial> polys;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    polys.push_back(parse_poly(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return PolyTuple(std::move(polys));
}

uint64_t w_count(const PolyTuple& tuple, uint64_t p) {
  uint64_t count = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t prod = 1;
    for (const auto& f : tuple.polys()) {
      prod = p < (uint64_t(1) << 31) ? (prod * f.eval_mod(x, p)) % p
                                     : mulmod64(prod, f.eval_mod(x, p), p);
      if (prod == 0) break;
    }
    if (prod == 0) ++count;
  }
  return count;
}

namespace {

// w(p) for all-linear tuples: distinct residues -a_i / b_i mod p.
// Returns p when some form vanishes identically mod p.
uint64_t w_linear(const PolyTuple& tuple, uint64_t p,
                  std::vector<uint32_t>& mark, uint32_t epoch) {
  uint64_t w = 0;
  for (const auto& f : tuple.polys()) {
    int64_t b = f.coeffs()[1] % int64_t(p);
    int64_t a = f.coeffs()[0] % int64_t(p);
    uint64_t bm = uint64_t(b < 0 ? b + int64_t(p) : b);
    uint64_t am = uint64_t(a < 0 ? a + int64_t(p) : a);
    if (bm == 0) {
      if (am == 0) return p;  // p divides the whole form
      continue;               // constant nonzero mod p: no root
    }
    uint64_t root;
    if (bm == 1)
      root = (p - am) % p;
    else
      root = mulmod64((p - am) % p, powmod64(bm, p - 2, p), p);
    if (mark[root] != epoch) {
      mark[root] = epoch;
      ++w;
    }
  }
  return w;
}

int legendre_unchecked(int64_t a, uint64_t p) {
  uint64_t am = uint64_t(((a % int64_t(p)) + int64_t(p)) % int64_t(p));
  if (am == 0) return 0;
  uint64_t e = powmod64(am, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

// w(p) by the cheapest exact route available.
uint64_t w_fast(const PolyTuple& tuple, uint64_t p,
                std::vector<uint32_t>& mark, uint32_t epoch) {
  if (tuple.all_linear()) return w_linear(tuple, p, mark, epoch);
  if (tuple.k() == 1 && tuple.polys()[0].degree() == 2 && p > 2) {
    const auto& c = tuple.polys()[0].coeffs();
    if (c[2] % int64_t(p) != 0) {
      // ax^2+bx+c: root count = 1 + (b^2-4ac | p)
      __int128 disc = (__int128)c[1] * c[1] - (__int128)4 * c[2] * c[0];
      int64_t dm = int64_t(disc % (__int128)int64_t(p));
      return uint64_t(1 + legendre_unchecked(dm, p));
    }
  }
  return w_count(tuple, p);
}

}  // namespace

bool is_admissible(const PolyTuple& tuple, std::optional<uint64_t> bound) {
  uint64_t B =
      bound.value_or(std::max<uint64_t>(tuple.k(), tuple.max_abs_coeff()));
  B = std::max<uint64_t>(B, 2);
  std::vector<uint32_t> mark(B + 1, 0);
  uint32_t epoch = 0;
  bool ok = true;
  for_each_prime(SieveConfig{B}, [&](uint64_t p) {
    if (!ok) return;
    ++epoch;
    if (w_fast(tuple, p, mark, epoch) >= p) ok = false;
  });
  return ok;
}

ConstantValue adjustment_product_direct(const PolyTuple& tuple,
                                        uint64_t prime_cutoff) {
  if (prime_cutoff < 2 || prime_cutoff > 100'000'000)
    throw std::invalid_argument(
        "adjustment_product_direct: cutoff in [2, 1e8] required");
  const unsigned k = tuple.k();
  const mpfr_prec_t prec = 256;
  Real prod(uint64_t(1), prec);
  std::vector<uint32_t> mark(1024, 0);
  uint32_t epoch = 0;
  bool dead = false;
  uint64_t at_p = 0;
  for_each_prime(SieveConfig{prime_cutoff}, [&](uint64_t p) {
    if (dead) return;
    if (tuple.all_linear() && p >= mark.size()) mark.resize(p + 1, 0);
    ++epoch;
    uint64_t w = w_fast(tuple, p, mark, epoch);
    if (w >= p) {
      dead = true;
      at_p = p;
      return;
    }
    // (1 - w/p)/(1 - 1/p)^k = (p - w) * p^(k-1) / (p - 1)^k
    Real f(p - w, prec);
    f *= pow_ui(Real(p, prec), k - 1);
    f /= pow_ui(Real(p - 1, prec), k);
    prod *= f;
  });
  if (dead)
    throw std::domain_error("adjustment product vanishes at p = " +
                            std::to_string(at_p) + " (tuple not admissible)");

  // Crude tail estimate: past the cutoff the per-prime log factor is
  // ~ -(k^2 - k)/(2p^2) for linear tuples; quadratic characters add a
  // conditionally convergent sum bounded (heuristically) by 4/sqrt(cutoff).
  double rel = double(k) * k / (double(prime_cutoff) * std::log(double(prime_cutoff)));
  bool nonlinear = !tuple.all_linear();
  if (nonlinear) rel += 4.0 / std::sqrt(double(prime_cutoff));
  double err = std::abs(prod.to_double()) * std::max(rel, 1e-200);
  return ConstantValue{prod, err, Route::direct_product};
}

}  // namespace primeheur
