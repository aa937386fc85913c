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

#include "primeheur/real.hpp"

#include <memory>

namespace primeheur {

std::string Real::str(int sig_digits) const {
  if (sig_digits < 1) sig_digits = 1;
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", sig_digits, x_) < 0)
    return "nan";
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

const char* route_name(Route r) {
  switch (r) {
    case Route::direct_product: return "direct-product";
    case Route::zeta_accelerated: return "zeta-accelerated";
    case Route::closed_combination: return "closed-combination";
  }
  return "?";
}

}  // namespace primeheur
