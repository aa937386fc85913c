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

#ifndef PRIMEHEUR_QUADRATURE_HPP
#define PRIMEHEUR_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace primeheur {

class quadrature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive composite Gauss-Legendre (15-point panels, recursive bisection).
// Throws quadrature_error when the tolerance is unreachable within
// max_panels panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, std::size_t max_panels = 1000000);

}  // namespace primeheur

#endif  // PRIMEHEUR_QUADRATURE_HPP
