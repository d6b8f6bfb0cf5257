// Copyright 2026 The robpoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBPOLY_QUADRATURE_HPP
#define ROBPOLY_QUADRATURE_HPP

#include <vector>

namespace robpoly {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// k-point Gauss-Legendre rule on [-1, 1], nodes ascending.
QuadratureRule GaussLegendre(int k);

/// Same rule mapped to [a, b].
QuadratureRule GaussLegendre(int k, double a, double b);

}  // namespace robpoly

#endif  // ROBPOLY_QUADRATURE_HPP
