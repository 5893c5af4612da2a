// Copyright 2026 The supercurve Authors.
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

// Prints the p-rank verdict and the F_{p^2} point count of y^2 = x^5 - x
// for every odd prime below a bound (default 60).

#include <cstdlib>
#include <iostream>

#include "supercurve/supercurve.hpp"

int main(int argc, char** argv) {
  namespace sc = supercurve;
  const std::uint64_t bound = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 60;
  for (std::uint64_t p = 3; p < bound; ++p) {
    if (!sc::is_prime(p)) continue;
    const auto c = sc::SuperellipticCurve::make(2, sc::Polynomial::from_ints(sc::make_field(p), {0, -1, 0, 0, 0, 1}));
    const auto rank = sc::classify_p_rank(sc::hasse_witt(c));
    std::cout << "p=" << p << " " << sc::to_string(rank.verdict);
    if (p * p <= (1u << 24)) {
      const auto pc = sc::count_points(c, 2);
      std::cout << " N2=" << pc.count << " " << sc::to_string(pc.status);
    }
    std::cout << "\n";
  }
}
