// Copyright 2026 The dps authors
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

#ifndef DPS_RANDOM_HPP
#define DPS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "dps/cmatrix.hpp"

namespace dps {

/// Seeded random source for certification sweeps.  The gaussian is a
/// hand-rolled Box-Muller over the raw engine so streams are identical on
/// every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(); // [0, 1)
    double gaussian();
    std::uint64_t bits() { return eng_(); }

    /// Haar-ish random unit vector: normalized complex gaussian.
    CVec pure_state(int dim);

    /// Random full-rank density matrix G G^dag / Tr.
    CMatrix density_matrix(int dim);

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace dps

#endif
