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

#include "dps/random.hpp"

#include <cmath>

namespace dps {

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform(); // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

CVec Rng::pure_state(int dim) {
    CVec v(static_cast<size_t>(dim));
    for (auto& x : v) {
        double re = gaussian();
        double im = gaussian();
        x = Complex(re, im);
    }
    return normalized(v);
}

CMatrix Rng::density_matrix(int dim) {
    CMatrix g(dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            double re = gaussian();
            double im = gaussian();
            g.at(i, j) = Complex(re, im);
        }
    }
    CMatrix rho = g * g.adjoint();
    return rho.scaled(1.0 / rho.trace().real());
}

} // namespace dps
