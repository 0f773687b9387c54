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

#include "dps/mub_entropy.hpp"

#include <cmath>

namespace dps {

MubSet::MubSet(int dim, std::vector<std::vector<CVec>> bases) : dim_(dim), bases_(std::move(bases)) {
    for (const auto& basis : bases_) {
        if (static_cast<int>(basis.size()) != dim_) {
            throw Error(ErrorCode::invalid_argument, "basis size does not match dimension");
        }
    }
}

namespace {

// Deterministic unit vector spanning the range of a rank-1 projector.
CVec vector_of_projector(const CMatrix& p) {
    int best = 0;
    double best_norm = -1.0;
    for (int j = 0; j < p.dim(); j++) {
        double nj = 0.0;
        for (int i = 0; i < p.dim(); i++) nj += std::norm(p.at(i, j));
        if (nj > best_norm) { best_norm = nj; best = j; }
    }
    CVec col(static_cast<size_t>(p.dim()));
    for (int i = 0; i < p.dim(); i++) col[static_cast<size_t>(i)] = p.at(i, best);
    return phase_fixed(normalized(col));
}

} // namespace

MubSet mub_from_net(const QuantumNet& net) {
    const int d = net.spec().dim();
    std::vector<std::vector<CVec>> bases;
    bases.reserve(static_cast<size_t>(d) + 1);
    for (int s = 0; s <= d; s++) {
        std::vector<CVec> basis;
        basis.reserve(static_cast<size_t>(d));
        for (int l = 0; l < d; l++) {
            basis.push_back(vector_of_projector(net.projector(s, l)));
        }
        bases.push_back(std::move(basis));
    }
    return MubSet(d, std::move(bases));
}

MubSet mub_by_cycling(const CliffordUnitary& unitary) {
    const int d = unitary.matrix.dim();
    CMatrix power = unitary.matrix.pow_int(d + 1);
    Complex c = power.at(0, 0);
    if (std::abs(std::abs(c) - 1.0) > 1e-8 ||
        power.max_abs_diff(CMatrix::identity(d).scaled(c)) > 1e-8) {
        throw Error(ErrorCode::precondition, "unitary does not cycle: U^(d+1) is not a phase");
    }
    std::vector<std::vector<CVec>> bases;
    CMatrix uk = CMatrix::identity(d);
    for (int k = 0; k <= d; k++) {
        std::vector<CVec> basis;
        for (int j = 0; j < d; j++) {
            CVec col(static_cast<size_t>(d));
            for (int i = 0; i < d; i++) col[static_cast<size_t>(i)] = uk.at(i, j);
            basis.push_back(phase_fixed(col));
        }
        bases.push_back(std::move(basis));
        uk = unitary.matrix * uk;
    }
    return MubSet(d, std::move(bases));
}

std::vector<std::vector<double>> probability_table(const MubSet& mubs, const CVec& psi) {
    if (static_cast<int>(psi.size()) != mubs.dim()) {
        throw Error(ErrorCode::validation, "state dimension does not match the bases");
    }
    if (std::abs(norm(psi) - 1.0) > 1e-10) {
        throw Error(ErrorCode::validation, "state vector is not normalized");
    }
    std::vector<std::vector<double>> table(static_cast<size_t>(mubs.num_bases()),
                                           std::vector<double>(static_cast<size_t>(mubs.dim())));
    for (int i = 0; i < mubs.num_bases(); i++) {
        for (int j = 0; j < mubs.dim(); j++) {
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                std::norm(inner(mubs.vec(i, j), psi));
        }
    }
    return table;
}

double design_sum(const std::vector<std::vector<double>>& table) {
    double s = 0.0;
    for (const auto& row : table) {
        for (double p : row) s += p * p;
    }
    return s;
}

double renyi_entropy(const std::vector<double>& row) {
    double total = 0.0;
    double square = 0.0;
    for (double p : row) {
        if (p < -1e-10) {
            throw Error(ErrorCode::validation, "negative probability");
        }
        total += p;
        square += p * p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::validation, "probabilities do not sum to 1");
    }
    return -std::log2(square);
}

EntropyReport average_entropy_report(const MubSet& mubs, const CVec& psi) {
    EntropyReport report;
    report.probabilities = probability_table(mubs, psi);
    report.bound = std::log2(static_cast<double>(mubs.num_bases())) - 1.0;
    report.design_sum = design_sum(report.probabilities);

    double total = 0.0;
    double lo = 0.0, hi = 0.0;
    for (size_t i = 0; i < report.probabilities.size(); i++) {
        double h = renyi_entropy(report.probabilities[i]);
        report.renyi_per_basis.push_back(h);
        total += h;
        if (i == 0) { lo = hi = h; }
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    report.average = total / static_cast<double>(mubs.num_bases());
    report.equality = (hi - lo < 1e-9) && (std::abs(report.average - report.bound) < 1e-9);
    return report;
}

} // namespace dps
