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

#include "dps/rotinv.hpp"

#include <algorithm>
#include <cmath>

namespace dps {

namespace {

constexpr double kPi = 3.14159265358979323846;

CVec vec_kron(const CVec& a, const CVec& b) {
    CVec r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

} // namespace

RotInvFamily eigenstates_by_projection(const CliffordUnitary& unitary) {
    const int d = unitary.matrix.dim();
    const int order = d + 1;

    std::vector<CMatrix> powers;
    powers.reserve(static_cast<size_t>(order) + 1);
    powers.push_back(CMatrix::identity(d));
    for (int j = 1; j <= order; j++) powers.push_back(powers.back() * unitary.matrix);

    const CMatrix& full = powers[static_cast<size_t>(order)];
    Complex c = full.at(0, 0);
    if (std::abs(std::abs(c) - 1.0) > 1e-8 ||
        full.max_abs_diff(CMatrix::identity(d).scaled(c)) > 1e-8) {
        throw Error(ErrorCode::precondition, "U^(d+1) is not proportional to the identity");
    }

    RotInvFamily family{unitary, c, std::polar(1.0, std::arg(c) / order), {}, false};

    int total_rank = 0;
    for (int k = 0; k < order; k++) {
        Complex mu = family.root * std::polar(1.0, 2.0 * kPi * k / order);
        CMatrix proj(d);
        for (int j = 0; j < order; j++) {
            proj = proj + powers[static_cast<size_t>(j)].scaled(std::pow(mu, -j));
        }
        proj = proj.scaled(1.0 / order);
        std::vector<CVec> vecs = orthonormal_columns(proj, 1e-6);
        if (vecs.size() > 1) family.degenerate = true;
        for (auto& v : vecs) {
            CVec uv = unitary.matrix.apply(v);
            double residual = norm(add(uv, scaled(v, -mu)));
            if (residual > 1e-9) {
                throw Error(ErrorCode::validation, "projected vector is not an eigenvector");
            }
            family.members.push_back(RotInvFamily::Member{std::move(v), k, mu});
            total_rank++;
        }
    }
    if (total_rank != d) {
        throw Error(ErrorCode::validation, "spectral projectors do not resolve the identity");
    }
    return family;
}

ConstancyReport wigner_constancy_check(const RotInvFamily& family, const QuantumNet& net,
                                       const QuadraticForm& form) {
    ConstancyReport report;
    const FieldSpec& spec = net.spec();
    for (const auto& member : family.members) {
        WignerFunction w = wigner(net, member.state);
        std::vector<double> values, spreads;
        for (int cm = 1; cm < spec.dim(); cm++) {
            double lo = 0.0, hi = 0.0, total = 0.0;
            bool first = true;
            for (const auto& pt : circle(form, FieldElement(spec, static_cast<unsigned>(cm)))) {
                double v = w.at(pt.q.bits(), pt.p.bits());
                if (first) { lo = hi = v; first = false; }
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                total += v;
            }
            values.push_back(total / (spec.dim() + 1));
            spreads.push_back(hi - lo);
            report.max_deviation = std::max(report.max_deviation, hi - lo);
        }
        report.circle_values.push_back(std::move(values));
        report.circle_spreads.push_back(std::move(spreads));
    }
    return report;
}

std::vector<PositivityEntry> positivity_scan(const RotInvFamily& family, const QuantumNet& net) {
    std::vector<PositivityEntry> entries;
    for (size_t i = 0; i < family.members.size(); i++) {
        const auto& member = family.members[i];
        WignerFunction w = wigner(net, member.state);
        double lo = w.min_value();
        entries.push_back(PositivityEntry{static_cast<int>(i), member.label, lo >= -1e-9, lo});
    }
    return entries;
}

Eq14Result build_eq14_state(const RotInvFamily& family, const QuantumNet& net) {
    const int d = net.spec().dim();
    if (d != 8) {
        throw Error(ErrorCode::precondition, "reference reconstruction is for three qubits");
    }

    std::vector<PositivityEntry> scan = positivity_scan(family, net);
    int positive_index = -1;
    for (const auto& e : scan) {
        if (e.positive) { positive_index = e.member; break; }
    }
    if (positive_index < 0) {
        throw Error(ErrorCode::validation, "family has no positive-Wigner member");
    }
    const auto& target = family.members[static_cast<size_t>(positive_index)];

    // Single-qubit eigenstates of X + Y + Z (eigenvalues -sqrt(3), +sqrt(3)).
    CMatrix xyz = pauli_x() + pauli_y() + pauli_z();
    EigenSystem es = eigh(xyz);
    CVec lower = {es.vectors.at(0, 0), es.vectors.at(1, 0)};
    CVec upper = {es.vectors.at(0, 1), es.vectors.at(1, 1)};
    CVec cube_lower = vec_kron(lower, vec_kron(lower, lower));
    CVec cube_upper = vec_kron(upper, vec_kron(upper, upper));

    const double w_plus = std::sqrt(1.0 / 3.0);
    const double w_minus = std::sqrt(2.0 / 3.0);

    // The +/- names in the two-term form carry no eigenvalue convention, so
    // fit the relative phase under both labelings and keep the better one.
    double best = -1.0, best_phi = 0.0;
    bool best_swapped = false;
    const double step = 1e-4;
    for (int swapped = 0; swapped < 2; swapped++) {
        Complex a = inner(swapped ? cube_lower : cube_upper, target.state);
        Complex b = inner(swapped ? cube_upper : cube_lower, target.state);
        auto overlap_sq = [&](double phi) {
            Complex o = w_plus * a + w_minus * std::polar(1.0, -phi) * b;
            return std::norm(o);
        };
        double grid_best = -1.0, grid_phi = 0.0;
        for (double phi = 0.0; phi < 2.0 * kPi; phi += step) {
            double v = overlap_sq(phi);
            if (v > grid_best) { grid_best = v; grid_phi = phi; }
        }
        double lo = grid_phi - step, hi = grid_phi + step;
        for (int it = 0; it < 200; it++) {
            double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (overlap_sq(m1) < overlap_sq(m2)) lo = m1;
            else hi = m2;
        }
        double phi = 0.5 * (lo + hi);
        if (overlap_sq(phi) > best) {
            best = overlap_sq(phi);
            best_phi = phi;
            best_swapped = swapped != 0;
        }
    }

    const CVec& ppp = best_swapped ? cube_lower : cube_upper;
    const CVec& mmm = best_swapped ? cube_upper : cube_lower;
    Eq14Result result;
    result.phi = best_phi;
    result.swapped = best_swapped;
    result.state = add(scaled(ppp, w_plus), scaled(mmm, w_minus * std::polar(1.0, best_phi)));
    result.overlap = std::abs(inner(result.state, target.state));
    result.plus_overlap = std::abs(inner(ppp, result.state));
    WignerFunction w = wigner(net, result.state);
    result.center_value = w.at(0, 0);
    CVec uv = family.unitary.matrix.apply(result.state);
    result.eigen_residual = norm(add(uv, scaled(result.state, -target.eigenvalue)));

    if (result.overlap <= 1.0 - 1e-6) {
        throw Error(ErrorCode::validation,
                    "reconstruction mismatch: best overlap " + std::to_string(result.overlap));
    }
    return result;
}

std::vector<std::pair<PhasePoint, CVec>> coherent_lattice(const CVec& psi0,
                                                          const FieldBasis& basis_q) {
    if (std::abs(norm(psi0) - 1.0) > 1e-10) {
        throw Error(ErrorCode::validation, "seed state is not normalized");
    }
    const FieldSpec& spec = basis_q.spec();
    TranslationSet translations(spec, basis_q);
    std::vector<std::pair<PhasePoint, CVec>> lattice;
    lattice.reserve(static_cast<size_t>(spec.dim()) * spec.dim());
    for (int q = 0; q < spec.dim(); q++) {
        for (int p = 0; p < spec.dim(); p++) {
            PhasePoint v(FieldElement(spec, static_cast<unsigned>(q)),
                         FieldElement(spec, static_cast<unsigned>(p)));
            lattice.emplace_back(v, translations.at(v).apply(psi0));
        }
    }
    return lattice;
}

std::vector<MinimalityEntry> entropy_minimality_certificate(const RotInvFamily& family,
                                                            const MubSet& mubs) {
    std::vector<MinimalityEntry> entries;
    for (size_t i = 0; i < family.members.size(); i++) {
        const auto& member = family.members[i];
        EntropyReport report = average_entropy_report(mubs, member.state);
        double lo = report.renyi_per_basis.front(), hi = lo;
        for (double h : report.renyi_per_basis) {
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
        entries.push_back(MinimalityEntry{static_cast<int>(i), member.label, report.equality,
                                          report.average, report.bound, hi - lo});
    }
    return entries;
}

} // namespace dps
